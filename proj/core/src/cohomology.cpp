#include "lincount/cohomology.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>
#include <vector>

namespace lincount {

void CohomologyClass::add_term(const Partition& p, const Int& c) {
    if (c == 0 || !p.fits(box_)) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CohomologyClass& CohomologyClass::operator+=(const CohomologyClass& other) {
    if (box_ != other.box_)
        throw Error(ErrorCode::BoxMismatch, "cannot add classes from different boxes");
    for (const auto& [p, c] : other.terms_) add_term(p, c);
    return *this;
}

CohomologyClass& CohomologyClass::operator*=(const Int& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_) c *= scalar;
    return *this;
}

CohomologyClass CohomologyClass::graded_piece(long long k) const {
    CohomologyClass out(box_);
    for (const auto& [p, c] : terms_)
        if (p.size() == k) out.terms_.emplace(p, c);
    return out;
}

std::string CohomologyClass::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : terms_) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += c.str() + "*";
        out += "s[" + format_partition(p) + "]";
    }
    return out;
}

namespace {

// Enumerates mu containing lam with mu/lam a horizontal strip (at most one
// added cell per column, i.e. mu[i] <= lam[i-1]) whose size lies in
// [add_lo, add_hi], mu inside the box. The per-row upper bounds do not depend
// on earlier choices, so suffix capacities can be precomputed for pruning.
template <class F>
void for_each_horizontal_extension(const Partition& lam, const BoxShape& box, long long add_lo,
                                   long long add_hi, F&& emit) {
    if (add_hi < 0 || add_lo > add_hi) return;
    int active = std::min(box.rows, lam.length() + 1);
    std::vector<int> lo(static_cast<size_t>(active)), hi(static_cast<size_t>(active));
    for (int i = 0; i < active; ++i) {
        lo[static_cast<size_t>(i)] = lam.part(i);
        hi[static_cast<size_t>(i)] = (i == 0) ? box.cols : lam.part(i - 1);
    }
    std::vector<long long> suffix_cap(static_cast<size_t>(active) + 1, 0);
    for (int i = active - 1; i >= 0; --i)
        suffix_cap[static_cast<size_t>(i)] =
            suffix_cap[static_cast<size_t>(i) + 1] + (hi[static_cast<size_t>(i)] - lo[static_cast<size_t>(i)]);

    std::vector<int> mu(static_cast<size_t>(active));
    auto rec = [&](auto&& self, int row, long long added) -> void {
        if (added > add_hi) return;
        if (added + suffix_cap[static_cast<size_t>(row)] < add_lo) return;
        if (row == active) {
            emit(mu, added);
            return;
        }
        for (int v = lo[static_cast<size_t>(row)]; v <= hi[static_cast<size_t>(row)]; ++v) {
            mu[static_cast<size_t>(row)] = v;
            self(self, row + 1, added + (v - lo[static_cast<size_t>(row)]));
        }
        mu[static_cast<size_t>(row)] = lo[static_cast<size_t>(row)];
    };
    rec(rec, 0, 0);
}

// Enumerates mu with mu[i] in {lam[i], lam[i]+1} (at most one added cell per
// row), total added exactly b, mu a partition inside the box.
template <class F>
void for_each_vertical_extension(const Partition& lam, const BoxShape& box, int b, F&& emit) {
    if (b < 0) return;
    std::vector<int> mu(static_cast<size_t>(box.rows));
    auto rec = [&](auto&& self, int row, int added, int prev) -> void {
        int remaining = b - added;
        if (remaining < 0 || remaining > box.rows - row) return;
        if (row == box.rows) {
            emit(mu);
            return;
        }
        int base = lam.part(row);
        mu[static_cast<size_t>(row)] = base;
        self(self, row + 1, added, base);
        if (base + 1 <= std::min(box.cols, prev)) {
            mu[static_cast<size_t>(row)] = base + 1;
            self(self, row + 1, added + 1, base + 1);
            mu[static_cast<size_t>(row)] = base;
        }
    };
    rec(rec, 0, 0, box.cols);
}

Partition make_partition(const std::vector<int>& parts) {
    return Partition(std::vector<int>(parts));
}

bool is_single_column(const Partition& p) {
    return p.empty() || p.part(0) == 1;
}

// Counts semistandard skew fillings of nu/lam with content mu whose reverse
// reading word (rows top to bottom, each row right to left) is a lattice
// word. Cells are filled in reverse reading order so that both the
// semistandard and the lattice constraints are checkable per placement.
Int count_lattice_fillings(const Partition& nu, const Partition& lam, const Partition& mu) {
    int nrows = nu.length();
    int nvals = mu.length();
    std::vector<std::vector<int>> grid(static_cast<size_t>(nrows));
    for (int i = 0; i < nrows; ++i)
        grid[static_cast<size_t>(i)].assign(static_cast<size_t>(nu.part(i)), 0);
    std::vector<int> counts(static_cast<size_t>(nvals) + 1, 0);
    std::vector<int> used(static_cast<size_t>(nvals) + 1, 0);

    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int i = 0; i < nrows; ++i)
        for (int j = nu.part(i) - 1; j >= lam.part(i); --j) cells.push_back({i, j});

    Int total = 0;
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        auto [i, j] = cells[idx];
        int vmax = std::min(nvals, i + 1);
        if (j + 1 < nu.part(i)) vmax = std::min(vmax, grid[static_cast<size_t>(i)][static_cast<size_t>(j) + 1]);
        int vmin = 1;
        if (i > 0 && j >= lam.part(i - 1))
            vmin = grid[static_cast<size_t>(i) - 1][static_cast<size_t>(j)] + 1;
        for (int v = vmin; v <= vmax; ++v) {
            if (used[static_cast<size_t>(v)] >= mu.part(v - 1)) continue;
            if (v > 1 && counts[static_cast<size_t>(v) - 1] <= counts[static_cast<size_t>(v)]) continue;
            grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            ++counts[static_cast<size_t>(v)];
            ++used[static_cast<size_t>(v)];
            self(self, idx + 1);
            --used[static_cast<size_t>(v)];
            --counts[static_cast<size_t>(v)];
        }
        grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
    };
    rec(rec, 0);
    return total;
}

// sigma_lam * sigma_mu expanded in the box, via the LR rule with the smaller
// partition as content. Pieri shapes take the strip fast paths.
void schur_pair_product(const Partition& lam, const Partition& mu, const BoxShape& box,
                        const Int& coef, CohomologyClass& acc) {
    if (lam.empty()) {
        acc.add_term(mu, coef);
        return;
    }
    if (mu.empty()) {
        acc.add_term(lam, coef);
        return;
    }
    const Partition* base = &lam;
    const Partition* other = &mu;
    if (other->size() > base->size()) std::swap(base, other);

    if (other->length() <= 1) {
        int a = other->part(0);
        for_each_horizontal_extension(*base, box, a, a, [&](const std::vector<int>& nu, long long) {
            acc.add_term(make_partition(nu), coef);
        });
        return;
    }
    if (is_single_column(*other)) {
        for_each_vertical_extension(*base, box, other->length(), [&](const std::vector<int>& nu) {
            acc.add_term(make_partition(nu), coef);
        });
        return;
    }

    long long target = base->size() + other->size();
    int rows = box.rows;
    std::vector<long long> lam_suffix(static_cast<size_t>(rows) + 1, 0);
    for (int i = rows - 1; i >= 0; --i)
        lam_suffix[static_cast<size_t>(i)] = lam_suffix[static_cast<size_t>(i) + 1] + base->part(i);

    std::vector<int> nu(static_cast<size_t>(rows));
    auto rec = [&](auto&& self, int row, long long sum, int prev) -> void {
        if (row == rows) {
            if (sum != target) return;
            Partition nup = make_partition(nu);
            if (!nup.contains(*other)) return;  // c^nu vanishes unless nu contains both factors
            Int c = count_lattice_fillings(nup, *base, *other);
            if (c != 0) acc.add_term(nup, coef * c);
            return;
        }
        long long rest_min = lam_suffix[static_cast<size_t>(row) + 1];
        for (int v = base->part(row); v <= prev; ++v) {
            long long s = sum + v;
            if (s + rest_min > target) break;
            if (s + static_cast<long long>(rows - row - 1) * v < target) continue;
            nu[static_cast<size_t>(row)] = v;
            self(self, row + 1, s, v);
        }
        nu[static_cast<size_t>(row)] = base->part(row);
    };
    rec(rec, 0, 0, box.cols);
}

}  // namespace

CohomologyClass pieri_row(const CohomologyClass& c, int a) {
    if (a < 0) throw Error(ErrorCode::InvalidArgument, "pieri_row: negative strip size");
    CohomologyClass out(c.box());
    for (const auto& [lam, coef] : c.terms()) {
        for_each_horizontal_extension(lam, c.box(), a, a, [&](const std::vector<int>& mu, long long) {
            out.add_term(make_partition(mu), coef);
        });
    }
    return out;
}

CohomologyClass pieri_col(const CohomologyClass& c, int b) {
    if (b < 0) throw Error(ErrorCode::InvalidArgument, "pieri_col: negative strip size");
    CohomologyClass out(c.box());
    for (const auto& [lam, coef] : c.terms()) {
        for_each_vertical_extension(lam, c.box(), b, [&](const std::vector<int>& mu) {
            out.add_term(make_partition(mu), coef);
        });
    }
    return out;
}

CohomologyClass lr_multiply(const CohomologyClass& a, const CohomologyClass& b) {
    if (a.box() != b.box())
        throw Error(ErrorCode::BoxMismatch, "cannot multiply classes from different boxes");
    CohomologyClass out(a.box());
    for (const auto& [lam, ca] : a.terms())
        for (const auto& [mu, cb] : b.terms()) schur_pair_product(lam, mu, a.box(), ca * cb, out);
    return out;
}

CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b) {
    return lr_multiply(a, b);
}

Int lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu) {
    if (nu.size() != lambda.size() + mu.size()) return 0;
    if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
    if (lambda.size() >= mu.size()) return count_lattice_fillings(nu, lambda, mu);
    return count_lattice_fillings(nu, mu, lambda);
}

Int integrate(const CohomologyClass& c) {
    return c.coefficient(c.box().full());
}

CohomologyClass sigma1r_power_table(int g, const BoxShape& box) {
    if (box.rows < 2)
        throw Error(ErrorCode::InvalidArgument, "sigma1r_power_table: box must have rows = r+1 >= 2");
    if (g < 0) throw Error(ErrorCode::InvalidArgument, "sigma1r_power_table: negative power");
    int r = box.rows - 1;
    CohomologyClass acc = CohomologyClass::unit(box);
    for (int step = 0; step < g; ++step) acc = pieri_col(acc, r);
    return acc;
}

CohomologyClass special_sum(long long total, const BoxShape& box) {
    if (total < 0) return CohomologyClass::zero(box);
    if (total == 0) return CohomologyClass::unit(box);

    static std::mutex cache_mutex;
    static std::map<std::tuple<int, int, long long>, CohomologyClass> cache;
    std::tuple<int, int, long long> key{box.rows, box.cols, total};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    CohomologyClass acc = CohomologyClass::unit(box);
    for (int step = 1; step <= box.rows; ++step) {
        long long lo = total - static_cast<long long>(box.rows - step) * box.cols;
        CohomologyClass next(box);
        for (const auto& [lam, coef] : acc.terms()) {
            long long add_lo = std::max<long long>(0, lo - lam.size());
            long long add_hi = total - lam.size();
            for_each_horizontal_extension(lam, box, add_lo, add_hi,
                                          [&](const std::vector<int>& mu, long long) {
                                              next.add_term(make_partition(mu), coef);
                                          });
        }
        acc = std::move(next);
    }
    CohomologyClass result = acc.graded_piece(total);

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.try_emplace(key, result).first->second;
}

}  // namespace lincount
