#pragma once

#include <map>
#include <string>

#include "lincount/bigint.hpp"
#include "lincount/partition.hpp"

namespace lincount {

/// Element of the cohomology ring of Gr(rows, rows+cols), written in the
/// Schubert basis: a finitely supported map from partitions inside the box
/// to integer coefficients. Terms outside the box never materialize; the
/// truncation is the ring structure, not a lossy step.
///
/// Values are immutable in spirit: all ring operations return new classes.
class CohomologyClass {
public:
    explicit CohomologyClass(BoxShape box) : box_(box) {}

    static CohomologyClass zero(BoxShape box) { return CohomologyClass(box); }

    /// The unit sigma_0.
    static CohomologyClass unit(BoxShape box) {
        CohomologyClass c(box);
        c.terms_[Partition{}] = 1;
        return c;
    }

    /// sigma_lambda, or the zero class if lambda does not fit the box.
    static CohomologyClass schubert(BoxShape box, const Partition& lambda) {
        CohomologyClass c(box);
        if (lambda.fits(box)) c.terms_[lambda] = 1;
        return c;
    }

    const BoxShape& box() const { return box_; }
    const std::map<Partition, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coefficient(const Partition& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Int(0) : it->second;
    }

    /// Adds c * sigma_p; drops the term if it leaves canonical form.
    void add_term(const Partition& p, const Int& c);

    CohomologyClass& operator+=(const CohomologyClass& other);
    friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) {
        a += b;
        return a;
    }
    CohomologyClass& operator*=(const Int& scalar);
    friend CohomologyClass operator*(const Int& s, CohomologyClass c) {
        c *= s;
        return c;
    }
    friend CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b);

    friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;

    /// Terms of codimension exactly k.
    CohomologyClass graded_piece(long long k) const;

    /// Rendering like "s[2,1] + 2*s[3]"; "0" for the zero class.
    std::string to_string() const;

private:
    BoxShape box_;
    std::map<Partition, Int> terms_;
};

/// c * sigma_a: adds horizontal strips of size a (at most one new cell per
/// column), truncated to the box.
CohomologyClass pieri_row(const CohomologyClass& c, int a);

/// c * sigma_{1^b}: adds vertical strips of size b (at most one new cell per
/// row), truncated to the box.
CohomologyClass pieri_col(const CohomologyClass& c, int b);

/// General product, bilinear over the Littlewood-Richardson expansion
/// sigma_lambda * sigma_mu = sum_nu c^nu_{lambda,mu} sigma_nu. Coefficients
/// are computed by enumerating semistandard skew fillings of nu/lambda with
/// content mu whose reverse reading word is a lattice word.
/// Throws BoxMismatch if the operands live in different boxes.
CohomologyClass lr_multiply(const CohomologyClass& a, const CohomologyClass& b);

/// Single Littlewood-Richardson coefficient c^nu_{lambda,mu}.
Int lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu);

/// Coefficient of the full-box partition; the pushforward to a point.
Int integrate(const CohomologyClass& c);

/// sigma_{1^r}^g in the box, r = rows-1. Every surviving term has size r*g.
CohomologyClass sigma1r_power_table(int g, const BoxShape& box);

/// Sum over ordered tuples (a_0,...,a_{rows-1}) with sum `total` of
/// prod_i sigma_{a_i}; the degree-`total` graded piece of
/// (sigma_0 + ... + sigma_cols)^rows. Zero class for total < 0, the unit for
/// total = 0. Results are memoized per (box, total).
CohomologyClass special_sum(long long total, const BoxShape& box);

}  // namespace lincount
