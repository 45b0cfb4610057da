#include "lincount/tableaux.hpp"

#include <algorithm>

#include "lincount/error.hpp"

namespace lincount {

Partition TableauFilling::red_shape() const {
    std::vector<int> shape;
    for (int i = 0; i < rows_; ++i) {
        int len = 0;
        while (len < cols_ && at(i, len).red) ++len;
        if (len == 0) break;
        shape.push_back(len);
    }
    return Partition(std::move(shape));
}

std::string render_filling(const TableauFilling& f) {
    std::string out;
    for (int i = 0; i < f.rows(); ++i) {
        for (int j = 0; j < f.cols(); ++j) {
            if (j > 0) out += ' ';
            const TableauCell& c = f.at(i, j);
            out += c.red ? 'R' : 'B';
            out += std::to_string(c.value);
        }
        out += '\n';
    }
    return out;
}

namespace {

struct GridSpec {
    int g, r, d;
    int rows;   // r+1
    int cols;   // d-r, the real grid width
    int width;  // min(cols, g), the enumerated width; the rest is forced
};

GridSpec make_spec(int g, int r, int d) {
    if (g < 0 || r < 1)
        throw Error(ErrorCode::InvalidArgument, "need g >= 0 and r >= 1");
    if (d < r + 1)
        throw Error(ErrorCode::InvalidArgument, "need d >= r+1 for a nonempty grid");
    GridSpec s{g, r, d, r + 1, d - r, 0};
    if (static_cast<long long>(r) * g > static_cast<long long>(s.rows) * s.cols)
        throw Error(ErrorCode::GridTooSmall,
                    "cannot place " + std::to_string(static_cast<long long>(r) * g) +
                        " red cells in a " + std::to_string(s.rows) + "x" +
                        std::to_string(s.cols) + " grid");
    s.width = std::min(s.cols, g);
    return s;
}

// Column-major backtracking over the effective grid. Every placement is
// checked against its left and upper neighbor only, which is sound because
// both are already decided in this order. Blue values are capped at the row
// index: the cells below in the same column need strictly larger blue values
// up to r, so anything larger can never complete. Red values are tried
// ascending, then blue, which makes the emission order the documented one.
class FillingSearch {
public:
    GridSpec spec;
    std::vector<TableauCell> grid;   // rows x width, column-major placement
    std::vector<int> red_remaining;  // per value 1..g
    long long red_left_total;

    explicit FillingSearch(const GridSpec& s)
        : spec(s),
          grid(static_cast<size_t>(s.rows) * std::max(s.width, 1)),
          red_remaining(static_cast<size_t>(s.g) + 1, s.r),
          red_left_total(static_cast<long long>(s.g) * s.r) {}

    TableauCell& at(int row, int col) {
        return grid[static_cast<size_t>(row) * spec.width + col];
    }

    // visit() is called on every complete filling; returning false stops the search.
    template <class Visitor>
    bool run(Visitor&& visit) {
        if (spec.width == 0) return visit(*this);
        return place(0, std::forward<Visitor>(visit));
    }

    template <class Visitor>
    bool place(int pos, Visitor&& visit) {
        if (pos == spec.rows * spec.width) {
            if (red_left_total != 0) return true;
            return visit(*this);
        }
        int col = pos / spec.rows;
        int row = pos % spec.rows;
        long long cells_left = static_cast<long long>(spec.rows) * spec.width - pos;
        if (red_left_total > cells_left) return true;

        const TableauCell* left = col > 0 ? &at(row, col - 1) : nullptr;
        const TableauCell* up = row > 0 ? &at(row - 1, col) : nullptr;

        bool red_ok = (!left || left->red) && (!up || up->red);
        if (red_ok) {
            int vmin = 1;
            if (left) vmin = std::max(vmin, left->value + 1);  // strict across rows
            if (up) vmin = std::max(vmin, up->value);          // weak down columns
            for (int v = vmin; v <= spec.g; ++v) {
                if (red_remaining[static_cast<size_t>(v)] == 0) continue;
                at(row, col) = {true, v};
                --red_remaining[static_cast<size_t>(v)];
                --red_left_total;
                bool keep = place(pos + 1, visit);
                ++red_left_total;
                ++red_remaining[static_cast<size_t>(v)];
                if (!keep) return false;
            }
        }

        int bmin = 0;
        if (left && !left->red) bmin = std::max(bmin, left->value);     // weak across rows
        if (up && !up->red) bmin = std::max(bmin, up->value + 1);       // strict down columns
        for (int b = bmin; b <= row; ++b) {
            at(row, col) = {false, b};
            if (!place(pos + 1, visit)) return false;
        }
        return true;
    }

    // Full-width filling: the enumerated prefix plus the forced blue suffix.
    TableauFilling materialize() {
        TableauFilling f(spec.rows, spec.cols);
        for (int j = 0; j < spec.width; ++j)
            for (int i = 0; i < spec.rows; ++i) f.at(i, j) = at(i, j);
        for (int j = spec.width; j < spec.cols; ++j)
            for (int i = 0; i < spec.rows; ++i) f.at(i, j) = {false, i};
        return f;
    }
};

// Red fillings of the region `shape`: values 1..g, each exactly r times,
// strictly increasing across rows, weakly increasing down columns.
Int count_red_fillings(const Partition& shape, const GridSpec& spec) {
    std::vector<std::vector<int>> grid(static_cast<size_t>(shape.length()));
    for (int i = 0; i < shape.length(); ++i)
        grid[static_cast<size_t>(i)].assign(static_cast<size_t>(shape.part(i)), 0);
    std::vector<int> remaining(static_cast<size_t>(spec.g) + 1, spec.r);

    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int j = 0; j < shape.part(0); ++j)
        for (int i = 0; i < shape.length() && shape.part(i) > j; ++i) cells.push_back({i, j});

    Int total = 0;
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        auto [i, j] = cells[idx];
        int vmin = 1;
        if (j > 0) vmin = std::max(vmin, grid[static_cast<size_t>(i)][static_cast<size_t>(j) - 1] + 1);
        if (i > 0) vmin = std::max(vmin, grid[static_cast<size_t>(i) - 1][static_cast<size_t>(j)]);
        for (int v = vmin; v <= spec.g; ++v) {
            if (remaining[static_cast<size_t>(v)] == 0) continue;
            grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            --remaining[static_cast<size_t>(v)];
            self(self, idx + 1);
            ++remaining[static_cast<size_t>(v)];
        }
        grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
    };
    rec(rec, 0);
    return total;
}

// Blue fillings of the complement of `shape` in the effective grid: values
// 0..r, weakly increasing across rows, strictly increasing down columns.
Int count_blue_fillings(const Partition& shape, const GridSpec& spec) {
    if (spec.width == 0) return 1;
    std::vector<std::vector<int>> grid(static_cast<size_t>(spec.rows));
    for (auto& row : grid) row.assign(static_cast<size_t>(spec.width), -1);

    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;  // column-major over the complement
    for (int j = 0; j < spec.width; ++j)
        for (int i = 0; i < spec.rows; ++i)
            if (j >= shape.part(i)) cells.push_back({i, j});

    Int total = 0;
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        auto [i, j] = cells[idx];
        int bmin = 0;
        if (j > 0 && j - 1 >= shape.part(i))
            bmin = std::max(bmin, grid[static_cast<size_t>(i)][static_cast<size_t>(j) - 1]);
        if (i > 0 && j >= shape.part(i - 1))
            bmin = std::max(bmin, grid[static_cast<size_t>(i) - 1][static_cast<size_t>(j)] + 1);
        for (int b = bmin; b <= i; ++b) {
            grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = b;
            self(self, idx + 1);
        }
        grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = -1;
    };
    rec(rec, 0);
    return total;
}

}  // namespace

Int count_fillings(int g, int r, int d) {
    GridSpec spec = make_spec(g, r, d);
    Int total = 0;
    FillingSearch search(spec);
    search.run([&](FillingSearch&) {
        ++total;
        return true;
    });
    return total;
}

std::map<Partition, ShapeCounts> count_by_red_shape(int g, int r, int d) {
    GridSpec spec = make_spec(g, r, d);
    std::map<Partition, ShapeCounts> out;
    BoxShape red_box(spec.rows, spec.width);
    for (const auto& shape : partitions_of_size_in_box(static_cast<long long>(r) * g, red_box)) {
        Int red = count_red_fillings(shape, spec);
        if (red == 0) continue;
        Int blue = count_blue_fillings(shape, spec);
        out.emplace(shape, ShapeCounts{red, blue});
    }
    return out;
}

std::vector<TableauFilling> list_fillings(int g, int r, int d, long long limit) {
    if (limit < 0) throw Error(ErrorCode::InvalidArgument, "limit must be nonnegative");
    GridSpec spec = make_spec(g, r, d);
    std::vector<TableauFilling> out;
    if (limit == 0) return out;
    FillingSearch search(spec);
    search.run([&](FillingSearch& s) {
        out.push_back(s.materialize());
        return static_cast<long long>(out.size()) < limit;
    });
    return out;
}

}  // namespace lincount
