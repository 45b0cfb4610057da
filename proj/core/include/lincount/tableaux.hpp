#pragma once

#include <map>
#include <string>
#include <vector>

#include "lincount/bigint.hpp"
#include "lincount/partition.hpp"

namespace lincount {

/// One cell of a red/blue grid filling: Red(v) with v in 1..g or Blue(v)
/// with v in 0..r.
struct TableauCell {
    bool red = false;
    int value = 0;
};

/// A filling of the (r+1) x (d-r) grid with rg red integers (each of 1..g
/// appearing exactly r times) and blue integers from 0..r, subject to:
///   - red cells sit above blue cells in their column and left of blue
///     cells in their row (so the red region is a Young diagram),
///   - red values increase strictly across rows, weakly down columns,
///   - blue values increase weakly across rows, strictly down columns.
class TableauFilling {
public:
    TableauFilling(int rows, int cols)
        : rows_(rows), cols_(cols), cells_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const TableauCell& at(int row, int col) const {
        return cells_[static_cast<size_t>(row) * cols_ + col];
    }
    TableauCell& at(int row, int col) { return cells_[static_cast<size_t>(row) * cols_ + col]; }

    /// Row lengths of the red region.
    Partition red_shape() const;

private:
    int rows_, cols_;
    std::vector<TableauCell> cells_;
};

/// One grid row per line, cells space-separated, red as "R3", blue as "B1".
std::string render_filling(const TableauFilling& f);

/// Number of valid fillings of the (r+1) x (d-r) grid, by backtracking over
/// the leftmost min(d-r, g) columns in column-major order; the remaining
/// columns are forced to the blue sequence 0..r. Requires d >= r+1; throws
/// GridTooSmall when rg exceeds the grid.
Int count_fillings(int g, int r, int d);

struct ShapeCounts {
    Int red_count;   // red sub-fillings of this Young-diagram region
    Int blue_count;  // blue completions of its complement
};

/// Fillings grouped by the shape of the red region, counted as independent
/// red and blue factors. Sum of red*blue over shapes equals count_fillings;
/// that factorization is a derived check, not how count_fillings is computed.
std::map<Partition, ShapeCounts> count_by_red_shape(int g, int r, int d);

/// At most `limit` fillings, full grid width, in a fixed deterministic order:
/// cells are decided column-major (top to bottom within a column) and at each
/// cell red values 1..g are tried before blue values 0..r.
std::vector<TableauFilling> list_fillings(int g, int r, int d, long long limit);

}  // namespace lincount
