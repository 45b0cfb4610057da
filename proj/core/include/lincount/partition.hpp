#pragma once

#include <compare>
#include <string>
#include <vector>

#include "lincount/error.hpp"

namespace lincount {

struct BoxShape;

/// Integer partition in canonical form: weakly decreasing positive parts,
/// no trailing zeros. The empty partition is the default value.
///
/// Partitions index Schubert classes and tableau shapes. Ramification data
/// written nondecreasingly elsewhere is stored here reversed, i.e. always
/// nonincreasing; the reversal only happens at I/O boundaries.
class Partition {
public:
    Partition() = default;

    /// Throws if the sequence is not weakly decreasing; trailing zeros are stripped.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// i-th part, zero beyond the length.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    /// |lambda|, the number of cells.
    long long size() const;

    bool fits(const BoxShape& box) const;

    /// True if every part of `other` is at most the matching part of *this.
    bool contains(const Partition& other) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// Rectangle of partitions: rows = r+1, cols = d-r for the Grassmannian
/// Gr(rows, rows+cols). cols may be zero (Gr(k,k) is a point).
struct BoxShape {
    int rows = 1;
    int cols = 0;

    BoxShape(int rows_, int cols_) : rows(rows_), cols(cols_) {
        if (rows < 1 || cols < 0)
            throw Error(ErrorCode::InvalidArgument,
                        "box must have rows >= 1 and cols >= 0");
    }

    long long dimension() const { return static_cast<long long>(rows) * cols; }

    /// The full-box partition (cols repeated rows times).
    Partition full() const;

    friend bool operator==(const BoxShape&, const BoxShape&) = default;
};

/// Transpose of the Young diagram; an involution.
Partition conjugate(const Partition& p);

/// (cols - p[rows-1], ..., cols - p[0]), the 180-degree complement in the box.
/// Throws PartitionOutsideBox if p does not fit.
Partition complement_in_box(const Partition& p, const BoxShape& box);

/// Text form: comma-separated nonincreasing positive integers ("3,1,1");
/// the empty string is the empty partition.
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p);

/// All partitions contained in the box, in increasing lexicographic order.
std::vector<Partition> partitions_in_box(const BoxShape& box);

/// All partitions of `size` contained in the box.
std::vector<Partition> partitions_of_size_in_box(long long size, const BoxShape& box);

}  // namespace lincount
