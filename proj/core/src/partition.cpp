#include "lincount/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lincount {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i + 1 < parts_.size(); ++i) {
        if (parts_[i] < parts_[i + 1])
            throw Error(ErrorCode::ParseError, "partition parts must be nonincreasing");
    }
    if (!parts_.empty() && parts_.back() < 0)
        throw Error(ErrorCode::ParseError, "partition parts must be nonnegative");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

long long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool Partition::fits(const BoxShape& box) const {
    return length() <= box.rows && (empty() || parts_.front() <= box.cols);
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i)
        if (other.part(i) > part(i)) return false;
    return true;
}

Partition BoxShape::full() const {
    if (cols == 0) return {};
    return Partition(std::vector<int>(static_cast<size_t>(rows), cols));
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> conj(static_cast<size_t>(p.part(0)), 0);
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j) conj[static_cast<size_t>(j)]++;
    return Partition(std::move(conj));
}

Partition complement_in_box(const Partition& p, const BoxShape& box) {
    if (!p.fits(box))
        throw Error(ErrorCode::PartitionOutsideBox,
                    "partition " + format_partition(p) + " does not fit a " +
                        std::to_string(box.rows) + "x" + std::to_string(box.cols) + " box");
    std::vector<int> comp(static_cast<size_t>(box.rows));
    for (int i = 0; i < box.rows; ++i)
        comp[static_cast<size_t>(i)] = box.cols - p.part(box.rows - 1 - i);
    return Partition(std::move(comp));
}

Partition parse_partition(const std::string& text) {
    if (text.empty()) return {};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad partition part: '" + item + "'");
        }
        if (pos != item.size() || value <= 0)
            throw Error(ErrorCode::ParseError,
                        "partition parts must be positive integers, got '" + item + "'");
        parts.push_back(value);
    }
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1])
            throw Error(ErrorCode::ParseError, "partition '" + text + "' is not nonincreasing");
    return Partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
    std::string out;
    for (int i = 0; i < p.length(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(p.part(i));
    }
    return out;
}

namespace {

// Zero parts are never pushed, so every path yields a distinct canonical partition.
void gen_in_box(int rows_left, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    out.emplace_back(cur);
    if (rows_left == 0) return;
    for (int v = 1; v <= max_part; ++v) {
        cur.push_back(v);
        gen_in_box(rows_left - 1, v, cur, out);
        cur.pop_back();
    }
}

void gen_of_size(int rows_left, int max_part, long long remaining, std::vector<int>& cur,
                 std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (rows_left == 0) return;
    int hi = static_cast<int>(std::min<long long>(max_part, remaining));
    for (int v = 1; v <= hi; ++v) {
        if (static_cast<long long>(v) * rows_left < remaining) continue;
        cur.push_back(v);
        gen_of_size(rows_left - 1, v, remaining - v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in_box(const BoxShape& box) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_in_box(box.rows, box.cols, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_of_size_in_box(long long size, const BoxShape& box) {
    std::vector<Partition> out;
    if (size < 0 || size > box.dimension()) return out;
    std::vector<int> cur;
    gen_of_size(box.rows, box.cols, size, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lincount
