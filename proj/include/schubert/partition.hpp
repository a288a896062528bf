#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "schubert/errors.hpp"

namespace schubert {

/// Integer partition: weakly decreasing positive parts, trailing zeros
/// normalized away on construction. The empty partition is a valid value.
class Partition {
public:
    Partition() = default;

    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
                throw invalid_input("partition parts must be weakly decreasing and nonnegative");
        }
    }

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] std::size_t length() const { return parts_.size(); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }

    /// Part at row i (0-indexed); zero beyond the last row.
    [[nodiscard]] int part(std::size_t i) const {
        return i < parts_.size() ? parts_[i] : 0;
    }

    /// Number of boxes, i.e. the cohomological degree of the indexed class.
    [[nodiscard]] long weight() const {
        long s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    /// Transposed Young diagram.
    [[nodiscard]] Partition conjugate() const {
        if (parts_.empty()) return {};
        std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
        return Partition(std::move(conj));
    }

    /// Diagram containment mu <= *this row by row.
    [[nodiscard]] bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (std::size_t i = 0; i < mu.length(); ++i)
            if (mu.parts_[i] > parts_[i]) return false;
        return true;
    }

    /// Comma-separated parts, e.g. "3,1"; the empty partition prints as "".
    [[nodiscard]] std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    /// Parses the to_string form. Throws invalid_input on malformed text.
    static Partition parse(const std::string& text) {
        if (!text.empty() && text.back() == ',')
            throw invalid_input("trailing comma in partition '" + text + "'");
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string::npos) next = text.size();
            if (next == pos) throw invalid_input("empty partition part in '" + text + "'");
            int value = 0;
            for (std::size_t i = pos; i < next; ++i) {
                char c = text[i];
                if (c < '0' || c > '9')
                    throw invalid_input("bad character in partition '" + text + "'");
                value = value * 10 + (c - '0');
                if (value > 1'000'000)
                    throw invalid_input("partition part too large in '" + text + "'");
            }
            parts.push_back(value);
            pos = next + 1;
            if (pos == text.size() + 1) break;
        }
        return Partition(std::move(parts));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return std::lexicographical_compare_three_way(
            a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
    }

private:
    std::vector<int> parts_;
};

/// Bounding rectangle for partitions; rows x cols with both positive.
struct Box {
    int rows = 0;
    int cols = 0;

    Box(int r, int c) : rows(r), cols(c) {
        if (r <= 0 || c <= 0) throw invalid_input("box dimensions must be positive");
    }

    [[nodiscard]] bool fits(const Partition& lambda) const {
        return static_cast<int>(lambda.length()) <= rows && lambda.part(0) <= cols;
    }

    [[nodiscard]] long capacity() const { return static_cast<long>(rows) * cols; }

    /// The full-box partition (cols, ..., cols) with `rows` parts.
    [[nodiscard]] Partition full() const {
        return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
    }
};

/// Complement mu_i = cols - lambda_{rows+1-i}; an involution on partitions
/// fitting in the box, with |lambda| + |mu| = rows*cols.
inline Partition complement_in_box(const Partition& lambda, const Box& box) {
    if (!box.fits(lambda))
        throw invalid_input("partition " + lambda.to_string() + " does not fit in box");
    std::vector<int> parts(static_cast<std::size_t>(box.rows));
    for (int i = 0; i < box.rows; ++i)
        parts[static_cast<std::size_t>(i)] =
            box.cols - lambda.part(static_cast<std::size_t>(box.rows - 1 - i));
    return Partition(std::move(parts));
}

/// True when outer/inner is a horizontal strip: inner <= outer and no column
/// gains more than one box, i.e. outer_{i+1} <= inner_i for all rows.
inline bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
    if (!outer.contains(inner)) return false;
    for (std::size_t i = 0; i + 1 < outer.length(); ++i)
        if (outer.part(i + 1) > inner.part(i)) return false;
    return true;
}

/// All mu >= lambda in the box with mu/lambda a horizontal strip of size p.
/// Pieri: lambda * h_p expands over exactly these mu (out-of-box terms drop).
inline std::vector<Partition> horizontal_strip_successors(const Partition& lambda, int p,
                                                          const Box& box) {
    if (!box.fits(lambda))
        throw invalid_input("partition " + lambda.to_string() + " does not fit in box");
    if (p < 0) throw invalid_input("strip size must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> mu(static_cast<std::size_t>(box.rows), 0);
    // row i can grow to at most min(cols, mu_{i-1}) and must stay >= lambda_i;
    // the strip condition caps it at lambda_{i-1} for i > 0.
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (row == box.rows) {
            if (remaining == 0) out.emplace_back(mu);
            return;
        }
        int lo = lambda.part(static_cast<std::size_t>(row));
        int hi = box.cols;
        if (row > 0) {
            hi = std::min(hi, mu[static_cast<std::size_t>(row - 1)]);
            hi = std::min(hi, lambda.part(static_cast<std::size_t>(row - 1)));
        }
        for (int v = hi; v >= lo; --v) {
            int used = v - lo;
            if (used > remaining) continue;
            mu[static_cast<std::size_t>(row)] = v;
            self(self, row + 1, remaining - used);
        }
        mu[static_cast<std::size_t>(row)] = 0;
    };
    rec(rec, 0, p);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return b < a; // lexicographic descending
    });
    return out;
}

/// All partitions of size d fitting in the box, lexicographic descending.
inline std::vector<Partition> box_partitions_by_degree(long d, const Box& box) {
    std::vector<Partition> out;
    if (d < 0 || d > box.capacity()) return out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int maxPart, long remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        if (static_cast<int>(parts.size()) == box.rows) return;
        long rowsLeft = box.rows - static_cast<long>(parts.size());
        for (int v = std::min<long>(maxPart, remaining); v >= 1; --v) {
            if (static_cast<long>(v) * rowsLeft < remaining) break;
            parts.push_back(v);
            self(self, v, remaining - v);
            parts.pop_back();
        }
    };
    rec(rec, box.cols, d);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return b < a;
    });
    return out;
}

/// Every partition fitting in the box, ordered by degree then lex descending.
inline std::vector<Partition> box_partitions(const Box& box) {
    std::vector<Partition> out;
    for (long d = 0; d <= box.capacity(); ++d) {
        auto layer = box_partitions_by_degree(d, box);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace schubert
