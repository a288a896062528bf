#pragma once

#include <map>
#include <optional>
#include <vector>

#include "schubert/integers.hpp"
#include "schubert/partition.hpp"

namespace schubert {

namespace detail {

/// Counts Littlewood-Richardson fillings of the skew shape nu/lambda with
/// content mu: semistandard, and the reverse reading word (rows top to
/// bottom, each right to left) is a lattice word. Cells are filled in
/// reading order so both conditions prune incrementally.
inline Int count_lr_fillings(const Partition& nu, const Partition& lambda,
                             const Partition& mu) {
    const std::size_t nrows = nu.length();
    const std::size_t colors = mu.length();
    // cells in reverse reading order: row 0..n-1, columns right to left
    struct Cell {
        int row;
        int col;
    };
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < nrows; ++i)
        for (int j = nu.part(i) - 1; j >= lambda.part(i); --j)
            cells.push_back({static_cast<int>(i), j});
    if (cells.empty()) return mu.weight() == 0 ? 1 : 0;

    std::vector<std::vector<int>> fill(nrows);
    for (std::size_t i = 0; i < nrows; ++i)
        fill[i].assign(static_cast<std::size_t>(nu.part(i)), 0);
    std::vector<int> remaining(colors);
    for (std::size_t v = 0; v < colors; ++v) remaining[v] = mu.part(v);
    std::vector<int> placed(colors, 0); // counts in the reading-word prefix

    Int count = 0;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [row, col] = cells[idx];
        for (std::size_t v = 1; v <= colors; ++v) {
            if (remaining[v - 1] == 0) continue;
            // lattice word: after placing v, #v must not exceed #(v-1)
            if (v >= 2 && placed[v - 1] + 1 > placed[v - 2]) continue;
            // row weakly increases left to right: cell to the right was
            // filled earlier (reading order goes right to left)
            if (col + 1 < nu.part(static_cast<std::size_t>(row)) &&
                fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col + 1)] <
                    static_cast<int>(v))
                continue;
            // column strictly increases downward
            if (row > 0 && col < nu.part(static_cast<std::size_t>(row - 1)) &&
                col >= lambda.part(static_cast<std::size_t>(row - 1))) {
                int above = fill[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)];
                if (above >= static_cast<int>(v)) continue;
            }
            fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
                static_cast<int>(v);
            --remaining[v - 1];
            ++placed[v - 1];
            self(self, idx + 1);
            fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
            ++remaining[v - 1];
            --placed[v - 1];
        }
    };
    rec(rec, 0);
    return count;
}

} // namespace detail

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}. Zero on degree
/// mismatch or when lambda is not contained in nu.
inline Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.weight() + mu.weight() != nu.weight()) return 0;
    if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
    return detail::count_lr_fillings(nu, lambda, mu);
}

/// Expansion of s_lambda * s_mu over the LR rule, truncated to the box when
/// one is given. Keys with zero coefficient are absent.
inline std::map<Partition, Int> schur_product(const Partition& lambda, const Partition& mu,
                                              const std::optional<Box>& box = std::nullopt) {
    std::map<Partition, Int> out;
    long total = lambda.weight() + mu.weight();
    std::vector<Partition> candidates;
    if (box) {
        if (!box->fits(lambda) || !box->fits(mu)) return out;
        candidates = box_partitions_by_degree(total, *box);
    } else {
        int rows = static_cast<int>(lambda.length() + mu.length());
        int cols = lambda.part(0) + mu.part(0);
        if (rows == 0 || cols == 0) {
            out[Partition{}] = 1;
            return out;
        }
        candidates = box_partitions_by_degree(total, Box(rows, cols));
    }
    for (const auto& nu : candidates) {
        Int c = lr_coefficient(lambda, mu, nu);
        if (c != 0) out.emplace(nu, std::move(c));
    }
    return out;
}

} // namespace schubert
