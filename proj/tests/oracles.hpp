#pragma once

// Independent oracles used only by the test suite. Each one recomputes a
// quantity through a different route than the library path it checks.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <vector>

#include "schubert/integers.hpp"
#include "schubert/littlewood_richardson.hpp"
#include "schubert/partition.hpp"

namespace oracles {

using schubert::Box;
using schubert::Int;
using schubert::Partition;

/// Number of chains lambda -> nu adding horizontal strips of the given
/// sizes (a size below zero kills the term). Intermediates are pruned to
/// subdiagrams of nu since strips only add boxes.
inline Int strip_chain_count(const Partition& lambda, const std::vector<int>& sizes,
                             const Partition& nu) {
    for (int s : sizes)
        if (s < 0) return 0;
    if (!nu.contains(lambda)) return 0;
    Box hull(std::max<int>(1, static_cast<int>(nu.length())), std::max(1, nu.part(0)));
    std::map<Partition, Int> level{{lambda, 1}};
    for (int s : sizes) {
        std::map<Partition, Int> next;
        for (const auto& [kappa, c] : level) {
            for (const auto& mu : horizontal_strip_successors(kappa, s, hull))
                if (nu.contains(mu)) next[mu] += c;
        }
        level = std::move(next);
        if (level.empty()) return 0;
    }
    auto it = level.find(nu);
    return it == level.end() ? Int(0) : it->second;
}

/// Littlewood-Richardson coefficient through the Jacobi-Trudi determinant:
/// s_mu = det(h_{mu_i - i + j}), expanded over permutations with Pieri
/// chains counting each h-product. Independent of the lattice-word
/// tableau enumeration.
inline Int lr_by_jacobi_trudi(const Partition& lambda, const Partition& mu,
                              const Partition& nu) {
    if (lambda.weight() + mu.weight() != nu.weight()) return 0;
    if (mu.empty()) return nu == lambda ? Int(1) : Int(0);
    const int m = static_cast<int>(mu.length());
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    Int total = 0;
    do {
        // sign of the permutation by inversion count
        int inv = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
        std::vector<int> sizes(static_cast<std::size_t>(m));
        for (int t = 0; t < m; ++t)
            sizes[static_cast<std::size_t>(t)] =
                mu.part(static_cast<std::size_t>(t)) - t + perm[static_cast<std::size_t>(t)];
        Int chains = strip_chain_count(lambda, sizes, nu);
        total += (inv % 2 == 0) ? chains : -chains;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Semistandard tableaux of shape lambda with entries at most max_entry,
/// counted by direct enumeration of fillings.
inline Int ssyt_count_brute(const Partition& lambda, int max_entry) {
    if (lambda.empty()) return 1;
    if (static_cast<int>(lambda.length()) > max_entry) return 0;
    std::vector<std::vector<int>> tab(lambda.length());
    Int count = 0;
    auto rec = [&](auto&& self, std::size_t row, int col) -> void {
        if (row == lambda.length()) {
            ++count;
            return;
        }
        if (col == lambda.part(row)) {
            self(self, row + 1, 0);
            return;
        }
        int lo = 1;
        if (col > 0) lo = tab[row][static_cast<std::size_t>(col - 1)];
        if (row > 0) lo = std::max(lo, tab[row - 1][static_cast<std::size_t>(col)] + 1);
        for (int v = lo; v <= max_entry; ++v) {
            tab[row].push_back(v);
            self(self, row, col + 1);
            tab[row].pop_back();
        }
    };
    rec(rec, 0, 0);
    return count;
}

/// The same count through horizontal-strip chains: each entry level of a
/// semistandard tableau is a horizontal strip.
inline Int ssyt_count_strips(const Partition& lambda, int max_entry) {
    Box hull(std::max<int>(1, static_cast<int>(lambda.length())), std::max(1, lambda.part(0)));
    std::map<Partition, Int> level{{Partition{}, 1}};
    for (int step = 0; step < max_entry; ++step) {
        std::map<Partition, Int> next;
        for (const auto& [kappa, c] : level)
            for (int s = 0; s <= static_cast<int>(lambda.weight() - kappa.weight()); ++s)
                for (const auto& mu : horizontal_strip_successors(kappa, s, hull))
                    if (lambda.contains(mu)) next[mu] += c;
        level = std::move(next);
    }
    auto it = level.find(lambda);
    return it == level.end() ? Int(0) : it->second;
}

/// Hand expansion on P^1 x P^2 with the Segre class H = h1 + h2: the
/// cohomology is a 2 x 3 coefficient grid, multiplied and integrated with
/// plain loops. Returns the delta sequence entries 0..3 computed from
/// c(T) = (1+h1)^2 (1+h2)^3.
inline std::vector<Int> segre_p1xp2_delta_by_hand() {
    using Grid = std::array<std::array<Int, 3>, 2>; // [a][b] = coeff of h1^a h2^b
    auto mul = [](const Grid& u, const Grid& v) {
        Grid out{};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 2; ++c)
                    for (int d = 0; d < 3; ++d)
                        if (a + c < 2 && b + d < 3)
                            out[static_cast<std::size_t>(a + c)][static_cast<std::size_t>(b + d)] +=
                                u[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] *
                                v[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)];
        return out;
    };
    Grid one{};
    one[0][0] = 1;
    Grid h1{}, h2{}, H{};
    h1[1][0] = 1;
    h2[0][1] = 1;
    H[1][0] = 1;
    H[0][1] = 1;

    Grid cT = one;
    Grid f1 = one;
    f1[1][0] = 1; // 1 + h1
    Grid f2 = one;
    f2[0][1] = 1; // 1 + h2
    cT = mul(cT, f1);
    cT = mul(cT, f1);
    cT = mul(cT, f2);
    cT = mul(cT, f2);
    cT = mul(cT, f2);

    auto piece = [&](int deg) {
        Grid out{};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 3; ++b)
                if (a + b == deg)
                    out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                        cT[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        return out;
    };
    std::vector<Grid> Hpow{one};
    for (int i = 0; i < 3; ++i) Hpow.push_back(mul(Hpow.back(), H));

    const int d = 3;
    std::vector<Int> delta;
    for (int j = 0; j <= d; ++j) {
        Int total = 0;
        for (int i = 0; i <= d; ++i) {
            Grid term = mul(piece(d - i), Hpow[static_cast<std::size_t>(i)]);
            Int integral = term[1][2];
            if ((d - i) % 2 != 0) integral = -integral;
            total += schubert::binomial(i + 1, j + 1) * integral;
        }
        delta.push_back(total);
    }
    return delta;
}

/// Same style of hand computation for the quadric surface P^1 x P^1 with
/// the Segre class; used as the oracle for the degree-2 section of P^3.
inline std::vector<Int> quadric_surface_delta_by_hand() {
    using Grid = std::array<std::array<Int, 2>, 2>;
    auto mul = [](const Grid& u, const Grid& v) {
        Grid out{};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c)
                    for (int d = 0; d < 2; ++d)
                        if (a + c < 2 && b + d < 2)
                            out[static_cast<std::size_t>(a + c)][static_cast<std::size_t>(b + d)] +=
                                u[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] *
                                v[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)];
        return out;
    };
    Grid one{};
    one[0][0] = 1;
    Grid H{};
    H[1][0] = 1;
    H[0][1] = 1;
    Grid f1 = one, f2 = one;
    f1[1][0] = 1;
    f2[0][1] = 1;
    Grid cT = mul(mul(one, f1), f1);
    cT = mul(mul(cT, f2), f2);

    auto piece = [&](int deg) {
        Grid out{};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                if (a + b == deg)
                    out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                        cT[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        return out;
    };
    std::vector<Grid> Hpow{one, H, mul(H, H)};
    const int d = 2;
    std::vector<Int> delta;
    for (int j = 0; j <= d; ++j) {
        Int total = 0;
        for (int i = 0; i <= d; ++i) {
            Grid term = mul(piece(d - i), Hpow[static_cast<std::size_t>(i)]);
            Int integral = term[1][1];
            if ((d - i) % 2 != 0) integral = -integral;
            total += schubert::binomial(i + 1, j + 1) * integral;
        }
        delta.push_back(total);
    }
    return delta;
}

/// All partitions of weight at most max_weight (unbounded shape).
inline std::vector<Partition> partitions_up_to(int max_weight) {
    std::vector<Partition> out;
    for (int d = 0; d <= max_weight; ++d) {
        Box hull(std::max(1, d), std::max(1, d));
        for (const auto& p : schubert::box_partitions_by_degree(d, hull)) out.push_back(p);
    }
    return out;
}

} // namespace oracles
