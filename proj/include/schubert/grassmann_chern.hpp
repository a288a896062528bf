#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schubert/littlewood_richardson.hpp"
#include "schubert/multipoly.hpp"

namespace schubert {

namespace detail {

/// Decomposition of a polynomial symmetric in two variable blocks into
/// products s_alpha(x-block) * s_beta(y-block), by iterated subtraction at
/// the lexicographically greatest monomial.
inline std::map<std::pair<Partition, Partition>, Int>
bi_schur_decompose(const MultiPoly& p, int xvars, int yvars) {
    std::map<std::pair<Partition, Partition>, Int> out;
    MultiPoly work = p;
    while (!work.is_zero()) {
        auto [mono, coeff] = work.leading();
        auto exps = work.unpack(mono);
        Partition alpha(std::vector<int>(exps.begin(), exps.begin() + xvars));
        Partition beta(std::vector<int>(exps.begin() + xvars, exps.end()));
        MultiPoly sub = schur_polynomial_on(alpha, xvars + yvars, 0, xvars)
                            .multiply(schur_polynomial_on(beta, xvars + yvars, xvars, yvars));
        sub.scale(coeff);
        work -= sub;
        out[{alpha, beta}] += coeff;
        if (out[{alpha, beta}] == 0) out.erase({alpha, beta});
    }
    return out;
}

/// Pieri step in the box-truncated Schur basis: expansion * h_q.
inline SchurExpansion pieri_multiply(const SchurExpansion& u, int q, const Box& box) {
    if (q == 0) return u;
    SchurExpansion out;
    for (const auto& [lambda, c] : u)
        for (const auto& mu : horizontal_strip_successors(lambda, q, box)) {
            auto& slot = out[mu];
            slot += c;
            if (slot == 0) out.erase(mu);
        }
    return out;
}

/// Image of s_beta(y) under the substitution e_q(y) -> h_q(x), reduced
/// through the box: the dual Jacobi-Trudi determinant det(e_{beta'_i - i + j})
/// with entries above e_yvars vanishing, evaluated by Laplace expansion
/// memoized on row subsets. Multiplication by an h entry is a Pieri step,
/// so the whole evaluation stays in the Schubert basis.
inline SchurExpansion substitute_dual_jacobi_trudi(const Partition& beta, const Box& box,
                                                   int yvars) {
    SchurExpansion unit{{Partition{}, Int(1)}};
    if (beta.empty()) return unit;
    const Partition conj = beta.conjugate();
    const int t = beta.part(0); // matrix size = number of parts of beta'

    // entry (i, j), 1-based: index of e; -1 encodes a zero entry
    auto entry_index = [&](int i, int j) -> int {
        int q = conj.part(static_cast<std::size_t>(i - 1)) - i + j;
        if (q < 0 || q > yvars) return -1;
        return q;
    };

    std::unordered_map<std::uint32_t, SchurExpansion> memo;
    auto det = [&](auto&& self, std::uint32_t mask) -> const SchurExpansion& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        SchurExpansion result;
        if (mask == 0) {
            result = unit;
        } else {
            int col = __builtin_popcount(mask); // expand along this column
            int pos = 0;
            for (int row = 1; row <= t; ++row) {
                std::uint32_t bit = 1u << (row - 1);
                if (!(mask & bit)) continue;
                int q = entry_index(row, col);
                if (q >= 0) {
                    SchurExpansion term = pieri_multiply(self(self, mask & ~bit), q, box);
                    // cofactor sign (-1)^{(pos+1)+col} with pos 0-based
                    bool negative = (pos + col) % 2 == 0;
                    for (auto& [lambda, c] : term) {
                        auto& slot = result[lambda];
                        slot += negative ? -c : c;
                        if (slot == 0) result.erase(lambda);
                    }
                }
                ++pos;
            }
        }
        return memo.emplace(mask, std::move(result)).first->second;
    };
    return det(det, (1u << t) - 1u);
}

} // namespace detail

/// Graded pieces c_0..c_{k(n-k)} of the total Chern class of the tangent
/// bundle of Gr(k, n), each expanded in the Schubert basis of the
/// k x (n-k) box.
///
/// Route: expand the Chern-root factorization prod_{i,j} (1 + x_i + y_j)
/// with x the roots of the dual tautological subbundle and y the roots of
/// the quotient, split into s_alpha(x) s_beta(y), eliminate y through
/// e_q(y) -> h_q(x) inside the dual Jacobi-Trudi determinant of s_beta,
/// and reduce every s_lambda(x) through the box (classes with lambda_1
/// above n-k vanish). Exact over the integers throughout.
inline std::vector<SchurExpansion> tangent_chern_grassmann_schur(int k, int n, int ceiling = 12) {
    if (k < 1 || k >= n) throw invalid_input("require 1 <= k < n for Gr(k, n)");
    if (n > ceiling)
        throw invalid_input("Gr(" + std::to_string(k) + "," + std::to_string(n) +
                            ") exceeds the ceiling " + std::to_string(ceiling));
    const int m = n - k;
    const int dim = k * m;
    const int nvars = k + m;
    const Box box(k, m);

    MultiPoly product = MultiPoly::constant(nvars, 1);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < m; ++j) {
            MultiPoly factor = MultiPoly::constant(nvars, 1);
            factor += MultiPoly::variable(nvars, i);
            factor += MultiPoly::variable(nvars, k + j);
            product = product.multiply(factor, dim);
        }
    }

    auto pairs = detail::bi_schur_decompose(product, k, m);

    SchurExpansion total;
    for (const auto& [ab, coeff] : pairs) {
        const auto& [alpha, beta] = ab;
        if (!box.fits(alpha)) continue;
        SchurExpansion image = detail::substitute_dual_jacobi_trudi(beta, box, m);
        for (const auto& [lambda, d] : image) {
            for (const auto& [nu, c] : schur_product(alpha, lambda, box)) {
                auto& slot = total[nu];
                slot += coeff * d * c;
                if (slot == 0) total.erase(nu);
            }
        }
    }

    std::vector<SchurExpansion> pieces(static_cast<std::size_t>(dim) + 1);
    for (auto& [lambda, c] : total)
        pieces[static_cast<std::size_t>(lambda.weight())].emplace(lambda, std::move(c));
    return pieces;
}

} // namespace schubert
