#pragma once

#include <string>
#include <vector>

#include "schubert/contexts.hpp"

namespace schubert {

/// An embedded context cut by divisors of classes d*H, d over
/// section_degrees (all 1 for linear sections). The section itself is never
/// constructed as a ring; its Chern classes are carried as ambient classes
/// and integration multiplies by the class of the section.
struct SectionSpec {
    EmbeddingSpec spec;
    std::vector<int> section_degrees;

    SectionSpec(EmbeddingSpec embedding, std::vector<int> degrees = {})
        : spec(std::move(embedding)), section_degrees(std::move(degrees)) {
        for (int d : section_degrees)
            if (d < 1) throw invalid_input("section degrees must be positive");
        if (dimension() < 1)
            throw invalid_input("section dimension must be at least 1");
    }

    [[nodiscard]] int dimension() const {
        return spec.ctx->dimension() - static_cast<int>(section_degrees.size());
    }
};

/// delta sequence, dual defect and codegree of an embedded (section of a)
/// context. delta_j = 0 for j < defect and delta_defect = codegree > 0.
struct DualProfile {
    std::vector<Int> delta;
    int defect = 0;
    Int codegree;
    std::vector<std::string> annotations;
};

namespace detail {

/// Pieces 0..up_to of c(T_ambient) * prod_d (1 + d H)^{-1}, the inverse
/// expanded as a truncated geometric series in the ambient ring.
inline std::vector<RingElement> quotient_chern_pieces(const SectionSpec& s, int up_to) {
    const auto& ctx = s.spec.ctx;
    const int ambient = ctx->dimension();
    std::vector<RingElement> hpow;
    hpow.push_back(ctx->one());
    for (int i = 0; i < ambient; ++i) hpow.push_back(ctx->multiply(hpow.back(), s.spec.H));

    std::vector<RingElement> pieces = ctx->tangent_chern();
    for (int d : s.section_degrees) {
        std::vector<RingElement> next;
        next.reserve(pieces.size());
        for (int deg = 0; deg <= ambient; ++deg) {
            RingElement acc = ctx->zero();
            Int power = 1; // (-d)^t
            for (int t = 0; t <= deg; ++t) {
                RingElement term = ctx->multiply(pieces[static_cast<std::size_t>(deg - t)],
                                                 hpow[static_cast<std::size_t>(t)]);
                term.scale(power);
                acc += term;
                power *= -d;
            }
            next.push_back(std::move(acc));
        }
        pieces = std::move(next);
    }
    pieces.resize(static_cast<std::size_t>(up_to) + 1, ctx->zero());
    return pieces;
}

} // namespace detail

/// Graded pieces c_0..c_dim(section) of the section's tangent Chern class,
/// represented by ambient classes: c(T_ambient) / prod_d (1 + d H).
inline std::vector<RingElement> section_chern(const SectionSpec& s) {
    return detail::quotient_chern_pieces(s, s.dimension());
}

/// Pushforward integral: int_ambient u * prod_d (d H). Requires u of
/// ambient degree equal to the section dimension.
inline Int section_integrate(const SectionSpec& s, const RingElement& u) {
    const auto& ctx = s.spec.ctx;
    if (!u.is_homogeneous(s.dimension()))
        throw invalid_input("section integrand must be homogeneous of the section dimension");
    RingElement v = u;
    Int factor = 1;
    for (int d : s.section_degrees) factor *= d;
    v.scale(factor);
    v = ctx->multiply(v, ctx->power(s.spec.H, static_cast<int>(s.section_degrees.size())));
    return ctx->integrate(v);
}

/// delta_j = sum_{i=0}^{d} C(i+1, j+1) * int c_{d-i}(Omega) * H^i over the
/// section, with c_j(Omega) = (-1)^j c_j(T) and d the section dimension.
/// The j = 0 entry is the Katz-Kleiman codegree sum; leading zeros count the
/// dual defect.
inline std::vector<Int> delta_sequence(const SectionSpec& s) {
    const auto& ctx = s.spec.ctx;
    const int d = s.dimension();
    auto chern = section_chern(s);
    std::vector<RingElement> hpow;
    hpow.push_back(ctx->one());
    for (int i = 0; i < d; ++i) hpow.push_back(ctx->multiply(hpow.back(), s.spec.H));

    // integrals int c_{d-i}(Omega) H^i, shared by all j
    std::vector<Int> base(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        RingElement term = ctx->multiply(chern[static_cast<std::size_t>(d - i)],
                                         hpow[static_cast<std::size_t>(i)]);
        if ((d - i) % 2 != 0) term.scale(Int(-1));
        base[static_cast<std::size_t>(i)] = section_integrate(s, term);
    }

    std::vector<Int> delta(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        Int total = 0;
        for (int i = 0; i <= d; ++i)
            total += binomial(i + 1, j + 1) * base[static_cast<std::size_t>(i)];
        delta[static_cast<std::size_t>(j)] = std::move(total);
    }
    return delta;
}

/// Defect = least j with delta_j != 0, codegree = delta_defect. Signals a
/// degenerate embedding when every entry vanishes or the leading nonzero
/// entry is negative; the value is never clamped.
inline DualProfile dual_profile(const SectionSpec& s) {
    DualProfile out;
    out.delta = delta_sequence(s);
    std::size_t j = 0;
    while (j < out.delta.size() && out.delta[j] == 0) ++j;
    if (j == out.delta.size())
        throw degenerate_embedding("all delta entries vanish for " + s.spec.ctx->descriptor());
    if (out.delta[j] < 0)
        throw degenerate_embedding("leading delta entry is negative for " +
                                   s.spec.ctx->descriptor() +
                                   "; the class is not very ample for this computation");
    out.defect = static_cast<int>(j);
    out.codegree = out.delta[j];
    return out;
}

// --------------------------------------------------------------------------
// Closed forms. These never replace the delta route; they exist to
// cross-check it.

/// Degree of the dual hypersurface of the scroll S_m(1^r, 2); valid in the
/// non-defective regime m >= r >= 1.
inline Int scroll_codegree_closed(int m, int r) {
    if (r < 1 || m < r)
        throw invalid_input("scroll codegree closed form requires m >= r >= 1");
    return Int(m) + r + 1;
}

/// Dual defect of the scroll S_m(1^r, 2): max(0, r - m).
inline int scroll_defect_closed(int m, int r) {
    if (m < 1 || r < 1) throw invalid_input("scroll parameters must be positive");
    return std::max(0, r - m);
}

/// Dual defect of a codimension-k linear section of a variety with dual
/// defect def0: max(0, def0 - k).
inline int linear_section_defect_rule(int def0, int k) {
    if (def0 < 0 || k < 0) throw invalid_input("defect rule arguments must be nonnegative");
    return std::max(0, def0 - k);
}

/// Codegree of the degree-d Veronese embedding of P^n, computed through the
/// delta sequence; the d = 2 case is the Boole value n + 1. The linear case
/// d = 1 is dual degenerate (delta_0 = 0) and rejected.
inline Int veronese_codegree(int n, int d, int ceiling = kDefaultCeiling) {
    if (n < 1 || d < 1) throw invalid_input("veronese parameters must be positive");
    if (d == 1)
        throw degenerate_embedding("linear embedding of projective space has no dual "
                                   "hypersurface (delta_0 = 0)");
    auto ctx = make_proj_space(n, ceiling);
    RingElement H = ctx->hyperplane();
    H.scale(d);
    auto profile = dual_profile(SectionSpec(EmbeddingSpec(ctx, std::move(H))));
    return profile.delta[0];
}

/// Dimension of the target projective space of the scroll map
/// Phi_m(a): P(E_m(a)) -> P^N, i.e. the section count of the sum of O(a_i)
/// minus one. Requires a weakly increasing with last entry above 1.
inline Int scroll_embedding_dim(int m, const std::vector<int>& a) {
    if (m < 1) throw invalid_input("scroll base dimension must be positive");
    if (a.empty()) throw invalid_input("scroll needs at least one twist");
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] > a[i + 1]) throw invalid_input("scroll twists must be weakly increasing");
    if (a.back() <= 1)
        throw invalid_input("scroll twists must end above 1 for a birational map");
    Int total = 0;
    for (int ai : a) total += binomial(m + ai, m);
    return total - 1;
}

} // namespace schubert
