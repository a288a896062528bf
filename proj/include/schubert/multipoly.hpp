#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "schubert/integers.hpp"
#include "schubert/partition.hpp"

namespace schubert {

/// Expansion of a symmetric polynomial in the Schur basis.
using SchurExpansion = std::map<Partition, Int>;

/// Exact multivariate polynomial with a fixed variable count.
///
/// Exponent vectors are packed into a 64-bit key, one nibble per variable
/// with variable 0 in the most significant position, so that unsigned
/// comparison of keys is lexicographic comparison of exponents. This caps
/// the engine at 16 variables and per-variable exponent 15, comfortably
/// above the dimension ceiling the callers enforce.
class MultiPoly {
public:
    using Mono = std::uint64_t;
    static constexpr int kMaxVars = 16;
    static constexpr int kMaxExp = 15;

    explicit MultiPoly(int nvars) : nvars_(nvars) {
        if (nvars < 0 || nvars > kMaxVars)
            throw invalid_input("variable count must lie in [0, 16]");
    }

    [[nodiscard]] int nvars() const { return nvars_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

    [[nodiscard]] static Mono pack(const std::vector<int>& exps) {
        Mono m = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] < 0 || exps[i] > kMaxExp)
                throw invalid_input("exponent out of the supported range [0, 15]");
            m |= static_cast<Mono>(exps[i]) << (4 * (kMaxVars - 1 - static_cast<int>(i)));
        }
        return m;
    }

    [[nodiscard]] std::vector<int> unpack(Mono m) const {
        std::vector<int> exps(static_cast<std::size_t>(nvars_));
        for (int i = 0; i < nvars_; ++i)
            exps[static_cast<std::size_t>(i)] =
                static_cast<int>((m >> (4 * (kMaxVars - 1 - i))) & 0xF);
        return exps;
    }

    [[nodiscard]] static int degree_of(Mono m) {
        int d = 0;
        while (m) {
            d += static_cast<int>(m & 0xF);
            m >>= 4;
        }
        return d;
    }

    static MultiPoly constant(int nvars, Int c) {
        MultiPoly p(nvars);
        if (c != 0) p.terms_.emplace(0, std::move(c));
        return p;
    }

    static MultiPoly variable(int nvars, int index) {
        MultiPoly p(nvars);
        std::vector<int> e(static_cast<std::size_t>(nvars), 0);
        e.at(static_cast<std::size_t>(index)) = 1;
        p.terms_.emplace(pack(e), 1);
        return p;
    }

    void add_term(Mono m, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add_term(const std::vector<int>& exps, const Int& c) {
        check_width(exps);
        add_term(pack(exps), c);
    }

    [[nodiscard]] Int coefficient(const std::vector<int>& exps) const {
        check_width(exps);
        auto it = terms_.find(pack(exps));
        return it == terms_.end() ? Int(0) : it->second;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_same_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o) {
        check_same_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    MultiPoly& scale(const Int& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }

    /// Product, discarding monomials of total degree above `truncate`
    /// (negative means unbounded).
    [[nodiscard]] MultiPoly multiply(const MultiPoly& o, int truncate = -1) const {
        check_same_vars(o);
        MultiPoly out(nvars_);
        for (const auto& [m1, c1] : terms_) {
            int d1 = degree_of(m1);
            for (const auto& [m2, c2] : o.terms_) {
                if (truncate >= 0 && d1 + degree_of(m2) > truncate) continue;
                out.add_term(mono_product(m1, m2), c1 * c2);
            }
        }
        return out;
    }

    /// Piece of the given total degree.
    [[nodiscard]] MultiPoly graded_piece(int degree) const {
        MultiPoly out(nvars_);
        for (const auto& [m, c] : terms_)
            if (degree_of(m) == degree) out.terms_.emplace(m, c);
        return out;
    }

    [[nodiscard]] int max_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, degree_of(m));
        return d;
    }

    /// Leading term in lexicographic order (x0 > x1 > ...).
    [[nodiscard]] std::pair<Mono, Int> leading() const {
        if (terms_.empty()) throw invalid_input("leading term of the zero polynomial");
        return *terms_.begin();
    }

    /// Spot-check symmetry on every adjacent transposition (i, i+1).
    [[nodiscard]] bool is_symmetric() const {
        for (int i = 0; i + 1 < nvars_; ++i) {
            for (const auto& [m, c] : terms_) {
                auto e = unpack(m);
                std::swap(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i + 1)]);
                auto it = terms_.find(pack(e));
                if (it == terms_.end() || it->second != c) return false;
            }
        }
        return true;
    }

    [[nodiscard]] auto begin() const { return terms_.begin(); }
    [[nodiscard]] auto end() const { return terms_.end(); }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check_same_vars(const MultiPoly& o) const {
        if (nvars_ != o.nvars_)
            throw invalid_input("polynomials with different variable counts");
    }

    void check_width(const std::vector<int>& exps) const {
        if (static_cast<int>(exps.size()) != nvars_)
            throw invalid_input("exponent vector length does not match the variable count");
    }

    static Mono mono_product(Mono a, Mono b) {
        Mono out = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            int shift = 4 * i;
            Mono s = ((a >> shift) & 0xF) + ((b >> shift) & 0xF);
            if (s > kMaxExp) throw invalid_input("exponent overflow in monomial product");
            out |= s << shift;
        }
        return out;
    }

    int nvars_;
    std::map<Mono, Int, std::greater<>> terms_; // begin() = lex-greatest
};

/// Schur polynomial s_lambda on the variable window [offset, offset+width),
/// embedded into nvars total variables; zero when lambda has more rows than
/// the window. Monomials come from semistandard tableau enumeration, so all
/// coefficients are nonnegative.
inline MultiPoly schur_polynomial_on(const Partition& lambda, int nvars, int offset, int width) {
    MultiPoly out(nvars);
    if (static_cast<int>(lambda.length()) > width) return out;
    if (lambda.empty()) return MultiPoly::constant(nvars, 1);

    const int rows = static_cast<int>(lambda.length());
    std::vector<std::vector<int>> tab(static_cast<std::size_t>(rows));
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);

    auto fill = [&](auto&& self, int row, int col) -> void {
        if (row == rows) {
            out.add_term(exps, 1);
            return;
        }
        if (col == lambda.part(static_cast<std::size_t>(row))) {
            self(self, row + 1, 0);
            return;
        }
        int lo = 1;
        if (col > 0) lo = tab[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)];
        if (row > 0)
            lo = std::max(lo, tab[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1);
        for (int v = lo; v <= width; ++v) {
            tab[static_cast<std::size_t>(row)].push_back(v);
            ++exps[static_cast<std::size_t>(offset + v - 1)];
            self(self, row, col + 1);
            --exps[static_cast<std::size_t>(offset + v - 1)];
            tab[static_cast<std::size_t>(row)].pop_back();
        }
    };
    fill(fill, 0, 0);
    return out;
}

/// Schur polynomial s_lambda(x_1..x_nvars).
inline MultiPoly schur_polynomial(const Partition& lambda, int nvars) {
    return schur_polynomial_on(lambda, nvars, 0, nvars);
}

/// Complete homogeneous symmetric polynomial h_p.
inline MultiPoly complete_homogeneous(int p, int nvars) {
    if (p < 0) return MultiPoly(nvars);
    if (p == 0) return MultiPoly::constant(nvars, 1);
    return schur_polynomial(Partition{p}, nvars);
}

/// Elementary symmetric polynomial e_p; zero for p > nvars.
inline MultiPoly elementary_symmetric(int p, int nvars) {
    if (p < 0 || p > nvars) return MultiPoly(nvars);
    if (p == 0) return MultiPoly::constant(nvars, 1);
    std::vector<int> col(static_cast<std::size_t>(p), 1);
    return schur_polynomial(Partition(std::move(col)), nvars);
}

/// Unique Schur-basis expansion of a symmetric polynomial, by repeated
/// subtraction of coeff * s_lambda at the lexicographically greatest
/// monomial. Termination follows from the strict lex descent of the leading
/// term. Rejects non-symmetric input.
inline SchurExpansion schur_decompose(const MultiPoly& p) {
    if (!p.is_symmetric())
        throw invalid_input("schur_decompose requires a symmetric polynomial");
    SchurExpansion out;
    MultiPoly work = p;
    while (!work.is_zero()) {
        auto [mono, coeff] = work.leading();
        auto exps = work.unpack(mono);
        // symmetry forces the leading exponent vector to be weakly decreasing
        Partition lambda(exps);
        MultiPoly s = schur_polynomial(lambda, p.nvars());
        s.scale(coeff);
        work -= s;
        out[lambda] += coeff;
        if (out[lambda] == 0) out.erase(lambda);
    }
    return out;
}

} // namespace schubert
