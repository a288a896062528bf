#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "schubert/grassmann_chern.hpp"
#include "schubert/littlewood_richardson.hpp"

namespace schubert {

class CohomologyContext;
using ContextPtr = std::shared_ptr<const CohomologyContext>;

/// Basis index inside a context. The meaning is kind-specific: partition
/// parts for a Grassmannian, {i} for h^i on projective space, one exponent
/// per factor for a product of projective spaces, {i, j} for h^i xi^j on a
/// split projective bundle.
using BasisKey = std::vector<int>;

/// Finitely supported integer combination of basis classes of one context.
/// Mixed degrees are allowed; every operation documents how it treats them.
class RingElement {
public:
    RingElement() = default;

    [[nodiscard]] const ContextPtr& context() const { return ctx_; }
    [[nodiscard]] const std::map<BasisKey, Int>& support() const { return support_; }
    [[nodiscard]] bool is_zero() const { return support_.empty(); }

    [[nodiscard]] Int coefficient(const BasisKey& key) const {
        auto it = support_.find(key);
        return it == support_.end() ? Int(0) : it->second;
    }

    void add_term(const BasisKey& key, const Int& c) {
        if (c == 0) return;
        auto it = support_.find(key);
        if (it == support_.end()) {
            support_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) support_.erase(it);
        }
    }

    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    RingElement& scale(const Int& c) {
        if (c == 0) {
            support_.clear();
            return *this;
        }
        for (auto& [k, v] : support_) v *= c;
        return *this;
    }

    [[nodiscard]] RingElement graded_piece(int degree) const;
    [[nodiscard]] bool is_homogeneous(int degree) const;

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.support_ == b.support_;
    }

private:
    friend class CohomologyContext;
    explicit RingElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    ContextPtr ctx_;
    std::map<BasisKey, Int> support_;
};

enum class ContextKind { Grassmannian, ProjSpace, MultiProj, SplitProjBundle };

/// A finite graded ring presented by a basis per degree, structure
/// constants, integration against the unique top class, a distinguished
/// degree-one hyperplane class and the Chern classes of the tangent bundle.
/// Instances are immutable after construction and safe to share across
/// threads; create them through the make_* factories so that elements can
/// hold owning references.
class CohomologyContext : public std::enable_shared_from_this<CohomologyContext> {
public:
    virtual ~CohomologyContext() = default;

    [[nodiscard]] ContextKind kind() const { return kind_; }
    [[nodiscard]] int dimension() const { return dimension_; }
    [[nodiscard]] int ceiling() const { return ceiling_; }
    /// Canonical text form, e.g. "gr:2,5" or "bundle:m=1;a=1,2".
    [[nodiscard]] const std::string& descriptor() const { return descriptor_; }

    /// Basis keys of the given degree, lexicographically descending.
    [[nodiscard]] virtual std::vector<BasisKey> basis(int degree) const = 0;
    [[nodiscard]] virtual int key_degree(const BasisKey& key) const = 0;
    [[nodiscard]] virtual BasisKey top_key() const = 0;
    /// Renders one basis class in the CLI expression grammar.
    [[nodiscard]] virtual std::string render_key(const BasisKey& key) const = 0;

    [[nodiscard]] long basis_cardinality() const {
        long total = 0;
        for (int d = 0; d <= dimension_; ++d)
            total += static_cast<long>(basis(d).size());
        return total;
    }

    [[nodiscard]] RingElement zero() const { return RingElement(shared_from_this()); }

    [[nodiscard]] RingElement element(const BasisKey& key, Int c = 1) const {
        validate_key(key);
        RingElement out(shared_from_this());
        out.add_term(key, c);
        return out;
    }

    [[nodiscard]] RingElement one() const { return element(unit_key()); }

    /// The distinguished degree-one class: sigma_1, h, sum of the h_i, xi.
    [[nodiscard]] virtual RingElement hyperplane() const = 0;

    /// Ring product. Truncation may remove graded pieces, never shift them.
    [[nodiscard]] RingElement multiply(const RingElement& u, const RingElement& v) const {
        check_owned(u);
        check_owned(v);
        RingElement out(shared_from_this());
        for (const auto& [ku, cu] : u.support()) {
            for (const auto& [kv, cv] : v.support()) {
                for (const auto& [kw, cw] : multiply_keys(ku, kv))
                    out.add_term(kw, cu * cv * cw);
            }
        }
        return out;
    }

    [[nodiscard]] RingElement power(const RingElement& u, int p) const {
        if (p < 0) throw invalid_input("negative power of a ring element");
        RingElement out = one();
        for (int i = 0; i < p; ++i) out = multiply(out, u);
        return out;
    }

    /// Coefficient of the top basis class; lower-degree terms contribute 0.
    [[nodiscard]] Int integrate(const RingElement& u) const {
        check_owned(u);
        return u.coefficient(top_key());
    }

    /// Graded pieces c_0 .. c_dim of the total Chern class of the tangent
    /// bundle.
    [[nodiscard]] virtual std::vector<RingElement> tangent_chern() const = 0;

    /// Integral of the top Chern class, cross-checked against the cell
    /// count of the basis.
    [[nodiscard]] Int euler_characteristic() const {
        auto chern = tangent_chern();
        Int chi = integrate(chern.back());
        if (chi != basis_cardinality())
            throw error("Gauss-Bonnet mismatch on " + descriptor_ + ": integral " +
                        chi.str() + " vs cell count " + std::to_string(basis_cardinality()));
        return chi;
    }

    void check_owned(const RingElement& u) const {
        if (!u.context() || u.context()->descriptor() != descriptor_)
            throw context_mismatch("element does not belong to context " + descriptor_);
    }

    void validate_key(const BasisKey& key) const {
        if (!key_valid(key))
            throw invalid_input("invalid basis key for context " + descriptor_);
    }

protected:
    CohomologyContext(ContextKind kind, int dimension, int ceiling, std::string descriptor)
        : kind_(kind), dimension_(dimension), ceiling_(ceiling),
          descriptor_(std::move(descriptor)) {
        if (dimension_ < 1)
            throw invalid_input("context dimension must be at least 1");
        if (dimension_ > ceiling_)
            throw invalid_input("context " + descriptor_ + " exceeds the dimension ceiling " +
                                std::to_string(ceiling_));
    }

    [[nodiscard]] virtual std::map<BasisKey, Int> multiply_keys(const BasisKey& a,
                                                                const BasisKey& b) const = 0;
    [[nodiscard]] virtual bool key_valid(const BasisKey& key) const = 0;
    [[nodiscard]] virtual BasisKey unit_key() const = 0;

    /// Expands a product of (1 + linear term) factors into graded pieces.
    [[nodiscard]] std::vector<RingElement> graded_pieces(const RingElement& total) const {
        std::vector<RingElement> out;
        out.reserve(static_cast<std::size_t>(dimension_) + 1);
        for (int d = 0; d <= dimension_; ++d) out.push_back(total.graded_piece(d));
        return out;
    }

private:
    ContextKind kind_;
    int dimension_;
    int ceiling_;
    std::string descriptor_;
};

inline RingElement& RingElement::operator+=(const RingElement& o) {
    if (!ctx_) {
        *this = o;
        return *this;
    }
    ctx_->check_owned(o);
    for (const auto& [k, c] : o.support_) add_term(k, c);
    return *this;
}

inline RingElement& RingElement::operator-=(const RingElement& o) {
    if (!ctx_) {
        *this = o;
        scale(Int(-1));
        return *this;
    }
    ctx_->check_owned(o);
    for (const auto& [k, c] : o.support_) add_term(k, -c);
    return *this;
}

inline RingElement operator+(RingElement a, const RingElement& b) {
    a += b;
    return a;
}

inline RingElement operator-(RingElement a, const RingElement& b) {
    a -= b;
    return a;
}

inline RingElement RingElement::graded_piece(int degree) const {
    RingElement out(ctx_);
    for (const auto& [k, c] : support_)
        if (ctx_->key_degree(k) == degree) out.add_term(k, c);
    return out;
}

inline bool RingElement::is_homogeneous(int degree) const {
    for (const auto& [k, c] : support_)
        if (ctx_->key_degree(k) != degree) return false;
    return true;
}

// ---------------------------------------------------------------------------

/// H^*(Gr(k, n)): Schubert classes indexed by partitions in the k x (n-k)
/// box, multiplied through the Littlewood-Richardson rule with box
/// truncation.
class GrassmannianContext final : public CohomologyContext {
public:
    GrassmannianContext(int k, int n, int ceiling)
        : CohomologyContext(ContextKind::Grassmannian, validate(k, n) * (n - k), ceiling,
                            "gr:" + std::to_string(k) + "," + std::to_string(n)),
          k_(k), n_(n), box_(k, n - k) {}

    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const Box& box() const { return box_; }

    [[nodiscard]] std::vector<BasisKey> basis(int degree) const override {
        std::vector<BasisKey> out;
        for (const auto& lambda : box_partitions_by_degree(degree, box_))
            out.push_back(lambda.parts());
        return out;
    }

    [[nodiscard]] int key_degree(const BasisKey& key) const override {
        return static_cast<int>(Partition(key).weight());
    }

    [[nodiscard]] BasisKey top_key() const override { return box_.full().parts(); }

    [[nodiscard]] std::string render_key(const BasisKey& key) const override {
        if (key.empty()) return "1";
        return "s[" + Partition(key).to_string() + "]";
    }

    [[nodiscard]] RingElement hyperplane() const override { return element({1}); }

    [[nodiscard]] std::vector<RingElement> tangent_chern() const override {
        auto pieces = tangent_chern_grassmann_schur(k_, n_, ceiling());
        std::vector<RingElement> out;
        out.reserve(pieces.size());
        for (const auto& piece : pieces) {
            RingElement e = zero();
            for (const auto& [lambda, c] : piece) e.add_term(lambda.parts(), c);
            out.push_back(std::move(e));
        }
        return out;
    }

protected:
    [[nodiscard]] std::map<BasisKey, Int> multiply_keys(const BasisKey& a,
                                                        const BasisKey& b) const override {
        std::map<BasisKey, Int> out;
        for (auto& [nu, c] : schur_product(Partition(a), Partition(b), box_))
            out.emplace(nu.parts(), std::move(c));
        return out;
    }

    [[nodiscard]] bool key_valid(const BasisKey& key) const override {
        try {
            return box_.fits(Partition(key));
        } catch (const invalid_input&) {
            return false;
        }
    }

    [[nodiscard]] BasisKey unit_key() const override { return {}; }

private:
    static int validate(int k, int n) {
        if (k < 1 || k >= n) throw invalid_input("require 1 <= k < n for Gr(k, n)");
        return k;
    }

    int k_;
    int n_;
    Box box_;
};

/// H^*(P^n) = Z[h]/(h^{n+1}).
class ProjSpaceContext final : public CohomologyContext {
public:
    ProjSpaceContext(int n, int ceiling)
        : CohomologyContext(ContextKind::ProjSpace, n, ceiling, "pn:" + std::to_string(n)),
          n_(n) {}

    [[nodiscard]] int n() const { return n_; }

    [[nodiscard]] std::vector<BasisKey> basis(int degree) const override {
        if (degree < 0 || degree > n_) return {};
        return {{degree}};
    }

    [[nodiscard]] int key_degree(const BasisKey& key) const override { return key.at(0); }
    [[nodiscard]] BasisKey top_key() const override { return {n_}; }

    [[nodiscard]] std::string render_key(const BasisKey& key) const override {
        if (key[0] == 0) return "1";
        if (key[0] == 1) return "h";
        return "h^" + std::to_string(key[0]);
    }

    [[nodiscard]] RingElement hyperplane() const override { return element({1}); }

    [[nodiscard]] std::vector<RingElement> tangent_chern() const override {
        // Euler sequence: c(T) = (1 + h)^{n+1}
        std::vector<RingElement> out;
        for (int d = 0; d <= n_; ++d) out.push_back(element({d}, binomial(n_ + 1, d)));
        return out;
    }

protected:
    [[nodiscard]] std::map<BasisKey, Int> multiply_keys(const BasisKey& a,
                                                        const BasisKey& b) const override {
        std::map<BasisKey, Int> out;
        int s = a.at(0) + b.at(0);
        if (s <= n_) out.emplace(BasisKey{s}, 1);
        return out;
    }

    [[nodiscard]] bool key_valid(const BasisKey& key) const override {
        return key.size() == 1 && key[0] >= 0 && key[0] <= n_;
    }

    [[nodiscard]] BasisKey unit_key() const override { return {0}; }

private:
    int n_;
};

/// H^*(P^{n_1} x ... x P^{n_s}): monomials in one hyperplane class per
/// factor, each truncated at its own dimension.
class MultiProjContext final : public CohomologyContext {
public:
    MultiProjContext(std::vector<int> dims, int ceiling)
        : CohomologyContext(ContextKind::MultiProj, total(dims), ceiling,
                            descriptor_for(dims)),
          dims_(std::move(dims)) {}

    [[nodiscard]] const std::vector<int>& factor_dims() const { return dims_; }

    [[nodiscard]] std::vector<BasisKey> basis(int degree) const override {
        std::vector<BasisKey> out;
        BasisKey key(dims_.size(), 0);
        auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
            if (pos == dims_.size()) {
                if (remaining == 0) out.push_back(key);
                return;
            }
            for (int v = std::min(dims_[pos], remaining); v >= 0; --v) {
                key[pos] = v;
                self(self, pos + 1, remaining - v);
            }
            key[pos] = 0;
        };
        if (degree >= 0) rec(rec, 0, degree);
        return out; // already lexicographically descending
    }

    [[nodiscard]] int key_degree(const BasisKey& key) const override {
        return std::accumulate(key.begin(), key.end(), 0);
    }

    [[nodiscard]] BasisKey top_key() const override { return dims_; }

    [[nodiscard]] std::string render_key(const BasisKey& key) const override {
        std::string out;
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (key[i] == 0) continue;
            if (!out.empty()) out += '*';
            out += "h" + std::to_string(i + 1);
            if (key[i] > 1) out += "^" + std::to_string(key[i]);
        }
        return out.empty() ? "1" : out;
    }

    [[nodiscard]] RingElement hyperplane() const override {
        // Segre class: h_1 + ... + h_s
        RingElement out = zero();
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            BasisKey key(dims_.size(), 0);
            key[i] = 1;
            out.add_term(key, 1);
        }
        return out;
    }

    [[nodiscard]] std::vector<RingElement> tangent_chern() const override {
        RingElement total = one();
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            BasisKey key(dims_.size(), 0);
            key[i] = 1;
            RingElement factor = one();
            factor.add_term(key, 1);
            for (int t = 0; t <= dims_[i]; ++t) total = multiply(total, factor);
        }
        return graded_pieces(total);
    }

protected:
    [[nodiscard]] std::map<BasisKey, Int> multiply_keys(const BasisKey& a,
                                                        const BasisKey& b) const override {
        std::map<BasisKey, Int> out;
        BasisKey s(dims_.size());
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            s[i] = a.at(i) + b.at(i);
            if (s[i] > dims_[i]) return out;
        }
        out.emplace(std::move(s), 1);
        return out;
    }

    [[nodiscard]] bool key_valid(const BasisKey& key) const override {
        if (key.size() != dims_.size()) return false;
        for (std::size_t i = 0; i < key.size(); ++i)
            if (key[i] < 0 || key[i] > dims_[i]) return false;
        return true;
    }

    [[nodiscard]] BasisKey unit_key() const override { return BasisKey(dims_.size(), 0); }

private:
    static int total(const std::vector<int>& dims) {
        if (dims.empty()) throw invalid_input("product of projective spaces needs a factor");
        int t = 0;
        for (int n : dims) {
            if (n < 1) throw invalid_input("each projective factor must have dimension >= 1");
            t += n;
        }
        return t;
    }

    static std::string descriptor_for(const std::vector<int>& dims) {
        std::string out = "multi:";
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(dims[i]);
        }
        return out;
    }

    std::vector<int> dims_;
};

/// H^*(P(E)) for the split bundle E = O(-a_0) + ... + O(-a_r) over P^m,
/// with the natural (lines) projectivisation: basis h^i xi^j (i <= m,
/// j <= r), relations h^{m+1} = 0 and prod_i (xi - a_i h) = 0, where xi is
/// the first Chern class of the tautological degree-one line bundle.
class SplitProjBundleContext final : public CohomologyContext {
public:
    SplitProjBundleContext(int m, std::vector<int> twists, int ceiling)
        : CohomologyContext(ContextKind::SplitProjBundle, validate(m, twists), ceiling,
                            descriptor_for(m, twists)),
          m_(m), twists_(std::move(twists)), r_(static_cast<int>(twists_.size()) - 1) {
        // elementary symmetric functions of the twists, for the xi relation
        elem_.assign(static_cast<std::size_t>(r_) + 2, 0);
        elem_[0] = 1;
        for (int a : twists_)
            for (int t = r_ + 1; t >= 1; --t)
                elem_[static_cast<std::size_t>(t)] +=
                    elem_[static_cast<std::size_t>(t - 1)] * a;
    }

    [[nodiscard]] int base_dim() const { return m_; }
    [[nodiscard]] int fibre_dim() const { return r_; }
    [[nodiscard]] const std::vector<int>& twists() const { return twists_; }

    [[nodiscard]] std::vector<BasisKey> basis(int degree) const override {
        std::vector<BasisKey> out;
        for (int i = std::min(degree, m_); i >= 0; --i) {
            int j = degree - i;
            if (j >= 0 && j <= r_) out.push_back({i, j});
        }
        return out;
    }

    [[nodiscard]] int key_degree(const BasisKey& key) const override {
        return key.at(0) + key.at(1);
    }

    [[nodiscard]] BasisKey top_key() const override { return {m_, r_}; }

    [[nodiscard]] std::string render_key(const BasisKey& key) const override {
        std::string out;
        if (key[0] > 0) {
            out += "h";
            if (key[0] > 1) out += "^" + std::to_string(key[0]);
        }
        if (key[1] > 0) {
            if (!out.empty()) out += '*';
            out += "xi";
            if (key[1] > 1) out += "^" + std::to_string(key[1]);
        }
        return out.empty() ? "1" : out;
    }

    [[nodiscard]] RingElement hyperplane() const override { return element({0, 1}); }

    [[nodiscard]] std::vector<RingElement> tangent_chern() const override {
        // (1 + h)^{m+1} * prod_i (1 + xi - a_i h), from the base Euler
        // sequence and the relative one for the lines projectivisation
        RingElement total = one();
        RingElement hfac = one();
        hfac.add_term({1, 0}, 1);
        for (int t = 0; t <= m_; ++t) total = multiply(total, hfac);
        for (int a : twists_) {
            RingElement f = one();
            f.add_term({0, 1}, 1);
            f.add_term({1, 0}, -Int(a));
            total = multiply(total, f);
        }
        return graded_pieces(total);
    }

protected:
    [[nodiscard]] std::map<BasisKey, Int> multiply_keys(const BasisKey& a,
                                                        const BasisKey& b) const override {
        std::map<BasisKey, Int> out;
        reduce_monomial(a.at(0) + b.at(0), a.at(1) + b.at(1), 1, out);
        return out;
    }

    [[nodiscard]] bool key_valid(const BasisKey& key) const override {
        return key.size() == 2 && key[0] >= 0 && key[0] <= m_ && key[1] >= 0 && key[1] <= r_;
    }

    [[nodiscard]] BasisKey unit_key() const override { return {0, 0}; }

private:
    /// Rewrites h^i xi^j into the basis: kills h powers above m and reduces
    /// xi^{r+1} = sum_{t>=1} (-1)^{t+1} e_t(a) h^t xi^{r+1-t}.
    void reduce_monomial(int i, int j, const Int& c, std::map<BasisKey, Int>& out) const {
        if (c == 0 || i > m_) return;
        if (j <= r_) {
            auto& slot = out[BasisKey{i, j}];
            slot += c;
            if (slot == 0) out.erase(BasisKey{i, j});
            return;
        }
        for (int t = 1; t <= r_ + 1; ++t) {
            Int coeff = elem_[static_cast<std::size_t>(t)] * c;
            if (t % 2 == 0) coeff = -coeff;
            reduce_monomial(i + t, j - t, coeff, out);
        }
    }

    static int validate(int m, const std::vector<int>& twists) {
        if (m < 1) throw invalid_input("split bundle base dimension must be >= 1");
        // with a single summand xi reduces to a multiple of h and the bundle
        // ring collapses onto the base; require an actual fibre direction
        if (twists.size() < 2) throw invalid_input("split bundle needs at least two summands");
        for (int a : twists)
            if (a < 0) throw invalid_input("split bundle twists must be nonnegative");
        return m + static_cast<int>(twists.size()) - 1;
    }

    static std::string descriptor_for(int m, const std::vector<int>& twists) {
        std::string out = "bundle:m=" + std::to_string(m) + ";a=";
        for (std::size_t i = 0; i < twists.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(twists[i]);
        }
        return out;
    }

    int m_;
    std::vector<int> twists_;
    int r_;
    std::vector<Int> elem_;
};

// ---------------------------------------------------------------------------

inline constexpr int kDefaultCeiling = 12;

inline ContextPtr make_grassmannian(int k, int n, int ceiling = kDefaultCeiling) {
    return std::make_shared<GrassmannianContext>(k, n, ceiling);
}

inline ContextPtr make_proj_space(int n, int ceiling = kDefaultCeiling) {
    return std::make_shared<ProjSpaceContext>(n, ceiling);
}

inline ContextPtr make_multi_proj(std::vector<int> dims, int ceiling = kDefaultCeiling) {
    return std::make_shared<MultiProjContext>(std::move(dims), ceiling);
}

inline ContextPtr make_split_proj_bundle(int m, std::vector<int> twists,
                                         int ceiling = kDefaultCeiling) {
    return std::make_shared<SplitProjBundleContext>(m, std::move(twists), ceiling);
}

/// Graded pieces of c(T Gr(k, n)) as ring elements of a fresh context.
inline std::vector<RingElement> tangent_chern_grassmannian(int k, int n,
                                                           int ceiling = kDefaultCeiling) {
    return make_grassmannian(k, n, ceiling)->tangent_chern();
}

// ---------------------------------------------------------------------------

/// A context together with the degree-one class of a projective embedding:
/// sigma_1 for the Pluecker embedding, d*h for a Veronese re-embedding, the
/// Segre class on a product, xi on a scroll.
struct EmbeddingSpec {
    ContextPtr ctx;
    RingElement H;

    EmbeddingSpec(ContextPtr context, RingElement hyperplane)
        : ctx(std::move(context)), H(std::move(hyperplane)) {
        ctx->check_owned(H);
        if (H.is_zero()) throw invalid_input("embedding class must be nonzero");
        if (!H.is_homogeneous(1))
            throw invalid_input("embedding class must be homogeneous of degree 1");
        for (const auto& [k, c] : H.support())
            if (c < 0) throw invalid_input("embedding class must be effective");
    }
};

/// H^p by repeated multiplication; requires 0 <= p <= dimension.
inline RingElement hyperplane_power(const EmbeddingSpec& spec, int p) {
    if (p < 0 || p > spec.ctx->dimension())
        throw invalid_input("hyperplane power outside [0, dimension]");
    return spec.ctx->power(spec.H, p);
}

/// Degree of the embedded variety: integral of H^dim.
inline Int degree_of_embedding(const EmbeddingSpec& spec) {
    return spec.ctx->integrate(spec.ctx->power(spec.H, spec.ctx->dimension()));
}

} // namespace schubert
