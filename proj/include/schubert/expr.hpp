#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "schubert/contexts.hpp"

namespace schubert {

/// Builds a context from its canonical descriptor: "gr:2,5", "pn:4",
/// "multi:1,2" or "bundle:m=1;a=1,2".
inline ContextPtr parse_context(const std::string& text, int ceiling = kDefaultCeiling) {
    auto fail = [&]() -> ContextPtr {
        throw invalid_input("unrecognized context descriptor '" + text + "'");
    };
    auto split_ints = [&](const std::string& body) {
        std::vector<int> out;
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t next = body.find(',', pos);
            if (next == std::string::npos) next = body.size();
            if (next == pos) fail();
            int value = 0;
            for (std::size_t i = pos; i < next; ++i) {
                if (!std::isdigit(static_cast<unsigned char>(body[i]))) fail();
                value = value * 10 + (body[i] - '0');
                if (value > 1'000'000) fail();
            }
            out.push_back(value);
            pos = next + 1;
        }
        if (out.empty()) fail();
        return out;
    };

    std::size_t colon = text.find(':');
    if (colon == std::string::npos) fail();
    std::string kind = text.substr(0, colon);
    std::string body = text.substr(colon + 1);

    if (kind == "gr") {
        auto v = split_ints(body);
        if (v.size() != 2) fail();
        return make_grassmannian(v[0], v[1], ceiling);
    }
    if (kind == "pn") {
        auto v = split_ints(body);
        if (v.size() != 1) fail();
        return make_proj_space(v[0], ceiling);
    }
    if (kind == "multi") {
        return make_multi_proj(split_ints(body), ceiling);
    }
    if (kind == "bundle") {
        // body = "m=<int>;a=<int>,<int>,..."
        std::size_t semi = body.find(';');
        if (semi == std::string::npos || body.substr(0, 2) != "m=" ||
            body.substr(semi + 1, 2) != "a=")
            fail();
        auto mv = split_ints(body.substr(2, semi - 2));
        if (mv.size() != 1) fail();
        return make_split_proj_bundle(mv[0], split_ints(body.substr(semi + 3)), ceiling);
    }
    return fail();
}

/// Builds the embedding class named by an H descriptor: "sigma1" on a
/// Grassmannian, "h" or "<d>h" on projective space, "segre" on a product,
/// "xi" on a split bundle.
inline RingElement parse_hyperplane(const ContextPtr& ctx, const std::string& text) {
    if (text == "sigma1") {
        if (ctx->kind() != ContextKind::Grassmannian)
            throw invalid_input("H=sigma1 needs a Grassmannian context");
        return ctx->hyperplane();
    }
    if (text == "segre") {
        if (ctx->kind() != ContextKind::MultiProj)
            throw invalid_input("H=segre needs a product of projective spaces");
        return ctx->hyperplane();
    }
    if (text == "xi") {
        if (ctx->kind() != ContextKind::SplitProjBundle)
            throw invalid_input("H=xi needs a split projective bundle");
        return ctx->hyperplane();
    }
    if (!text.empty() && text.back() == 'h') {
        if (ctx->kind() != ContextKind::ProjSpace)
            throw invalid_input("H=" + text + " needs a projective space context");
        std::string head = text.substr(0, text.size() - 1);
        Int d = 1;
        if (!head.empty()) {
            for (char c : head)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw invalid_input("bad hyperplane descriptor '" + text + "'");
            d = Int(head);
        }
        if (d < 1) throw invalid_input("hyperplane multiple must be positive");
        RingElement H = ctx->hyperplane();
        H.scale(d);
        return H;
    }
    throw invalid_input("unrecognized hyperplane descriptor '" + text + "'");
}

namespace detail {

/// Recursive-descent parser for class expressions such as "s[2,1]*s[1]",
/// "h^2 + 3*h" or "xi^2 - 2*h*xi".
class ExprParser {
public:
    ExprParser(ContextPtr ctx, const std::string& text)
        : ctx_(std::move(ctx)), text_(text) {}

    RingElement parse() {
        RingElement out = sum();
        skip_space();
        if (pos_ != text_.size())
            throw invalid_input("trailing characters in expression '" + text_ + "'");
        return out;
    }

private:
    RingElement sum() {
        skip_space();
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        } else if (peek() == '+') {
            ++pos_;
        }
        RingElement acc = term();
        if (negate) acc.scale(Int(-1));
        while (true) {
            skip_space();
            if (peek() == '+') {
                ++pos_;
                acc += term();
            } else if (peek() == '-') {
                ++pos_;
                RingElement t = term();
                t.scale(Int(-1));
                acc += t;
            } else {
                return acc;
            }
        }
    }

    RingElement term() {
        RingElement acc = factor();
        while (true) {
            skip_space();
            if (peek() == '*') {
                ++pos_;
                acc = ctx_->multiply(acc, factor());
            } else {
                return acc;
            }
        }
    }

    RingElement factor() {
        RingElement base = atom();
        skip_space();
        if (peek() == '^') {
            ++pos_;
            return ctx_->power(base, number());
        }
        return base;
    }

    RingElement atom() {
        skip_space();
        char c = peek();
        if (c == '(') {
            ++pos_;
            RingElement inner = sum();
            skip_space();
            if (peek() != ')') throw invalid_input("missing ')' in expression");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            RingElement out = ctx_->one();
            out.scale(Int(number()));
            return out;
        }
        if (c == 's') {
            ++pos_;
            skip_space();
            if (peek() != '[') throw invalid_input("expected '[' after 's'");
            ++pos_;
            std::size_t close = text_.find(']', pos_);
            if (close == std::string::npos) throw invalid_input("missing ']' in expression");
            Partition lambda = Partition::parse(text_.substr(pos_, close - pos_));
            pos_ = close + 1;
            if (ctx_->kind() != ContextKind::Grassmannian)
                throw invalid_input("Schubert classes need a Grassmannian context");
            const auto& gr = static_cast<const GrassmannianContext&>(*ctx_);
            if (!gr.box().fits(lambda))
                throw invalid_input("partition " + lambda.to_string() +
                                    " does not fit the " + std::to_string(gr.k()) + "x" +
                                    std::to_string(gr.n() - gr.k()) + " box");
            return ctx_->element(lambda.parts());
        }
        if (c == 'x') {
            if (text_.compare(pos_, 2, "xi") != 0)
                throw invalid_input("unexpected token in expression '" + text_ + "'");
            pos_ += 2;
            if (ctx_->kind() != ContextKind::SplitProjBundle)
                throw invalid_input("xi needs a split projective bundle context");
            return ctx_->element({0, 1});
        }
        if (c == 'h') {
            ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                int index = number();
                if (ctx_->kind() != ContextKind::MultiProj)
                    throw invalid_input("indexed hyperplane classes need a product context");
                const auto& mp = static_cast<const MultiProjContext&>(*ctx_);
                if (index < 1 || index > static_cast<int>(mp.factor_dims().size()))
                    throw invalid_input("hyperplane index out of range");
                BasisKey key(mp.factor_dims().size(), 0);
                key[static_cast<std::size_t>(index - 1)] = 1;
                return ctx_->element(key);
            }
            if (ctx_->kind() == ContextKind::ProjSpace) return ctx_->element({1});
            if (ctx_->kind() == ContextKind::SplitProjBundle) return ctx_->element({1, 0});
            throw invalid_input("h is not a basis class of " + ctx_->descriptor());
        }
        throw invalid_input("unexpected token in expression '" + text_ + "'");
    }

    int number() {
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw invalid_input("expected a number in expression '" + text_ + "'");
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) throw invalid_input("number too large in expression");
            ++pos_;
        }
        return static_cast<int>(value);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[nodiscard]] char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    ContextPtr ctx_;
    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline RingElement parse_class_expr(const ContextPtr& ctx, const std::string& text) {
    return detail::ExprParser(ctx, text).parse();
}

/// Renders an element as a sum of basis terms, ordered by degree and then
/// lexicographically descending; coefficients of magnitude one are elided.
/// The output re-parses in the expression grammar.
inline std::string render_element(const RingElement& u) {
    if (u.is_zero()) return "0";
    const auto& ctx = *u.context();
    std::vector<std::pair<BasisKey, Int>> terms(u.support().begin(), u.support().end());
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        int da = ctx.key_degree(a.first), db = ctx.key_degree(b.first);
        if (da != db) return da < db;
        return a.first > b.first;
    });
    std::string out;
    for (const auto& [key, coeff] : terms) {
        Int mag = coeff < 0 ? Int(-coeff) : coeff;
        bool negative = coeff < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string body = ctx.render_key(key);
        if (mag == 1) {
            out += body;
        } else if (body == "1") {
            out += mag.str();
        } else {
            out += mag.str() + "*" + body;
        }
    }
    return out;
}

} // namespace schubert
