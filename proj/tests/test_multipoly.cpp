#include <catch2/catch_amalgamated.hpp>

#include "schubert/contexts.hpp"
#include "schubert/grassmann_chern.hpp"
#include "schubert/multipoly.hpp"

using namespace schubert;

namespace {

MultiPoly from_terms(int nvars, std::initializer_list<std::pair<std::vector<int>, int>> terms) {
    MultiPoly p(nvars);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

} // namespace

TEST_CASE("schur polynomials in few variables") {
    CHECK(schur_polynomial(Partition({1, 1}), 2) == from_terms(2, {{{1, 1}, 1}}));
    CHECK(schur_polynomial(Partition({2}), 2) ==
          from_terms(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
    CHECK(schur_polynomial(Partition({1, 1, 1}), 2).is_zero());
    CHECK(schur_polynomial(Partition{}, 3) == MultiPoly::constant(3, 1));
}

TEST_CASE("symmetry detection") {
    CHECK(schur_polynomial(Partition({2, 1}), 3).is_symmetric());
    MultiPoly skew(2);
    skew.add_term({1, 0}, 1);
    CHECK_FALSE(skew.is_symmetric());
    CHECK_THROWS_AS(schur_decompose(skew), invalid_input);
}

TEST_CASE("exponent packing limits") {
    CHECK_THROWS_AS(MultiPoly(17), invalid_input);
    MultiPoly p(1);
    CHECK_THROWS_AS(p.add_term(std::vector<int>{16}, 1), invalid_input);
    MultiPoly big = from_terms(1, {{{9}, 1}});
    CHECK_THROWS_AS(big.multiply(big), invalid_input);  // 18 > 15 per variable
    CHECK(big.multiply(big, 12).is_zero());             // truncation drops it first
}

TEST_CASE("schur decomposition") {
    auto s1 = schur_polynomial(Partition({1}), 2);
    auto exp = schur_decompose(s1.multiply(s1));
    CHECK(exp == SchurExpansion{{Partition({2}), 1}, {Partition({1, 1}), 1}});

    CHECK(schur_decompose(schur_polynomial(Partition({2, 1}), 2)) ==
          SchurExpansion{{Partition({2, 1}), 1}});

    auto s2 = schur_polynomial(Partition({2}), 2);
    CHECK(schur_decompose(s2.multiply(s2)) ==
          SchurExpansion{{Partition({4}), 1}, {Partition({3, 1}), 1}, {Partition({2, 2}), 1}});
}

TEST_CASE("schur decomposition reassembles the input exactly") {
    for (int nvars = 2; nvars <= 3; ++nvars) {
        MultiPoly p = schur_polynomial(Partition({2, 1}), nvars)
                          .multiply(schur_polynomial(Partition({1, 1}), nvars));
        p += schur_polynomial(Partition({2}), nvars);
        auto expansion = schur_decompose(p);
        MultiPoly back(nvars);
        for (const auto& [lambda, c] : expansion) {
            MultiPoly s = schur_polynomial(lambda, nvars);
            s.scale(c);
            back += s;
        }
        CHECK(back == p);
    }
}

TEST_CASE("schur decomposition matches LR coefficients") {
    auto small = [] {
        std::vector<Partition> out;
        for (int d = 0; d <= 3; ++d)
            for (const auto& p : box_partitions_by_degree(d, Box(3, 3))) out.push_back(p);
        return out;
    }();
    for (const auto& lambda : small) {
        for (const auto& mu : small) {
            if (lambda.weight() + mu.weight() > 6) continue;
            for (int nvars = 1; nvars <= 3; ++nvars) {
                auto product = schur_polynomial(lambda, nvars)
                                   .multiply(schur_polynomial(mu, nvars));
                auto expansion = schur_decompose(product);
                if (static_cast<int>(lambda.length()) > nvars ||
                    static_cast<int>(mu.length()) > nvars) {
                    CHECK(expansion.empty());
                    continue;
                }
                for (const auto& [nu, c] : expansion) {
                    CHECK(static_cast<int>(nu.length()) <= nvars);
                    CHECK(c == lr_coefficient(lambda, mu, nu));
                }
                // partitions with more rows than variables drop out; all
                // others must appear with their full LR multiplicity
                Box hull(nvars, 6);
                for (const auto& nu :
                     box_partitions_by_degree(lambda.weight() + mu.weight(), hull)) {
                    Int c = lr_coefficient(lambda, mu, nu);
                    auto it = expansion.find(nu);
                    CHECK((it == expansion.end() ? Int(0) : it->second) == c);
                }
            }
        }
    }
}

TEST_CASE("tangent Chern classes of Gr(2,5)") {
    auto pieces = tangent_chern_grassmann_schur(2, 5);
    REQUIRE(pieces.size() == 7);
    CHECK(pieces[0] == SchurExpansion{{Partition{}, 1}});
    CHECK(pieces[1] == SchurExpansion{{Partition({1}), 5}});
    CHECK(pieces[2] == SchurExpansion{{Partition({2}), 11}, {Partition({1, 1}), 12}});
    CHECK(pieces[3] == SchurExpansion{{Partition({3}), 15}, {Partition({2, 1}), 30}});
    CHECK(pieces[4] == SchurExpansion{{Partition({3, 1}), 35}, {Partition({2, 2}), 25}});
    CHECK(pieces[5] == SchurExpansion{{Partition({3, 2}), 30}});
    // Gauss-Bonnet: the top piece integrates to the cell count C(5,2) = 10
    CHECK(pieces[6] == SchurExpansion{{Partition({3, 3}), 10}});
}

TEST_CASE("tangent Chern engine guards") {
    CHECK_THROWS_AS(tangent_chern_grassmann_schur(3, 3), invalid_input);
    CHECK_THROWS_AS(tangent_chern_grassmann_schur(0, 4), invalid_input);
    CHECK_THROWS_AS(tangent_chern_grassmann_schur(1, 13), invalid_input);
    auto p113 = tangent_chern_grassmann_schur(1, 13, 16); // ceiling override
    CHECK(p113[1] == SchurExpansion{{Partition({1}), 13}});
}

TEST_CASE("tangent Chern invariants over all small Grassmannians") {
    for (int n = 2; n <= 12; ++n) {
        for (int k = 1; k < n; ++k) {
            if (k * (n - k) > 12) continue;
            auto pieces = tangent_chern_grassmann_schur(k, n);
            // Fano index: c_1 = n sigma_1
            CHECK(pieces[1] == SchurExpansion{{Partition({1}), n}});
            // homogeneity: every index in c_d has weight d
            for (std::size_t d = 0; d < pieces.size(); ++d)
                for (const auto& [lambda, c] : pieces[d])
                    CHECK(lambda.weight() == static_cast<long>(d));
            // Gauss-Bonnet: the top integral equals the cell count
            Box box(k, n - k);
            auto top = pieces.back().find(box.full());
            REQUIRE(top != pieces.back().end());
            CHECK(top->second == binomial(n, k));
        }
    }
}

TEST_CASE("Gr(k,n) and Gr(n-k,n) have matching characteristic numbers") {
    auto characteristic_numbers = [](int k, int n) {
        auto ctx = make_grassmannian(k, n);
        auto pieces = ctx->tangent_chern();
        std::vector<Int> out;
        for (int d = 0; d <= ctx->dimension(); ++d) {
            RingElement u = ctx->multiply(pieces[static_cast<std::size_t>(d)],
                                          ctx->power(ctx->hyperplane(), ctx->dimension() - d));
            out.push_back(ctx->integrate(u));
        }
        return out;
    };
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; 2 * k < n; ++k)
            if (k * (n - k) <= 12)
                CHECK(characteristic_numbers(k, n) == characteristic_numbers(n - k, n));
}
