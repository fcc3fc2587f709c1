#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/grading.hpp"
#include "cremona/parse.hpp"
#include "test_support.hpp"

using namespace cremona;

TEST_CASE("monomial degrees (n=3)") {
    CHECK(mdeg_monomial({1, 0, 0}) == MVec{1, 0});
    CHECK(mdeg_monomial({0, 0, 1}) == MVec{-1, -1});
    CHECK(mdeg_monomial({1, 1, 1}) == MVec{0, 0});
}

TEST_CASE("generator degrees") {
    CHECK(generator_degree(3, 1) == MVec{1, 0});
    CHECK(generator_degree(3, 2) == MVec{0, 1});
    CHECK(generator_degree(3, 3) == MVec{-1, -1});
}

TEST_CASE("homogeneous components (n=2)") {
    auto comps = homogeneous_components(parse_poly("x1^2 + x1^3*x2", 2));
    REQUIRE(comps.size() == 1);
    CHECK(comps.begin()->first == MVec{2});
    CHECK(comps.begin()->second == parse_poly("x1^2 + x1^3*x2", 2));

    comps = homogeneous_components(parse_poly("x1 + x2", 2));
    REQUIRE(comps.size() == 2);
    CHECK(comps.at(MVec{1}) == parse_poly("x1", 2));
    CHECK(comps.at(MVec{-1}) == parse_poly("x2", 2));

    CHECK(homogeneous_components(Poly::zero(2)).empty());
}

TEST_CASE("homogeneity verdicts (n=3)") {
    HomogeneityVerdict h = is_homogeneous(parse_poly("x1^2*x2", 3));
    REQUIRE(h.is_homogeneous());
    CHECK(h.degree == MVec{2, 1});

    CHECK(!is_homogeneous(parse_poly("x1 + x2", 3)).is_homogeneous());

    h = is_homogeneous(parse_poly("x1*x2*x3 + 1", 3));
    REQUIRE(h.is_homogeneous());
    CHECK(h.degree == MVec{0, 0});

    CHECK(is_homogeneous(Poly::zero(3)).is_zero());
}

TEST_CASE("character classes (n=3)") {
    CHECK(normalize_char({1, 1, -1}).beta() == std::vector<int>{2, 2, 0});
    CHECK(char_to_mvec(normalize_char({0, 0, -1})) == MVec{1, 1});
    CHECK(mvec_to_char({1, 0}).beta() == std::vector<int>{1, 0, 0});
    CHECK(char_to_mvec(mvec_to_char({3, -2})) == MVec{3, -2});
}

TEST_CASE("normalize_char shift invariance") {
    std::mt19937 rng(3);
    for (int it = 0; it < 200; ++it) {
        std::vector<int> beta(3);
        for (int& b : beta) b = std::uniform_int_distribution<int>(-9, 9)(rng);
        CharClass base = normalize_char(beta);
        for (int c = -5; c <= 5; ++c) {
            std::vector<int> shifted = beta;
            for (int& b : shifted) b += c;
            CHECK(normalize_char(shifted) == base);
        }
    }
}

TEST_CASE("monomial basis slices (n=2)") {
    CHECK(monomial_basis(2, {1}, 3) == std::vector<ExponentVec>{{1, 0}, {2, 1}});
    CHECK(monomial_basis(2, {-2}, 4) == std::vector<ExponentVec>{{0, 2}, {1, 3}});
    CHECK(monomial_basis(2, {0}, 1) == std::vector<ExponentVec>{{0, 0}});
}

TEST_CASE("monomial basis is correct and complete") {
    for (int n : {2, 3}) {
        for (int dmax : {0, 2, 5}) {
            // brute scan of all alpha with total degree <= dmax
            std::map<MVec, std::vector<ExponentVec>> by_deg;
            std::vector<int> alpha(n, 0);
            std::function<void(int, int)> rec = [&](int k, int budget) {
                if (k == n) {
                    by_deg[mdeg_monomial(alpha)].push_back(alpha);
                    return;
                }
                for (int a = 0; a <= budget; ++a) {
                    alpha[k] = a;
                    rec(k + 1, budget - a);
                }
                alpha[k] = 0;
            };
            rec(0, dmax);
            for (auto& [m, expected] : by_deg) {
                std::sort(expected.begin(), expected.end(), grlex_less);
                CHECK(monomial_basis(n, m, dmax) == expected);
            }
            // a degree with empty slice
            MVec far(n - 1, dmax + 1);
            CHECK(monomial_basis(n, far, dmax).empty());
        }
    }
}

TEST_CASE("grading multiplicativity") {
    std::mt19937 rng(17);
    int done = 0;
    while (done < 200) {
        const int n = 2 + done % 2;
        MVec m1(n - 1), m2(n - 1);
        for (int& v : m1) v = std::uniform_int_distribution<int>(-3, 3)(rng);
        for (int& v : m2) v = std::uniform_int_distribution<int>(-3, 3)(rng);
        Poly f = testsupport::random_homogeneous(rng, n, m1, 6);
        Poly g = testsupport::random_homogeneous(rng, n, m2, 6);
        if (f.is_zero() || g.is_zero()) continue;
        HomogeneityVerdict h = is_homogeneous(f * g);
        REQUIRE(h.is_homogeneous());
        CHECK(h.degree == mvec_add(m1, m2));
        ++done;
    }
}

TEST_CASE("components sum back to the input") {
    std::mt19937 rng(29);
    for (int it = 0; it < 200; ++it) {
        const int n = 2 + it % 3;
        Poly f = testsupport::random_poly(rng, n, 6, 6);
        Poly sum(n);
        for (const auto& [m, comp] : homogeneous_components(f)) {
            CHECK(!comp.is_zero());
            sum = sum + comp;
        }
        CHECK(sum == f);
    }
}
