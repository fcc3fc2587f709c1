#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/classify.hpp"
#include "cremona/derivation.hpp"
#include "cremona/parse.hpp"
#include "test_support.hpp"

using namespace cremona;

namespace {

Derivation D(const std::string& s, int n) { return parse_derivation(s, n); }

}  // namespace

TEST_CASE("apply on generators and products") {
    Derivation d = D("x2 d/dx1", 2);
    CHECK(apply(d, parse_poly("x1", 2)) == parse_poly("x2", 2));
    CHECK(apply(d, parse_poly("x1^2", 2)) == parse_poly("2*x1*x2", 2));
    CHECK(apply(d, parse_poly("x2", 2)).is_zero());
}

TEST_CASE("lnd_check verdicts") {
    LndVerdict v = lnd_check(D("x2 d/dx1", 2), 10);
    REQUIRE(v.proven);
    CHECK(v.orders == std::vector<int>{2, 1});

    v = lnd_check(D("x1 d/dx1", 2), 10);
    CHECK(!v.proven);
    CHECK(v.unresolved == std::vector<int>{1});

    v = lnd_check(D("0, 0", 2), 5);
    REQUIRE(v.proven);
    CHECK(v.orders == std::vector<int>{1, 1});
}

TEST_CASE("lnd_check soundness: re-apply at the reported order") {
    std::mt19937 rng(5);
    for (const auto& en : classify::enumerate_root_vectors(3, 3)) {
        Derivation d = Derivation::monomial(3, testsupport::random_rat(rng) + 7, en.i, en.alpha);
        LndVerdict v = lnd_check(d, 16);
        REQUIRE(v.proven);
        for (int j = 1; j <= 3; ++j) {
            Poly chain = Poly::variable(3, j);
            for (int k = 0; k < v.orders[j - 1]; ++k) chain = apply(d, chain);
            CHECK(chain.is_zero());
            if (v.orders[j - 1] > 1) {
                Poly prev = Poly::variable(3, j);
                for (int k = 0; k + 1 < v.orders[j - 1]; ++k) prev = apply(d, prev);
                CHECK(!prev.is_zero());
            }
        }
    }
}

TEST_CASE("derivation homogeneity (n=3)") {
    auto e = derivation_homogeneity(D("x2*x3 d/dx1", 3));
    REQUIRE(e.has_value());
    CHECK(*e == MVec{-2, 0});

    CHECK(!derivation_homogeneity(D("1, 1, 0", 3)).has_value());

    e = derivation_homogeneity(D("x1 d/dx1", 3));
    REQUIRE(e.has_value());
    CHECK(*e == MVec{0, 0});

    CHECK_THROWS_AS(derivation_homogeneity(D("0, 0, 0", 3)), std::invalid_argument);
}

TEST_CASE("exp of proven LNDs") {
    Derivation d = D("x2 d/dx1", 2);
    CHECK(exp(d, Rat(1)).images == std::vector<Poly>{parse_poly("x1+x2", 2), parse_poly("x2", 2)});
    CHECK(exp(d, Rat(0)) == Automorphism::identity(2));
    CHECK(exp(D("x2^2 d/dx1", 2), Rat(1, 2)).images[0] == parse_poly("x1 + 1/2*x2^2", 2));
    CHECK_THROWS_AS(exp(D("x1 d/dx1", 2), Rat(1)), std::invalid_argument);
}

TEST_CASE("exp is a one-parameter group") {
    for (const auto& en : classify::enumerate_root_vectors(3, 3)) {
        Derivation d = Derivation::monomial(3, Rat(1), en.i, en.alpha);
        LndVerdict v = lnd_check(d, 16);
        REQUIRE(v.proven);
        CHECK(compose(exp(d, Rat(1), v), exp(d, Rat(1), v)) == exp(d, Rat(2), v));
        CHECK(compose(exp(d, Rat(1, 2), v), exp(d, Rat(-1, 2), v)) == Automorphism::identity(3));
    }
}

TEST_CASE("volume preservation") {
    CHECK(is_volume_preserving(Automorphism::identity(3)));
    Derivation d = D("x2 d/dx1", 2);
    for (const Rat& t : {Rat(1), Rat(-3), Rat(1, 2)})
        CHECK(is_volume_preserving(exp(d, t)));
    CHECK(!is_volume_preserving({2, {parse_poly("2*x1", 2), parse_poly("x2", 2)}}));
}

TEST_CASE("formal conjugation (n=2)") {
    auto conj = conjugate_formal(D("x2 d/dx1", 2));
    TorusPoly expected(2);
    expected.add_term({0, 1}, LaurentScalar::monomial({-2}, 1));
    CHECK(conj[0] == expected);
    CHECK(conj[1].is_zero());

    conj = conjugate_formal(D("1 d/dx2", 2));
    TorusPoly c2(2);
    c2.add_term({0, 0}, LaurentScalar::monomial({1}, 1));
    CHECK(conj[1] == c2);

    conj = conjugate_formal(D("x1 d/dx1", 2));
    CHECK(conj[0] == TorusPoly::from_poly(parse_poly("x1", 2)));
}

TEST_CASE("root_check decisions (n=2)") {
    RootCheckResult r = root_check(D("5*x2^3 d/dx1", 2), 16);
    REQUIRE(r.is_root());
    CHECK(r.root == MVec{-4});
    CHECK(r.lambda == Rat(5));
    CHECK(r.index == 1);
    CHECK(r.alpha == ExponentVec{0, 3});

    CHECK(root_check(D("x1 d/dx1", 2), 16).status ==
          RootCheckResult::Status::NotLndWithinCap);
    CHECK(root_check(D("x1 d/dx1 - x2 d/dx2", 2), 16).status ==
          RootCheckResult::Status::NotLndWithinCap);
    CHECK(root_check(D("0, 0", 2), 16).status == RootCheckResult::Status::ZeroDerivation);
    CHECK(root_check(D("x2, x1", 2), 16).status == RootCheckResult::Status::NotHomogeneous);
}

TEST_CASE("root_check reconstruction and character consistency") {
    for (const auto& en : classify::enumerate_root_vectors(3, 3)) {
        Derivation d = Derivation::monomial(3, Rat(3, 2), en.i, en.alpha);
        RootCheckResult r = root_check(d, 16);
        REQUIRE(r.is_root());
        CHECK(Derivation::monomial(3, r.lambda, r.index, r.alpha) == d);
        CHECK(r.alpha[r.index - 1] == 0);
        ExponentVec shifted = r.alpha;
        shifted[r.index - 1] -= 1;  // alpha - unit_i, as character exponents
        CHECK(r.root == char_to_mvec(normalize_char(std::vector<int>(shifted.begin(), shifted.end()))));
    }
}

TEST_CASE("Leibniz rule for apply on proven LNDs") {
    std::mt19937 rng(13);
    for (const auto& en : classify::enumerate_root_vectors(2, 3)) {
        Derivation d = Derivation::monomial(2, Rat(1), en.i, en.alpha);
        for (int it = 0; it < 10; ++it) {
            Poly f = testsupport::random_poly(rng, 2, 4, 4);
            Poly g = testsupport::random_poly(rng, 2, 4, 4);
            CHECK(apply(d, f * g) == f * apply(d, g) + g * apply(d, f));
        }
    }
}
