#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/cli.hpp"
#include "cremona/parse.hpp"
#include "test_support.hpp"

using namespace cremona;

TEST_CASE("polynomial parsing") {
    Poly p = parse_poly("3*x1^2*x3 - 1/2*x2", 3);
    CHECK(p.term_count() == 2);
    CHECK(p.coeff({2, 0, 1}) == Rat(3));
    CHECK(p.coeff({0, 1, 0}) == Rat(-1, 2));

    CHECK(parse_poly("x1*x1", 2) == parse_poly("x1^2", 2));
    CHECK_THROWS_AS(parse_poly("x4", 3), parse_error);
    CHECK_THROWS_AS(parse_poly("", 2), parse_error);
    CHECK_THROWS_AS(parse_poly("x1 +", 2), parse_error);
    CHECK_THROWS_AS(parse_poly("1/0", 2), parse_error);
}

TEST_CASE("derivation parsing") {
    Derivation d = parse_derivation("x2^3 d/dx1", 2);
    CHECK(d.image(1) == parse_poly("x2^3", 2));
    CHECK(d.image(2).is_zero());

    d = parse_derivation("0, x1*x3, 0", 3);
    CHECK(d.image(2) == parse_poly("x1*x3", 3));

    d = parse_derivation("x1 d/dx1 - x2 d/dx2", 2);
    CHECK(d.image(1) == parse_poly("x1", 2));
    CHECK(d.image(2) == parse_poly("-x2", 2));

    CHECK_THROWS_AS(parse_derivation("x1, x2, x3", 2), parse_error);
    CHECK_THROWS_AS(parse_derivation("x1 d/dx5", 2), parse_error);
}

TEST_CASE("round trips") {
    std::mt19937 rng(41);
    for (int it = 0; it < 300; ++it) {
        const int n = 2 + it % 3;
        Poly f = testsupport::random_poly(rng, n, 6, 6);
        CHECK(parse_poly(to_string(f), n) == f);
    }
    Derivation d = parse_derivation("x2^3 - x2, 1/2*x1", 2);
    CHECK(parse_derivation(to_string(d), 2) == d);
}

TEST_CASE("exit codes") {
    CHECK(cli::run({"roots", "--n", "2", "--max-deg", "1"}).code == 0);
    CHECK(cli::run({"root-check", "--n", "2", "x1 d/dx1"}).code == 3);
    CHECK(cli::run({"char", "--n", "3", "--beta", "0,0,0"}).code == 1);
    CHECK(cli::run({"char", "--n", "3", "--beta", "-1,2,0"}).code == 0);
    CHECK(cli::run({"lnd", "--n", "2", "x2 d/dx1"}).code == 0);
    CHECK(cli::run({"lnd", "--n", "2", "x1 d/dx1"}).code == 3);
    CHECK(cli::run({"root-check", "--n", "2", "5*x2^3 d/dx1"}).code == 0);
    CHECK(cli::run({"root-check", "--n", "2", "x2, x1"}).code == 1);
    CHECK(cli::run({"jac", "--n", "2", "x1+x2^2, x2"}).code == 0);
    CHECK(cli::run({"jac", "--n", "2", "2*x1, x2"}).code == 1);
    CHECK(cli::run({"ah", "admissible", "--n", "2", "--i", "1", "--e", "-2"}).code == 0);
    CHECK(cli::run({"ah", "admissible", "--n", "2", "--i", "1", "--e", "1"}).code == 1);
    CHECK(cli::run({"ah", "member", "--n", "2", "--r", "0", "--m", "-1"}).code == 1);
    CHECK(cli::run({"roots", "--n", "2"}).code == 2);          // missing --max-deg
    CHECK(cli::run({"homog", "--n", "2", "x1 +"}).code == 2);  // parse error
    CHECK(cli::run({"nonsense"}).code == 2);
}

TEST_CASE("command output") {
    cli::RunResult r = cli::run({"roots", "--n", "2", "--max-deg", "1"});
    CHECK(r.out.find("4 root vectors") != std::string::npos);

    r = cli::run({"exp", "--n", "2", "--t", "1", "x2 d/dx1"});
    CHECK(r.out == "x1 + x2, x2\n");

    r = cli::run({"ah", "translate", "--n", "3", "--i", "1", "--e", "-3,0", "--lambda", "2"});
    CHECK(r.out == "2*x2^2*x3^2, 0, 0\n");

    r = cli::run({"ah", "eval", "--n", "3", "--m", "-2,5"});
    CHECK(r.out == "-2\n");

    r = cli::run({"degree", "--n", "3", "x2*x3 d/dx1"});
    CHECK(r.out == "(-2,0)\n");
}

TEST_CASE("json output is schema-shaped and byte-stable") {
    cli::RunResult a = cli::run({"roots", "--n", "2", "--max-deg", "1", "--json"});
    cli::RunResult b = cli::run({"roots", "--n", "2", "--max-deg", "1", "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"n\":2") != std::string::npos);
    CHECK(a.out.find("\"max_deg\":1") != std::string::npos);
    CHECK(a.out.find("\"roots\":[") != std::string::npos);
    CHECK(a.out.find("\"character\":") != std::string::npos);

    a = cli::run({"verify", "--n", "2", "--max-deg", "2", "--ebox", "3", "--budget", "500",
                  "--seed", "3", "--json"});
    b = cli::run({"verify", "--n", "2", "--max-deg", "2", "--ebox", "3", "--budget", "500",
                  "--seed", "3", "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"tested\":") != std::string::npos);
    CHECK(a.out.find("\"violations\":[]") != std::string::npos);
    CHECK(a.out.find("\"pass\":true") != std::string::npos);
}
