#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "relcyc/bivar.hpp"
#include "relcyc/format.hpp"
#include "relcyc/intpoly.hpp"
#include "relcyc/parse.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace relcyc;
namespace golden = relcyc::test::golden;

namespace {

IntPoly P(const char* text) { return parse_poly(text); }

/* Res_y(f(y), x - y^m) as a BivarPoly pair. */
IntPoly power_resultant(const IntPoly& f, unsigned long m) {
    std::vector<IntPoly> second(m + 1);
    second[0] = IntPoly::x();
    second[m] = IntPoly(-1);
    return resultant(BivarPoly::in_y(f), BivarPoly::from_coeffs(std::move(second)));
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
    CHECK(P("x + 1") * P("x - 1") == P("x^2 - 1"));
    CHECK(P("x^2 + x") + P("-x") == P("x^2"));
    CHECK((P("x^2 + x") - P("x^2 + x")).is_zero());
    CHECK(-P("x - 3") == P("3 - x"));
    CHECK(P("x^2") * IntPoly{} == IntPoly{});

    // degree of a product adds for nonzero inputs
    CHECK((P("2*x^3 + 1") * P("5*x^4 - x")).degree() == 7);
}

TEST_CASE("worked example: g times Psi_3 rebuilds F_3") {
    CHECK(P(golden::kBaseG) * P(golden::kPhi3G) == P(golden::kF3));
}

TEST_CASE("exact division") {
    CHECK(div_exact(P("x^2 - 1"), P("x - 1")) == P("x + 1"));
    CHECK_THROWS_AS(div_exact(P("x^2 + 1"), P("x - 1")), NotDivisible);
    CHECK(div_exact(P(golden::kF3), P(golden::kBaseG)) == P(golden::kPhi3G));
    CHECK(!try_div_exact(P("2*x^2"), P("4*x")).has_value());  // inexact coefficient
    CHECK(div_exact(IntPoly{}, P("x + 1")).is_zero());
}

TEST_CASE("gcd normalization and values") {
    CHECK(gcd(P("x^2 - 1"), P("x^2 - 2*x + 1")) == P("x - 1"));
    CHECK(gcd(P("x^2 + 1"), P("x^2 - 2")) == IntPoly(1));
    CHECK(gcd(P("x^2 + 2*x + 1"), P("x^2 - 2*x - 3")) == P("x + 1"));
    // primitive with positive leading coefficient, whatever the inputs
    CHECK(gcd(P("-2*x - 2"), P("4*x + 4")) == P("x + 1"));
    CHECK(gcd(IntPoly{}, P("-3*x")) == P("x"));
    CHECK_THROWS_AS(gcd(IntPoly{}, IntPoly{}), Error);
}

TEST_CASE("squarefree detection") {
    IntPoly squared = P("x - 1") * P("x - 1") * P("x + 2");
    CHECK_FALSE(is_squarefree(squared));
    CHECK(squarefree_part(squared) == P("x - 1") * P("x + 2"));

    CHECK(is_squarefree(P("x^2 - 2*x - 1")));
    CHECK(squarefree_part(P("x^2 - 2*x - 1")) == P("x^2 - 2*x - 1"));

    // f_2 of x^2 + 1 collapses to (x + 1)^2
    IntPoly f2 = power_resultant(P("x^2 + 1"), 2);
    CHECK(f2 == P("x^2 + 2*x + 1"));
    CHECK_FALSE(is_squarefree(f2));
    CHECK(squarefree_part(f2) == P("x + 1"));
}

TEST_CASE("resultant conventions") {
    // evaluation convention: Res_y(y - 2, y^2 - 3) = 2^2 - 3
    BivarPoly a = BivarPoly::in_y(P("x - 2"));  // y - 2 seen in y
    BivarPoly b = BivarPoly::in_y(P("x^2 - 3"));
    CHECK(resultant(a, b) == IntPoly(1));

    // identity substitution: Res_y(f(y), x - y) == f(x) for monic f
    IntPoly f = P(golden::kBaseF);
    CHECK(power_resultant(f, 1) == f);

    // minimal polynomial of (1 + sqrt 2)^8; the numeric oracle expands
    // (x - a^8)(x - b^8) for the two conjugate roots in long double
    long double r1 = std::pow(1.0L + std::sqrt(2.0L), 8.0L);
    long double r2 = std::pow(1.0L - std::sqrt(2.0L), 8.0L);
    long trace = std::lround(static_cast<double>(r1 + r2));
    long norm = std::lround(static_cast<double>(r1 * r2));
    CHECK(trace == 1154);
    CHECK(norm == 1);
    CHECK(power_resultant(P("x^2 - 2*x - 1"), 8) ==
          P("x^2 - 1154*x + 1"));
}

TEST_CASE("discriminants") {
    CHECK(discriminant(P("x^2 - 2*x - 1")) == 8);
    CHECK(discriminant(P("x^2 + 1")) == -4);
    CHECK(discriminant(P("x^2 - 2*x + 2")) == -4);
    CHECK(discriminant(P("x^2 + 2*x + 1")) == 0);  // repeated root
}

TEST_CASE("substitute_power") {
    CHECK(substitute_power(P("x - 1"), 5) == P("x^5 - 1"));
    CHECK(substitute_power(P(golden::kMinPoly8), 8) == P(golden::kF8));
    CHECK(substitute_power(IntPoly{}, 7).is_zero());
}

TEST_CASE("shift") {
    CHECK(shift(P("x^2 + 1"), Int(1)) == P("x^2 - 2*x + 2"));
    CHECK(shift(P("x^2 - 2*x + 2"), Int(-1)) == P("x^2 + 1"));
    IntPoly f = P(golden::kBaseG);
    CHECK(shift(f, Int(0)) == f);
}

TEST_CASE("random ring properties") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        IntPoly p = test::random_poly(rng, 1 + static_cast<int>(rng() % 6), 9);
        IntPoly q = test::random_poly(rng, 1 + static_cast<int>(rng() % 6), 9);
        IntPoly r = test::random_poly(rng, 1 + static_cast<int>(rng() % 6), 9);

        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(div_exact(p * q, q) == p);

        Int t(static_cast<long>(rng() % 21) - 10);
        CHECK(shift(shift(p, t), -t) == p);

        unsigned long a = 1 + rng() % 3, b = 1 + rng() % 3;
        CHECK(substitute_power(substitute_power(p, a), b) == substitute_power(p, a * b));
    }
}

TEST_CASE("random resultant properties") {
    std::mt19937_64 rng(77001);
    for (int trial = 0; trial < 40; ++trial) {
        IntPoly p = test::random_poly(rng, 1 + static_cast<int>(rng() % 4), 6);
        IntPoly q = test::random_poly(rng, 1 + static_cast<int>(rng() % 4), 6);
        IntPoly r = test::random_poly(rng, 1 + static_cast<int>(rng() % 3), 6);

        Int sym = resultant(q, p);
        if (((p.degree() * q.degree()) & 1) != 0) sym = -sym;
        CHECK(resultant(p, q) == sym);

        CHECK(resultant(p, q * r) == resultant(p, q) * resultant(p, r));
    }
}

TEST_CASE("squarefree agrees with the numeric root oracle") {
    std::mt19937_64 rng(5150);
    int repeated_seen = 0;
    for (int trial = 0; trial < 40; ++trial) {
        IntPoly p = test::random_poly(rng, 1 + static_cast<int>(rng() % 5), 9);
        // salt in some genuinely repeated-root inputs
        if (trial % 4 == 0) {
            IntPoly lin = test::random_poly(rng, 1, 4);
            p = lin * lin * test::random_poly(rng, 1, 4);
        }
        bool algebraic = is_squarefree(p);
        bool numeric = test::numeric_roots_distinct(p, test::BigFloat("1e-8"));
        CHECK(algebraic == numeric);
        if (!algebraic) ++repeated_seen;
    }
    CHECK(repeated_seen >= 5);
}

TEST_CASE("display form round-trips through the parser") {
    for (const char* text : {golden::kBaseF, golden::kF8, golden::kPhi8F, golden::kBaseG,
                             golden::kPhi5G, "0", "-x^2 + 3", "7"}) {
        IntPoly p = P(text);
        CHECK(parse_poly(to_string(p)) == p);
    }
}
