#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "relcyc/factor.hpp"
#include "relcyc/format.hpp"
#include "relcyc/modpoly.hpp"
#include "relcyc/parse.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace relcyc;
namespace golden = relcyc::test::golden;

namespace {

IntPoly P(const char* text) { return parse_poly(text); }

ModPoly MP(const char* text, long modulus) {
    return ModPoly::reduce(parse_poly(text), Int(modulus));
}

std::multiset<int> factor_degrees(const Factorization& f) {
    std::multiset<int> out;
    for (const auto& [factor, multiplicity] : f.factors)
        for (int i = 0; i < multiplicity; ++i) out.insert(factor.degree());
    return out;
}

}  // namespace

TEST_CASE("factor_mod_p splits x^2 + 1 by the residue of -1") {
    // oracle: exhaustive root search over the 5-element field finds 2, 3
    IntPoly p = P("x^2 + 1");
    int roots_mod5 = 0;
    for (long r = 0; r < 5; ++r)
        if ((r * r + 1) % 5 == 0) ++roots_mod5;
    CHECK(roots_mod5 == 2);

    auto f5 = factor_mod_p(p, 5);
    REQUIRE(f5.size() == 2);
    CHECK(f5[0].factor == MP("x + 2", 5));
    CHECK(f5[1].factor == MP("x + 3", 5));
    CHECK(f5[0].multiplicity == 1);

    // no roots and no quadratic splitting mod 3
    auto f3 = factor_mod_p(p, 3);
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].factor == MP("x^2 + 1", 3));
    CHECK(f3[0].multiplicity == 1);

    auto f2 = factor_mod_p(P("x^4 + 1"), 2);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].factor == MP("x + 1", 2));
    CHECK(f2[0].multiplicity == 4);
}

TEST_CASE("factor_mod_p output is canonical and seed-independent") {
    IntPoly p = P(golden::kPhi8F);
    auto a = factor_mod_p(p, 7, 0);
    auto b = factor_mod_p(p, 7, 123456789);
    CHECK(a == b);

    ModPoly product = ModPoly::constant(Int(1), Int(7));
    for (const auto& [factor, multiplicity] : a) {
        CHECK(is_irreducible_mod_p(factor));
        for (int i = 0; i < multiplicity; ++i) product = product * factor;
    }
    CHECK(product == ModPoly::reduce(p, Int(7)).monic());
}

TEST_CASE("factor_mod_p rejects a prime dividing the leading coefficient") {
    CHECK_THROWS_AS(factor_mod_p(P("5*x^2 + 1"), 5), BadPrime);
}

TEST_CASE("mignotte bound matches the direct formula") {
    // 2^deg * (1 + euclidean norm), rounded up
    auto reference = [](const IntPoly& p) {
        long double norm = 0;
        for (const Int& c : p.coeffs()) norm += std::pow(c.get_d(), 2.0);
        return static_cast<long>(
            std::ceil(std::pow(2.0L, p.degree()) * (1.0L + std::sqrt(norm))));
    };
    CHECK(mignotte_bound(P("x^2 - 1")) == reference(P("x^2 - 1")));
    CHECK(mignotte_bound(P("x^2 - 1")) == 10);
    CHECK(mignotte_bound(P("x - 1")) == 5);
    CHECK(mignotte_bound(P("7")) == 8);
    CHECK(mignotte_bound(P("7")) >= 7);
}

TEST_CASE("hensel lifting to mod 25") {
    std::vector<ModPoly> factors{MP("x + 2", 5), MP("x + 3", 5)};
    // 2 * target_bound = 24 forces exactly one quadratic step: 5 -> 25
    auto lifted = hensel_lift(factors, P("x^2 + 1"), Int(12));
    REQUIRE(lifted.size() == 2);
    CHECK(lifted[0].modulus() == 25);
    // oracle: (x + a)(x + b) = x^2 + 1 mod 25 has the solution a=7, b=18
    CHECK(lifted[0] == MP("x + 7", 25));
    CHECK(lifted[1] == MP("x + 18", 25));
    // each lifted factor reduces to its original
    CHECK(ModPoly::reduce(lifted[0].to_int_poly(), Int(5)) == factors[0]);
    CHECK(ModPoly::reduce(lifted[1].to_int_poly(), Int(5)) == factors[1]);
}

TEST_CASE("hensel lifting of a single full-degree factor") {
    IntPoly p = P("x^2 + x + 1");
    auto lifted = hensel_lift({MP("x^2 + x + 1", 5)}, p, Int(1000));
    REQUIRE(lifted.size() == 1);
    CHECK(lifted[0].modulus() >= 2000);
    CHECK(lifted[0] == ModPoly::reduce(p, lifted[0].modulus()));
}

TEST_CASE("hensel lifting validates its preconditions") {
    CHECK_THROWS_AS(hensel_lift({MP("x + 1", 3), MP("x + 1", 3)}, P("x^2 - 1"), Int(100)),
                    LiftPreconditionViolated);
    // right factors, wrong polynomial (not squarefree mod 3)
    CHECK_THROWS_AS(hensel_lift({MP("x + 1", 3)}, P("x^2 + 2*x + 1"), Int(100)),
                    LiftPreconditionViolated);
    // non-monic factor
    CHECK_THROWS_AS(hensel_lift({MP("2*x + 1", 5), MP("x + 1", 5)}, P("2*x^2 + 3*x + 1"),
                                Int(100)),
                    LiftPreconditionViolated);
}

TEST_CASE("factor_over_Z on classical inputs") {
    Factorization f = factor_over_Z(P("x^4 - 1"));
    CHECK(f.unit == 1);
    CHECK(f.content == 1);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0].factor == P("x - 1"));
    CHECK(f.factors[1].factor == P("x + 1"));
    CHECK(f.factors[2].factor == P("x^2 + 1"));
}

TEST_CASE("factor_over_Z reproduces the printed degree-24 factor of F_8") {
    Factorization f = factor_over_Z(P(golden::kF8));
    CHECK(factor_degrees(f) == std::multiset<int>{6, 6, 12, 24});
    bool found = false;
    for (const auto& [factor, multiplicity] : f.factors)
        if (factor.degree() == 24) {
            found = true;
            CHECK(factor == P(golden::kPhi8F));
            CHECK(multiplicity == 1);
        }
    CHECK(found);
}

TEST_CASE("factor_over_Z reproduces the printed degree-24 factor of F_5") {
    Factorization f = factor_over_Z(P(golden::kF5));
    CHECK(factor_degrees(f) == std::multiset<int>{6, 24});
    for (const auto& [factor, multiplicity] : f.factors)
        if (factor.degree() == 24) CHECK(factor == P(golden::kPhi5G));
}

TEST_CASE("irreducibility") {
    CHECK(is_irreducible(P("x^2 - 2*x - 1")));
    CHECK_FALSE(is_irreducible(P("x^2 - 1")));
    CHECK(is_irreducible(P(golden::kBaseF)));
    CHECK(is_irreducible(P(golden::kBaseG)));
}

TEST_CASE("multiplicities, unit and content") {
    IntPoly p = P("x - 1") * P("x - 1") * P("x + 3") * Int(-6);
    Factorization f = factor_over_Z(p);
    CHECK(f.unit == -1);
    CHECK(f.content == 6);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].factor == P("x - 1"));
    CHECK(f.factors[0].multiplicity == 2);
    CHECK(f.factors[1].factor == P("x + 3"));
    CHECK(f.factors[1].multiplicity == 1);
    CHECK(f.expand() == p);

    Factorization constant = factor_over_Z(P("7"));
    CHECK(constant.factors.empty());
    CHECK(constant.content == 7);
}

TEST_CASE("random product round-trip") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 60; ++trial) {
        int parts = 2 + static_cast<int>(rng() % 3);
        std::vector<IntPoly> inputs;
        IntPoly product(1);
        for (int i = 0; i < parts; ++i) {
            IntPoly f = test::random_irreducible(rng, 4, 5);
            inputs.push_back(f);
            product = product * f;
        }
        Factorization fact = factor_over_Z(product);
        CHECK(fact.expand() == product);

        std::multiset<std::string> expected, got;
        for (const IntPoly& f : inputs) expected.insert(to_string(f));
        for (const auto& [factor, multiplicity] : fact.factors)
            for (int i = 0; i < multiplicity; ++i) got.insert(to_string(factor));
        CHECK(expected == got);

        // re-factoring each claimed-irreducible output returns it unchanged
        for (const auto& [factor, multiplicity] : fact.factors) {
            Factorization again = factor_over_Z(factor);
            REQUIRE(again.factors.size() == 1);
            CHECK(again.factors.front().factor == factor);
        }
    }
}

TEST_CASE("degree and content conservation on random inputs") {
    std::mt19937_64 rng(987654);
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly p = test::random_poly(rng, 1 + static_cast<int>(rng() % 6), 9);
        Factorization f = factor_over_Z(p);
        long degree_sum = 0;
        Int lc_product(1);
        for (const auto& [factor, multiplicity] : f.factors) {
            degree_sum += static_cast<long>(factor.degree()) * multiplicity;
            for (int i = 0; i < multiplicity; ++i) lc_product *= factor.lc();
        }
        CHECK(degree_sum == p.degree());
        CHECK(f.unit * f.content * lc_product == p.lc());
        CHECK(f.expand() == p);
    }
}
