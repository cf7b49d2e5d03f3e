#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relcyc/cyclo.hpp"
#include "relcyc/factor.hpp"
#include "relcyc/format.hpp"
#include "relcyc/parse.hpp"

using namespace relcyc;

TEST_CASE("divisors") {
    CHECK(divisors(8).divisors == std::vector<unsigned long>{1, 2, 4, 8});
    CHECK(divisors(1).divisors == std::vector<unsigned long>{1});
    CHECK(divisors(12).divisors == std::vector<unsigned long>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(36).divisors == std::vector<unsigned long>{1, 2, 3, 4, 6, 9, 12, 18, 36});
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(8) == 4);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(360) == 96);
}

TEST_CASE("mobius") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(30) == -1);
}

TEST_CASE("small cyclotomic polynomials") {
    CHECK(cyclotomic(1) == parse_poly("x - 1"));
    CHECK(cyclotomic(2) == parse_poly("x + 1"));
    CHECK(cyclotomic(6) == parse_poly("x^2 - x + 1"));
    CHECK(cyclotomic(8) == parse_poly("x^4 + 1"));
    CHECK(cyclotomic(105).degree() == 48);  // first index with a coefficient of size 2
    CHECK(cyclotomic(105).coeff(41) == -2);
}

TEST_CASE("product identity over divisors") {
    for (unsigned long n = 1; n <= 100; ++n) {
        IntPoly product(1);
        for (unsigned long d : divisors(n).divisors) product = product * cyclotomic(d);
        IntPoly target = IntPoly::monomial(Int(1), n) - IntPoly(1);
        CHECK(product == target);
    }
}

TEST_CASE("totient divisor sum identity") {
    for (unsigned long n = 1; n <= 1000; ++n) {
        unsigned long sum = 0;
        for (unsigned long d : divisors(n).divisors) sum += euler_phi(d);
        CHECK(sum == n);
    }
}

TEST_CASE("mobius divisor sums vanish") {
    for (unsigned long n = 2; n <= 1000; ++n) {
        long sum = 0;
        for (unsigned long d : divisors(n).divisors) sum += mobius(d);
        CHECK(sum == 0);
    }
}

TEST_CASE("cyclotomics are irreducible") {
    for (unsigned long n = 1; n <= 30; ++n) {
        IntPoly phi = cyclotomic(n);
        CHECK(phi.is_monic());
        CHECK(phi.degree() == static_cast<int>(euler_phi(n)));
        CHECK(is_irreducible(phi));
    }
}
