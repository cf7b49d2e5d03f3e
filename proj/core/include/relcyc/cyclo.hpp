#pragma once

#include <vector>

#include "relcyc/intpoly.hpp"

namespace relcyc {

struct DivisorSet {
    unsigned long n = 1;
    std::vector<unsigned long> divisors;  // ascending, starts at 1, ends at n
};

DivisorSet divisors(unsigned long m);

/* Trial-division factorization, ascending primes. */
std::vector<std::pair<unsigned long, unsigned>> factor_integer(unsigned long n);

unsigned long euler_phi(unsigned long n);

/* Moebius function: 0 on non-squarefree n, else (-1)^(number of primes). */
int mobius(unsigned long n);

/* Classical n-th cyclotomic polynomial, monic of degree phi(n), by
 * iterated exact division of x^n - 1 (divisor values cached within one
 * call, no global state). */
IntPoly cyclotomic(unsigned long n);

}  // namespace relcyc
