#pragma once

#include <cstdint>
#include <vector>

#include "relcyc/intpoly.hpp"
#include "relcyc/modpoly.hpp"

namespace relcyc {

struct FactorPower {
    IntPoly factor;  // primitive, positive leading coefficient, degree >= 1
    int multiplicity;
    bool operator==(const FactorPower&) const = default;
};

/* Complete irreducible factorization over the integers:
 *   input = unit * content * prod factor^multiplicity, exactly.
 * `content` is 1 for primitive input, so that for the primitive
 * polynomials this library factors, unit * prod factor^mult reproduces the
 * input verbatim. Factors are pairwise distinct and canonically ordered
 * (degree, then lexicographic coefficients). */
struct Factorization {
    int unit = 1;
    Int content = Int(1);
    std::vector<FactorPower> factors;

    IntPoly expand() const;
    bool operator==(const Factorization&) const = default;
};

/* Integer B with |coefficient| <= B for every coefficient of every monic
 * factor of p: B = ceil(2^deg(p) * (1 + |p|_2)). */
Int mignotte_bound(const IntPoly& p);

/* Lifts a monic coprime factorization of p modulo a prime to a modulus
 * prime^e >= 2*target_bound (quadratic steps, so e is a power of two).
 * Every input factor must be monic and nonconstant, the product of the
 * inputs must equal the monic reduction of p, and p must be squarefree
 * modulo the prime; otherwise LiftPreconditionViolated is thrown. Each
 * lifted factor reduces modulo the prime to its original, and the lifted
 * product equals the monic reduction of p at the final modulus. */
std::vector<ModPoly> hensel_lift(const std::vector<ModPoly>& factors, const IntPoly& p,
                                 const Int& target_bound);

/* Zassenhaus factorization: squarefree part, best-of-20 prime selection,
 * Hensel lifting to the Mignotte bound, naive subset recombination,
 * multiplicities recovered by repeated exact division. Deterministic:
 * `seed` only steers the internal equal-degree splitting. */
Factorization factor_over_Z(const IntPoly& p, std::uint64_t seed = 0);

/* True iff factor_over_Z returns a single factor with multiplicity 1.
 * Requires deg p >= 1. */
bool is_irreducible(const IntPoly& p, std::uint64_t seed = 0);

}  // namespace relcyc
