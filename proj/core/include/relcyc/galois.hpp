#pragma once

#include <cstdint>
#include <vector>

#include "relcyc/intpoly.hpp"

namespace relcyc {

/* Factor degrees of an irreducible monic f modulo one prime. At an
 * unramified prime these are the residue degrees of the Frobenius; for a
 * Galois polynomial they are all equal. */
struct SplitPattern {
    unsigned long prime = 0;
    std::vector<int> degrees;  // ascending, multiplicity-expanded
    bool ramified = false;     // prime divides disc(f)
};

SplitPattern split_pattern(const IntPoly& f, unsigned long prime, std::uint64_t seed = 0);

/* One-sided verdict: NotGalois carries the smallest unramified witness
 * prime with unequal residue degrees and is a certificate; LikelyGalois
 * only reports how many unramified primes up to the bound showed equal
 * degrees, and proves nothing. */
struct GaloisVerdict {
    enum class Kind { NotGalois, LikelyGalois };
    Kind kind = Kind::LikelyGalois;
    unsigned long witness_prime = 0;  // set for NotGalois
    unsigned long primes_tested = 0;  // set for LikelyGalois

    bool likely() const { return kind == Kind::LikelyGalois; }
};

GaloisVerdict is_galois_heuristic(const IntPoly& f, unsigned long prime_bound = 200,
                                  std::uint64_t seed = 0);

}  // namespace relcyc
