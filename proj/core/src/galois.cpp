#include "relcyc/galois.hpp"

#include <algorithm>

#include "relcyc/errors.hpp"
#include "relcyc/modpoly.hpp"

namespace relcyc {

namespace {

std::vector<int> mod_degrees(const IntPoly& f, unsigned long prime, std::uint64_t seed) {
    std::vector<int> degrees;
    for (const auto& [factor, multiplicity] : factor_mod_p(f, prime, seed))
        degrees.insert(degrees.end(), static_cast<std::size_t>(multiplicity), factor.degree());
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

}  // namespace

SplitPattern split_pattern(const IntPoly& f, unsigned long prime, std::uint64_t seed) {
    if (!f.is_monic()) throw NotMonic("split_pattern: f must be monic");
    SplitPattern pattern;
    pattern.prime = prime;
    pattern.ramified = mpz_divisible_ui_p(discriminant(f).get_mpz_t(), prime) != 0;
    pattern.degrees = mod_degrees(f, prime, seed);
    return pattern;
}

GaloisVerdict is_galois_heuristic(const IntPoly& f, unsigned long prime_bound,
                                  std::uint64_t seed) {
    if (!f.is_monic()) throw NotMonic("is_galois_heuristic: f must be monic");
    const Int disc = discriminant(f);

    GaloisVerdict verdict;
    Int p(1);
    while (true) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p > prime_bound) break;
        unsigned long prime = p.get_ui();
        if (mpz_divisible_ui_p(disc.get_mpz_t(), prime)) continue;  // ramified: no evidence
        std::vector<int> degrees = mod_degrees(f, prime, seed);
        if (!degrees.empty() &&
            !std::all_of(degrees.begin(), degrees.end(),
                         [&](int d) { return d == degrees.front(); })) {
            verdict.kind = GaloisVerdict::Kind::NotGalois;
            verdict.witness_prime = prime;
            verdict.primes_tested = 0;
            return verdict;
        }
        ++verdict.primes_tested;
    }
    verdict.kind = GaloisVerdict::Kind::LikelyGalois;
    return verdict;
}

}  // namespace relcyc
