#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "relcyc/intpoly.hpp"

namespace relcyc {

/* Dense polynomial over Z/mZ, residues reduced into [0, m), ascending
 * degree, normalized (leading residue nonzero). The modulus is a prime for
 * the factorization routines and a prime power during Hensel lifting. */
class ModPoly {
public:
    ModPoly() = default;

    static ModPoly reduce(const IntPoly& p, const Int& modulus);
    static ModPoly from_coeffs(std::vector<Int> ascending, const Int& modulus);
    static ModPoly zero(const Int& modulus) { return from_coeffs({}, modulus); }
    static ModPoly constant(const Int& c, const Int& modulus) { return from_coeffs({c}, modulus); }
    static ModPoly x(const Int& modulus) { return from_coeffs({Int(0), Int(1)}, modulus); }

    const Int& modulus() const { return mod_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    const Int& lc() const { return coeffs_.back(); }
    const Int& coeff(std::size_t i) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /* Lift with coefficients in [0, m). */
    IntPoly to_int_poly() const;
    /* Lift with coefficients centered into (-m/2, m/2]. */
    IntPoly to_int_poly_centered() const;

    bool operator==(const ModPoly&) const = default;

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    ModPoly scaled(const Int& c) const;
    ModPoly derivative() const;

    /* Scales by lc^-1; requires lc invertible mod m. */
    ModPoly monic() const;

    friend std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b);

private:
    Int mod_{0};
    std::vector<Int> coeffs_;
    void normalize();
    void check_same_modulus(const ModPoly& other) const;
};

/* Division with remainder; requires lc(b) invertible modulo the modulus
 * (always holds for nonzero b over a prime field, and for monic b at any
 * modulus). */
std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b);

/* Monic GCD over a prime field. gcd(0, 0) = 0. */
ModPoly gcd(const ModPoly& a, const ModPoly& b);

/* Extended GCD over a prime field: returns (g, s, t) with s*a + t*b = g,
 * g monic (or zero). */
struct ModExtGcd {
    ModPoly g, s, t;
};
ModExtGcd ext_gcd(const ModPoly& a, const ModPoly& b);

/* base^e mod f, square-and-multiply; e >= 0. */
ModPoly pow_mod(const ModPoly& base, const Int& e, const ModPoly& f);

/* Deterministic Rabin irreducibility test over the prime field. */
bool is_irreducible_mod_p(const ModPoly& f);

struct ModFactor {
    ModPoly factor;  // monic, irreducible over F_p
    int multiplicity;
    bool operator==(const ModFactor&) const = default;
};

/* Complete factorization of p modulo a small prime: squarefree
 * decomposition, then distinct-degree and randomized equal-degree
 * splitting. The factor multiset satisfies
 *   prod factor^multiplicity == p / lc(p)  (mod prime)
 * and is canonicalized (degree, then lexicographic coefficients), so the
 * result does not depend on the seed. Throws BadPrime when prime | lc(p). */
std::vector<ModFactor> factor_mod_p(const IntPoly& p, unsigned long prime, std::uint64_t seed = 0);

}  // namespace relcyc
