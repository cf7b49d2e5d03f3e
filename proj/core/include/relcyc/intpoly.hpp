#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "relcyc/errors.hpp"

namespace relcyc {

using Int = mpz_class;

/* Dense univariate polynomial with arbitrary-precision integer
 * coefficients, stored in ascending degree order (coeffs()[i] multiplies
 * x^i). The representation is always normalized: the last stored
 * coefficient is nonzero, and the zero polynomial stores nothing, with
 * degree() == -1 as its marker.
 *
 * All operations are exact and pure; values are safe to share across
 * threads once constructed. */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(Int constant) {
        if (sgn(constant) != 0) coeffs_.push_back(std::move(constant));
    }
    explicit IntPoly(long constant) : IntPoly(Int(constant)) {}

    static IntPoly from_coeffs(std::vector<Int> ascending) {
        IntPoly p;
        p.coeffs_ = std::move(ascending);
        p.normalize();
        return p;
    }
    static IntPoly monomial(Int coefficient, std::size_t degree) {
        IntPoly p;
        if (sgn(coefficient) != 0) {
            p.coeffs_.assign(degree + 1, Int(0));
            p.coeffs_.back() = std::move(coefficient);
        }
        return p;
    }
    static IntPoly x() { return monomial(Int(1), 1); }

    /* -1 denotes the zero polynomial. */
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    /* Coefficient of x^i; zero beyond the degree. */
    const Int& coeff(std::size_t i) const;
    /* Leading coefficient; requires a nonzero polynomial. */
    const Int& lc() const { return coeffs_.back(); }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const IntPoly&) const = default;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend IntPoly operator*(const IntPoly& lhs, const Int& rhs);
    friend IntPoly operator*(const Int& lhs, const IntPoly& rhs) { return rhs * lhs; }

    Int eval(const Int& at) const;
    IntPoly derivative() const;
    IntPoly pow(unsigned long exponent) const;

    /* GCD of all coefficients, nonnegative; 0 only for the zero polynomial. */
    Int content() const;
    /* this / content(), leading sign preserved. */
    IntPoly primitive_part() const;

private:
    std::vector<Int> coeffs_;
    void normalize() {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }
};

/* Exact quotient p / q in Z[x]; throws NotDivisible when q does not divide
 * p exactly (including the integer divisions of individual coefficients). */
IntPoly div_exact(const IntPoly& p, const IntPoly& q);

/* Non-throwing variant, for trial divisions. */
std::optional<IntPoly> try_div_exact(const IntPoly& p, const IntPoly& q);

/* Quotient and remainder by a monic divisor (exact over Z). */
std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& p, const IntPoly& q);

/* Pseudo-remainder: lc(q)^(deg p - deg q + 1) * p mod q. Requires
 * deg p >= deg q >= 0. */
IntPoly pseudo_rem(const IntPoly& p, const IntPoly& q);

/* Primitive GCD with positive leading coefficient. Divides both inputs
 * exactly; requires not both zero. */
IntPoly gcd(const IntPoly& p, const IntPoly& q);

/* p / gcd(p, p') made primitive with positive leading coefficient. */
IntPoly squarefree_part(const IntPoly& p);
bool is_squarefree(const IntPoly& p);

/* p(x - t): the minimal polynomial of alpha + t when p is the minimal
 * polynomial of alpha. */
IntPoly shift(const IntPoly& p, const Int& t);

/* p(x^m); degree multiplies by m, coefficient multiset preserved. */
IntPoly substitute_power(const IntPoly& p, unsigned long m);

/* Resultant of two integer polynomials with the convention
 * Res(p, q) = lc(p)^(deg q) * prod over roots beta of p of q(beta). */
Int resultant(const IntPoly& p, const IntPoly& q);

/* (-1)^(d(d-1)/2) * Res(p, p') / lc(p), for deg p >= 1. */
Int discriminant(const IntPoly& p);

}  // namespace relcyc
