#pragma once

#include <vector>

#include "relcyc/intpoly.hpp"

namespace relcyc {

/* Polynomial in an inner variable y whose coefficients are IntPoly values
 * in the outer variable x, ascending in y and normalized (leading inner
 * coefficient nonzero). This is the carrier for the resultants
 * Res_y(f(y), x - y^m) and Res_y(f(y), f(x*y)). */
class BivarPoly {
public:
    BivarPoly() = default;

    static BivarPoly from_coeffs(std::vector<IntPoly> ascending_in_y) {
        BivarPoly p;
        p.coeffs_ = std::move(ascending_in_y);
        while (!p.coeffs_.empty() && p.coeffs_.back().is_zero()) p.coeffs_.pop_back();
        return p;
    }

    /* Embeds an integer polynomial as a polynomial in y (coefficients
     * constant in x). */
    static BivarPoly in_y(const IntPoly& p) {
        std::vector<IntPoly> c;
        c.reserve(p.coeffs().size());
        for (const Int& a : p.coeffs()) c.push_back(IntPoly(a));
        return from_coeffs(std::move(c));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const IntPoly& lc() const { return coeffs_.back(); }
    const std::vector<IntPoly>& coeffs() const { return coeffs_; }

    bool operator==(const BivarPoly&) const = default;

private:
    std::vector<IntPoly> coeffs_;
};

/* Resultant with respect to the inner variable y, an IntPoly in x.
 * Convention: Res(p, q) = lc_y(p)^(deg_y q) * prod_{p(beta)=0} q(beta),
 * so Res_y(f(y), x - y^m) is monic for monic f. Inputs must be nonzero. */
IntPoly resultant(const BivarPoly& p, const BivarPoly& q);

}  // namespace relcyc
