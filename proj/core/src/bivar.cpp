#include "relcyc/bivar.hpp"

#include "subres.hpp"

namespace relcyc {

IntPoly resultant(const BivarPoly& p, const BivarPoly& q) {
    if (p.is_zero() || q.is_zero()) throw Error("resultant: zero input");
    return detail::subresultant_resultant<IntPoly>(p.coeffs(), q.coeffs());
}

}  // namespace relcyc
