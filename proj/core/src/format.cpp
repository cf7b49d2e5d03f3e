#include "relcyc/format.hpp"

#include <ostream>

namespace relcyc {

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int e = p.degree(); e >= 0; --e) {
        const Int& c = p.coeff(static_cast<std::size_t>(e));
        if (sgn(c) == 0) continue;
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        Int a = abs(c);
        if (a != 1 || e == 0) out += a.get_str();
        if (e >= 1) {
            out += "x";
            if (e >= 2) out += "^" + std::to_string(e);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
    return os << to_string(p);
}

}  // namespace relcyc
