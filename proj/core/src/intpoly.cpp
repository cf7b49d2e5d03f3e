#include "relcyc/intpoly.hpp"

#include <algorithm>
#include <cstddef>

#include "subres.hpp"

namespace relcyc {

namespace {
const Int kZero(0);
}

const Int& IntPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (Int& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return IntPoly{};
    IntPoly r;
    r.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (sgn(lhs.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            r.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return r;
}

IntPoly operator*(const IntPoly& lhs, const Int& rhs) {
    if (sgn(rhs) == 0) return IntPoly{};
    IntPoly r = lhs;
    for (Int& c : r.coeffs_) c *= rhs;
    return r;
}

Int IntPoly::eval(const Int& at) const {
    Int r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * at + *it;
    return r;
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return IntPoly{};
    IntPoly r;
    r.coeffs_.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_.push_back(coeffs_[i] * static_cast<unsigned long>(i));
    r.normalize();
    return r;
}

IntPoly IntPoly::pow(unsigned long exponent) const {
    IntPoly r(1);
    IntPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1) r = r * base;
        exponent >>= 1;
        if (exponent) base = base * base;
    }
    return r;
}

Int IntPoly::content() const {
    Int g(0);
    for (const Int& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly{};
    Int c = content();
    IntPoly r = *this;
    if (c != 1)
        for (Int& a : r.coeffs_) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    return r;
}

IntPoly div_exact(const IntPoly& p, const IntPoly& q) {
    auto r = try_div_exact(p, q);
    if (!r) throw NotDivisible("polynomial division is not exact");
    return *std::move(r);
}

std::optional<IntPoly> try_div_exact(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) throw Error("division by the zero polynomial");
    if (p.is_zero()) return IntPoly{};
    if (p.degree() < q.degree()) return std::nullopt;

    std::vector<Int> rem(p.coeffs());
    const std::size_t dq = static_cast<std::size_t>(q.degree());
    std::vector<Int> quot(rem.size() - dq, Int(0));
    const Int& qlc = q.lc();

    for (std::size_t k = quot.size(); k-- > 0;) {
        Int& top = rem[k + dq];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), qlc.get_mpz_t())) return std::nullopt;
        Int c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), qlc.get_mpz_t());
        for (std::size_t i = 0; i < dq; ++i) rem[k + i] -= c * q.coeff(i);
        top = 0;
        quot[k] = std::move(c);
    }
    for (std::size_t i = 0; i < dq; ++i)
        if (sgn(rem[i]) != 0) return std::nullopt;
    return IntPoly::from_coeffs(std::move(quot));
}

std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& p, const IntPoly& q) {
    if (!q.is_monic()) throw Error("divrem_monic: divisor is not monic");
    if (p.degree() < q.degree()) return {IntPoly{}, p};

    std::vector<Int> rem(p.coeffs());
    const std::size_t dq = static_cast<std::size_t>(q.degree());
    std::vector<Int> quot(rem.size() - dq, Int(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        Int c = rem[k + dq];
        if (sgn(c) == 0) continue;
        for (std::size_t i = 0; i < dq; ++i) rem[k + i] -= c * q.coeff(i);
        rem[k + dq] = 0;
        quot[k] = std::move(c);
    }
    rem.resize(dq);
    return {IntPoly::from_coeffs(std::move(quot)), IntPoly::from_coeffs(std::move(rem))};
}

IntPoly pseudo_rem(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) throw Error("pseudo_rem: divisor is zero");
    if (p.degree() < q.degree()) throw Error("pseudo_rem: deg p < deg q");
    auto r = detail::rp_pseudo_rem<Int>(p.coeffs(), q.coeffs());
    return IntPoly::from_coeffs(std::move(r));
}

IntPoly gcd(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() && q.is_zero()) throw Error("gcd(0, 0) is undefined");

    auto positive = [](IntPoly a) { return sgn(a.lc()) < 0 ? -a : a; };
    if (p.is_zero()) return positive(q.primitive_part());
    if (q.is_zero()) return positive(p.primitive_part());

    // Primitive PRS: divide every pseudo-remainder by its content. At the
    // degrees this library sees, content extraction is cheaper than the
    // coefficient growth it prevents.
    IntPoly a = p.primitive_part();
    IntPoly b = q.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return positive(std::move(a));
}

bool is_squarefree(const IntPoly& p) {
    if (p.is_zero()) throw Error("is_squarefree: zero polynomial");
    if (p.degree() <= 1) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw Error("squarefree_part: zero polynomial");
    IntPoly g = gcd(p, p.derivative());
    IntPoly r = div_exact(p.primitive_part(), g).primitive_part();
    return sgn(r.lc()) < 0 ? -r : r;
}

IntPoly shift(const IntPoly& p, const Int& t) {
    if (p.is_constant()) return p;
    // Horner in (x - t).
    std::vector<Int> acc;  // current value, ascending
    acc.reserve(p.coeffs().size());
    const auto& c = p.coeffs();
    acc.push_back(c.back());
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        acc.push_back(Int(0));
        for (std::size_t i = acc.size() - 1; i > 0; --i) {
            // acc <- acc*(x - t), in place from the top
            acc[i] = acc[i - 1] - t * acc[i];
        }
        acc[0] = c[k] - t * acc[0];
    }
    return IntPoly::from_coeffs(std::move(acc));
}

IntPoly substitute_power(const IntPoly& p, unsigned long m) {
    if (m == 0) throw Error("substitute_power: m must be >= 1");
    if (p.is_zero() || m == 1) return p;
    std::vector<Int> out(static_cast<std::size_t>(p.degree()) * m + 1, Int(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[i * m] = p.coeffs()[i];
    return IntPoly::from_coeffs(std::move(out));
}

Int resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) throw Error("resultant: zero input");
    return detail::subresultant_resultant<Int>(p.coeffs(), q.coeffs());
}

Int discriminant(const IntPoly& p) {
    if (p.degree() < 1) throw Error("discriminant: degree must be >= 1");
    Int res = resultant(p, p.derivative());
    const long deg = p.degree();
    if (((deg * (deg - 1) / 2) & 1) != 0) res = -res;
    Int out;
    mpz_divexact(out.get_mpz_t(), res.get_mpz_t(), p.lc().get_mpz_t());
    return out;
}

}  // namespace relcyc
