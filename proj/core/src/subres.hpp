#pragma once

/* Generic subresultant PRS resultant over a UFD, instantiated for Z
 * (integer resultants, discriminants) and for Z[x] (the bivariate
 * resultants Res_y(f(y), x - y^m) and Res_y(f(y), f(x*y))).
 *
 * Follows the classical subresultant algorithm: pseudo-remainders divided
 * by g*h^delta keep intermediate growth polynomial while every division
 * stays exact in the coefficient ring. */

#include <cstddef>
#include <utility>
#include <vector>

#include "relcyc/errors.hpp"
#include "relcyc/intpoly.hpp"

namespace relcyc::detail {

template <class R>
struct ring;

template <>
struct ring<Int> {
    static Int one() { return Int(1); }
    static bool is_zero(const Int& a) { return sgn(a) == 0; }
    static Int neg(const Int& a) { return -a; }
    static Int mul(const Int& a, const Int& b) { return a * b; }
    static Int div_exact(const Int& a, const Int& b) {
        Int q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static Int gcd(const Int& a, const Int& b) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
    static Int pow(const Int& a, unsigned long e) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
        return r;
    }
};

template <>
struct ring<IntPoly> {
    static IntPoly one() { return IntPoly(1); }
    static bool is_zero(const IntPoly& a) { return a.is_zero(); }
    static IntPoly neg(const IntPoly& a) { return -a; }
    static IntPoly mul(const IntPoly& a, const IntPoly& b) { return a * b; }
    static IntPoly div_exact(const IntPoly& a, const IntPoly& b) { return relcyc::div_exact(a, b); }
    static IntPoly gcd(const IntPoly& a, const IntPoly& b) { return relcyc::gcd(a, b); }
    static IntPoly pow(const IntPoly& a, unsigned long e) { return a.pow(e); }
};

/* Polynomials over R are plain coefficient vectors, ascending, normalized. */
template <class R>
using rpoly = std::vector<R>;

template <class R>
void rp_normalize(rpoly<R>& p) {
    while (!p.empty() && ring<R>::is_zero(p.back())) p.pop_back();
}

template <class R>
int rp_deg(const rpoly<R>& p) {
    return static_cast<int>(p.size()) - 1;
}

template <class R>
rpoly<R> rp_scale(const rpoly<R>& p, const R& c) {
    rpoly<R> r;
    r.reserve(p.size());
    for (const R& a : p) r.push_back(ring<R>::mul(a, c));
    return r;
}

template <class R>
rpoly<R> rp_div_scalar_exact(const rpoly<R>& p, const R& c) {
    rpoly<R> r;
    r.reserve(p.size());
    for (const R& a : p) r.push_back(ring<R>::is_zero(a) ? a : ring<R>::div_exact(a, c));
    return r;
}

/* lc(b)^(deg a - deg b + 1) * a mod b, deg a >= deg b >= 0. */
template <class R>
rpoly<R> rp_pseudo_rem(const rpoly<R>& a, const rpoly<R>& b) {
    const int db = rp_deg(b);
    const R& d = b.back();
    rpoly<R> r = a;
    long e = rp_deg(a) - db + 1;
    while (!r.empty() && rp_deg(r) >= db) {
        const int dr = rp_deg(r);
        R top = r.back();
        // r <- d*r - top * x^(dr-db) * b
        for (R& c : r) c = ring<R>::mul(c, d);
        for (int i = 0; i <= db; ++i) {
            R t = ring<R>::mul(top, b[static_cast<std::size_t>(i)]);
            R& dst = r[static_cast<std::size_t>(dr - db + i)];
            dst = dst - t;  // both Int and IntPoly support operator-
        }
        rp_normalize(r);
        --e;
    }
    if (e > 0) {
        R de = ring<R>::pow(d, static_cast<unsigned long>(e));
        r = rp_scale(r, de);
    }
    return r;
}

template <class R>
R rp_content(const rpoly<R>& p) {
    R g{};
    bool first = true;
    for (const R& c : p) {
        if (ring<R>::is_zero(c)) continue;
        g = first ? c : ring<R>::gcd(g, c);
        first = false;
    }
    return first ? ring<R>::one() : g;
}

/* Resultant of nonzero a, b over R, convention
 * Res(a, b) = lc(a)^(deg b) * prod_{a(beta)=0} b(beta). */
template <class R>
R subresultant_resultant(rpoly<R> a, rpoly<R> b) {
    rp_normalize(a);
    rp_normalize(b);
    if (a.empty() || b.empty()) throw Error("resultant: zero input");

    bool negate = false;
    if (rp_deg(a) < rp_deg(b)) {
        std::swap(a, b);
        if ((rp_deg(a) & 1) && (rp_deg(b) & 1)) negate = !negate;
    }
    if (rp_deg(b) == 0) {
        R r = ring<R>::pow(b[0], static_cast<unsigned long>(rp_deg(a)));
        return negate ? ring<R>::neg(r) : r;
    }

    const R ca = rp_content(a);
    const R cb = rp_content(b);
    a = rp_div_scalar_exact(a, ca);
    b = rp_div_scalar_exact(b, cb);
    // Res(ca*A, cb*B) = ca^(deg B) * cb^(deg A) * Res(A, B)
    R outer = ring<R>::mul(ring<R>::pow(ca, static_cast<unsigned long>(rp_deg(b))),
                           ring<R>::pow(cb, static_cast<unsigned long>(rp_deg(a))));

    R g = ring<R>::one();
    R h = ring<R>::one();
    while (true) {
        const int da = rp_deg(a);
        const int db = rp_deg(b);
        const unsigned long delta = static_cast<unsigned long>(da - db);
        if ((da & 1) && (db & 1)) negate = !negate;

        rpoly<R> rem = rp_pseudo_rem(a, b);
        a = std::move(b);
        R divisor = ring<R>::mul(g, ring<R>::pow(h, delta));
        b = rp_div_scalar_exact(rem, divisor);

        g = a.back();
        if (delta >= 1) {
            // h <- g^delta / h^(delta-1), exact
            h = ring<R>::div_exact(ring<R>::pow(g, delta), ring<R>::pow(h, delta - 1));
        }
        if (rp_deg(b) <= 0) break;
    }

    if (b.empty()) return R{};  // nontrivial common factor: resultant is zero
    const unsigned long da = static_cast<unsigned long>(rp_deg(a));
    // res = lc(b)^(deg a) / h^(deg a - 1), times the content correction
    R r = ring<R>::div_exact(ring<R>::pow(b[0], da), ring<R>::pow(h, da - 1));
    r = ring<R>::mul(r, outer);
    return negate ? ring<R>::neg(r) : r;
}

}  // namespace relcyc::detail
