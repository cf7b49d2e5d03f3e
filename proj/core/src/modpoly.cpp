#include "relcyc/modpoly.hpp"

#include <algorithm>
#include <random>

#include "relcyc/errors.hpp"

namespace relcyc {

namespace {

const Int kZero(0);

Int mod_reduce(const Int& a, const Int& m) {
    Int r = a % m;
    if (sgn(r) < 0) r += m;
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("modular inverse does not exist");
    return inv;
}

}  // namespace

void ModPoly::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

void ModPoly::check_same_modulus(const ModPoly& other) const {
    if (mod_ != other.mod_) throw Error("modulus mismatch");
}

ModPoly ModPoly::reduce(const IntPoly& p, const Int& modulus) {
    if (modulus < 2) throw Error("modulus must be >= 2");
    ModPoly r;
    r.mod_ = modulus;
    r.coeffs_.reserve(p.coeffs().size());
    for (const Int& c : p.coeffs()) r.coeffs_.push_back(mod_reduce(c, modulus));
    r.normalize();
    return r;
}

ModPoly ModPoly::from_coeffs(std::vector<Int> ascending, const Int& modulus) {
    if (modulus < 2) throw Error("modulus must be >= 2");
    ModPoly r;
    r.mod_ = modulus;
    r.coeffs_ = std::move(ascending);
    for (Int& c : r.coeffs_) c = mod_reduce(c, modulus);
    r.normalize();
    return r;
}

const Int& ModPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

IntPoly ModPoly::to_int_poly() const {
    return IntPoly::from_coeffs(coeffs_);
}

IntPoly ModPoly::to_int_poly_centered() const {
    std::vector<Int> out = coeffs_;
    Int half = mod_ / 2;  // coefficients > m/2 map to negatives
    for (Int& c : out)
        if (c > half) c -= mod_;
    return IntPoly::from_coeffs(std::move(out));
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    a.check_same_modulus(b);
    ModPoly r = a;
    if (r.coeffs_.size() < b.coeffs_.size()) r.coeffs_.resize(b.coeffs_.size());
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        r.coeffs_[i] += b.coeffs_[i];
        if (r.coeffs_[i] >= r.mod_) r.coeffs_[i] -= r.mod_;
    }
    r.normalize();
    return r;
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    a.check_same_modulus(b);
    ModPoly r = a;
    if (r.coeffs_.size() < b.coeffs_.size()) r.coeffs_.resize(b.coeffs_.size());
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        r.coeffs_[i] -= b.coeffs_[i];
        if (sgn(r.coeffs_[i]) < 0) r.coeffs_[i] += r.mod_;
    }
    r.normalize();
    return r;
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    a.check_same_modulus(b);
    ModPoly r;
    r.mod_ = a.mod_;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    for (Int& c : r.coeffs_) c = mod_reduce(c, r.mod_);
    r.normalize();
    return r;
}

ModPoly ModPoly::scaled(const Int& c) const {
    ModPoly r = *this;
    Int cc = mod_reduce(c, mod_);
    for (Int& a : r.coeffs_) a = mod_reduce(a * cc, mod_);
    r.normalize();
    return r;
}

ModPoly ModPoly::derivative() const {
    ModPoly r;
    r.mod_ = mod_;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_.push_back(mod_reduce(coeffs_[i] * static_cast<unsigned long>(i), mod_));
    r.normalize();
    return r;
}

ModPoly ModPoly::monic() const {
    if (is_zero() || lc() == 1) return *this;
    return scaled(mod_inverse(lc(), mod_));
}

std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b) {
    a.check_same_modulus(b);
    if (b.is_zero()) throw Error("division by zero polynomial");
    if (a.degree() < b.degree()) return {ModPoly::zero(a.modulus()), a};

    const Int& m = a.modulus();
    Int inv = b.lc() == 1 ? Int(1) : mod_inverse(b.lc(), m);
    std::vector<Int> rem = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Int> quot(rem.size() - db, Int(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        Int c = mod_reduce(rem[k + db] * inv, m);
        if (sgn(c) == 0) continue;
        for (std::size_t i = 0; i < db; ++i)
            rem[k + i] = mod_reduce(rem[k + i] - c * b.coeff(i), m);
        rem[k + db] = 0;
        quot[k] = std::move(c);
    }
    rem.resize(db);
    return {ModPoly::from_coeffs(std::move(quot), m), ModPoly::from_coeffs(std::move(rem), m)};
}

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
    ModPoly x = a, y = b;
    while (!y.is_zero()) {
        ModPoly r = divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

ModExtGcd ext_gcd(const ModPoly& a, const ModPoly& b) {
    const Int& m = a.modulus();
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::constant(Int(1), m), s1 = ModPoly::zero(m);
    ModPoly t0 = ModPoly::zero(m), t1 = ModPoly::constant(Int(1), m);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        ModPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        ModPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.is_zero() && r0.lc() != 1) {
        Int inv = mod_inverse(r0.lc(), m);
        r0 = r0.scaled(inv);
        s0 = s0.scaled(inv);
        t0 = t0.scaled(inv);
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

ModPoly pow_mod(const ModPoly& base, const Int& e, const ModPoly& f) {
    if (sgn(e) < 0) throw Error("pow_mod: negative exponent");
    ModPoly result = ModPoly::constant(Int(1), base.modulus());
    ModPoly b = divrem(base, f).second;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (sgn(e) == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = divrem(result * result, f).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = divrem(result * b, f).second;
    }
    return result;
}

namespace {

using Factors = std::vector<ModFactor>;

/* f = u^p with u recoverable coefficient-wise: in F_p, a^p = a. */
ModPoly pth_root(const ModPoly& f, unsigned long p) {
    std::vector<Int> out;
    const auto& c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); i += p) out.push_back(c[i]);
    return ModPoly::from_coeffs(std::move(out), f.modulus());
}

void squarefree_decompose(const ModPoly& f, unsigned long p, int outer_mult, Factors& out) {
    if (f.degree() < 1) return;
    ModPoly fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_decompose(pth_root(f, p), p, outer_mult * static_cast<int>(p), out);
        return;
    }
    ModPoly c = gcd(f, fp);
    ModPoly w = divrem(f, c).first;
    int i = 1;
    while (!w.is_one()) {
        ModPoly y = gcd(w, c);
        ModPoly piece = divrem(w, y).first;
        if (piece.degree() >= 1) out.push_back({piece, outer_mult * i});
        w = std::move(y);
        c = divrem(c, w).first;
        ++i;
    }
    if (!c.is_one()) squarefree_decompose(pth_root(c, p), p, outer_mult * static_cast<int>(p), out);
}

ModPoly random_poly(std::mt19937_64& rng, int deg_below, const Int& p) {
    unsigned long pw = p.get_ui();
    std::vector<Int> c(static_cast<std::size_t>(deg_below));
    for (Int& a : c) a = Int(rng() % pw);
    return ModPoly::from_coeffs(std::move(c), p);
}

/* Cantor-Zassenhaus equal-degree splitting of a monic product of distinct
 * irreducibles all of degree d. */
void equal_degree_split(const ModPoly& f, int d, unsigned long p, std::mt19937_64& rng,
                        std::vector<ModPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const Int& m = f.modulus();
    while (true) {
        ModPoly a = random_poly(rng, f.degree(), m);
        if (a.degree() < 1) continue;
        ModPoly t = gcd(a, f);
        if (t.degree() == 0 || t.degree() == f.degree()) {
            if (p == 2) {
                // trace map: a + a^2 + a^4 + ... + a^(2^(d-1))
                ModPoly tr = a, ai = a;
                for (int i = 1; i < d; ++i) {
                    ai = divrem(ai * ai, f).second;
                    tr = tr + ai;
                }
                t = gcd(tr, f);
            } else {
                Int e;
                mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
                e = (e - 1) / 2;
                ModPoly b = pow_mod(a, e, f);
                t = gcd(b - ModPoly::constant(Int(1), m), f);
            }
        }
        if (t.degree() > 0 && t.degree() < f.degree()) {
            equal_degree_split(t, d, p, rng, out);
            equal_degree_split(divrem(f, t).first, d, p, rng, out);
            return;
        }
    }
}

void distinct_degree_then_split(const ModPoly& f, unsigned long p, std::mt19937_64& rng,
                                std::vector<ModPoly>& out) {
    const Int& m = f.modulus();
    ModPoly v = f;
    ModPoly h = ModPoly::x(m);
    ModPoly xp = ModPoly::x(m);
    int d = 0;
    while (v.degree() > 0 && v.degree() > 2 * d) {
        ++d;
        h = pow_mod(h, Int(static_cast<unsigned long>(p)), v);
        ModPoly g = gcd(h - xp, v);
        if (g.degree() > 0) {
            equal_degree_split(g, d, p, rng, out);
            v = divrem(v, g).first;
            h = divrem(h, v).second;
        }
    }
    if (v.degree() > 0) out.push_back(v);
}

bool factor_order(const ModFactor& a, const ModFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    const auto& ca = a.factor.coeffs();
    const auto& cb = b.factor.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (ca[i] != cb[i]) return ca[i] < cb[i];
    return a.multiplicity < b.multiplicity;
}

}  // namespace

bool is_irreducible_mod_p(const ModPoly& f) {
    if (f.degree() < 1) return false;
    const Int& p = f.modulus();
    const unsigned long n = static_cast<unsigned long>(f.degree());
    ModPoly fm = f.monic();
    ModPoly x = ModPoly::x(p);
    // Rabin: x^(p^n) == x mod f, and gcd(x^(p^(n/q)) - x, f) == 1 for prime q | n.
    Int pn;
    mpz_pow_ui(pn.get_mpz_t(), p.get_mpz_t(), n);
    if (pow_mod(x, pn, fm) != divrem(x, fm).second) return false;
    for (unsigned long q = 2; q <= n; ++q) {
        if (n % q != 0) continue;
        bool prime = true;
        for (unsigned long r = 2; r * r <= q; ++r)
            if (q % r == 0) prime = false;
        if (!prime) continue;
        Int pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), n / q);
        ModPoly hx = pow_mod(x, pk, fm);
        if (gcd(hx - x, fm).degree() != 0) return false;
    }
    return true;
}

std::vector<ModFactor> factor_mod_p(const IntPoly& p, unsigned long prime, std::uint64_t seed) {
    if (p.is_zero()) throw Error("factor_mod_p: zero polynomial");
    Int pm(prime);
    if (mpz_divisible_p(p.lc().get_mpz_t(), pm.get_mpz_t()))
        throw BadPrime("prime divides the leading coefficient");

    ModPoly f = ModPoly::reduce(p, pm).monic();
    Factors out;
    if (f.degree() < 1) return out;

    Factors pieces;
    squarefree_decompose(f, prime, 1, pieces);

    std::mt19937_64 rng(seed);
    for (const auto& [piece, mult] : pieces) {
        std::vector<ModPoly> irr;
        distinct_degree_then_split(piece, prime, rng, irr);
        for (ModPoly& g : irr) out.push_back({std::move(g), mult});
    }
    std::sort(out.begin(), out.end(), factor_order);
    return out;
}

}  // namespace relcyc
