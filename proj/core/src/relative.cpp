#include "relcyc/relative.hpp"

#include <string>
#include <utility>

#include "relcyc/bivar.hpp"
#include "relcyc/cyclo.hpp"
#include "relcyc/errors.hpp"
#include "relcyc/modpoly.hpp"

namespace relcyc {

BasePoly::BasePoly(IntPoly f, std::uint64_t seed) : f_(std::move(f)), k_(f_.degree()) {
    if (k_ < 1) throw Error("base polynomial must have degree >= 1");
    if (!f_.is_monic()) throw NotMonic("base polynomial must be monic");
    if (sgn(f_.coeff(0)) == 0) throw ZeroRoot("base polynomial has 0 as a root");
    if (!is_irreducible(f_, seed)) throw NotIrreducible("base polynomial is reducible");
}

namespace {

/* Res_y(f(y), x - y^m) for monic f: prod_i (x - alpha_i^m). */
IntPoly power_min_poly_raw(const IntPoly& f, unsigned long m) {
    if (m == 0) throw Error("power_min_poly: m must be >= 1");
    std::vector<IntPoly> second(m + 1);
    second[0] = IntPoly::x();
    second[m] = IntPoly(-1);
    IntPoly r = resultant(BivarPoly::in_y(f), BivarPoly::from_coeffs(std::move(second)));
    if (!r.is_monic() || r.degree() != f.degree())
        throw InternalInconsistency("power minimal polynomial is not monic of degree k");
    return r;
}

/* Ratio polynomial Res_y(f(y), f(x*y)) = prod_{i,j} (x*alpha_i - alpha_j),
 * with the diagonal factor (x-1)^k removed and the content dropped. Its
 * roots are exactly the ratios of distinct conjugates. */
IntPoly ratio_poly(const IntPoly& f) {
    std::vector<IntPoly> scaled;
    scaled.reserve(f.coeffs().size());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        scaled.push_back(IntPoly::monomial(f.coeffs()[i], i));
    IntPoly r = resultant(BivarPoly::in_y(f), BivarPoly::from_coeffs(std::move(scaled)));
    IntPoly x_minus_1 = IntPoly::x() - IntPoly(1);
    for (int i = 0; i < f.degree(); ++i) r = div_exact(r, x_minus_1);
    r = r.primitive_part();
    return sgn(r.lc()) < 0 ? -r : r;
}

UniformReport report_for(const IntPoly& f) {
    UniformReport report;
    const int k = f.degree();
    if (k <= 1) return report;

    IntPoly ratios = ratio_poly(f);
    if (ratios.degree() == 0) return report;

    const unsigned long phi_cap = static_cast<unsigned long>(k) * (k - 1);
    const unsigned long n_max = bad_order_search_bound(k);

    // Cheap mod-p screen: a nontrivial gcd over Z survives reduction at any
    // prime, because divisors of the monic cyclotomic are monic.
    const Int screen_prime(1000003);
    ModPoly ratios_p = ModPoly::reduce(ratios, screen_prime);

    for (unsigned long n = 2; n <= n_max; ++n) {
        if (euler_phi(n) > phi_cap) continue;
        IntPoly phi_n = cyclotomic(n);
        ModPoly phi_p = ModPoly::reduce(phi_n, screen_prime);
        if (gcd(ratios_p, phi_p).degree() == 0) continue;
        if (gcd(ratios, phi_n).degree() > 0) report.bad_orders.push_back(n);
    }
    report.uniform_for_all_m = report.bad_orders.empty();
    return report;
}

}  // namespace

unsigned long bad_order_search_bound(int base_degree) {
    if (base_degree <= 1) return 0;
    const unsigned long phi_cap =
        static_cast<unsigned long>(base_degree) * (base_degree - 1);
    return 2 * phi_cap * phi_cap;
}

IntPoly power_min_poly(const BasePoly& base, unsigned long m) {
    return power_min_poly_raw(base.poly(), m);
}

bool is_uniform_for_m(const BasePoly& base, unsigned long m) {
    return is_squarefree(power_min_poly(base, m));
}

IntPoly build_F(const BasePoly& base, unsigned long m) {
    IntPoly fm = power_min_poly(base, m);
    if (!is_squarefree(fm))
        throw DefectivePower("alpha^" + std::to_string(m) + " has degree below deg f");
    return substitute_power(fm, m);
}

UniformReport uniform_degree_report(const BasePoly& base) {
    if (sgn(base.poly().coeff(0)) == 0) throw ZeroRoot("base polynomial has 0 as a root");
    return report_for(base.poly());
}

Int find_uniform_shift(const BasePoly& base) {
    const IntPoly& f = base.poly();
    for (long magnitude = 0;; ++magnitude) {
        for (long t : {magnitude, -magnitude}) {
            Int ti(t);
            IntPoly shifted = shift(f, ti);
            if (sgn(shifted.coeff(0)) == 0) continue;
            if (report_for(shifted).bad_orders.empty()) return ti;
            if (t == 0) break;
        }
    }
}

RelCycSystem relative_factorization(const BasePoly& base, unsigned long m, std::uint64_t seed) {
    if (m == 0) throw Error("relative_factorization: m must be >= 1");
    RelCycSystem sys;
    sys.base = base.poly();
    sys.base_degree = base.degree();
    sys.m = m;

    const auto divs = divisors(m).divisors;
    for (unsigned long d : divs) {
        IntPoly fd = power_min_poly(base, d);
        if (!is_squarefree(fd))
            throw DefectivePower("alpha^" + std::to_string(d) + " has degree below deg f");
        IntPoly G = substitute_power(fd, d);
        if (d == m) sys.F = G;

        IntPoly psi = std::move(G);
        for (unsigned long e : divs) {
            if (e >= d || d % e != 0) continue;
            try {
                psi = div_exact(psi, sys.components.at(e).psi);
            } catch (const NotDivisible&) {
                throw InternalInconsistency("Psi_" + std::to_string(e) +
                                            " does not divide f_d(x^d) for d = " +
                                            std::to_string(d));
            }
        }
        if (psi.degree() !=
            base.degree() * static_cast<int>(euler_phi(d)))
            throw InternalInconsistency("deg Psi_d != k*phi(d) at d = " + std::to_string(d));

        Factorization fac = factor_over_Z(psi, seed);
        bool irreducible = fac.factors.size() == 1 && fac.factors.front().multiplicity == 1;
        sys.components.emplace(d, RelCycComponent{std::move(psi), irreducible, std::move(fac)});
    }

    sys.pattern_holds = true;
    for (const auto& [d, component] : sys.components)
        if (!component.irreducible) sys.pattern_holds = false;
    return sys;
}

IntPoly mobius_phi(const BasePoly& base, unsigned long m) {
    if (m == 0) throw Error("mobius_phi: m must be >= 1");
    IntPoly numerator(1), denominator(1);
    for (unsigned long d : divisors(m).divisors) {
        IntPoly fd = power_min_poly(base, d);
        if (!is_squarefree(fd))
            throw DefectivePower("alpha^" + std::to_string(d) + " has degree below deg f");
        int mu = mobius(m / d);
        if (mu == 0) continue;
        IntPoly piece = substitute_power(fd, d);
        if (mu > 0)
            numerator = numerator * piece;
        else
            denominator = denominator * piece;
    }
    try {
        return div_exact(numerator, denominator);
    } catch (const NotDivisible&) {
        throw InternalInconsistency("Moebius product is not an exact quotient");
    }
}

Disjointness disjointness_sufficient(const BasePoly& base, unsigned long m) {
    if (m == 0) throw Error("disjointness_sufficient: m must be >= 1");
    Int disc = abs(discriminant(base.poly()));
    Int g;
    mpz_gcd_ui(g.get_mpz_t(), disc.get_mpz_t(), m);
    return g == 1 ? Disjointness::Disjoint : Disjointness::Unknown;
}

std::vector<SurveyRow> survey(const BasePoly& base, unsigned long m_max, std::uint64_t seed) {
    if (m_max == 0) throw Error("survey: m_max must be >= 1");
    std::vector<SurveyRow> rows;
    rows.reserve(m_max);
    for (unsigned long m = 1; m <= m_max; ++m) {
        SurveyRow row;
        row.m = m;
        row.tau = divisors(m).divisors.size();
        row.disjointness = disjointness_sufficient(base, m);
        try {
            RelCycSystem sys = relative_factorization(base, m, seed);
            for (const auto& [d, component] : sys.components)
                row.factor_count += component.factorization.factors.size();
            row.pattern_holds = row.factor_count == row.tau;
        } catch (const DefectivePower&) {
            row.defective = true;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace relcyc
