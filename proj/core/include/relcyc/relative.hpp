#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "relcyc/factor.hpp"
#include "relcyc/intpoly.hpp"

namespace relcyc {

/* A validated base polynomial f: monic, irreducible over the rationals,
 * with f(0) != 0, so that its root alpha is a nonzero algebraic integer of
 * degree deg(f). Construction throws NotMonic, ZeroRoot or NotIrreducible. */
class BasePoly {
public:
    explicit BasePoly(IntPoly f, std::uint64_t seed = 0);
    const IntPoly& poly() const { return f_; }
    int degree() const { return k_; }

private:
    IntPoly f_;
    int k_;
};

/* f_m := Res_y(f(y), x - y^m): the monic degree-k polynomial whose roots
 * are the m-th powers of the conjugates of alpha. It is the minimal
 * polynomial of alpha^m exactly when it is squarefree; otherwise alpha is
 * defective at m and the squarefree part is the minimal polynomial. */
IntPoly power_min_poly(const BasePoly& base, unsigned long m);

/* deg(alpha^m) == deg(alpha), i.e. f_m squarefree. */
bool is_uniform_for_m(const BasePoly& base, unsigned long m);

/* F_m := f_m(x^m), monic of degree k*m. Throws DefectivePower when f_m is
 * not squarefree. */
IntPoly build_F(const BasePoly& base, unsigned long m);

/* Orders are searched over all n with phi(n) <= k(k-1), enumerated up to
 * this bound (phi(n) >= sqrt(n/2) makes larger n impossible). */
unsigned long bad_order_search_bound(int base_degree);

/* The orders n >= 2 such that some ratio of distinct conjugates of alpha
 * is a primitive n-th root of unity. alpha^m drops degree exactly when
 * some bad order divides m, so this report decides uniformity for every
 * exponent at once. Every candidate order up to
 * bad_order_search_bound(deg f) with phi small enough is tested. */
struct UniformReport {
    std::vector<unsigned long> bad_orders;  // ascending
    bool uniform_for_all_m = true;

    bool defective(unsigned long m) const {
        for (unsigned long n : bad_orders)
            if (m % n == 0) return true;
        return false;
    }
};

UniformReport uniform_degree_report(const BasePoly& base);

/* Smallest-magnitude integer t (searched 0, 1, -1, 2, -2, ...) such that
 * f(x - t) has nonzero constant term and an empty bad-order set, i.e.
 * alpha + t has uniform degree. */
Int find_uniform_shift(const BasePoly& base);

struct RelCycComponent {
    IntPoly psi;  // monic, degree k*phi(d)
    bool irreducible;
    Factorization factorization;
};

/* The divisor-indexed factorization F_m = prod_{d|m} Psi_d, with Psi_d
 * defined by recursive exact division Psi_d = f_d(x^d) / prod_{e|d, e<d}
 * Psi_e. When the theorem's hypotheses hold every Psi_d is irreducible and
 * equals the relative cyclotomic polynomial Phi_{d,f}; components are
 * reported either way, so failure modes stay observable. */
struct RelCycSystem {
    IntPoly base;
    int base_degree = 0;
    unsigned long m = 1;
    IntPoly F;
    std::map<unsigned long, RelCycComponent> components;
    bool pattern_holds = false;
};

RelCycSystem relative_factorization(const BasePoly& base, unsigned long m,
                                    std::uint64_t seed = 0);

/* Moebius-inversion route to Psi_m:
 *   prod over d|m with mu(m/d) = 1 of f_d(x^d), divided exactly by the
 *   product over d|m with mu(m/d) = -1. Cross-check for
 *   relative_factorization's recursive division. */
IntPoly mobius_phi(const BasePoly& base, unsigned long m);

/* One-sided sufficient condition for hypothesis (i) of the construction:
 * when no prime divides both disc(f) and m, the cyclotomic field Q[zeta_m]
 * is unramified where Q[alpha] ramifies, forcing trivial intersection.
 * Unknown is not a failure verdict. */
enum class Disjointness { Disjoint, Unknown };

Disjointness disjointness_sufficient(const BasePoly& base, unsigned long m);

struct SurveyRow {
    unsigned long m = 1;
    unsigned long tau = 1;              // number of divisors of m
    bool defective = false;             // f_d non-squarefree for some d|m
    unsigned long factor_count = 0;     // total irreducible factors of F_m
    bool pattern_holds = false;         // factor_count == tau
    Disjointness disjointness = Disjointness::Unknown;
};

/* One row per m in [1, m_max]: empirical evidence for the conjecture that
 * failed cases always have strictly more factors than divisors. */
std::vector<SurveyRow> survey(const BasePoly& base, unsigned long m_max,
                              std::uint64_t seed = 0);

}  // namespace relcyc
