#include "relcyc/factor.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <utility>

#include "relcyc/errors.hpp"

namespace relcyc {

IntPoly Factorization::expand() const {
    IntPoly r(content);
    if (unit < 0) r = -r;
    for (const auto& [factor, multiplicity] : factors)
        r = r * factor.pow(static_cast<unsigned long>(multiplicity));
    return r;
}

Int mignotte_bound(const IntPoly& p) {
    if (p.is_zero()) throw Error("mignotte_bound: zero polynomial");
    const unsigned long n = static_cast<unsigned long>(p.degree());
    Int norm2(0);
    for (const Int& c : p.coeffs()) norm2 += c * c;
    // ceil(2^n * (1 + sqrt(norm2))) = 2^n + ceil(sqrt(4^n * norm2))
    Int scaled = norm2 << (2 * n);
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t());
    if (sgn(rem) != 0) root += 1;
    return (Int(1) << n) + root;
}

namespace {

ModPoly embed(const ModPoly& p, const Int& new_modulus) {
    return ModPoly::from_coeffs(p.coeffs(), new_modulus);
}

struct LiftNode {
    ModPoly prod;
    ModPoly s, t;  // bezout cofactors of the children products
    std::unique_ptr<LiftNode> left, right;
    bool leaf() const { return left == nullptr; }
};

std::unique_ptr<LiftNode> build_tree(const std::vector<ModPoly>& factors, std::size_t lo,
                                     std::size_t hi) {
    auto node = std::make_unique<LiftNode>();
    if (hi - lo == 1) {
        node->prod = factors[lo];
        return node;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    node->left = build_tree(factors, lo, mid);
    node->right = build_tree(factors, mid, hi);
    node->prod = node->left->prod * node->right->prod;
    auto [g, s, t] = ext_gcd(node->left->prod, node->right->prod);
    if (!g.is_one())
        throw LiftPreconditionViolated("modular factors are not pairwise coprime");
    node->s = std::move(s);
    node->t = std::move(t);
    return node;
}

/* One quadratic Hensel step of the whole tree: every node's data moves
 * from modulus M to M^2, given the node's target product f at M^2. */
void lift_node(LiftNode& node, const ModPoly& f, const Int& m2) {
    if (node.leaf()) {
        node.prod = f;
        return;
    }
    ModPoly g = embed(node.left->prod, m2);
    ModPoly h = embed(node.right->prod, m2);
    ModPoly s = embed(node.s, m2);
    ModPoly t = embed(node.t, m2);

    ModPoly e = f - g * h;
    auto [q, r] = divrem(s * e, h);
    ModPoly g2 = g + t * e + q * g;
    ModPoly h2 = h + r;

    ModPoly one = ModPoly::constant(Int(1), m2);
    ModPoly b = s * g2 + t * h2 - one;
    auto [c, d] = divrem(s * b, h2);
    node.s = s - d;
    node.t = t - t * b - c * g2;
    node.prod = f;

    lift_node(*node.left, g2, m2);
    lift_node(*node.right, h2, m2);
}

void collect_leaves(const LiftNode& node, std::vector<ModPoly>& out) {
    if (node.leaf()) {
        out.push_back(node.prod);
        return;
    }
    collect_leaves(*node.left, out);
    collect_leaves(*node.right, out);
}

}  // namespace

std::vector<ModPoly> hensel_lift(const std::vector<ModPoly>& factors, const IntPoly& p,
                                 const Int& target_bound) {
    if (factors.empty()) throw LiftPreconditionViolated("no factors given");
    const Int prime = factors.front().modulus();
    for (const ModPoly& f : factors) {
        if (f.modulus() != prime) throw LiftPreconditionViolated("mixed moduli");
        if (f.degree() < 1 || !f.is_monic())
            throw LiftPreconditionViolated("factors must be monic and nonconstant");
    }
    if (p.is_zero() || mpz_divisible_p(p.lc().get_mpz_t(), prime.get_mpz_t()))
        throw LiftPreconditionViolated("prime divides the leading coefficient");

    ModPoly fbar = ModPoly::reduce(p, prime).monic();
    if (gcd(fbar, fbar.derivative()).degree() != 0)
        throw LiftPreconditionViolated("input is not squarefree modulo the prime");
    ModPoly check = ModPoly::constant(Int(1), prime);
    for (const ModPoly& f : factors) check = check * f;
    if (check != fbar)
        throw LiftPreconditionViolated("factor product does not match the input modulo the prime");

    Int modulus = prime;
    const Int target = 2 * target_bound;

    if (factors.size() == 1) {
        while (modulus < target) modulus = modulus * modulus;
        return {ModPoly::reduce(p, modulus).monic()};
    }

    auto root = build_tree(factors, 0, factors.size());
    while (modulus < target) {
        Int m2 = modulus * modulus;
        lift_node(*root, ModPoly::reduce(p, m2).monic(), m2);
        modulus = std::move(m2);
    }
    std::vector<ModPoly> out;
    out.reserve(factors.size());
    collect_leaves(*root, out);
    return out;
}

namespace {

/* p(c*x): coefficient i scales by c^i. */
IntPoly scale_arg(const IntPoly& p, const Int& c) {
    std::vector<Int> out = p.coeffs();
    Int power(1);
    for (std::size_t i = 1; i < out.size(); ++i) {
        power *= c;
        out[i] *= power;
    }
    return IntPoly::from_coeffs(std::move(out));
}

/* Number of irreducible factors of monic squarefree f modulo prime, via
 * distinct-degree splitting only, or nullopt when f is not squarefree mod
 * prime. */
std::optional<int> modular_factor_count(const IntPoly& f, unsigned long prime) {
    Int pm(prime);
    ModPoly v = ModPoly::reduce(f, pm);
    if (v.degree() != f.degree()) return std::nullopt;  // lc vanished
    v = v.monic();
    if (gcd(v, v.derivative()).degree() != 0) return std::nullopt;
    int count = 0;
    ModPoly h = ModPoly::x(pm);
    ModPoly x = ModPoly::x(pm);
    int d = 0;
    while (v.degree() > 0 && v.degree() > 2 * d) {
        ++d;
        h = pow_mod(h, pm, v);
        ModPoly g = gcd(h - x, v);
        if (g.degree() > 0) {
            count += g.degree() / d;
            v = divrem(v, g).first;
            h = divrem(h, v).second;
        }
    }
    if (v.degree() > 0) ++count;
    return count;
}

struct PrimeChoice {
    unsigned long prime;
    int factor_count;
};

/* Smallest primes >= 3 with f squarefree mod p; up to 20 candidates, keep
 * the one with the fewest modular factors. */
PrimeChoice choose_prime(const IntPoly& f) {
    PrimeChoice best{0, 0};
    int candidates = 0;
    Int p(2);
    // Far more than 20 good primes exist below any realistic bound; the cap
    // only guards against a non-squarefree input slipping through.
    for (int attempts = 0; attempts < 10000 && candidates < 20; ++attempts) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        unsigned long prime = p.get_ui();
        auto count = modular_factor_count(f, prime);
        if (!count) continue;
        ++candidates;
        if (best.prime == 0 || *count < best.factor_count) best = {prime, *count};
        if (best.factor_count == 1) break;
    }
    if (best.prime == 0) throw InternalInconsistency("no usable prime found");
    return best;
}

/* Subset recombination of lifted modular factors of a monic squarefree
 * polynomial; returns its monic irreducible factors. */
std::vector<IntPoly> recombine(IntPoly remaining, std::vector<ModPoly> pool, const Int& modulus) {
    std::vector<IntPoly> result;
    std::size_t cardinality = 1;
    while (2 * cardinality <= pool.size()) {
        std::vector<std::size_t> idx(cardinality);
        for (std::size_t i = 0; i < cardinality; ++i) idx[i] = i;
        bool found = false;
        while (true) {
            ModPoly prod = ModPoly::constant(Int(1), modulus);
            for (std::size_t i : idx) prod = prod * pool[i];
            IntPoly candidate = prod.to_int_poly_centered();
            const Int& ct = candidate.coeff(0);
            if (sgn(ct) != 0 &&
                mpz_divisible_p(remaining.coeff(0).get_mpz_t(), ct.get_mpz_t())) {
                if (auto q = try_div_exact(remaining, candidate)) {
                    result.push_back(std::move(candidate));
                    remaining = std::move(*q);
                    for (std::size_t i = cardinality; i-- > 0;)
                        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx[i]));
                    found = true;
                    break;
                }
            }
            // next subset of the same cardinality
            std::size_t i = cardinality;
            while (i > 0 && idx[i - 1] == pool.size() - cardinality + (i - 1)) --i;
            if (i == 0) break;  // exhausted
            ++idx[i - 1];
            for (std::size_t j = i; j < cardinality; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++cardinality;
    }
    if (remaining.degree() >= 1)
        result.push_back(std::move(remaining));
    else if (!remaining.is_one())
        throw InternalInconsistency("recombination left a nontrivial constant");
    return result;
}

std::vector<IntPoly> factor_monic_squarefree(const IntPoly& f, std::uint64_t seed) {
    if (f.degree() == 1) return {f};
    PrimeChoice choice = choose_prime(f);
    if (choice.factor_count == 1) return {f};

    auto mod_factors = factor_mod_p(f, choice.prime, seed);
    std::vector<ModPoly> bases;
    bases.reserve(mod_factors.size());
    for (auto& mf : mod_factors) bases.push_back(std::move(mf.factor));
    if (bases.size() == 1) return {f};

    Int bound = mignotte_bound(f);
    std::vector<ModPoly> lifted = hensel_lift(bases, f, bound);
    Int modulus = lifted.front().modulus();
    return recombine(f, std::move(lifted), modulus);
}

/* Irreducible factors of a primitive squarefree polynomial with positive
 * leading coefficient; non-monic input is reduced to the monic case by the
 * classical root-scaling substitution. */
std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& w, std::uint64_t seed) {
    if (w.degree() <= 0) return {};
    if (w.degree() == 1) return {w};

    std::vector<IntPoly> out;
    IntPoly rest = w;
    if (sgn(rest.coeff(0)) == 0) {
        out.push_back(IntPoly::x());
        rest = div_exact(rest, IntPoly::x());
        if (rest.degree() == 0) return out;
    }

    if (rest.is_monic()) {
        auto factors = factor_monic_squarefree(rest, seed);
        out.insert(out.end(), factors.begin(), factors.end());
        return out;
    }

    // v(x) = lc^(n-1) * w(x/lc) is monic, with v_i = w_i * lc^(n-1-i);
    // factors map back through x -> lc*x followed by content removal.
    const Int l = rest.lc();
    const std::size_t n = static_cast<std::size_t>(rest.degree());
    std::vector<Int> coeffs = rest.coeffs();
    coeffs[n] = 1;
    Int power(1);
    for (std::size_t i = n - 1; i-- > 0;) {
        power *= l;
        coeffs[i] *= power;
    }
    IntPoly v = IntPoly::from_coeffs(std::move(coeffs));

    IntPoly product(1);
    for (const IntPoly& g : factor_monic_squarefree(v, seed)) {
        IntPoly back = scale_arg(g, l).primitive_part();
        if (sgn(back.lc()) < 0) back = -back;
        product = product * back;
        out.push_back(std::move(back));
    }
    if (product != rest)
        throw InternalInconsistency("monic reduction did not map back to the input");
    return out;
}

bool factor_power_order(const FactorPower& a, const FactorPower& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    const auto& ca = a.factor.coeffs();
    const auto& cb = b.factor.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (ca[i] != cb[i]) return ca[i] < cb[i];
    return false;
}

}  // namespace

Factorization factor_over_Z(const IntPoly& p, std::uint64_t seed) {
    if (p.is_zero()) throw Error("factor_over_Z: zero polynomial");

    Factorization result;
    result.unit = sgn(p.lc()) < 0 ? -1 : 1;
    result.content = p.content();
    IntPoly u = p.primitive_part();
    if (result.unit < 0) u = -u;
    if (u.degree() == 0) return result;

    IntPoly w = squarefree_part(u);
    std::vector<IntPoly> irreducibles = factor_squarefree_primitive(w, seed);

    IntPoly v = u;
    for (IntPoly& f : irreducibles) {
        int multiplicity = 0;
        while (auto q = try_div_exact(v, f)) {
            v = std::move(*q);
            ++multiplicity;
        }
        if (multiplicity == 0) throw InternalInconsistency("claimed factor does not divide");
        result.factors.push_back({std::move(f), multiplicity});
    }
    if (!v.is_one()) throw InternalInconsistency("factorization incomplete");

    std::sort(result.factors.begin(), result.factors.end(), factor_power_order);
    if (result.expand() != p) throw InternalInconsistency("factorization does not multiply back");
    return result;
}

bool is_irreducible(const IntPoly& p, std::uint64_t seed) {
    if (p.degree() < 1) throw Error("is_irreducible: degree must be >= 1");
    Factorization f = factor_over_Z(p, seed);
    return f.factors.size() == 1 && f.factors.front().multiplicity == 1;
}

}  // namespace relcyc
