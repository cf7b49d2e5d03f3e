#include "relcyc/cyclo.hpp"

#include <algorithm>
#include <map>

#include "relcyc/errors.hpp"

namespace relcyc {

DivisorSet divisors(unsigned long m) {
    if (m == 0) throw Error("divisors: m must be >= 1");
    DivisorSet out;
    out.n = m;
    std::vector<unsigned long> high;
    for (unsigned long d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        out.divisors.push_back(d);
        if (d != m / d) high.push_back(m / d);
    }
    out.divisors.insert(out.divisors.end(), high.rbegin(), high.rend());
    return out;
}

std::vector<std::pair<unsigned long, unsigned>> factor_integer(unsigned long n) {
    std::vector<std::pair<unsigned long, unsigned>> out;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

unsigned long euler_phi(unsigned long n) {
    if (n == 0) throw Error("euler_phi: n must be >= 1");
    unsigned long result = n;
    for (const auto& [p, e] : factor_integer(n)) result = result / p * (p - 1);
    return result;
}

int mobius(unsigned long n) {
    if (n == 0) throw Error("mobius: n must be >= 1");
    auto factors = factor_integer(n);
    for (const auto& [p, e] : factors)
        if (e > 1) return 0;
    return factors.size() % 2 == 0 ? 1 : -1;
}

namespace {

IntPoly x_pow_minus_one(unsigned long n) {
    IntPoly p = IntPoly::monomial(Int(1), n);
    return p - IntPoly(1);
}

IntPoly cyclotomic_memo(unsigned long n, std::map<unsigned long, IntPoly>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    IntPoly result = x_pow_minus_one(n);
    for (unsigned long d : divisors(n).divisors)
        if (d != n) result = div_exact(result, cyclotomic_memo(d, cache));
    cache.emplace(n, result);
    return result;
}

}  // namespace

IntPoly cyclotomic(unsigned long n) {
    if (n == 0) throw Error("cyclotomic: n must be >= 1");
    std::map<unsigned long, IntPoly> cache;
    return cyclotomic_memo(n, cache);
}

}  // namespace relcyc
