#include <benchmark/benchmark.h>

#include "relcyc/cyclo.hpp"
#include "relcyc/factor.hpp"
#include "relcyc/parse.hpp"
#include "relcyc/relative.hpp"

using namespace relcyc;

namespace {

const char* kBaseF = "x^6 + 3*x^5 - 2*x^4 - 9*x^3 + 5*x + 1";
const char* kPhi8F = "x^24 + 53*x^20 + 702*x^16 + 2553*x^12 + 2062*x^8 + 453*x^4 + 1";

void BM_poly_mul(benchmark::State& state) {
    IntPoly f = parse_poly(kBaseF);
    IntPoly p = f;
    for (int i = 0; i < 3; ++i) p = p * p;  // degree 48
    for (auto _ : state) benchmark::DoNotOptimize(p * f);
}
BENCHMARK(BM_poly_mul);

void BM_poly_gcd(benchmark::State& state) {
    IntPoly a = parse_poly(kPhi8F) * parse_poly("x^4 + 3*x - 1");
    IntPoly b = parse_poly(kPhi8F) * parse_poly("x^3 - 7");
    for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_poly_gcd);

void BM_power_min_poly(benchmark::State& state) {
    BasePoly base{parse_poly(kBaseF)};
    const unsigned long m = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(power_min_poly(base, m));
}
BENCHMARK(BM_power_min_poly)->Arg(8)->Arg(16)->Arg(32);

void BM_factor_phi8(benchmark::State& state) {
    IntPoly phi = parse_poly(kPhi8F);
    for (auto _ : state) benchmark::DoNotOptimize(factor_over_Z(phi));
}
BENCHMARK(BM_factor_phi8)->Unit(benchmark::kMillisecond);

void BM_relative_factorization(benchmark::State& state) {
    BasePoly base{parse_poly(kBaseF)};
    for (auto _ : state) benchmark::DoNotOptimize(relative_factorization(base, 8));
}
BENCHMARK(BM_relative_factorization)->Unit(benchmark::kMillisecond);

void BM_cyclotomic(benchmark::State& state) {
    const unsigned long n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cyclotomic(n));
}
BENCHMARK(BM_cyclotomic)->Arg(60)->Arg(105)->Arg(210);

void BM_uniform_report(benchmark::State& state) {
    BasePoly base{parse_poly(kBaseF)};
    for (auto _ : state) benchmark::DoNotOptimize(uniform_degree_report(base));
}
BENCHMARK(BM_uniform_report)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
