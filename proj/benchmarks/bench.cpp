#include <benchmark/benchmark.h>

#include "igsys/apps.hpp"
#include "igsys/groebner.hpp"
#include "igsys/problem.hpp"

using namespace igsys;

namespace {

ProblemFile data(const char* name) { return loadProblem(std::string(IGSYS_DATA_DIR) + "/" + name); }

void BM_IntervalDependency(benchmark::State& state) {
  const Interval a = Interval::closed(1, 2), b = Interval::closed(1, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(div(a, add(a, b)));
    benchmark::DoNotOptimize(div(Interval(Rational(1)), add(Interval(Rational(1)), div(b, a))));
  }
}
BENCHMARK(BM_IntervalDependency);

void BM_IntervalMul(benchmark::State& state) {
  const Interval a(Rational(-3), Rational(2), false, true), b(Rational(-1, 2), Rational(5), true, false);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_IntervalMul);

void BM_ReducedGBTriangular(benchmark::State& state) {
  const auto p = data("triangular.poly");
  const auto F = p.exactPolys();
  for (auto _ : state) benchmark::DoNotOptimize(reducedGB(p.ring, F));
}
BENCHMARK(BM_ReducedGBTriangular)->Unit(benchmark::kMillisecond);

void BM_PgbParametric(benchmark::State& state) {
  const auto p = data("parametric.ppoly");
  for (auto _ : state) benchmark::DoNotOptimize(pgb(*p.parametric, p.parametricPolys));
}
BENCHMARK(BM_PgbParametric)->Unit(benchmark::kMillisecond);

void BM_IgsBivariate(benchmark::State& state) {
  const auto p = data("bivariate.ipoly");
  const IntervalSystem S{p.ring, p.polys};
  for (auto _ : state) benchmark::DoNotOptimize(igs(S, p.ring->order()));
}
BENCHMARK(BM_IgsBivariate)->Unit(benchmark::kMillisecond);

void BM_SolveUnivariate(benchmark::State& state) {
  const auto p = data("rootset.ipoly");
  for (auto _ : state) benchmark::DoNotOptimize(solveUnivariate(p.polys[0]));
}
BENCHMARK(BM_SolveUnivariate)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
