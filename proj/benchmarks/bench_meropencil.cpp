#include <benchmark/benchmark.h>

#include <string>

#include "meropencil/elimination.hpp"
#include "meropencil/invariants.hpp"
#include "meropencil/localalg.hpp"
#include "meropencil/mpoly.hpp"

using namespace mero;

namespace {

BiPoly<Rational> germ(const std::string& s) { return bipoly_from<Rational>(parse_polynomial(s, {"u", "v"}), 0, 1); }

std::string example_P(int a, int b) {
  return "x*(z^" + std::to_string(a + b) + " + x^" + std::to_string(a) + "*y^" + std::to_string(b) + ")";
}

std::string example_Q(int p, int q) { return "y^" + std::to_string(p) + "*z^" + std::to_string(q); }

}  // namespace

static void BM_MilnorBrieskorn(benchmark::State& state) {
  auto p = state.range(0);
  auto f = germ("u^" + std::to_string(p) + " + v^" + std::to_string(p + 1));
  for (auto _ : state) benchmark::DoNotOptimize(milnor_number(f));
}
BENCHMARK(BM_MilnorBrieskorn)->DenseRange(2, 10, 2);

static void BM_IntersectionSheared(benchmark::State& state) {
  // u(3v^2 + 3v + u^4) against 2v^5 after (u, v) -> (u + v, u - v)
  auto f = germ("3*(u+v)*(u-v)^2 + 3*(u+v)*(u-v) + (u+v)^5");
  auto g = germ("2*(u-v)^5");
  for (auto _ : state) benchmark::DoNotOptimize(intersection_multiplicity(f, g));
}
BENCHMARK(BM_IntersectionSheared)->Unit(benchmark::kMillisecond);

static void BM_Resultant(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  MPoly f = parse_polynomial("x^" + std::to_string(d) + " + x*y^" + std::to_string(d - 1) + " - 3*y + 1", {"x", "y"});
  MPoly g = parse_polynomial("y^" + std::to_string(d) + " - 2*x^2*y + x - 5", {"x", "y"});
  for (auto _ : state) benchmark::DoNotOptimize(resultant(f, g, "y"));
}
BENCHMARK(BM_Resultant)->DenseRange(3, 9, 2)->Unit(benchmark::kMicrosecond);

static void BM_CandidatesExample(benchmark::State& state) {
  int a = static_cast<int>(state.range(0)), b = static_cast<int>(state.range(1));
  Pencil pen = make_pencil(example_P(a, b), example_Q(1, a + b));
  for (auto _ : state) benchmark::DoNotOptimize(candidate_atypical_values(pen, 0));
}
BENCHMARK(BM_CandidatesExample)->Args({1, 1})->Args({2, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_ReportExample(benchmark::State& state) {
  int a = static_cast<int>(state.range(0)), b = static_cast<int>(state.range(1));
  Pencil pen = make_pencil(example_P(a, b), example_Q(a + b, 1));
  for (auto _ : state) benchmark::DoNotOptimize(build_report(pen, 0));
}
BENCHMARK(BM_ReportExample)->Args({1, 1})->Args({2, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_ReportAffine(benchmark::State& state) {
  static const char* polys[] = {"x + x^2*y", "x^3 - 3*x + y^2", "x^3 - 6*x + y^2", "x^2*y^2 + x*y + x"};
  Pencil pen = from_affine(polys[state.range(0)]);
  state.SetLabel(polys[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(build_report(pen, 0));
}
BENCHMARK(BM_ReportAffine)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
