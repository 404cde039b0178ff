#include <benchmark/benchmark.h>

#include <numbers>
#include <string>
#include <vector>

#include "mulint/mulint.hpp"

using namespace mulint;

namespace {

const std::vector<std::string> kZ{"z"};

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_expression("exp(z^2+1)*cos(sin(z)/3)-2.5i*z", kZ));
  }
}
BENCHMARK(BM_Parse);

void BM_Evaluate(benchmark::State& state) {
  const Expr f = parse_expression("exp(z^2+1)*cos(sin(z)/3)-2.5i*z", kZ);
  const ComplexValue z(0.3, -0.7);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(f, z));
}
BENCHMARK(BM_Evaluate);

void BM_Differentiate(benchmark::State& state) {
  const Expr f = parse_expression("exp(z^2+1)*cos(sin(z)/3)-2.5i*z", kZ);
  for (auto _ : state) benchmark::DoNotOptimize(differentiate(f, "z"));
}
BENCHMARK(BM_Differentiate);

void BM_BuildLogTrack(benchmark::State& state) {
  const Expr f = parse_expression("z", kZ);
  const ParametricCurve circle = make_circle({0.0, 0.0}, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(build_log_track(f, circle));
}
BENCHMARK(BM_BuildLogTrack);

void BM_StarIntegral(benchmark::State& state) {
  const Expr f = parse_expression("exp(z^2+1)", kZ);
  const ParametricCurve arc = make_arc({0.0, 0.0}, 1.0, 0.0, std::numbers::pi / 2);
  for (auto _ : state) benchmark::DoNotOptimize(star_integral(f, arc));
}
BENCHMARK(BM_StarIntegral);

void BM_RiemannLogSum(benchmark::State& state) {
  const Expr f = parse_expression("exp(z^2+1)", kZ);
  const LogTrack track = build_log_track(f, make_arc({0.0, 0.0}, 1.0, 0.0, std::numbers::pi / 2));
  for (auto _ : state) benchmark::DoNotOptimize(riemann_log_sum(track, state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RiemannLogSum)->RangeMultiplier(8)->Range(1 << 7, 1 << 16)->Complexity();

void BM_FtcSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(Suite::Ftc));
}
BENCHMARK(BM_FtcSuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
