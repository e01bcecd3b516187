#include <benchmark/benchmark.h>

#include "gibbs/critpoints.hpp"
#include "gibbs/expansion.hpp"
#include "gibbs/gibbs_run.hpp"

namespace {

using gibbs::Rational;

void BM_LaguerreConstruction(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gibbs::laguerre(n, Rational(-1, 2)));
}
BENCHMARK(BM_LaguerreConstruction)->Arg(50)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_CDQuotient(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto spec = gibbs::FamilySpec::laguerre(Rational(-1, 2));
  for (auto _ : state)
    benchmark::DoNotOptimize(gibbs::cd_derivative(spec, gibbs::JumpKind::step_at_one, n));
}
BENCHMARK(BM_CDQuotient)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ExactSign(benchmark::State& state) {
  const auto q = gibbs::cd_derivative(gibbs::FamilySpec::laguerre(Rational(-1, 2)),
                                      gibbs::JumpKind::step_at_one, 200)
                     .quotient;
  const gibbs::IntegerPoly ip(q);
  const Rational x(1234, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(ip.sign_at(x));
}
BENCHMARK(BM_ExactSign);

void BM_BracketAndRefine(benchmark::State& state) {
  const auto digits = static_cast<int>(state.range(0));
  const auto q = gibbs::cd_derivative(gibbs::FamilySpec::laguerre(Rational(-1, 2)),
                                      gibbs::JumpKind::step_at_one, 200)
                     .quotient;
  const Rational hint = gibbs::laguerre_window_hint(200);
  for (auto _ : state) {
    const auto b = gibbs::bracket_first_root(q, 1, gibbs::Direction::up, hint);
    benchmark::DoNotOptimize(gibbs::refine_root(q, b, digits));
  }
}
BENCHMARK(BM_BracketAndRefine)->Arg(50)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_LaguerreOvershoot(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gibbs::laguerre_overshoot(Rational(-1, 2), n, 60));
}
BENCHMARK(BM_LaguerreOvershoot)->Arg(25)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_ConjectureDirect(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(gibbs::conjecture_at_1(1, n, 30, gibbs::ConjecturePath::direct_sum));
}
BENCHMARK(BM_ConjectureDirect)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
