#include <benchmark/benchmark.h>

#include "qjack/selfcheck.hpp"

using namespace qjack;

namespace {

RatFun dense_ratfun(int deg, int seed) {
  std::vector<BigInt> num, den;
  for (int i = 0; i <= deg; ++i) {
    num.emplace_back((seed + 3) * (i + 1) % 17 - 8);
    den.emplace_back((seed + 5) * (i + 2) % 19 - 9);
  }
  den.back() = 3;  // keep the denominator nonzero
  return RatFun(IntPoly(std::move(num)), IntPoly(std::move(den)));
}

void BM_RatFunMul(benchmark::State& state) {
  RatFun f = dense_ratfun(static_cast<int>(state.range(0)), 1);
  RatFun g = dense_ratfun(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f * g);
  }
}
BENCHMARK(BM_RatFunMul)->Arg(4)->Arg(16)->Arg(64);

void BM_TableBuild(benchmark::State& state) {
  int w = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ActionTable table(w);
    benchmark::DoNotOptimize(table.order().size());
  }
}
BENCHMARK(BM_TableBuild)->Arg(6)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_JackSweep(benchmark::State& state) {
  int w = static_cast<int>(state.range(0));
  const ActionTable& table = ActionTable::get(w);
  Partition ones(std::vector<int>(static_cast<size_t>(w), 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(jack_iteration_with_table(ones, table).expr.term_count());
  }
}
BENCHMARK(BM_JackSweep)->Arg(8)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_Inner(benchmark::State& state) {
  SymExpr f = jack(Partition({4, 2, 2}), JackNorm::J, Basis::Power);
  SymExpr g = jack(Partition({3, 3, 1, 1}), JackNorm::J, Basis::Power);
  for (auto _ : state) {
    benchmark::DoNotOptimize(inner(f, g));
  }
}
BENCHMARK(BM_Inner);

void BM_ToMonomial(benchmark::State& state) {
  SymExpr f = jack(Partition({4, 3, 1}), JackNorm::J, Basis::Power);
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_m(f).term_count());
  }
}
BENCHMARK(BM_ToMonomial)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
