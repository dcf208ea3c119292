#include <benchmark/benchmark.h>

#include "booleq/boole.hpp"
#include "booleq/gate.hpp"
#include "booleq/ket.hpp"
#include "booleq/projector.hpp"
#include "booleq/verify.hpp"

namespace {

void BM_LagrangeComponent(benchmark::State& state) {
  const unsigned d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    for (unsigned k = 0; k < d; ++k) {
      benchmark::DoNotOptimize(booleq::lagrange_component(d, k));
    }
  }
}
BENCHMARK(BM_LagrangeComponent)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_ReduceSquareModBoole(benchmark::State& state) {
  const unsigned d = static_cast<unsigned>(state.range(0));
  const auto l = booleq::lagrange_component(d, d / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(booleq::reduce_mod_boole(l * l, d));
  }
}
BENCHMARK(BM_ReduceSquareModBoole)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_CompletenessSum(benchmark::State& state) {
  const unsigned d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(booleq::completeness_sum(d));
  }
}
BENCHMARK(BM_CompletenessSum)->Arg(4)->Arg(16)->Arg(64);

void BM_VerifySweep(benchmark::State& state) {
  const unsigned max_d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(booleq::run_verify(max_d));
  }
}
BENCHMARK(BM_VerifySweep)->Arg(4)->Arg(8)->Arg(16);

void BM_BellState(benchmark::State& state) {
  for (auto _ : state) {
    for (unsigned x = 0; x < 2; ++x) {
      for (unsigned y = 0; y < 2; ++y) {
        benchmark::DoNotOptimize(booleq::bell_state(x, y));
      }
    }
  }
}
BENCHMARK(BM_BellState);

}  // namespace

BENCHMARK_MAIN();
