// Copyright 2026 The greenbp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "greenbp/approx32.h"
#include "greenbp/aptas.h"
#include "greenbp/baselines.h"
#include "greenbp/model.h"
#include "greenbp/oracle.h"

namespace greenbp {
namespace {

Instance random_instance(std::size_t n, std::uint64_t seed, long den,
                         const Rational& green) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(1, den);
  std::vector<Rational> sizes;
  for (std::size_t i = 0; i < n; ++i) {
    Rational s(pick(rng), den);
    s.canonicalize();
    sizes.push_back(s);
  }
  return Instance(std::move(sizes), 1, green);
}

void BM_Ffd(benchmark::State& state) {
  Instance inst = random_instance(state.range(0), 1, 1000, Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(ffd(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Ffd)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_NextFit(benchmark::State& state) {
  Instance inst = random_instance(state.range(0), 2, 1000, Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(next_fit(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NextFit)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_ExactGbp(benchmark::State& state) {
  Instance inst = random_instance(state.range(0), 3, 60, Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact_gbp(inst));
}
BENCHMARK(BM_ExactGbp)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_AptasHighGreen(benchmark::State& state) {
  Instance inst = random_instance(state.range(0), 4, 60, Rational(1, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(aptas_solve(inst, 1, Problem::kGbp));
  }
}
BENCHMARK(BM_AptasHighGreen)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

void BM_AptasLowGreen(benchmark::State& state) {
  Instance inst = random_instance(state.range(0), 5, 60, Rational(1, 10));
  for (auto _ : state) {
    benchmark::DoNotOptimize(aptas_solve(inst, 1, Problem::kGbp));
  }
}
BENCHMARK(BM_AptasLowGreen)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

void BM_Approx32(benchmark::State& state) {
  Instance inst = random_instance(state.range(0), 6, 60, Rational(1, 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(approx32_solve(inst, Problem::kGbp));
  }
}
BENCHMARK(BM_Approx32)->DenseRange(4, 10, 3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace greenbp

BENCHMARK_MAIN();
