// Copyright 2026 The dvm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "dvm/error_bounds.hpp"
#include "dvm/factors.hpp"
#include "dvm/transform.hpp"

namespace {

dvm::VanSpec bench_spec(dvm::TransformKind kind, std::size_t n) {
  return dvm::make_spec(n, 0.9, dvm::allows_radius(kind) ? 1.2 : 1.0, dvm::direction_of(kind));
}

void BM_Fast(benchmark::State& state, dvm::TransformKind kind) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const dvm::FastTransform t(kind, bench_spec(kind, n));
  const dvm::cvec z = dvm::random_vector(n, 1);
  for (auto _ : state) {
    auto y = t.apply(z);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetComplexityN(state.range(0));
}

void BM_Direct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const dvm::DenseMatrix m = dvm::explicit_matrix(bench_spec(dvm::TransformKind::VanC, n));
  const dvm::cvec z = dvm::random_vector(n, 1);
  for (auto _ : state) {
    auto y = dvm::matvec(m, z);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetComplexityN(state.range(0));
}

void BM_BuildFactors(benchmark::State& state) {
  const auto spec = bench_spec(dvm::TransformKind::VanC, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dvm::build_factors(spec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Fast, vanc, dvm::TransformKind::VanC)->RangeMultiplier(4)->Range(4, 1 << 16)->Complexity(benchmark::oNLogN);
BENCHMARK_CAPTURE(BM_Fast, vancc, dvm::TransformKind::VanCC)->RangeMultiplier(4)->Range(4, 1 << 16);
BENCHMARK_CAPTURE(BM_Fast, vancr, dvm::TransformKind::VanCR)->RangeMultiplier(4)->Range(4, 1 << 16);
BENCHMARK_CAPTURE(BM_Fast, vanccr, dvm::TransformKind::VanCCR)->RangeMultiplier(4)->Range(4, 1 << 16);
BENCHMARK(BM_Direct)->RangeMultiplier(4)->Range(4, 4096)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_BuildFactors)->RangeMultiplier(16)->Range(16, 1 << 16);
BENCHMARK_MAIN();
