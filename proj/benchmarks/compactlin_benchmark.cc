// Copyright 2026 The compactlin Authors.
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

#include <cstdint>

#include "compactlin/coverage.h"
#include "compactlin/linearizer.h"
#include "compactlin/lp.h"
#include "compactlin/verifier.h"
#include "compactlin/zoo.h"

namespace compactlin {
namespace {

Instance RandomInstance(int n, int equations, uint64_t seed) {
  RandomSpec spec;
  spec.n = n;
  spec.num_equations = equations;
  spec.support_min = 4;
  spec.support_max = 6;
  spec.coeff_max = 5;
  spec.num_products = 4;
  spec.seed = seed;
  return GenRandom(spec);
}

void BM_SelectionLp(benchmark::State& state) {
  const Instance inst = RandomInstance(static_cast<int>(state.range(0)),
                                       static_cast<int>(state.range(1)), 7);
  const SelectionModel sel =
      BuildSelectionMilp(inst, SelectionWeights::Default(inst));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveLp(sel.model));
  }
}
BENCHMARK(BM_SelectionLp)->Args({8, 2})->Args({12, 3})->Args({15, 5});

void BM_SolveSelection(benchmark::State& state) {
  const Instance inst = RandomInstance(static_cast<int>(state.range(0)),
                                       static_cast<int>(state.range(1)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveSelection(inst));
  }
}
BENCHMARK(BM_SolveSelection)->Args({8, 2})->Args({10, 3});

void BM_CompactRelaxation(benchmark::State& state) {
  const Instance inst =
      GenQtsp(QtspSpec::Random(static_cast<int>(state.range(0)), 1));
  const LinModel relaxed = Relax(CompactLinearize(inst, SupportPlan(inst)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveLp(relaxed));
  }
}
BENCHMARK(BM_CompactRelaxation)->DenseRange(4, 6);

void BM_VerifyTheorem1(benchmark::State& state) {
  const Instance inst = RandomInstance(static_cast<int>(state.range(0)), 2, 3);
  const CoveragePlan plan = SolveSelection(inst).plan;
  for (auto _ : state) {
    benchmark::DoNotOptimize(VerifyTheorem1(inst, plan));
  }
}
BENCHMARK(BM_VerifyTheorem1)->Arg(8)->Arg(12);

void BM_VerifyDominance(benchmark::State& state) {
  const Instance inst =
      GenQtsp(QtspSpec::Random(static_cast<int>(state.range(0)), 2));
  const CoveragePlan plan = SupportPlan(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(VerifyDominance(inst, plan, Regime::kDegreeTwo));
  }
}
BENCHMARK(BM_VerifyDominance)->DenseRange(4, 6);

}  // namespace
}  // namespace compactlin

BENCHMARK_MAIN();
