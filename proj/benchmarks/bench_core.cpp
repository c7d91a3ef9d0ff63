// Copyright 2026 The oaqec Authors
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

#include "oaqec/algebra.hpp"
#include "oaqec/infoflow.hpp"
#include "oaqec/models.hpp"
#include "oaqec/qec.hpp"
#include "oaqec/random.hpp"
#include "oaqec/recovery.hpp"
#include "support/instances.hpp"

namespace {

using namespace oaqec;

void BM_LargestConservedPauliG(benchmark::State& state) {
  const KrausChannel e = models::pauli_g_channel();
  for (auto _ : state) benchmark::DoNotOptimize(largest_conserved(e, identity(8)));
}
BENCHMARK(BM_LargestConservedPauliG);

void BM_LargestCorrectableHybrid(benchmark::State& state) {
  const Index d = state.range(0);
  const KrausChannel e = models::hybrid_address_channel(d);
  const Matrix p = models::hybrid_address_projector(d);
  for (auto _ : state) benchmark::DoNotOptimize(largest_correctable(e, p));
}
BENCHMARK(BM_LargestCorrectableHybrid)->Arg(2)->Arg(3)->Arg(4);

void BM_Wedderburn(benchmark::State& state) {
  const OperatorSpan a = models::hybrid_address_algebra(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wedderburn(a));
}
BENCHMARK(BM_Wedderburn)->Arg(2)->Arg(4);

void BM_SynthesizeRecoveryPlanted(benchmark::State& state) {
  Rng rng(1);
  const testing_support::PlantedCode inst =
      testing_support::planted_code(rng, {{2, 1}, {1, 2}, {1, 1}}, 1, 3, false);
  const AlgebraStructure s = wedderburn(inst.algebra);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        synthesize_recovery(inst.channel, inst.projector, inst.algebra, s));
  }
}
BENCHMARK(BM_SynthesizeRecoveryPlanted);

void BM_AnalyzeInteractionRandom(benchmark::State& state) {
  Rng rng(2);
  const Index ds = state.range(0);
  const Matrix u = rng.haar_unitary(2 * ds);
  const Vector psi = basis_vector(2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_interaction(u, psi));
}
BENCHMARK(BM_AnalyzeInteractionRandom)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
