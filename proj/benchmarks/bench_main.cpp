// Copyright 2026 The gpolar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "gpolar/forms.hpp"
#include "gpolar/pauli.hpp"
#include "gpolar/polar.hpp"

namespace {

using namespace gpolar;

void BM_BuildComplexTwoQubit(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_pauli_group({2, 2, PauliFlavor::complex_qubit}));
  }
}
BENCHMARK(BM_BuildComplexTwoQubit);

void BM_BuildTwoQutrit(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_pauli_group({3, 2, PauliFlavor::qudit_odd}));
  }
}
BENCHMARK(BM_BuildTwoQutrit);

void BM_SymplecticW33(benchmark::State& state) {
  GroupPtr G = build_pauli_group({3, 2, PauliFlavor::qudit_odd});
  for (auto _ : state) {
    benchmark::DoNotOptimize(symplectic_polar_space(G, 3));
  }
}
BENCHMARK(BM_SymplecticW33);

void BM_QuadricQ42(benchmark::State& state) {
  GroupPtr G = build_pauli_group({2, 2, PauliFlavor::complex_qubit});
  for (auto _ : state) {
    benchmark::DoNotOptimize(quadric_of_group(G));
  }
}
BENCHMARK(BM_QuadricQ42);

void BM_DeriveGq24(benchmark::State& state) {
  GroupPtr G = build_pauli_group({3, 2, PauliFlavor::qudit_odd});
  PolarSpaceW W = symplectic_polar_space(G, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(derive_gq24(W, W.points()[0]));
  }
}
BENCHMARK(BM_DeriveGq24);

void BM_MatrixOracleTwoQubit(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_matrix_oracle({2, 2, PauliFlavor::complex_qubit}));
  }
}
BENCHMARK(BM_MatrixOracleTwoQubit);

}  // namespace

BENCHMARK_MAIN();
