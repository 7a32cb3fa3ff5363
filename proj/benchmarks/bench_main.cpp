// Copyright 2026 The hhcalc Authors
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

#include "hh/bar.hpp"
#include "hh/presentations.hpp"
#include "hh/qcomplex.hpp"
#include "hh/sparse_matrix.hpp"
#include "hh/witnesses.hpp"

namespace {

const hh::FieldContext kQ = hh::FieldContext::rationals();
const hh::FieldContext kF = hh::FieldContext::prime_field(32003);

hh::GradedAlgebra quantum(const hh::FieldContext& f) {
  return hh::quantum_ci(f, f.from_int(2), 2, 3);
}

// Rank of the boundary b_p of A_q(2,2,3), all internal degrees at once.
void BM_BoundaryRank(benchmark::State& state, const hh::FieldContext& f) {
  const auto a = quantum(f);
  const auto m = hh::boundary_matrix(a, static_cast<int>(state.range(0)), std::nullopt);
  for (auto _ : state) benchmark::DoNotOptimize(hh::rank(m));
  state.counters["cols"] = static_cast<double>(m.cols());
}
BENCHMARK_CAPTURE(BM_BoundaryRank, fp, kF)->DenseRange(2, 5);
BENCHMARK_CAPTURE(BM_BoundaryRank, q, kQ)->DenseRange(2, 4);

void BM_HochschildTable(benchmark::State& state) {
  const auto a = quantum(kF);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hh::hh_table(a, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_HochschildTable)->DenseRange(3, 6);

void BM_QHomology(benchmark::State& state) {
  const auto c = hh::build_cobar(hh::regrade_even(quantum(kF)));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hh::q_homology_dim(c, n));
}
BENCHMARK(BM_QHomology)->DenseRange(4, 10, 2);

void BM_CycleWitness(benchmark::State& state) {
  const auto a = hh::realize(hh::xy_zero_example_presentation(kF, kF.from_int(2)));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hh::theorem2_report(a, n));
}
BENCHMARK(BM_CycleWitness)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
