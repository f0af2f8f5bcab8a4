// Copyright 2026 The gmsforge Authors
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

#include <random>

#include "gmsforge/constructions.hpp"
#include "gmsforge/fourier.hpp"
#include "gmsforge/reference.hpp"
#include "gmsforge/simulator.hpp"

namespace gmsforge {
namespace {

Execution mode(const benchmark::State& state) {
  return state.range(1) ? Execution::kParallel : Execution::kSerial;
}

// Layers of rotations and full-register GMS pulses.
Circuit workload(std::size_t n, std::size_t layers) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::vector<QubitId> all(n);
  for (QubitId q = 0; q < n; ++q) all[q] = q;
  Circuit c(n);
  for (std::size_t l = 0; l < layers; ++l) {
    for (QubitId q = 0; q < n; ++q) c.append(Gate::rx(q, angle(rng)));
    c.append(Gate::gms(all, angle(rng)));
    for (QubitId q = 0; q + 1 < n; q += 2) c.append(Gate::cnot(q, q + 1));
  }
  return c;
}

void BM_apply(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Circuit c = workload(n, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply(c, StateVector::basis(n, 0), mode(state)));
  }
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}
BENCHMARK(BM_apply)->ArgsProduct({{16, 20}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_unitary_of(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Circuit c = workload(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(unitary_of(c, mode(state)));
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}
BENCHMARK(BM_unitary_of)->ArgsProduct({{6, 9}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_unitary_reference(benchmark::State& state) {
  const Circuit c = workload(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(reference::dense_unitary(c));
}
BENCHMARK(BM_unitary_reference)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_grid_search(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(optimize_powerlaw(12, m, 0.1, {}, mode(state)));
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}
BENCHMARK(BM_grid_search)->ArgsProduct({{2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_toffoli_verify(benchmark::State& state) {
  const ConstructionSpec s = constructions::toffoli_n(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify(s, 1e-9));
}
BENCHMARK(BM_toffoli_verify)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace gmsforge

BENCHMARK_MAIN();
