/*
 * Copyright 2026 The dgscheme Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <vector>

#include "dgscheme/dg_constructions.hpp"
#include "dgscheme/kernels.hpp"

using namespace dgscheme;

namespace {

const DgGroup& group(int m) {
  static const DgGroup g3(3), g5(5);
  return m == 3 ? g3 : g5;
}

std::vector<Gauss64> indicator(const DgGroup& g) {
  const Partition R = build_R_partition(g);
  std::vector<Gauss64> v(g.order());
  for (std::uint32_t h = 0; h < g.order(); ++h) v[h] = {R.labels[h] == 2 ? 1 : 0, 0};
  return v;
}

template <auto Kernel>
void BM_transform(benchmark::State& state) {
  const auto& g = group(static_cast<int>(state.range(0)));
  const auto base = indicator(g);
  for (auto _ : state) {
    auto v = base;
    Kernel(g.shape(), v);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * g.order());
}

template <auto Kernel>
void BM_xi_table(benchmark::State& state) {
  const GaloisRing ring(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(ring));
}

template <auto Kernel>
void BM_tuple_histogram(benchmark::State& state) {
  const GaloisRing ring(static_cast<int>(state.range(0)));
  const std::vector<kernels::TupleTerm> terms{{1, true}, {1, true}, {-1, true}, {-1, true}};
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(ring, terms));
}

template <auto Kernel>
void BM_intersection_counts(benchmark::State& state) {
  const auto& g = group(3);
  const Partition R = build_R_partition(g);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g.shape(), R.labels, R.class_count));
}

}  // namespace

BENCHMARK(BM_transform<kernels::transform_serial>)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_transform<kernels::transform_parallel>)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_xi_table<kernels::xi_table_serial>)->Arg(5)->Arg(7)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_xi_table<kernels::xi_table_parallel>)->Arg(5)->Arg(7)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_tuple_histogram<kernels::tuple_histogram_serial>)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tuple_histogram<kernels::tuple_histogram_parallel>)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_intersection_counts<kernels::intersection_counts_serial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_intersection_counts<kernels::intersection_counts_parallel>)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
