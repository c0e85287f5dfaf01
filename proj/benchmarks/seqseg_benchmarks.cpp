// Copyright 2026 The SeqSeg Authors
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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "seqseg/changepoint.hpp"
#include "seqseg/evidence.hpp"
#include "seqseg/segmenter.hpp"
#include "seqseg/simulate.hpp"

namespace {

using namespace seqseg;

Signal noise(std::size_t n) {
  SimSpec spec;
  spec.boundaries = {0, n};
  spec.deltas = {1.0};
  spec.seed = n;
  return simulate_signal(spec);
}

void BM_MapScan(benchmark::State& state) {
  const Signal s = noise(static_cast<std::size_t>(state.range(0)));
  const GridSpec grid{0, s.size(), static_cast<std::size_t>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(map_changepoint(s, grid));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid_points(grid)));
}
BENCHMARK(BM_MapScan)->ArgsProduct({{100000, 1000000, 10000000}, {1, 10, 1000}})->Unit(benchmark::kMillisecond);

void BM_BuildSignal(benchmark::State& state) {
  std::vector<double> xs(static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  for (double& x : xs) {
    x = g(rng);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(Signal::from_samples(xs));
  }
}
BENCHMARK(BM_BuildSignal)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_Evidence(benchmark::State& state) {
  McmcConfig cfg;
  cfg.mciter = static_cast<std::size_t>(state.range(0));
  cfg.beta = 1e-3;
  const SegmentStats a{500000, 500000.0};
  const SegmentStats b{500000, 560000.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(fbst_evidence(a, b, cfg));
  }
}
BENCHMARK(BM_Evidence)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_Segment(benchmark::State& state) {
  const Signal s = simulate_signal(alternating_spec(1.5, 1));
  SegConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(segment(s, cfg));
  }
}
BENCHMARK(BM_Segment)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
