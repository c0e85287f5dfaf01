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

#include "seqseg/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <ostream>

#include "seqseg/changepoint.hpp"
#include "seqseg/errors.hpp"
#include "seqseg/rng.hpp"
#include "seqseg/simulate.hpp"

namespace seqseg {

std::vector<BenchRow> bench_resolution(const std::vector<std::size_t>& sizes,
                                       const std::vector<std::size_t>& resolutions, const BenchConfig& cfg) {
  if (sizes.empty() || resolutions.empty()) {
    throw InvalidArgument("bench needs at least one size and one resolution");
  }
  if (cfg.repeats < 1) {
    throw InvalidArgument("repeats must be >= 1");
  }
  for (std::size_t l : resolutions) {
    if (l < 1) {
      throw InvalidArgument("resolutions must be >= 1");
    }
  }

  using Clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  for (std::size_t n : sizes) {
    if (n < 7) {
      throw InvalidArgument("bench sizes must be >= 7");
    }
    SimSpec spec;
    spec.boundaries = {0, n};
    spec.deltas = {1.0};
    spec.seed = derive_seed(cfg.seed, {n});
    const Signal signal = simulate_signal(spec);
    for (std::size_t l : resolutions) {
      const GridSpec grid{0, n, l};
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < cfg.repeats; ++r) {
        const auto t0 = Clock::now();
        const auto cut = map_changepoint(signal, grid, cfg.threads);
        const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
        if (!cut) {
          throw InvalidArgument("benchmark signal produced no admissible cut");
        }
        best = std::min(best, dt);
      }
      rows.push_back({n, l, best, grid_points(grid), spec.seed});
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "size,resolution,time_s\n";
  char time[32];
  for (const BenchRow& row : rows) {
    std::snprintf(time, sizeof time, "%.6f", row.time_s);
    out << row.size << ',' << row.resolution << ',' << time << '\n';
  }
}

}  // namespace seqseg
