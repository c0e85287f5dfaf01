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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seqseg/segmenter.hpp"
#include "seqseg/simulate.hpp"

namespace seqseg {

struct SweepCase {
  std::string label;  // written to the `delta` column
  SimSpec spec;
};

/// Label for a spec: the single non-unit delta when there is one ("1.5"),
/// "1" when every delta is 1, otherwise all deltas joined by ';'.
std::string delta_label(const SimSpec& spec);

struct SweepOptions {
  /// false: every repeat reuses cfg.seed (identical runs).
  bool distinct_seeds = true;
  /// Memoize MAP cuts per signal and node evidence across alpha values.
  /// Results are unchanged; per-run times then exclude the reused work.
  bool reuse_node_results = true;
};

struct SweepRow {
  std::string delta;
  double beta = 0.0;
  double alpha = 0.0;
  std::optional<std::size_t> min_segments;  // nullopt when every run failed
  std::optional<std::size_t> max_segments;
  double mean_time_s = 0.0;
  std::size_t runs = 0;  // successful runs
  std::vector<std::size_t> segment_counts;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> errors;
};

struct SweepReport {
  std::vector<SweepRow> rows;  // case-major, then beta, then alpha
};

/// Each case's signal is simulated once; every (beta, alpha) cell then runs
/// the segmentation `repeats` times with seeds derive_seed(cfg.seed, {r}).
/// A failing run is recorded in its row and the sweep continues.
SweepReport sweep(const std::vector<SweepCase>& cases, const std::vector<double>& betas,
                  const std::vector<double>& alphas, std::size_t repeats, const SegConfig& cfg,
                  const SweepOptions& options = {});

/// Header `delta,beta,alpha,min_segments,max_segments,mean_time_s,runs`.
/// Rows without a successful run print `error` in the segment columns.
void write_sweep_csv(std::ostream& out, const SweepReport& report);

}  // namespace seqseg
