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
#include <optional>

#include "seqseg/signal.hpp"

namespace seqseg {

/// Candidate cut points for one segment [start, end): the absolute indices
/// start + 3 + i * resolution that do not exceed end - 3.
struct GridSpec {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t resolution = 1;
};

struct CutCandidate {
  std::size_t t = 0;  // absolute index; the second piece starts here
  double log_post = 0.0;

  friend bool operator==(const CutCandidate&, const CutCandidate&) = default;
};

/// Unnormalized log marginal posterior of a single variance change at `t`
/// inside [start, end), with a uniform prior over the support. With
/// m = end - start, tau = t - start, S1 = sumsq(start, t), S2 = sumsq(t, end):
///
///   -((tau + 6) / 2) ln S1 - ((m - tau - 6) / 2) ln S2
///     + lnG((tau + 6) / 2) + lnG((m - tau - 2) / 2)
///
/// Returns -infinity when either piece has zero energy. Throws
/// InvalidArgument unless start + 3 <= t <= end - 3 and end <= size().
double log_posterior_t(const Signal& signal, std::size_t start, std::size_t end, std::size_t t);

/// Number of grid points the scan visits; 0 when the support is empty.
std::size_t grid_points(const GridSpec& grid);

/// MAP cut over the grid, ties going to the lowest index. Points whose value
/// is -infinity are skipped. Returns nullopt when the grid has no admissible
/// point (segment shorter than 6 samples, or every candidate degenerate).
///
/// The scan is split across `threads` OpenMP workers (0 = runtime default);
/// the result is identical for any worker count.
std::optional<CutCandidate> map_changepoint(const Signal& signal, const GridSpec& grid, int threads = 0);

}  // namespace seqseg
