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

#include "seqseg/changepoint.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <omp.h>

#include "seqseg/errors.hpp"
#include "seqseg/special.hpp"

namespace seqseg {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Hot loop body; `c` points at cumsq[start].
inline double cut_log_posterior(const double* c, std::size_t m, std::size_t tau) {
  const double s1 = c[tau] - c[0];
  const double s2 = c[m] - c[tau];
  if (!(s1 > 0.0) || !(s2 > 0.0)) {
    return kNegInf;
  }
  const double tf = static_cast<double>(tau);
  const double mf = static_cast<double>(m);
  return -0.5 * (tf + 6.0) * std::log(s1) - 0.5 * (mf - tf - 6.0) * std::log(s2) + log_gamma(0.5 * (tf + 6.0)) +
         log_gamma(0.5 * (mf - tf - 2.0));
}

inline bool better(double value, std::size_t t, const std::optional<CutCandidate>& best) {
  return !best || value > best->log_post || (value == best->log_post && t < best->t);
}

void check_interval(const Signal& signal, std::size_t start, std::size_t end) {
  if (start > end || end > signal.size()) {
    throw InvalidArgument("interval [" + std::to_string(start) + ", " + std::to_string(end) +
                          ") outside signal of length " + std::to_string(signal.size()));
  }
}

}  // namespace

double log_posterior_t(const Signal& signal, std::size_t start, std::size_t end, std::size_t t) {
  check_interval(signal, start, end);
  if (t < start + 3 || t + 3 > end) {
    throw InvalidArgument("cut " + std::to_string(t) + " outside the support of [" + std::to_string(start) + ", " +
                          std::to_string(end) + ")");
  }
  return cut_log_posterior(signal.cumsq().data() + start, end - start, t - start);
}

std::size_t grid_points(const GridSpec& grid) {
  if (grid.resolution == 0) {
    throw InvalidArgument("grid resolution must be >= 1");
  }
  if (grid.end < grid.start || grid.end - grid.start < 6) {
    return 0;
  }
  return (grid.end - grid.start - 6) / grid.resolution + 1;
}

std::optional<CutCandidate> map_changepoint(const Signal& signal, const GridSpec& grid, int threads) {
  check_interval(signal, grid.start, grid.end);
  const std::size_t count = grid_points(grid);
  if (count == 0) {
    return std::nullopt;
  }
  const double* c = signal.cumsq().data() + grid.start;
  const std::size_t m = grid.end - grid.start;
  const std::size_t step = grid.resolution;
  const int workers = threads > 0 ? threads : omp_get_max_threads();
  const auto n = static_cast<std::ptrdiff_t>(count);

  std::optional<CutCandidate> best;
#pragma omp parallel num_threads(workers) if (count > 4096 && workers > 1)
  {
    std::optional<CutCandidate> local;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const std::size_t tau = 3 + static_cast<std::size_t>(i) * step;
      const double v = cut_log_posterior(c, m, tau);
      if (v != kNegInf && better(v, tau, local)) {
        local = CutCandidate{tau, v};
      }
    }
#pragma omp critical(seqseg_map_reduce)
    {
      if (local && better(local->log_post, local->t, best)) {
        best = local;
      }
    }
  }
  if (best) {
    best->t += grid.start;
  }
  return best;
}

}  // namespace seqseg
