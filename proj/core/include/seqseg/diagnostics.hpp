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
#include <span>
#include <vector>

namespace seqseg {

/// Count, mean and unbiased variance of one chain, accumulated with Welford's update.
struct ChainMoments {
  std::size_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) noexcept {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }
  double variance() const noexcept { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
};

/// Gelman-Rubin potential scale reduction for M chains of equal length n:
/// B = n/(M-1) sum (mean_m - mean)^2, W = mean of chain variances,
/// V = (n-1)/n W + (M+1)/(M n) B, R = V / W.
///
/// Returns nullopt when W == 0 (every chain constant). Throws
/// InvalidArgument for M < 2, n < 2 or unequal lengths.
std::optional<double> gelman_rubin(std::span<const ChainMoments> chains);
std::optional<double> gelman_rubin(std::span<const std::vector<double>> chains);

}  // namespace seqseg
