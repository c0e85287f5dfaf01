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
#include <optional>
#include <vector>

#include "seqseg/signal.hpp"

namespace seqseg {

/// What a segment's delta multiplies.
enum class DeltaScale {
  kVariance,   // segment variance = sigma0^2 * delta
  kAmplitude,  // segment deviation = sigma0 * delta
};

/// Piecewise zero-mean Gaussian signal: segment k spans
/// [boundaries[k], boundaries[k + 1]) and is scaled by deltas[k].
struct SimSpec {
  std::vector<std::size_t> boundaries;
  std::vector<double> deltas;
  double sigma0 = 1.0;
  std::uint64_t seed = 0;
  std::optional<double> sample_rate;
  DeltaScale scale = DeltaScale::kVariance;

  /// Throws InvalidArgument unless boundaries start at 0 and strictly
  /// increase, there is one delta per segment, and every delta and sigma0 is
  /// positive and finite.
  void validate() const;
};

/// {0, 10000, 110000, 200000, 500000, 750000, 1000000}
const std::vector<std::size_t>& benchmark_boundaries();

/// Six segments on benchmark_boundaries(), alternating deltas 1, delta, 1, ...
SimSpec alternating_spec(double delta, std::uint64_t seed = 0);

/// Six segments on benchmark_boundaries() with deltas 1, 1.1, 1, 1.5, 1, 1.2.
SimSpec mixed_spec(std::uint64_t seed = 0);

/// Deterministic for a given spec (including seed).
Signal simulate_signal(const SimSpec& spec);

/// Raw samples of simulate_signal, for writing to disk.
std::vector<double> simulate_samples(const SimSpec& spec);

}  // namespace seqseg
