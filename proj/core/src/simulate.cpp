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

#include "seqseg/simulate.hpp"

#include <cmath>
#include <random>
#include <string>

#include "seqseg/errors.hpp"
#include "seqseg/rng.hpp"

namespace seqseg {

void SimSpec::validate() const {
  if (boundaries.size() < 2 || boundaries.front() != 0) {
    throw InvalidArgument("boundaries need at least two entries starting at 0");
  }
  for (std::size_t i = 1; i < boundaries.size(); ++i) {
    if (boundaries[i] <= boundaries[i - 1]) {
      throw InvalidArgument("boundaries must be strictly increasing");
    }
  }
  if (deltas.size() + 1 != boundaries.size()) {
    throw InvalidArgument("expected " + std::to_string(boundaries.size() - 1) + " deltas for " +
                          std::to_string(boundaries.size()) + " boundaries, got " + std::to_string(deltas.size()));
  }
  for (double d : deltas) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw InvalidArgument("deltas must be positive and finite");
    }
  }
  if (!(sigma0 > 0.0) || !std::isfinite(sigma0)) {
    throw InvalidArgument("sigma0 must be positive and finite");
  }
}

const std::vector<std::size_t>& benchmark_boundaries() {
  static const std::vector<std::size_t> kBoundaries{0, 10000, 110000, 200000, 500000, 750000, 1000000};
  return kBoundaries;
}

SimSpec alternating_spec(double delta, std::uint64_t seed) {
  SimSpec spec;
  spec.boundaries = benchmark_boundaries();
  for (std::size_t k = 0; k + 1 < spec.boundaries.size(); ++k) {
    spec.deltas.push_back(k % 2 == 0 ? 1.0 : delta);
  }
  spec.seed = seed;
  return spec;
}

SimSpec mixed_spec(std::uint64_t seed) {
  SimSpec spec;
  spec.boundaries = benchmark_boundaries();
  spec.deltas = {1.0, 1.1, 1.0, 1.5, 1.0, 1.2};
  spec.seed = seed;
  return spec;
}

std::vector<double> simulate_samples(const SimSpec& spec) {
  spec.validate();
  Rng rng(derive_seed(spec.seed, {}));
  std::normal_distribution<double> normal;
  std::vector<double> out(spec.boundaries.back());
  for (std::size_t k = 0; k < spec.deltas.size(); ++k) {
    const double dev = spec.scale == DeltaScale::kVariance ? spec.sigma0 * std::sqrt(spec.deltas[k])
                                                           : spec.sigma0 * spec.deltas[k];
    for (std::size_t i = spec.boundaries[k]; i < spec.boundaries[k + 1]; ++i) {
      out[i] = dev * normal(rng);
    }
  }
  return out;
}

Signal simulate_signal(const SimSpec& spec) {
  SignalMeta meta;
  meta.sample_rate = spec.sample_rate;
  return Signal::from_samples(simulate_samples(spec), std::move(meta));
}

}  // namespace seqseg
