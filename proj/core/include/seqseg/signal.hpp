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
#include <string>
#include <vector>

#include "seqseg/recording.hpp"

namespace seqseg {

struct SignalMeta {
  std::optional<double> sample_rate;  // Hz
  std::optional<Timestamp> origin;    // wall-clock time of sample 0
  std::vector<std::string> warnings;  // non-fatal ingestion notes
};

/// Immutable sample sequence plus the prefix sums of squares that make every
/// interval energy an O(1) query. Safe to share read-only between threads.
class Signal {
 public:
  /// Rejects empty input and non-finite samples (the message names the
  /// first offending index). The prefix sums use compensated summation.
  static Signal from_samples(std::vector<double> samples, SignalMeta meta = {});

  std::size_t size() const noexcept { return samples_.size(); }
  std::span<const double> samples() const noexcept { return samples_; }

  /// cumsq()[k] is the sum of the first k squared samples; size() + 1 entries.
  std::span<const double> cumsq() const noexcept { return cumsq_; }

  const std::optional<double>& sample_rate() const noexcept { return meta_.sample_rate; }
  const std::optional<Timestamp>& origin() const noexcept { return meta_.origin; }
  const std::vector<std::string>& warnings() const noexcept { return meta_.warnings; }
  const SignalMeta& meta() const noexcept { return meta_; }

 private:
  Signal(std::vector<double> samples, std::vector<double> cumsq, SignalMeta meta);

  std::vector<double> samples_;
  std::vector<double> cumsq_;
  SignalMeta meta_;
};

/// Energy of samples [start, end): cumsq[end] - cumsq[start].
/// Throws InvalidArgument unless start <= end <= size().
double sumsq(const Signal& signal, std::size_t start, std::size_t end);

}  // namespace seqseg
