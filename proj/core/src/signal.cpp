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

#include "seqseg/signal.hpp"

#include <cmath>
#include <string>

#include "seqseg/errors.hpp"

namespace seqseg {

Signal::Signal(std::vector<double> samples, std::vector<double> cumsq, SignalMeta meta)
    : samples_(std::move(samples)), cumsq_(std::move(cumsq)), meta_(std::move(meta)) {}

Signal Signal::from_samples(std::vector<double> samples, SignalMeta meta) {
  if (samples.empty()) {
    throw InvalidArgument("signal has no samples");
  }
  if (meta.sample_rate && !(*meta.sample_rate > 0.0 && std::isfinite(*meta.sample_rate))) {
    throw InvalidArgument("sample rate must be positive and finite");
  }
  std::vector<double> cumsq(samples.size() + 1);
  // Neumaier summation; each entry is the correctly compensated running total.
  double sum = 0.0;
  double comp = 0.0;
  cumsq[0] = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double x = samples[i];
    if (!std::isfinite(x)) {
      throw InvalidArgument("non-finite sample at index " + std::to_string(i));
    }
    const double sq = x * x;
    const double t = sum + sq;
    if (std::abs(sum) >= sq) {
      comp += (sum - t) + sq;
    } else {
      comp += (sq - t) + sum;
    }
    sum = t;
    cumsq[i + 1] = sum + comp;
  }
  // The compensated value can never drop below its predecessor in exact
  // arithmetic; clamp away one-ulp rounding wobble so cumsq stays monotone.
  for (std::size_t k = 1; k < cumsq.size(); ++k) {
    if (cumsq[k] < cumsq[k - 1]) {
      cumsq[k] = cumsq[k - 1];
    }
  }
  return Signal(std::move(samples), std::move(cumsq), std::move(meta));
}

double sumsq(const Signal& signal, std::size_t start, std::size_t end) {
  if (start > end || end > signal.size()) {
    throw InvalidArgument("sumsq: interval [" + std::to_string(start) + ", " + std::to_string(end) +
                          ") outside signal of length " + std::to_string(signal.size()));
  }
  const auto c = signal.cumsq();
  return c[end] - c[start];
}

}  // namespace seqseg
