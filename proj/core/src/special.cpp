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

#include "seqseg/special.hpp"

#include <cmath>
#include <limits>

namespace seqseg {

namespace {
constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2*pi)/2
constexpr double kShiftThreshold = 10.0;
}  // namespace

double log_gamma(double x) noexcept {
  if (!(x > 0.0)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  if (std::isinf(x)) {
    return x;
  }
  double shift = 0.0;
  if (x < kShiftThreshold) {
    double prod = 1.0;
    while (x < kShiftThreshold) {
      prod *= x;
      x += 1.0;
    }
    shift = std::log(prod);
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // Bernoulli terms B_2k / (2k (2k-1) x^(2k-1)), k = 1..6.
  const double series =
      inv * (1.0 / 12.0 +
             inv2 * (-1.0 / 360.0 +
                     inv2 * (1.0 / 1260.0 +
                             inv2 * (-1.0 / 1680.0 + inv2 * (1.0 / 1188.0 + inv2 * (-691.0 / 360360.0))))));
  return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + series - shift;
}

}  // namespace seqseg
