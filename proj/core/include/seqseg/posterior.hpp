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

namespace seqseg {

/// Sufficient statistics of one segment under the zero-mean Gaussian model.
struct SegmentStats {
  std::size_t n = 0;
  double ssq = 0.0;
};

/// A point of the (variance ratio, base deviation) parameter plane.
struct PosteriorPoint {
  double d = 1.0;
  double s = 1.0;
  double log_post = 0.0;
};

/// Log posterior of (d, s) for two segments `a` (variance s^2) and `b`
/// (variance d * s^2): Laplace(1, beta) prior on d without its constant,
/// Jeffreys 1/s prior on s, Gaussian likelihood. Returns -infinity when
/// d <= 0 or s <= 0.
double log_full_posterior(double d, double s, const SegmentStats& a, const SegmentStats& b, double beta);

struct H0Maximum {
  double s0 = 0.0;      // argmax over s at d = 1
  double log_p0 = 0.0;  // log_full_posterior(1, s0)
};

/// Closed-form maximum of the posterior on the d = 1 line:
/// s0 = sqrt((ssq_a + ssq_b) / (n_a + n_b + 1)).
/// Throws InvalidArgument when the pooled energy is zero.
H0Maximum h0_max_posterior(const SegmentStats& a, const SegmentStats& b, double beta);

/// log_full_posterior(d, s) - log_p0, evaluated in a form that is exactly
/// invariant under a joint power-of-two rescaling of the data and of s.
/// Positive values mark the surprise set.
class RelativePosterior {
 public:
  RelativePosterior(const SegmentStats& a, const SegmentStats& b, double beta);

  double operator()(double d, double s) const noexcept;
  double s0() const noexcept { return s0_; }

 private:
  double half_ssq_a_;
  double half_ssq_b_;
  double half_n_b_;
  double n_plus_one_;
  double inv_beta_;
  double s0_;
  double q0_;
};

}  // namespace seqseg
