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

#include "seqseg/posterior.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "seqseg/errors.hpp"

namespace seqseg {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw InvalidArgument("beta must be positive and finite");
  }
}
}  // namespace

double log_full_posterior(double d, double s, const SegmentStats& a, const SegmentStats& b, double beta) {
  if (!(d > 0.0) || !(s > 0.0)) {
    return kNegInf;
  }
  const double n = static_cast<double>(a.n + b.n);
  const double s2 = s * s;
  return -std::abs(d - 1.0) / beta - std::log(s) - 0.5 * n * std::log(2.0 * std::numbers::pi * s2) -
         0.5 * static_cast<double>(b.n) * std::log(d) - a.ssq / (2.0 * s2) - b.ssq / (2.0 * d * s2);
}

H0Maximum h0_max_posterior(const SegmentStats& a, const SegmentStats& b, double beta) {
  check_beta(beta);
  const double total = a.ssq + b.ssq;
  if (!(total > 0.0) || a.ssq < 0.0 || b.ssq < 0.0) {
    throw InvalidArgument("degenerate segments: pooled energy is zero");
  }
  const double s0 = std::sqrt(total / static_cast<double>(a.n + b.n + 1));
  return {s0, log_full_posterior(1.0, s0, a, b, beta)};
}

RelativePosterior::RelativePosterior(const SegmentStats& a, const SegmentStats& b, double beta)
    : half_ssq_a_(0.5 * a.ssq),
      half_ssq_b_(0.5 * b.ssq),
      half_n_b_(0.5 * static_cast<double>(b.n)),
      n_plus_one_(static_cast<double>(a.n + b.n + 1)),
      inv_beta_(1.0 / beta),
      s0_(h0_max_posterior(a, b, beta).s0) {
  const double s0_sq = s0_ * s0_;
  q0_ = half_ssq_a_ / s0_sq + half_ssq_b_ / s0_sq;
}

double RelativePosterior::operator()(double d, double s) const noexcept {
  if (!(d > 0.0) || !(s > 0.0)) {
    return kNegInf;
  }
  const double s2 = s * s;
  return -std::abs(d - 1.0) * inv_beta_ - n_plus_one_ * std::log(s / s0_) - half_n_b_ * std::log(d) -
         (half_ssq_a_ / s2 + half_ssq_b_ / (d * s2)) + q0_;
}

}  // namespace seqseg
