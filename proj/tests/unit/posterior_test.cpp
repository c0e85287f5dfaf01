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
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "seqseg/errors.hpp"

namespace seqseg {
namespace {

TEST(FullPosteriorTest, HandEvaluablePoint) {
  const SegmentStats a{50, 50.0};
  const SegmentStats b{50, 50.0};
  EXPECT_NEAR(log_full_posterior(1.0, 1.0, a, b, 1.0), -50.0 * std::log(2.0 * std::numbers::pi) - 50.0, 1e-12);
}

TEST(FullPosteriorTest, MatchesTermByTermOracle) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.2, 3.0);
  for (int k = 0; k < 50; ++k) {
    const SegmentStats a{37, 40.0 * u(rng)};
    const SegmentStats b{81, 90.0 * u(rng)};
    const double d = u(rng);
    const double s = u(rng);
    const double beta = u(rng) * 0.1;
    const double want = oracle::log_full_posterior(d, s, 37, a.ssq, 81, b.ssq, beta);
    EXPECT_NEAR(log_full_posterior(d, s, a, b, beta), want, 1e-10 * std::fabs(want));
  }
}

TEST(FullPosteriorTest, OutsideSupportIsMinusInfinity) {
  const SegmentStats a{10, 10.0};
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(log_full_posterior(0.0, 1.0, a, a, 1.0), -inf);
  EXPECT_EQ(log_full_posterior(-1.0, 1.0, a, a, 1.0), -inf);
  EXPECT_EQ(log_full_posterior(1.0, 0.0, a, a, 1.0), -inf);
  EXPECT_EQ(log_full_posterior(1.0, -2.0, a, a, 1.0), -inf);
}

TEST(FullPosteriorTest, ReciprocalSymmetryForEqualSegments) {
  // With equal stats, (d, s) -> (1/d, s sqrt(d)) changes the likelihood and
  // Jeffreys terms by -ln(d)/2; everything else is the prior.
  const SegmentStats a{64, 70.0};
  const double beta = 0.3;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.3, 3.0);
  for (int k = 0; k < 10; ++k) {
    const double d = u(rng);
    const double s = u(rng);
    const double lhs = log_full_posterior(1.0 / d, s * std::sqrt(d), a, a, beta) - log_full_posterior(d, s, a, a, beta);
    const double rhs = -std::fabs(1.0 / d - 1.0) / beta + std::fabs(d - 1.0) / beta - 0.5 * std::log(d);
    EXPECT_NEAR(lhs, rhs, 1e-9);
  }
}

TEST(FullPosteriorTest, JointRescaleShiftsByConstant) {
  const SegmentStats a{120, 133.0};
  const SegmentStats b{80, 61.0};
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.3, 3.0);
  for (double c : {0.01, 0.5, 7.0}) {
    const SegmentStats ca{a.n, a.ssq * c * c};
    const SegmentStats cb{b.n, b.ssq * c * c};
    for (int k = 0; k < 20; ++k) {
      const double d = u(rng);
      const double s = u(rng);
      const double diff = log_full_posterior(d, c * s, ca, cb, 0.1) - log_full_posterior(d, s, a, b, 0.1);
      EXPECT_NEAR(diff, -201.0 * std::log(c), 1e-9);
    }
  }
}

TEST(H0MaximumTest, NormalizationPoint) {
  const SegmentStats a{30, 40.0};
  const SegmentStats b{70, 61.0};  // total 101 = N + 1
  EXPECT_DOUBLE_EQ(h0_max_posterior(a, b, 1.0).s0, 1.0);
}

TEST(H0MaximumTest, MatchesGoldenSectionSearch) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int k = 0; k < 25; ++k) {
    const SegmentStats a{static_cast<std::size_t>(5 + 100 * u(rng)), u(rng) * 50.0};
    const SegmentStats b{static_cast<std::size_t>(5 + 100 * u(rng)), u(rng) * 50.0};
    const double scale = std::sqrt((a.ssq + b.ssq) / static_cast<double>(a.n + b.n));
    const double want = oracle::golden_section_max(
        [&](double s) {
          return oracle::log_full_posterior(1.0, s, static_cast<double>(a.n), a.ssq, static_cast<double>(b.n), b.ssq,
                                            0.5);
        },
        1e-9, 10.0 * scale);
    const H0Maximum got = h0_max_posterior(a, b, 0.5);
    EXPECT_NEAR(got.s0, want, 1e-6 * want);
    EXPECT_DOUBLE_EQ(got.log_p0, log_full_posterior(1.0, got.s0, a, b, 0.5));
    EXPECT_LT(log_full_posterior(1.0, got.s0 * (1 + 1e-3), a, b, 0.5), got.log_p0);
    EXPECT_LT(log_full_posterior(1.0, got.s0 * (1 - 1e-3), a, b, 0.5), got.log_p0);
  }
}

TEST(H0MaximumTest, RejectsDegenerateInputs) {
  EXPECT_THROW(h0_max_posterior({10, 0.0}, {10, 0.0}, 1.0), InvalidArgument);
  EXPECT_THROW(h0_max_posterior({10, 1.0}, {10, 1.0}, 0.0), InvalidArgument);
  EXPECT_THROW(h0_max_posterior({10, 1.0}, {10, 1.0}, -1.0), InvalidArgument);
}

TEST(RelativePosteriorTest, AgreesWithDifferenceOfLogs) {
  const SegmentStats a{500, 480.0};
  const SegmentStats b{700, 910.0};
  const RelativePosterior rel(a, b, 0.01);
  const H0Maximum h0 = h0_max_posterior(a, b, 0.01);
  EXPECT_EQ(rel(1.0, rel.s0()), 0.0);
  EXPECT_EQ(rel.s0(), h0.s0);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.7, 1.5);
  for (int k = 0; k < 50; ++k) {
    const double d = u(rng);
    const double s = u(rng);
    EXPECT_NEAR(rel(d, s), log_full_posterior(d, s, a, b, 0.01) - h0.log_p0, 1e-8 * std::fabs(h0.log_p0));
  }
  EXPECT_EQ(rel(0.0, 1.0), -std::numeric_limits<double>::infinity());
}

TEST(RelativePosteriorTest, ExactUnderPowerOfTwoRescale) {
  const SegmentStats a{1000, 1234.5678};
  const SegmentStats b{900, 777.125};
  const RelativePosterior rel(a, b, 0.001);
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.8, 1.2);
  for (int k : {-20, -3, 5, 30}) {
    const double c = std::ldexp(1.0, k);
    const RelativePosterior scaled({a.n, a.ssq * c * c}, {b.n, b.ssq * c * c}, 0.001);
    for (int j = 0; j < 20; ++j) {
      const double d = u(rng);
      const double s = u(rng);
      EXPECT_EQ(scaled(d, c * s), rel(d, s));
    }
  }
}

}  // namespace
}  // namespace seqseg
