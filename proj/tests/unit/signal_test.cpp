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
#include <limits>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "seqseg/errors.hpp"

namespace seqseg {
namespace {

TEST(SignalTest, ZeroSignalHasZeroPrefixSums) {
  const Signal s = Signal::from_samples({0, 0, 0, 0});
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(std::vector<double>(s.cumsq().begin(), s.cumsq().end()), (std::vector<double>{0, 0, 0, 0, 0}));
}

TEST(SignalTest, UnitAmplitudes) {
  const Signal s = Signal::from_samples({1, 1, 1});
  EXPECT_EQ(std::vector<double>(s.cumsq().begin(), s.cumsq().end()), (std::vector<double>{0, 1, 2, 3}));
}

TEST(SignalTest, RejectsEmptyInput) { EXPECT_THROW(Signal::from_samples({}), InvalidArgument); }

TEST(SignalTest, RejectsNonFiniteSampleNamingIndex) {
  for (double bad : {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::infinity(),
                     -std::numeric_limits<double>::infinity()}) {
    try {
      Signal::from_samples({1.0, 2.0, bad, 4.0});
      FAIL() << "accepted " << bad;
    } catch (const InvalidArgument& e) {
      EXPECT_NE(std::string(e.what()).find("index 2"), std::string::npos) << e.what();
    }
  }
}

TEST(SignalTest, RejectsBadSampleRate) {
  SignalMeta meta;
  meta.sample_rate = 0.0;
  EXPECT_THROW(Signal::from_samples({1.0}, meta), InvalidArgument);
}

TEST(SignalTest, KeepsMetadata) {
  SignalMeta meta;
  meta.sample_rate = 8000.0;
  meta.warnings.push_back("note");
  const Signal s = Signal::from_samples({1.0, 2.0}, meta);
  ASSERT_TRUE(s.sample_rate());
  EXPECT_EQ(*s.sample_rate(), 8000.0);
  EXPECT_FALSE(s.origin());
  EXPECT_EQ(s.warnings().size(), 1u);
}

TEST(SignalTest, MillionPointTotalMatchesWideAccumulator) {
  const auto xs = oracle::normal_samples(1000000, 42);
  const Signal s = Signal::from_samples(xs);
  const double want = oracle::wide_sum_squares(xs, 0, xs.size());
  EXPECT_NEAR(s.cumsq().back(), want, 1e-12 * want);
}

TEST(SignalTest, PrefixSumsStartAtZeroAndNeverDecrease) {
  const auto xs = oracle::normal_samples(50000, 3, 1e-3);
  const Signal s = Signal::from_samples(xs);
  const auto c = s.cumsq();
  ASSERT_EQ(c.size(), xs.size() + 1);
  EXPECT_EQ(c[0], 0.0);
  for (std::size_t i = 1; i < c.size(); ++i) {
    ASSERT_GE(c[i], c[i - 1]) << i;
  }
}

TEST(SignalTest, LargeDynamicRangeStaysAccurate) {
  std::vector<double> xs(200000, 1e-4);
  xs[0] = 1e6;
  for (std::size_t i = 1; i < xs.size(); i += 3) {
    xs[i] = 0.1 * std::sin(static_cast<double>(i));
  }
  const Signal s = Signal::from_samples(xs);
  const auto c = s.cumsq();
  for (std::size_t k = 1; k <= xs.size(); k += 997) {
    const double want = oracle::wide_sum_squares(xs, 0, k);
    EXPECT_NEAR(c[k], want, 1e-12 * want) << k;
  }
}

TEST(SumsqTest, EmptyIntervalIsZero) {
  const Signal s = Signal::from_samples(oracle::normal_samples(100, 1));
  for (std::size_t k : {0u, 17u, 100u}) {
    EXPECT_EQ(sumsq(s, k, k), 0.0);
  }
}

TEST(SumsqTest, SmallExample) {
  const Signal s = Signal::from_samples({1, 2, 3});
  EXPECT_EQ(sumsq(s, 0, 3), 14.0);
  EXPECT_EQ(sumsq(s, 1, 3), 13.0);
}

TEST(SumsqTest, RejectsOutOfRange) {
  const Signal s = Signal::from_samples({1, 2, 3});
  EXPECT_THROW(sumsq(s, 0, 4), InvalidArgument);
  EXPECT_THROW(sumsq(s, 2, 1), InvalidArgument);
}

TEST(SumsqTest, MatchesDirectLoopOnRandomIntervals) {
  const auto xs = oracle::normal_samples(10000, 9);
  const Signal s = Signal::from_samples(xs);
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<std::size_t> idx(0, xs.size());
  for (int k = 0; k < 100; ++k) {
    std::size_t a = idx(rng);
    std::size_t b = idx(rng);
    if (a > b) {
      std::swap(a, b);
    }
    const double want = oracle::loop_sum_squares(xs, a, b);
    EXPECT_NEAR(sumsq(s, a, b), want, 1e-9 * std::max(want, 1e-300)) << a << ' ' << b;
  }
}

TEST(SumsqTest, SplitsTileTheTotal) {
  const auto xs = oracle::normal_samples(5000, 11);
  const Signal s = Signal::from_samples(xs);
  const double total = sumsq(s, 0, xs.size());
  for (std::size_t k = 0; k <= xs.size(); k += 7) {
    EXPECT_DOUBLE_EQ(sumsq(s, 0, k) + sumsq(s, k, xs.size()), total) << k;
  }
}

TEST(SumsqTest, ScalingMultipliesEnergyByCSquared) {
  const auto xs = oracle::normal_samples(4000, 12);
  for (double c : {1e-3, 0.7, 3.0, 1e3}) {
    std::vector<double> ys(xs);
    for (double& y : ys) {
      y *= c;
    }
    const Signal a = Signal::from_samples(xs);
    const Signal b = Signal::from_samples(ys);
    for (std::size_t k = 0; k + 500 <= xs.size(); k += 500) {
      const double want = c * c * sumsq(a, k, k + 500);
      EXPECT_NEAR(sumsq(b, k, k + 500), want, 1e-9 * want);
    }
  }
}

}  // namespace
}  // namespace seqseg
