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

#include "seqseg/recording.hpp"

#include <chrono>

#include <gtest/gtest.h>

#include "seqseg/errors.hpp"

namespace seqseg {
namespace {

using namespace std::chrono;

Timestamp at(int y, unsigned mo, unsigned d, int h, int mi, int s) {
  return sys_days{year{y} / month{mo} / day{d}} + hours{h} + minutes{mi} + seconds{s};
}

TEST(FilenameTimestampTest, ParsesRecorderNames) {
  EXPECT_EQ(parse_filename_timestamp("2015.02.02_07.50.49.wav"), at(2015, 2, 2, 7, 50, 49));
  EXPECT_EQ(parse_filename_timestamp("2015.02.08_11.26.39.wav"), at(2015, 2, 8, 11, 26, 39));
  EXPECT_EQ(parse_filename_timestamp("/data/pod/2015.01.30_02.02.56.wav"), at(2015, 1, 30, 2, 2, 56));
}

TEST(FilenameTimestampTest, OtherNamesHaveNoTimestamp) {
  for (const char* name : {"noise.wav", "2015.02.02_07.50.49.mp3", "2015.02.02-07.50.49.wav", "2015.2.02_07.50.49.wav",
                           "2015.02.30_07.50.49.wav", "2015.02.02_25.50.49.wav", "2015.02.02_07.60.49.wav",
                           "x2015.02.02_07.50.49.wav", ""}) {
    EXPECT_FALSE(parse_filename_timestamp(name)) << name;
  }
}

TEST(FilenameTimestampTest, FormatInvertsParse) {
  for (const char* name : {"2015.02.02_07.50.49.wav", "2016.12.31_23.59.59.wav", "2000.01.01_00.00.00.wav"}) {
    const auto t = parse_filename_timestamp(name);
    ASSERT_TRUE(t) << name;
    EXPECT_EQ(format_filename_timestamp(*t), name);
  }
}

TEST(IndexToTimeTest, OffsetsFromStart) {
  const RecordingMeta meta{"2015.02.02_07.50.49.wav", at(2015, 2, 2, 7, 50, 49), 11025.0};
  EXPECT_EQ(index_to_time(meta, 0), meta.start_time);
  EXPECT_EQ(index_to_time(meta, 11025), meta.start_time + seconds{1});
  EXPECT_EQ(index_to_time(meta, 6615000), meta.start_time + seconds{600});
  EXPECT_EQ(index_to_time(meta, 1), meta.start_time + nanoseconds{90703});
}

TEST(IndexToTimeTest, RejectsNonPositiveRate) {
  RecordingMeta meta{"x.wav", at(2015, 2, 2, 0, 0, 0), 0.0};
  EXPECT_THROW(index_to_time(meta, 1), InvalidArgument);
  meta.fs = -1.0;
  EXPECT_THROW(index_to_time(meta, 1), InvalidArgument);
}

TEST(FormatTimestampTest, IsoWithMicroseconds) {
  EXPECT_EQ(format_timestamp(at(2015, 2, 2, 7, 50, 49)), "2015-02-02T07:50:49.000000");
  EXPECT_EQ(format_timestamp(at(2015, 2, 2, 7, 50, 49) + microseconds{1500}), "2015-02-02T07:50:49.001500");
}

}  // namespace
}  // namespace seqseg
