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
#include <iosfwd>
#include <vector>

namespace seqseg {

struct BenchConfig {
  std::uint64_t seed = 0;
  int threads = 0;
  std::size_t repeats = 3;  // best-of
};

struct BenchRow {
  std::size_t size = 0;
  std::size_t resolution = 0;
  double time_s = 0.0;  // fastest of `repeats` MAP scans
  std::size_t evaluations = 0;
  std::uint64_t seed = 0;
};

/// Times the MAP scan over a whole standard-normal signal for every
/// (size, resolution) pair, one cell at a time.
std::vector<BenchRow> bench_resolution(const std::vector<std::size_t>& sizes,
                                       const std::vector<std::size_t>& resolutions, const BenchConfig& cfg = {});

/// Header `size,resolution,time_s`.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace seqseg
