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

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace seqseg {

using Timestamp = std::chrono::sys_time<std::chrono::nanoseconds>;

/// Hydrophone sample rate used when nothing better is known. Header values
/// from a WAV file always take precedence.
inline constexpr double kDefaultSampleRate = 11025.0;

struct RecordingMeta {
  std::string filename;
  Timestamp start_time;
  double fs = kDefaultSampleRate;
};

/// Parses `YYYY.MM.DD_HH.MM.SS.wav` (any leading directories are ignored).
/// Returns nullopt for names that do not follow the pattern or that encode
/// an invalid calendar date.
std::optional<Timestamp> parse_filename_timestamp(std::string_view name);

/// Inverse of parse_filename_timestamp for whole-second timestamps.
std::string format_filename_timestamp(Timestamp t);

/// start_time + index / fs. Throws InvalidArgument unless fs > 0.
Timestamp index_to_time(const RecordingMeta& meta, std::size_t index);

/// ISO-8601 with microseconds, e.g. `2015-02-02T07:50:49.000000`.
std::string format_timestamp(Timestamp t);

}  // namespace seqseg
