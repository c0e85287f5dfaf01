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

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "seqseg/errors.hpp"

namespace seqseg {

namespace {

bool read_digits(std::string_view s, std::size_t pos, std::size_t count, int& out) {
  int v = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const char c = s[pos + i];
    if (c < '0' || c > '9') {
      return false;
    }
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

}  // namespace

std::optional<Timestamp> parse_filename_timestamp(std::string_view name) {
  const std::string base = std::filesystem::path(std::string(name)).filename().string();
  // YYYY.MM.DD_HH.MM.SS.wav
  constexpr std::string_view kExt = ".wav";
  if (base.size() != 19 + kExt.size() || base.compare(19, kExt.size(), kExt) != 0) {
    return std::nullopt;
  }
  const std::string_view s(base);
  if (s[4] != '.' || s[7] != '.' || s[10] != '_' || s[13] != '.' || s[16] != '.') {
    return std::nullopt;
  }
  int year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
  if (!read_digits(s, 0, 4, year) || !read_digits(s, 5, 2, month) || !read_digits(s, 8, 2, day) ||
      !read_digits(s, 11, 2, hour) || !read_digits(s, 14, 2, minute) || !read_digits(s, 17, 2, second)) {
    return std::nullopt;
  }
  using namespace std::chrono;
  const year_month_day ymd{std::chrono::year{year}, std::chrono::month{static_cast<unsigned>(month)},
                           std::chrono::day{static_cast<unsigned>(day)}};
  if (!ymd.ok() || hour > 23 || minute > 59 || second > 59) {
    return std::nullopt;
  }
  return Timestamp{sys_days{ymd} + hours{hour} + minutes{minute} + seconds{second}};
}

std::string format_filename_timestamp(Timestamp t) {
  using namespace std::chrono;
  const auto day = floor<days>(t);
  const year_month_day ymd{day};
  const hh_mm_ss hms{floor<seconds>(t - day)};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d.%02u.%02u_%02d.%02d.%02d.wav", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

Timestamp index_to_time(const RecordingMeta& meta, std::size_t index) {
  if (!(meta.fs > 0.0) || !std::isfinite(meta.fs)) {
    throw InvalidArgument("index_to_time: sample rate must be positive");
  }
  const double ns = static_cast<double>(index) / meta.fs * 1e9;
  return meta.start_time + std::chrono::nanoseconds{std::llround(ns)};
}

std::string format_timestamp(Timestamp t) {
  using namespace std::chrono;
  const auto day = floor<days>(t);
  const year_month_day ymd{day};
  const auto tod = floor<microseconds>(t - day);
  const hh_mm_ss hms{tod};
  char buf[48];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d.%06lld", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()), static_cast<long long>(hms.subseconds().count()));
  return buf;
}

}  // namespace seqseg
