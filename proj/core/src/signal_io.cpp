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

#include "seqseg/signal_io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "seqseg/errors.hpp"

namespace seqseg {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::vector<unsigned char> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open '" + path.string() + "'");
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint16_t le16(const unsigned char* p) { return static_cast<std::uint16_t>(p[0] | (p[1] << 8)); }

std::uint32_t le32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void put16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xFF));
  out.push_back(static_cast<unsigned char>(v >> 8));
}

void put32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xFF));
  }
}

void put_tag(std::vector<unsigned char>& out, const char* tag) { out.insert(out.end(), tag, tag + 4); }

struct WavFormat {
  std::uint16_t code = 0;
  std::uint16_t channels = 0;
  std::uint32_t rate = 0;
  std::uint16_t block_align = 0;
  std::uint16_t bits = 0;
};

double decode_sample(const unsigned char* p, const WavFormat& fmt) {
  if (fmt.code == kFormatFloat) {
    return static_cast<double>(std::bit_cast<float>(le32(p)));
  }
  switch (fmt.bits) {
    case 8:
      return (static_cast<int>(p[0]) - 128) / 128.0;
    case 16:
      return static_cast<std::int16_t>(le16(p)) / 32768.0;
    case 24: {
      std::int32_t v = static_cast<std::int32_t>(p[0] | (p[1] << 8) | (p[2] << 16));
      if (v & 0x800000) {
        v -= 0x1000000;
      }
      return v / 8388608.0;
    }
    case 32:
      return static_cast<std::int32_t>(le32(p)) / 2147483648.0;
    default:
      return 0.0;
  }
}

}  // namespace

Signal load_wav(const std::filesystem::path& path) {
  const std::vector<unsigned char> bytes = read_file(path);
  const std::string name = path.string();
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 || std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw InputError("'" + name + "' is not a RIFF/WAVE file");
  }

  std::optional<WavFormat> fmt;
  const unsigned char* data = nullptr;
  std::size_t data_size = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* chunk = bytes.data() + pos;
    const std::size_t size = le32(chunk + 4);
    const std::size_t avail = bytes.size() - (pos + 8);
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16 || avail < 16) {
        throw InputError("'" + name + "': truncated fmt chunk");
      }
      WavFormat f;
      f.code = le16(chunk + 8);
      f.channels = le16(chunk + 10);
      f.rate = le32(chunk + 12);
      f.block_align = le16(chunk + 20);
      f.bits = le16(chunk + 22);
      if (f.code == kFormatExtensible) {
        if (size < 40 || avail < 40) {
          throw InputError("'" + name + "': truncated extensible fmt chunk");
        }
        f.code = le16(chunk + 8 + 24);  // first two bytes of the sub-format GUID
      }
      fmt = f;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = chunk + 8;
      data_size = std::min(size, avail);  // streaming writers leave the size unset
      if (fmt) {
        break;
      }
    }
    pos += 8 + size + (size & 1U);
  }

  if (!fmt) {
    throw InputError("'" + name + "': missing fmt chunk");
  }
  if (data == nullptr) {
    throw InputError("'" + name + "': missing data chunk");
  }
  const bool pcm_ok = fmt->code == kFormatPcm && (fmt->bits == 8 || fmt->bits == 16 || fmt->bits == 24 || fmt->bits == 32);
  const bool float_ok = fmt->code == kFormatFloat && fmt->bits == 32;
  if (!pcm_ok && !float_ok) {
    throw InputError("'" + name + "': unsupported WAV encoding (format " + std::to_string(fmt->code) + ", " +
                     std::to_string(fmt->bits) + " bits)");
  }
  if (fmt->channels == 0 || fmt->rate == 0) {
    throw InputError("'" + name + "': invalid channel count or sample rate");
  }
  const std::size_t bytes_per_sample = fmt->bits / 8;
  const std::size_t frame = std::max<std::size_t>(fmt->block_align, bytes_per_sample * fmt->channels);
  const std::size_t frames = data_size / frame;
  if (frames == 0) {
    throw InputError("'" + name + "': no audio frames");
  }

  std::vector<double> samples(frames);
  for (std::size_t i = 0; i < frames; ++i) {
    samples[i] = decode_sample(data + i * frame, *fmt);
  }

  SignalMeta meta;
  meta.sample_rate = static_cast<double>(fmt->rate);
  meta.origin = parse_filename_timestamp(name);
  if (fmt->channels > 1) {
    meta.warnings.push_back(std::to_string(fmt->channels) + " channels in '" + path.filename().string() +
                            "'; using the first channel only");
  }
  return Signal::from_samples(std::move(samples), std::move(meta));
}

void write_wav(const std::filesystem::path& path, std::span<const double> samples, double fs, WavEncoding encoding) {
  if (!(fs > 0.0) || fs > 4294967295.0) {
    throw InvalidArgument("write_wav: invalid sample rate");
  }
  std::uint16_t bits = 32;
  std::uint16_t code = kFormatPcm;
  switch (encoding) {
    case WavEncoding::kPcm8: bits = 8; break;
    case WavEncoding::kPcm16: bits = 16; break;
    case WavEncoding::kPcm24: bits = 24; break;
    case WavEncoding::kPcm32: bits = 32; break;
    case WavEncoding::kFloat32: bits = 32; code = kFormatFloat; break;
  }
  const std::uint32_t bytes_per_sample = bits / 8U;
  const std::uint64_t data_bytes = static_cast<std::uint64_t>(samples.size()) * bytes_per_sample;
  if (data_bytes > 0xFFFFFFF0ULL) {
    throw InvalidArgument("write_wav: too many samples for a RIFF file");
  }
  const std::uint32_t rate = static_cast<std::uint32_t>(std::lround(fs));

  std::vector<unsigned char> out;
  out.reserve(static_cast<std::size_t>(data_bytes) + 64);
  const bool is_float = code == kFormatFloat;
  const std::uint32_t fmt_size = is_float ? 18 : 16;
  const std::uint32_t fact_bytes = is_float ? 12 : 0;
  put_tag(out, "RIFF");
  put32(out, static_cast<std::uint32_t>(4 + (8 + fmt_size) + fact_bytes + 8 + data_bytes + (data_bytes & 1U)));
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put32(out, fmt_size);
  put16(out, code);
  put16(out, 1);
  put32(out, rate);
  put32(out, rate * bytes_per_sample);
  put16(out, static_cast<std::uint16_t>(bytes_per_sample));
  put16(out, bits);
  if (is_float) {
    put16(out, 0);
    put_tag(out, "fact");
    put32(out, 4);
    put32(out, static_cast<std::uint32_t>(samples.size()));
  }
  put_tag(out, "data");
  put32(out, static_cast<std::uint32_t>(data_bytes));

  const double full = std::ldexp(1.0, bits - 1);
  for (double x : samples) {
    if (is_float) {
      put32(out, std::bit_cast<std::uint32_t>(static_cast<float>(x)));
      continue;
    }
    const double q = std::clamp(std::nearbyint(x * full), -full, full - 1.0);
    const auto v = static_cast<std::int64_t>(q);
    if (bits == 8) {
      out.push_back(static_cast<unsigned char>(v + 128));
    } else {
      const auto u = static_cast<std::uint32_t>(v);
      for (std::uint32_t b = 0; b < bytes_per_sample; ++b) {
        out.push_back(static_cast<unsigned char>((u >> (8 * b)) & 0xFF));
      }
    }
  }
  if (data_bytes & 1U) {
    out.push_back(0);
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw InputError("cannot write '" + path.string() + "'");
  }
  f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!f) {
    throw InputError("short write to '" + path.string() + "'");
  }
}

Signal load_csv(const std::filesystem::path& path, std::optional<double> fs) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open '" + path.string() + "'");
  }
  std::vector<double> samples;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      continue;
    }
    auto last = line.find_first_of(",;\t\r", first);
    std::string_view field(line.data() + first, (last == std::string::npos ? line.size() : last) - first);
    while (!field.empty() && field.back() == ' ') {
      field.remove_suffix(1);
    }
    if (!field.empty() && field.front() == '+') {
      field.remove_prefix(1);
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      if (samples.empty() && lineno == 1) {
        continue;  // header
      }
      throw InputError("'" + path.string() + "' line " + std::to_string(lineno) + ": not a number");
    }
    samples.push_back(v);
  }
  if (samples.empty()) {
    throw InputError("'" + path.string() + "' contains no samples");
  }
  SignalMeta meta;
  meta.sample_rate = fs;
  return Signal::from_samples(std::move(samples), std::move(meta));
}

Signal load_f64(const std::filesystem::path& path, std::optional<double> fs) {
  const std::vector<unsigned char> bytes = read_file(path);
  if (bytes.empty() || bytes.size() % 8 != 0) {
    throw InputError("'" + path.string() + "' is not a whole number of float64 samples");
  }
  std::vector<double> samples(bytes.size() / 8);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    std::uint64_t u = 0;
    for (int b = 7; b >= 0; --b) {
      u = (u << 8) | bytes[i * 8 + static_cast<std::size_t>(b)];
    }
    samples[i] = std::bit_cast<double>(u);
  }
  SignalMeta meta;
  meta.sample_rate = fs;
  return Signal::from_samples(std::move(samples), std::move(meta));
}

void write_f64(const std::filesystem::path& path, std::span<const double> samples) {
  std::vector<unsigned char> out;
  out.reserve(samples.size() * 8);
  for (double x : samples) {
    const auto u = std::bit_cast<std::uint64_t>(x);
    for (int b = 0; b < 8; ++b) {
      out.push_back(static_cast<unsigned char>((u >> (8 * b)) & 0xFF));
    }
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw InputError("cannot write '" + path.string() + "'");
  }
  f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
}

Signal load_signal(const std::filesystem::path& path, std::optional<double> fs) {
  if (!std::filesystem::exists(path)) {
    throw InputError("no such file: '" + path.string() + "'");
  }
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".wav") {
    return load_wav(path);
  }
  if (ext == ".csv" || ext == ".txt") {
    return load_csv(path, fs);
  }
  return load_f64(path, fs);
}

}  // namespace seqseg
