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

#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "seqseg/errors.hpp"

namespace seqseg {
namespace {

// Minimal RIFF builder for layouts write_wav never produces.
struct RawWav {
  std::uint16_t format = 1;
  std::uint16_t channels = 1;
  std::uint32_t rate = 11025;
  std::uint16_t bits = 16;
  bool extensible = false;
  std::uint16_t sub_format = 1;
  std::vector<unsigned char> data;

  void write(const std::filesystem::path& path) const {
    std::vector<unsigned char> out;
    auto put = [&](std::uint64_t v, int bytes) {
      for (int i = 0; i < bytes; ++i) {
        out.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xFF));
      }
    };
    auto tag = [&](const char* t) { out.insert(out.end(), t, t + 4); };
    const std::uint32_t fmt_size = extensible ? 40 : 16;
    tag("RIFF");
    put(4 + 8 + fmt_size + 8 + data.size() + (data.size() & 1), 4);
    tag("WAVE");
    tag("LIST");  // unknown chunk to skip
    put(3, 4);
    out.insert(out.end(), {'a', 'b', 'c', 0});
    tag("fmt ");
    put(fmt_size, 4);
    put(extensible ? 0xFFFE : format, 2);
    put(channels, 2);
    put(rate, 4);
    put(rate * channels * bits / 8, 4);
    put(channels * bits / 8, 2);
    put(bits, 2);
    if (extensible) {
      put(22, 2);
      put(bits, 2);
      put(0, 4);
      put(sub_format, 2);
      const unsigned char guid_tail[14] = {0x00, 0x00, 0x00, 0x00, 0x10, 0x00, 0x80,
                                           0x00, 0x00, 0xAA, 0x00, 0x38, 0x9B, 0x71};
      out.insert(out.end(), guid_tail, guid_tail + 14);
    }
    tag("data");
    put(data.size(), 4);
    out.insert(out.end(), data.begin(), data.end());
    if (data.size() & 1) {
      out.push_back(0);
    }
    std::ofstream f(path, std::ios::binary);
    f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  }
};

void push16(std::vector<unsigned char>& v, std::int16_t x) {
  v.push_back(static_cast<unsigned char>(x & 0xFF));
  v.push_back(static_cast<unsigned char>((static_cast<std::uint16_t>(x) >> 8) & 0xFF));
}

class SignalIoTest : public ::testing::Test {
 protected:
  std::filesystem::path dir = oracle::scratch_dir("io");
};

TEST_F(SignalIoTest, SilentSecond) {
  const auto path = dir / "silence.wav";
  write_wav(path, std::vector<double>(11025, 0.0), 11025.0, WavEncoding::kPcm16);
  const Signal s = load_wav(path);
  EXPECT_EQ(s.size(), 11025u);
  EXPECT_EQ(s.sample_rate(), 11025.0);
  EXPECT_EQ(s.cumsq().back(), 0.0);
  EXPECT_FALSE(s.origin());
}

TEST_F(SignalIoTest, Pcm16Endpoints) {
  RawWav w;
  push16(w.data, -32768);
  push16(w.data, 32767);
  push16(w.data, 0);
  push16(w.data, 16384);
  w.write(dir / "ends.wav");
  const Signal s = load_wav(dir / "ends.wav");
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s.samples()[0], -1.0);
  EXPECT_EQ(s.samples()[1], 32767.0 / 32768.0);
  EXPECT_EQ(s.samples()[2], 0.0);
  EXPECT_EQ(s.samples()[3], 0.5);
}

TEST_F(SignalIoTest, RoundTripWithinQuantizationStep) {
  auto xs = oracle::normal_samples(5000, 5, 0.2);
  for (double& x : xs) {
    x = std::clamp(x, -0.99, 0.99);
  }
  struct Case {
    WavEncoding enc;
    int bits;
  };
  for (const Case c : {Case{WavEncoding::kPcm8, 8}, Case{WavEncoding::kPcm16, 16}, Case{WavEncoding::kPcm24, 24},
                       Case{WavEncoding::kPcm32, 32}}) {
    const auto path = dir / ("rt" + std::to_string(c.bits) + ".wav");
    write_wav(path, xs, 8000.0, c.enc);
    const Signal s = load_wav(path);
    ASSERT_EQ(s.size(), xs.size());
    EXPECT_EQ(s.sample_rate(), 8000.0);
    const double step = std::ldexp(1.0, -(c.bits - 1));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      ASSERT_LE(std::fabs(s.samples()[i] - xs[i]), step) << c.bits << " bits, sample " << i;
    }
  }
  write_wav(dir / "f.wav", xs, 8000.0, WavEncoding::kFloat32);
  const Signal f = load_wav(dir / "f.wav");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ASSERT_EQ(f.samples()[i], static_cast<double>(static_cast<float>(xs[i])));
  }
}

TEST_F(SignalIoTest, IntegerWritesClip) {
  write_wav(dir / "clip.wav", std::vector<double>{2.0, -2.0}, 8000.0, WavEncoding::kPcm16);
  const Signal s = load_wav(dir / "clip.wav");
  EXPECT_EQ(s.samples()[0], 32767.0 / 32768.0);
  EXPECT_EQ(s.samples()[1], -1.0);
}

TEST_F(SignalIoTest, MultiChannelKeepsFirstWithWarning) {
  RawWav w;
  w.channels = 2;
  for (int i = 0; i < 10; ++i) {
    push16(w.data, static_cast<std::int16_t>(i * 100));
    push16(w.data, -1);
  }
  w.write(dir / "stereo.wav");
  const Signal s = load_wav(dir / "stereo.wav");
  ASSERT_EQ(s.size(), 10u);
  EXPECT_EQ(s.samples()[3], 300.0 / 32768.0);
  ASSERT_EQ(s.warnings().size(), 1u);
  EXPECT_NE(s.warnings()[0].find("first channel"), std::string::npos);
}

TEST_F(SignalIoTest, ExtensibleFormat) {
  RawWav w;
  w.extensible = true;
  push16(w.data, 8192);
  w.write(dir / "ext.wav");
  EXPECT_EQ(load_wav(dir / "ext.wav").samples()[0], 0.25);
}

TEST_F(SignalIoTest, RejectsUnsupportedCodec) {
  RawWav w;
  w.format = 2;  // ADPCM
  w.bits = 4;
  w.data = {1, 2, 3, 4};
  w.write(dir / "adpcm.wav");
  EXPECT_THROW(load_wav(dir / "adpcm.wav"), InputError);
  RawWav x;
  x.bits = 12;
  x.data = {1, 2, 3, 4};
  x.write(dir / "odd.wav");
  EXPECT_THROW(load_wav(dir / "odd.wav"), InputError);
}

TEST_F(SignalIoTest, RejectsNonRiff) {
  std::ofstream(dir / "text.wav") << "hello world, not audio";
  EXPECT_THROW(load_wav(dir / "text.wav"), InputError);
}

TEST_F(SignalIoTest, OriginFromRecorderFilename) {
  const auto path = dir / "2015.02.02_07.50.49.wav";
  write_wav(path, std::vector<double>(100, 0.1), 11025.0);
  const Signal s = load_wav(path);
  ASSERT_TRUE(s.origin());
  EXPECT_EQ(*s.origin(), *parse_filename_timestamp("2015.02.02_07.50.49.wav"));
}

TEST_F(SignalIoTest, CsvWithAndWithoutHeader) {
  std::ofstream(dir / "a.csv") << "amplitude,other\n1.5,9\n-2,9\n\n0.25\n";
  const Signal a = load_csv(dir / "a.csv");
  EXPECT_EQ(std::vector<double>(a.samples().begin(), a.samples().end()), (std::vector<double>{1.5, -2.0, 0.25}));
  EXPECT_FALSE(a.sample_rate());
  std::ofstream(dir / "b.txt") << "1\n2\n";
  const Signal b = load_signal(dir / "b.txt", 500.0);
  EXPECT_EQ(b.size(), 2u);
  EXPECT_EQ(b.sample_rate(), 500.0);
}

TEST_F(SignalIoTest, CsvRejectsGarbageAfterHeader) {
  std::ofstream(dir / "bad.csv") << "x\n1\nabc\n";
  EXPECT_THROW(load_csv(dir / "bad.csv"), InputError);
  std::ofstream(dir / "empty.csv") << "x\n";
  EXPECT_THROW(load_csv(dir / "empty.csv"), InputError);
}

TEST_F(SignalIoTest, Float64RoundTripIsExact) {
  const auto xs = oracle::normal_samples(1000, 77);
  write_f64(dir / "x.f64", xs);
  const Signal s = load_signal(dir / "x.f64");
  EXPECT_EQ(std::vector<double>(s.samples().begin(), s.samples().end()), xs);
  std::ofstream(dir / "short.bin") << "1234567";
  EXPECT_THROW(load_f64(dir / "short.bin"), InputError);
}

TEST_F(SignalIoTest, MissingFileNamesPath) {
  try {
    load_signal(dir / "absent.wav");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("absent.wav"), std::string::npos);
  }
}

}  // namespace
}  // namespace seqseg
