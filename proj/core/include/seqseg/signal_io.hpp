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

#include <filesystem>
#include <optional>
#include <span>

#include "seqseg/signal.hpp"

namespace seqseg {

enum class WavEncoding { kPcm8, kPcm16, kPcm24, kPcm32, kFloat32 };

/// Reads a RIFF/WAVE file: integer PCM (8/16/24/32 bit, scaled by
/// 2^(bits-1) into [-1, 1)) or 32-bit IEEE float. Only the first channel is
/// kept; extra channels add a warning to the signal metadata. The sample
/// rate comes from the header, and the origin from the file name when it
/// follows the recorder's timestamp pattern.
Signal load_wav(const std::filesystem::path& path);

/// Writes mono WAV. Integer encodings round and clip to the representable range.
void write_wav(const std::filesystem::path& path, std::span<const double> samples, double fs,
               WavEncoding encoding = WavEncoding::kFloat32);

/// One numeric column per line; a non-numeric first line is treated as a header.
Signal load_csv(const std::filesystem::path& path, std::optional<double> fs = std::nullopt);

/// Raw little-endian IEEE-754 float64 samples, no header.
Signal load_f64(const std::filesystem::path& path, std::optional<double> fs = std::nullopt);
void write_f64(const std::filesystem::path& path, std::span<const double> samples);

/// Dispatches on extension: .wav, .csv/.txt, anything else as float64.
/// `fs` only applies to headerless formats; a WAV header always wins.
Signal load_signal(const std::filesystem::path& path, std::optional<double> fs = std::nullopt);

}  // namespace seqseg
