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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string_view>
#include <tuple>
#include <vector>

#include "seqseg/changepoint.hpp"
#include "seqseg/evidence.hpp"
#include "seqseg/mcmc.hpp"
#include "seqseg/recording.hpp"
#include "seqseg/signal.hpp"

namespace seqseg {

struct SegConfig {
  double beta = 1e-3;
  double alpha = 0.1;
  std::size_t mciter = 10000;
  std::size_t mcburn = 10000;
  std::size_t nchains = 4;
  std::optional<std::size_t> t0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> minlength;  // default: half a second of samples
  std::size_t tres = 1;
  int threads = 0;  // 0 = OpenMP default
  AdaptationRule adaptation = AdaptationRule::kRunningCovariance;

  /// Materializes every default and validates: 0 < alpha < 1, beta > 0,
  /// minlength >= 7, tres >= 1, plus the MCMC constraints. Without a known
  /// sample rate the default minlength uses kDefaultSampleRate.
  SegConfig resolved(std::optional<double> sample_rate = std::nullopt) const;

  /// MCMC settings for one node, seeded from that node's interval.
  McmcConfig mcmc_for(std::size_t start, std::size_t end) const;
};

enum class NodeStatus {
  kSplit,          // evidence for equal variances fell below alpha
  kEqualVariance,  // evidence at or above alpha
  kMinLength,      // MAP cut leaves a piece shorter than minlength
  kZeroEnergy,     // the interval is all zeros
  kNoCut,          // no admissible grid point
};

std::string_view to_string(NodeStatus status) noexcept;

struct NodeDecision {
  std::size_t start = 0;
  std::size_t end = 0;
  std::optional<CutCandidate> cut;
  NodeStatus status = NodeStatus::kNoCut;
  std::optional<EvidenceResult> evidence;
  bool accepted = false;
};

struct Segment {
  std::size_t start = 0;
  std::size_t end = 0;
  double power = 0.0;  // mean squared amplitude
};

struct SegmentationResult {
  std::vector<std::size_t> changepoints;  // strictly increasing, inside (0, n)
  std::vector<Segment> segments;          // tiles [0, n)
  std::vector<NodeDecision> decisions;    // depth-first, left child first
  SegConfig config;                       // as resolved for this run
};

/// MAP cuts keyed by (start, end, resolution). They depend on the data only,
/// so one cache can serve every run on the same signal. Thread-safe.
class CutCache {
 public:
  std::optional<CutCandidate> get_or_compute(const Signal& signal, const GridSpec& grid, int threads);
  std::size_t size() const;

 private:
  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
  mutable std::mutex mutex_;
  std::map<Key, std::optional<CutCandidate>> entries_;
};

/// Evidence keyed by everything it depends on except alpha, so runs that
/// differ only in the decision threshold replay identical node evidence.
/// Thread-safe.
class EvidenceCache {
 public:
  struct Key {
    std::size_t start = 0;
    std::size_t end = 0;
    std::size_t cut = 0;
    double beta = 0.0;
    std::uint64_t seed = 0;
    std::size_t mciter = 0;
    std::size_t mcburn = 0;
    std::size_t nchains = 0;
    std::size_t t0 = 0;
    AdaptationRule adaptation = AdaptationRule::kRunningCovariance;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  template <typename Compute>
  EvidenceResult get_or_compute(const Key& key, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = entries_.find(key); it != entries_.end()) {
        return it->second;
      }
    }
    EvidenceResult value = compute();
    std::lock_guard lock(mutex_);
    return entries_.try_emplace(key, std::move(value)).first->second;
  }
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<Key, EvidenceResult> entries_;
};

struct SegmentHooks {
  CutCache* cuts = nullptr;
  EvidenceCache* evidence = nullptr;
};

/// Recursive binary segmentation: MAP cut, minimum-length check, then FBST
/// evidence for equal variances; a node splits when the pooled evidence is
/// below alpha. Each node's chains are seeded from (cfg.seed, start, end), so
/// results do not depend on traversal order or worker count.
///
/// Throws InvalidArgument for an invalid configuration or a signal shorter
/// than 7 samples.
SegmentationResult segment(const Signal& signal, const SegConfig& cfg, SegmentHooks hooks = {});

struct FileSegmentation {
  SegmentationResult result;
  double sample_rate = kDefaultSampleRate;  // header value, or the default
  std::optional<Timestamp> origin;           // from the file name
  std::vector<Timestamp> changepoint_times;  // filled when origin is known
};

/// load_signal + segment + index_to_time for every changepoint. `fs` applies
/// to headerless inputs only.
FileSegmentation segment_file(const std::filesystem::path& path, const SegConfig& cfg,
                              std::optional<double> fs = std::nullopt);

}  // namespace seqseg
