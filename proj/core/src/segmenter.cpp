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

#include "seqseg/segmenter.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "seqseg/errors.hpp"
#include "seqseg/rng.hpp"
#include "seqseg/signal_io.hpp"

namespace seqseg {

SegConfig SegConfig::resolved(std::optional<double> sample_rate) const {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "alpha must lie in the open interval (0, 1), got %g", alpha);
    throw InvalidArgument(buf);
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw InvalidArgument("beta must be positive and finite");
  }
  if (tres < 1) {
    throw InvalidArgument("tres must be >= 1");
  }
  if (threads < 0) {
    throw InvalidArgument("threads must be >= 0");
  }
  SegConfig out = *this;
  if (!out.minlength) {
    const double fs = sample_rate.value_or(kDefaultSampleRate);
    out.minlength = static_cast<std::size_t>(std::floor(fs / 2.0));
  }
  if (*out.minlength < 7) {
    throw InvalidArgument("minlength must be >= 7");
  }
  const McmcConfig m = out.mcmc_for(0, 0).resolved();
  out.t0 = m.t0;
  return out;
}

McmcConfig SegConfig::mcmc_for(std::size_t start, std::size_t end) const {
  McmcConfig m;
  m.mciter = mciter;
  m.mcburn = mcburn;
  m.nchains = nchains;
  m.t0 = t0;
  m.beta = beta;
  m.seed = derive_seed(seed, {start, end});
  m.adaptation = adaptation;
  return m;
}

std::string_view to_string(NodeStatus status) noexcept {
  switch (status) {
    case NodeStatus::kSplit:
      return "split";
    case NodeStatus::kEqualVariance:
      return "equal_variance";
    case NodeStatus::kMinLength:
      return "minlength";
    case NodeStatus::kZeroEnergy:
      return "zero_energy";
    case NodeStatus::kNoCut:
      return "no_cut";
  }
  return "unknown";
}

std::optional<CutCandidate> CutCache::get_or_compute(const Signal& signal, const GridSpec& grid, int threads) {
  const Key key{grid.start, grid.end, grid.resolution};
  {
    std::lock_guard lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) {
      return it->second;
    }
  }
  auto value = map_changepoint(signal, grid, threads);
  std::lock_guard lock(mutex_);
  return entries_.try_emplace(key, value).first->second;
}

std::size_t CutCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::size_t EvidenceCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

namespace {

struct Interval {
  std::size_t start;
  std::size_t end;
};

}  // namespace

SegmentationResult segment(const Signal& signal, const SegConfig& config, SegmentHooks hooks) {
  const SegConfig cfg = config.resolved(signal.sample_rate());
  const std::size_t n = signal.size();
  if (n < 7) {
    throw InvalidArgument("signal needs at least 7 samples, got " + std::to_string(n));
  }
  const std::size_t minlength = *cfg.minlength;

  SegmentationResult result;
  result.config = cfg;
  std::vector<Interval> stack{{0, n}};
  while (!stack.empty()) {
    const Interval node = stack.back();
    stack.pop_back();
    NodeDecision& dec = result.decisions.emplace_back();
    dec.start = node.start;
    dec.end = node.end;

    if (!(sumsq(signal, node.start, node.end) > 0.0)) {
      dec.status = NodeStatus::kZeroEnergy;
      continue;
    }
    const GridSpec grid{node.start, node.end, cfg.tres};
    dec.cut = hooks.cuts ? hooks.cuts->get_or_compute(signal, grid, cfg.threads)
                         : map_changepoint(signal, grid, cfg.threads);
    if (!dec.cut) {
      dec.status = NodeStatus::kNoCut;
      continue;
    }
    const std::size_t t = dec.cut->t;
    if (t - node.start < minlength || node.end - t < minlength) {
      dec.status = NodeStatus::kMinLength;
      continue;
    }

    const McmcConfig mcmc = cfg.mcmc_for(node.start, node.end);
    const SegmentStats left{t - node.start, sumsq(signal, node.start, t)};
    const SegmentStats right{node.end - t, sumsq(signal, t, node.end)};
    auto compute = [&] { return fbst_evidence(left, right, mcmc, cfg.threads); };
    if (hooks.evidence) {
      const EvidenceCache::Key key{node.start, node.end, t,          cfg.beta, mcmc.seed, cfg.mciter,
                                   cfg.mcburn, cfg.nchains, *cfg.t0, cfg.adaptation};
      dec.evidence = hooks.evidence->get_or_compute(key, compute);
    } else {
      dec.evidence = compute();
    }

    if (dec.evidence->ev_h0 < cfg.alpha) {
      dec.status = NodeStatus::kSplit;
      dec.accepted = true;
      result.changepoints.push_back(t);
      stack.push_back({t, node.end});
      stack.push_back({node.start, t});
    } else {
      dec.status = NodeStatus::kEqualVariance;
    }
  }

  std::sort(result.changepoints.begin(), result.changepoints.end());
  std::size_t prev = 0;
  for (std::size_t i = 0; i <= result.changepoints.size(); ++i) {
    const std::size_t next = i < result.changepoints.size() ? result.changepoints[i] : n;
    const double len = static_cast<double>(next - prev);
    result.segments.push_back({prev, next, sumsq(signal, prev, next) / len});
    prev = next;
  }
  return result;
}

FileSegmentation segment_file(const std::filesystem::path& path, const SegConfig& cfg, std::optional<double> fs) {
  const Signal signal = load_signal(path, fs);
  FileSegmentation out;
  out.sample_rate = signal.sample_rate().value_or(kDefaultSampleRate);
  out.origin = signal.origin();
  out.result = segment(signal, cfg);
  if (out.origin) {
    const RecordingMeta meta{path.filename().string(), *out.origin, out.sample_rate};
    for (std::size_t cp : out.result.changepoints) {
      out.changepoint_times.push_back(index_to_time(meta, cp));
    }
  }
  return out;
}

}  // namespace seqseg
