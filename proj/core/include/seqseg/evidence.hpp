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
#include <optional>
#include <span>
#include <vector>

#include "seqseg/mcmc.hpp"
#include "seqseg/posterior.hpp"

namespace seqseg {

/// FBST evidence for equal variances of two segments, pooled over chains.
struct EvidenceResult {
  double ev_h0 = 1.0;  // mean over valid chains of the per-chain evidence for H0
  std::vector<double> per_chain_ev;
  std::vector<double> accept_rate;
  std::vector<bool> chain_valid;
  std::size_t valid_chains = 0;
  double d_mean = 0.0;
  double s_mean = 0.0;
  std::optional<double> rhat_d;  // nullopt with fewer than two valid chains or constant chains
  std::optional<double> rhat_s;
  double s0 = 0.0;
  double log_p0 = 0.0;
};

/// Pools chain results: arithmetic means over valid chains, Gelman-Rubin
/// statistics from their phase-3 moments.
EvidenceResult combine_chains(std::span<const ChainResult> chains);

/// Runs cfg.nchains chains (chain ids 0..nchains-1) on up to `threads`
/// OpenMP workers and pools them. Deterministic for a fixed cfg.seed,
/// independent of the worker count.
EvidenceResult fbst_evidence(const SegmentStats& a, const SegmentStats& b, const McmcConfig& cfg, int threads = 0);

}  // namespace seqseg
