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
#include <optional>
#include <vector>

#include "seqseg/diagnostics.hpp"
#include "seqseg/posterior.hpp"

namespace seqseg {

/// How the phase-2 proposal covariance follows the chain history.
enum class AdaptationRule {
  /// Running covariance of the history (includes the current-state outer
  /// product). Stays positive semi-definite by construction.
  kRunningCovariance,
  /// Same recursion with the current-state outer product left out. Kept for
  /// comparison; it loses definiteness almost immediately and falls back to
  /// the diagonal repair path.
  kWithoutCurrentOuterProduct,
};

struct McmcConfig {
  std::size_t mciter = 10000;  // phase-3 (counting) steps
  std::size_t mcburn = 10000;  // phases 1 + 2
  std::size_t nchains = 4;
  std::optional<std::size_t> t0;  // phase-1 length; default min(1000, mcburn / 2)
  double beta = 1e-3;
  std::uint64_t seed = 0;
  AdaptationRule adaptation = AdaptationRule::kRunningCovariance;

  /// Fills defaults and validates (throws InvalidArgument).
  McmcConfig resolved() const;
};

/// Adaptive Metropolis constants.
inline constexpr double kProposalScale = 2.24 * 2.24 / 2.0;
inline constexpr double kCovarianceJitter = 1e-30;

struct ChainResult {
  double ev_h0 = 1.0;            // 1 - (#phase-3 states in the surprise set) / mciter
  std::size_t surprise_count = 0;
  double accept_rate = 0.0;      // phase 3
  ChainMoments d;                // phase-3 moments of d
  ChainMoments s;                // phase-3 moments of s
  bool valid = true;             // false when the proposal covariance could not be repaired
  std::size_t covariance_repairs = 0;
};

/// Optional per-step record of a chain, for diagnostics and tests.
struct ChainTrace {
  std::vector<std::uint8_t> accepted;    // every MH decision, all phases, in order
  std::vector<std::uint8_t> in_surprise; // phase 3 only
  std::vector<double> d_samples;         // phase 3 only
  std::vector<double> s_samples;         // phase 3 only
  PosteriorPoint initial;
};

/// One adaptive-Metropolis chain targeting the (d, s) posterior of two segments.
///
/// Phase 1 (t0 steps) starts from a Gaussian draw around the moment estimates
/// and runs coordinate-wise random-walk Metropolis with per-coordinate step
/// sizes tuned toward 44% acceptance. The covariance of the second half of
/// phase 1 seeds phase 2, which proposes jointly and adapts the covariance
/// every step. Phase 3 (mciter steps) freezes the covariance and counts the
/// states whose posterior exceeds the best value attainable under d = 1.
///
/// The random stream depends only on (cfg.seed, chain_id). Throws
/// InvalidArgument when either segment has zero energy.
ChainResult run_chain(const SegmentStats& a, const SegmentStats& b, const McmcConfig& cfg, std::uint64_t chain_id,
                      ChainTrace* trace = nullptr);

}  // namespace seqseg
