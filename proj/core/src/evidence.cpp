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

#include "seqseg/evidence.hpp"

#include <exception>

#include <omp.h>

#include "seqseg/diagnostics.hpp"
#include "seqseg/errors.hpp"

namespace seqseg {

EvidenceResult combine_chains(std::span<const ChainResult> chains) {
  EvidenceResult out;
  std::vector<ChainMoments> d_moments;
  std::vector<ChainMoments> s_moments;
  double ev_sum = 0.0;
  double d_sum = 0.0;
  double s_sum = 0.0;
  for (const ChainResult& c : chains) {
    out.per_chain_ev.push_back(c.ev_h0);
    out.accept_rate.push_back(c.accept_rate);
    out.chain_valid.push_back(c.valid);
    if (!c.valid) {
      continue;
    }
    ++out.valid_chains;
    ev_sum += c.ev_h0;
    d_sum += c.d.mean;
    s_sum += c.s.mean;
    d_moments.push_back(c.d);
    s_moments.push_back(c.s);
  }
  if (out.valid_chains == 0) {
    throw InvalidArgument("no valid chains to combine");
  }
  const double k = static_cast<double>(out.valid_chains);
  out.ev_h0 = ev_sum / k;
  out.d_mean = d_sum / k;
  out.s_mean = s_sum / k;
  if (out.valid_chains >= 2 && d_moments.front().n >= 2) {
    out.rhat_d = gelman_rubin(std::span<const ChainMoments>(d_moments));
    out.rhat_s = gelman_rubin(std::span<const ChainMoments>(s_moments));
  }
  return out;
}

EvidenceResult fbst_evidence(const SegmentStats& a, const SegmentStats& b, const McmcConfig& config, int threads) {
  const McmcConfig cfg = config.resolved();
  const H0Maximum h0 = h0_max_posterior(a, b, cfg.beta);
  if (!(a.ssq > 0.0) || !(b.ssq > 0.0)) {
    throw InvalidArgument("degenerate segments: both pieces need positive energy");
  }

  std::vector<ChainResult> chains(cfg.nchains);
  const auto n = static_cast<std::ptrdiff_t>(cfg.nchains);
  const int workers = threads > 0 ? threads : omp_get_max_threads();
  std::exception_ptr failure;
#pragma omp parallel for num_threads(workers) schedule(static, 1) if (n > 1 && workers > 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      chains[static_cast<std::size_t>(i)] = run_chain(a, b, cfg, static_cast<std::uint64_t>(i));
    } catch (...) {
#pragma omp critical(seqseg_evidence_failure)
      failure = std::current_exception();
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  EvidenceResult out = combine_chains(chains);
  out.s0 = h0.s0;
  out.log_p0 = h0.log_p0;
  return out;
}

}  // namespace seqseg
