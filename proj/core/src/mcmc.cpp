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

#include "seqseg/mcmc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "seqseg/errors.hpp"
#include "seqseg/rng.hpp"

namespace seqseg {

namespace {

constexpr double kTargetAcceptance = 0.44;
constexpr double kStepAdaptRate = 0.5;
constexpr int kInitialDrawAttempts = 100;
constexpr int kJitterRepairs = 3;

struct Cov2 {
  double dd = 0.0;
  double ds = 0.0;
  double ss = 0.0;
};

struct Chol2 {
  double l11 = 0.0;
  double l21 = 0.0;
  double l22 = 0.0;
};

bool cholesky(const Cov2& c, Chol2& out) {
  if (!(c.dd > 0.0) || !std::isfinite(c.dd) || !std::isfinite(c.ds) || !std::isfinite(c.ss)) {
    return false;
  }
  const double l11 = std::sqrt(c.dd);
  const double l21 = c.ds / l11;
  const double rem = c.ss - l21 * l21;
  if (!(rem > 0.0)) {
    return false;
  }
  out = {l11, l21, std::sqrt(rem)};
  return true;
}

bool mh_accept(double candidate, double current, Rng& rng) {
  if (candidate == -std::numeric_limits<double>::infinity()) {
    return false;
  }
  return std::log(uniform_open(rng)) < candidate - current;
}

}  // namespace

McmcConfig McmcConfig::resolved() const {
  if (mciter < 1 || mcburn < 1 || nchains < 1) {
    throw InvalidArgument("mciter, mcburn and nchains must all be >= 1");
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw InvalidArgument("beta must be positive and finite");
  }
  McmcConfig out = *this;
  if (!t0) {
    out.t0 = std::max<std::size_t>(1, std::min<std::size_t>(1000, mcburn / 2));
  } else if (*t0 < 1 || *t0 > mcburn) {
    throw InvalidArgument("t0 must satisfy 1 <= t0 <= mcburn");
  }
  return out;
}

ChainResult run_chain(const SegmentStats& a, const SegmentStats& b, const McmcConfig& config, std::uint64_t chain_id,
                      ChainTrace* trace) {
  const McmcConfig cfg = config.resolved();
  if (!(a.ssq > 0.0) || !(b.ssq > 0.0) || a.n < 1 || b.n < 1) {
    throw InvalidArgument("degenerate segments: both pieces need positive energy");
  }
  const RelativePosterior post(a, b, cfg.beta);
  Rng rng(derive_seed(cfg.seed, {chain_id}));
  std::normal_distribution<double> normal;

  ChainResult result;
  auto record = [&](bool accepted) {
    if (trace) {
      trace->accepted.push_back(accepted ? 1 : 0);
    }
  };

  // Moment estimates; s is a deviation, hence the square root.
  const double na = static_cast<double>(std::max<std::size_t>(a.n, 2) - 1);
  const double nb = static_cast<double>(std::max<std::size_t>(b.n, 2) - 1);
  const double s_tilde = std::sqrt(a.ssq / na);
  const double d_tilde = (b.ssq / nb) * (na / a.ssq);

  double d = d_tilde;
  double s = s_tilde;
  for (int attempt = 0; attempt < kInitialDrawAttempts; ++attempt) {
    const double dd = d_tilde + d_tilde / 3.0 * normal(rng);
    const double ss = s_tilde + s_tilde / 3.0 * normal(rng);
    if (dd > 0.0 && ss > 0.0) {
      d = dd;
      s = ss;
      break;
    }
  }
  double r = post(d, s);
  if (trace) {
    trace->initial = {d, s, r};
  }

  // Phase 1: coordinate-wise random walk with self-tuning step sizes.
  const std::size_t t0 = *cfg.t0;
  const double grow = std::exp(kStepAdaptRate * (1.0 - kTargetAcceptance));
  const double shrink = std::exp(-kStepAdaptRate * kTargetAcceptance);
  double step_d = d_tilde / 3.0;
  double step_s = s_tilde / 3.0;
  const std::size_t window_start = t0 / 2;
  ChainMoments wd;
  ChainMoments ws;
  double co_moment = 0.0;  // running sum of (d - mean_d)(s - mean_s)
  for (std::size_t k = 0; k < t0; ++k) {
    const double dc = d + step_d * normal(rng);
    const double rd = post(dc, s);
    const bool acc_d = mh_accept(rd, r, rng);
    if (acc_d) {
      d = dc;
      r = rd;
    }
    step_d *= acc_d ? grow : shrink;
    record(acc_d);

    const double sc = s + step_s * normal(rng);
    const double rs = post(d, sc);
    const bool acc_s = mh_accept(rs, r, rng);
    if (acc_s) {
      s = sc;
      r = rs;
    }
    step_s *= acc_s ? grow : shrink;
    record(acc_s);

    if (k >= window_start) {
      const double delta_d = d - wd.mean;
      wd.push(d);
      ws.push(s);
      co_moment += delta_d * (s - ws.mean);
    }
  }

  // Seed the adaptive covariance from the second half of phase 1.
  std::size_t history = wd.n;
  double mean_d = wd.mean;
  double mean_s = ws.mean;
  Cov2 cov;
  Chol2 chol;
  bool seeded = false;
  if (history >= 3) {
    const double denom = static_cast<double>(history - 1);
    cov = {kProposalScale * (wd.m2 / denom + kCovarianceJitter), kProposalScale * co_moment / denom,
           kProposalScale * (ws.m2 / denom + kCovarianceJitter)};
    seeded = cholesky(cov, chol);
  }
  if (!seeded) {
    cov = {step_d * step_d, 0.0, step_s * step_s};
    history = std::max<std::size_t>(history, 2);
    if (wd.n == 0) {
      mean_d = d;
      mean_s = s;
    }
    if (!cholesky(cov, chol)) {
      result.valid = false;
    }
  }
  Cov2 last_valid = cov;

  auto propose = [&](const Chol2& l, double& dc, double& sc) {
    const double z1 = normal(rng);
    const double z2 = normal(rng);
    dc = d + l.l11 * z1;
    sc = s + l.l21 * z1 + l.l22 * z2;
  };

  // Phase 2: joint proposals, covariance adapted after every step.
  const std::size_t adapt_steps = cfg.mcburn - t0;
  for (std::size_t k = 0; k < adapt_steps && result.valid; ++k) {
    double dc = 0.0;
    double sc = 0.0;
    propose(chol, dc, sc);
    const double rc = post(dc, sc);
    const bool acc = mh_accept(rc, r, rng);
    if (acc) {
      d = dc;
      s = sc;
      r = rc;
    }
    record(acc);

    const double t = static_cast<double>(history);
    const double keep = (t - 1.0) / t;
    const double gain = kProposalScale / t;
    if (cfg.adaptation == AdaptationRule::kRunningCovariance) {
      const double ed = d - mean_d;
      const double es = s - mean_s;
      const double w = t / (t + 1.0);
      cov = {keep * cov.dd + gain * (w * ed * ed + kCovarianceJitter), keep * cov.ds + gain * (w * ed * es),
             keep * cov.ss + gain * (w * es * es + kCovarianceJitter)};
      mean_d += ed / (t + 1.0);
      mean_s += es / (t + 1.0);
    } else {
      const double next_d = mean_d + (d - mean_d) / (t + 1.0);
      const double next_s = mean_s + (s - mean_s) / (t + 1.0);
      cov = {keep * cov.dd + gain * (t * mean_d * mean_d - (t + 1.0) * next_d * next_d + kCovarianceJitter),
             keep * cov.ds + gain * (t * mean_d * mean_s - (t + 1.0) * next_d * next_s),
             keep * cov.ss + gain * (t * mean_s * mean_s - (t + 1.0) * next_s * next_s + kCovarianceJitter)};
      mean_d = next_d;
      mean_s = next_s;
    }
    ++history;

    bool ok = cholesky(cov, chol);
    for (int i = 0; i < kJitterRepairs && !ok; ++i) {
      cov.dd += kCovarianceJitter;
      cov.ss += kCovarianceJitter;
      ok = cholesky(cov, chol);
    }
    if (!ok) {
      ++result.covariance_repairs;
      cov = {last_valid.dd, 0.0, last_valid.ss};
      ok = cholesky(cov, chol);
    }
    if (ok) {
      last_valid = cov;
    } else {
      result.valid = false;
    }
  }

  // Phase 3: fixed proposal; count states inside the surprise set.
  std::size_t accepted = 0;
  if (result.valid) {
    if (trace) {
      trace->in_surprise.reserve(cfg.mciter);
      trace->d_samples.reserve(cfg.mciter);
      trace->s_samples.reserve(cfg.mciter);
    }
    for (std::size_t k = 0; k < cfg.mciter; ++k) {
      double dc = 0.0;
      double sc = 0.0;
      propose(chol, dc, sc);
      const double rc = post(dc, sc);
      const bool acc = mh_accept(rc, r, rng);
      if (acc) {
        d = dc;
        s = sc;
        r = rc;
        ++accepted;
      }
      record(acc);
      const bool surprise = r > 0.0;
      result.surprise_count += surprise ? 1 : 0;
      result.d.push(d);
      result.s.push(s);
      if (trace) {
        trace->in_surprise.push_back(surprise ? 1 : 0);
        trace->d_samples.push_back(d);
        trace->s_samples.push_back(s);
      }
    }
  }
  const double iters = static_cast<double>(cfg.mciter);
  result.accept_rate = static_cast<double>(accepted) / iters;
  result.ev_h0 = 1.0 - static_cast<double>(result.surprise_count) / iters;
  return result;
}

}  // namespace seqseg
