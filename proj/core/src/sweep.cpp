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

#include "seqseg/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <memory>
#include <ostream>

#include "seqseg/errors.hpp"
#include "seqseg/rng.hpp"

namespace seqseg {

namespace {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string delta_label(const SimSpec& spec) {
  std::vector<double> distinct;
  for (double d : spec.deltas) {
    if (d != 1.0 && std::find(distinct.begin(), distinct.end(), d) == distinct.end()) {
      distinct.push_back(d);
    }
  }
  if (distinct.empty()) {
    return "1";
  }
  if (distinct.size() == 1) {
    return format_number(distinct.front());
  }
  std::string out;
  for (std::size_t i = 0; i < spec.deltas.size(); ++i) {
    out += (i ? ";" : "") + format_number(spec.deltas[i]);
  }
  return out;
}

SweepReport sweep(const std::vector<SweepCase>& cases, const std::vector<double>& betas,
                  const std::vector<double>& alphas, std::size_t repeats, const SegConfig& cfg,
                  const SweepOptions& options) {
  if (cases.empty() || betas.empty() || alphas.empty()) {
    throw InvalidArgument("sweep needs at least one case, one beta and one alpha");
  }
  if (repeats < 1) {
    throw InvalidArgument("repeats must be >= 1");
  }
  for (double alpha : alphas) {
    SegConfig probe = cfg;
    probe.alpha = alpha;
    for (double beta : betas) {
      probe.beta = beta;
      probe.resolved();
    }
  }

  using Clock = std::chrono::steady_clock;
  SweepReport report;
  for (const SweepCase& c : cases) {
    const Signal signal = simulate_signal(c.spec);
    CutCache cuts;
    EvidenceCache evidence;
    SegmentHooks hooks;
    if (options.reuse_node_results) {
      hooks = {&cuts, &evidence};
    }
    for (double beta : betas) {
      for (double alpha : alphas) {
        SweepRow row;
        row.delta = c.label;
        row.beta = beta;
        row.alpha = alpha;
        double total = 0.0;
        for (std::size_t r = 0; r < repeats; ++r) {
          SegConfig run = cfg;
          run.beta = beta;
          run.alpha = alpha;
          run.seed = options.distinct_seeds ? derive_seed(cfg.seed, {r}) : cfg.seed;
          row.seeds.push_back(run.seed);
          try {
            const auto t0 = Clock::now();
            const SegmentationResult res = segment(signal, run, hooks);
            total += std::chrono::duration<double>(Clock::now() - t0).count();
            row.segment_counts.push_back(res.segments.size());
            ++row.runs;
          } catch (const std::exception& e) {
            row.errors.emplace_back(e.what());
          }
        }
        if (row.runs > 0) {
          const auto [lo, hi] = std::minmax_element(row.segment_counts.begin(), row.segment_counts.end());
          row.min_segments = *lo;
          row.max_segments = *hi;
          row.mean_time_s = total / static_cast<double>(row.runs);
        }
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

void write_sweep_csv(std::ostream& out, const SweepReport& report) {
  out << "delta,beta,alpha,min_segments,max_segments,mean_time_s,runs\n";
  char time[32];
  for (const SweepRow& row : report.rows) {
    std::snprintf(time, sizeof time, "%.6f", row.mean_time_s);
    out << row.delta << ',' << format_number(row.beta) << ',' << format_number(row.alpha) << ',';
    if (row.min_segments) {
      out << *row.min_segments << ',' << *row.max_segments;
    } else {
      out << "error,error";
    }
    out << ',' << time << ',' << row.runs << '\n';
  }
}

}  // namespace seqseg
