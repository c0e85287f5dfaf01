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

#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seqseg/bench.hpp"
#include "seqseg/errors.hpp"
#include "seqseg/recording.hpp"
#include "seqseg/segmenter.hpp"
#include "seqseg/signal_io.hpp"
#include "seqseg/simulate.hpp"
#include "seqseg/sweep.hpp"

namespace seqseg::cli {

namespace {

using nlohmann::json;

const std::map<std::string, AdaptationRule> kAdaptationNames{
    {"running-covariance", AdaptationRule::kRunningCovariance},
    {"no-outer-product", AdaptationRule::kWithoutCurrentOuterProduct},
};

const std::map<std::string, DeltaScale> kDeltaScaleNames{
    {"variance", DeltaScale::kVariance},
    {"amplitude", DeltaScale::kAmplitude},
};

const std::map<std::string, WavEncoding> kEncodingNames{
    {"pcm8", WavEncoding::kPcm8},   {"pcm16", WavEncoding::kPcm16},     {"pcm24", WavEncoding::kPcm24},
    {"pcm32", WavEncoding::kPcm32}, {"float32", WavEncoding::kFloat32},
};

template <typename Map>
std::string name_of(const Map& names, typename Map::mapped_type value) {
  for (const auto& [name, v] : names) {
    if (v == value) {
      return name;
    }
  }
  return "unknown";
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json config_json(const SegConfig& c) {
  return {
      {"beta", c.beta},
      {"alpha", c.alpha},
      {"mciter", c.mciter},
      {"mcburn", c.mcburn},
      {"nchains", c.nchains},
      {"t0", c.t0 ? json(*c.t0) : json(nullptr)},
      {"seed", c.seed},
      {"minlength", c.minlength ? json(*c.minlength) : json(nullptr)},
      {"tres", c.tres},
      {"threads", c.threads},
      {"adaptation", name_of(kAdaptationNames, c.adaptation)},
  };
}

json evidence_json(const EvidenceResult& e) {
  return {
      {"ev_h0", e.ev_h0},
      {"per_chain_ev", e.per_chain_ev},
      {"accept_rate", e.accept_rate},
      {"valid_chains", e.valid_chains},
      {"d_mean", e.d_mean},
      {"s_mean", e.s_mean},
      {"rhat_d", optional_json(e.rhat_d)},
      {"rhat_s", optional_json(e.rhat_s)},
      {"s0", e.s0},
  };
}

void log_config(std::ostream& err, const std::string& command, const json& cfg) {
  err << "seqseg " << command << ": resolved config " << cfg.dump() << '\n';
}

/// Writes `text` to `path` when given, else to `out`.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) {
    throw InputError("cannot write '" + path + "'");
  }
}

struct SegFlags {
  SegConfig cfg;
  std::optional<std::size_t> t0;
  std::optional<std::size_t> minlength;
  std::string adaptation = "running-covariance";

  void add_to(CLI::App& app) {
    app.add_option("--beta", cfg.beta, "Laplace prior scale on the variance ratio")
        ->envname("SEQSEG_BETA")
        ->capture_default_str();
    app.add_option("--alpha", cfg.alpha, "Split when evidence for equal variances is below this")
        ->envname("SEQSEG_ALPHA")
        ->capture_default_str();
    app.add_option("--mciter", cfg.mciter, "Counting iterations per chain")
        ->envname("SEQSEG_MCITER")
        ->capture_default_str();
    app.add_option("--mcburn", cfg.mcburn, "Burn-in iterations per chain")
        ->envname("SEQSEG_MCBURN")
        ->capture_default_str();
    app.add_option("--nchains", cfg.nchains, "Chains per evidence evaluation")
        ->envname("SEQSEG_NCHAINS")
        ->capture_default_str();
    app.add_option("--t0", t0, "Coordinate-wise warm-up length (default min(1000, mcburn/2))")->envname("SEQSEG_T0");
    app.add_option("--minlength", minlength, "Minimum segment length in samples (default fs/2)")
        ->envname("SEQSEG_MINLENGTH");
    app.add_option("--tres", cfg.tres, "Time resolution of the cut grid")
        ->envname("SEQSEG_TRES")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Random seed")->envname("SEQSEG_SEED")->capture_default_str();
    app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)")
        ->envname("SEQSEG_THREADS")
        ->capture_default_str();
    app.add_option("--adaptation", adaptation, "Burn-in covariance update")
        ->envname("SEQSEG_ADAPTATION")
        ->check(CLI::IsMember(std::vector<std::string>{"running-covariance", "no-outer-product"}))
        ->capture_default_str();
  }

  SegConfig config() const {
    SegConfig c = cfg;
    c.t0 = t0;
    c.minlength = minlength;
    c.adaptation = kAdaptationNames.at(adaptation);
    return c;
  }
};

int cmd_segment(const std::string& input, const std::optional<double>& fs, const SegFlags& flags,
                const std::string& format, const std::string& output, std::ostream& out, std::ostream& err) {
  const Signal signal = load_signal(input, fs);
  for (const std::string& w : signal.warnings()) {
    err << "seqseg segment: warning: " << w << '\n';
  }
  const double rate = signal.sample_rate().value_or(kDefaultSampleRate);
  const SegConfig cfg = flags.config().resolved(signal.sample_rate());
  json logged = config_json(cfg);
  logged["input"] = input;
  logged["sample_rate"] = rate;
  logged["format"] = format;
  log_config(err, "segment", logged);

  const SegmentationResult res = segment(signal, cfg);
  std::optional<RecordingMeta> meta;
  if (signal.origin()) {
    meta = RecordingMeta{std::filesystem::path(input).filename().string(), *signal.origin(), rate};
  }
  auto time_of = [&](std::size_t index) -> json {
    return meta ? json(format_timestamp(index_to_time(*meta, index))) : json(nullptr);
  };
  std::map<std::size_t, double> evidence_at;
  for (const NodeDecision& d : res.decisions) {
    if (d.accepted) {
      evidence_at[d.cut->t] = d.evidence->ev_h0;
    }
  }

  std::string text;
  if (format == "json") {
    json doc;
    doc["input"] = input;
    doc["samples"] = signal.size();
    doc["sample_rate"] = rate;
    doc["origin"] = meta ? json(format_timestamp(meta->start_time)) : json(nullptr);
    doc["config"] = config_json(cfg);
    doc["changepoints"] = json::array();
    for (std::size_t cp : res.changepoints) {
      doc["changepoints"].push_back({{"index", cp}, {"time", time_of(cp)}, {"ev_h0", evidence_at.at(cp)}});
    }
    doc["segments"] = json::array();
    for (const Segment& s : res.segments) {
      doc["segments"].push_back(
          {{"start", s.start}, {"end", s.end}, {"start_time", time_of(s.start)}, {"power", s.power}});
    }
    doc["decisions"] = json::array();
    for (const NodeDecision& d : res.decisions) {
      json node{{"start", d.start},
                {"end", d.end},
                {"status", std::string(to_string(d.status))},
                {"accepted", d.accepted},
                {"cut", d.cut ? json(d.cut->t) : json(nullptr)},
                {"log_post", d.cut ? json(d.cut->log_post) : json(nullptr)},
                {"evidence", d.evidence ? evidence_json(*d.evidence) : json(nullptr)}};
      doc["decisions"].push_back(std::move(node));
    }
    text = doc.dump(2) + "\n";
  } else {
    std::ostringstream csv;
    csv << "start,end,start_time,power,ev_h0\n";
    char power[40];
    for (const Segment& s : res.segments) {
      std::snprintf(power, sizeof power, "%.10g", s.power);
      csv << s.start << ',' << s.end << ',';
      if (meta) {
        csv << format_timestamp(index_to_time(*meta, s.start));
      }
      csv << ',' << power << ',';
      if (auto it = evidence_at.find(s.start); it != evidence_at.end()) {
        char ev[40];
        std::snprintf(ev, sizeof ev, "%.6f", it->second);
        csv << ev;
      }
      csv << '\n';
    }
    text = csv.str();
  }
  emit(output, text, out);
  err << "seqseg segment: " << res.segments.size() << " segments, " << res.decisions.size() << " nodes\n";
  return kExitOk;
}

void write_text_samples(const std::string& path, const std::vector<double>& samples) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw InputError("cannot write '" + path + "'");
  }
  file << "amplitude\n";
  char buf[40];
  for (double v : samples) {
    std::snprintf(buf, sizeof buf, "%.17g\n", v);
    file << buf;
  }
  if (!file) {
    throw InputError("short write to '" + path + "'");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sequential Bayesian segmentation of long signals by variance changes", "seqseg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "seqseg 0.1.0");

  // segment
  CLI::App* seg = app.add_subcommand("segment", "Segment a WAV, CSV or float64 file");
  std::string seg_input;
  std::optional<double> seg_fs;
  std::string seg_format = "json";
  std::string seg_output;
  SegFlags seg_flags;
  seg->add_option("input", seg_input, "Input signal (.wav, .csv/.txt, anything else float64)")->required();
  seg->add_option("--fs", seg_fs, "Sample rate for headerless inputs")->envname("SEQSEG_FS");
  seg_flags.add_to(*seg);
  seg->add_option("--format", seg_format, "Report format")
      ->envname("SEQSEG_FORMAT")
      ->check(CLI::IsMember(std::vector<std::string>{"json", "csv"}))
      ->capture_default_str();
  seg->add_option("-o,--output", seg_output, "Report path (default stdout)");

  // simulate
  CLI::App* sim = app.add_subcommand("simulate", "Write a piecewise Gaussian test signal");
  std::vector<std::size_t> sim_boundaries;
  std::vector<double> sim_deltas;
  std::string sim_preset;
  double sim_delta = 1.5;
  double sim_sigma0 = 1.0;
  std::uint64_t sim_seed = 0;
  double sim_fs = kDefaultSampleRate;
  std::string sim_scale = "variance";
  std::string sim_encoding = "float32";
  std::string sim_output;
  sim->add_option("--boundaries", sim_boundaries, "Segment boundaries, starting at 0")->delimiter(',');
  sim->add_option("--deltas", sim_deltas, "Per-segment multipliers")->delimiter(',');
  sim->add_option("--preset", sim_preset, "Six-segment benchmark layout")
      ->check(CLI::IsMember(std::vector<std::string>{"alternating", "mixed"}));
  sim->add_option("--delta", sim_delta, "Delta for --preset alternating")->capture_default_str();
  sim->add_option("--sigma0", sim_sigma0, "Base standard deviation")->capture_default_str();
  sim->add_option("--seed", sim_seed, "Random seed")->envname("SEQSEG_SEED")->capture_default_str();
  sim->add_option("--fs", sim_fs, "Sample rate written to WAV headers")->capture_default_str();
  sim->add_option("--delta-scale", sim_scale, "What delta multiplies")
      ->check(CLI::IsMember(std::vector<std::string>{"variance", "amplitude"}))
      ->capture_default_str();
  sim->add_option("--encoding", sim_encoding, "WAV sample encoding")
      ->check(CLI::IsMember(std::vector<std::string>{"pcm8", "pcm16", "pcm24", "pcm32", "float32"}))
      ->capture_default_str();
  sim->add_option("-o,--output", sim_output, "Output (.wav, .csv/.txt, anything else float64)")->required();

  // sweep
  CLI::App* swp = app.add_subcommand("sweep", "Segment count sensitivity over beta and alpha grids");
  std::string swp_preset = "alternating";
  std::vector<double> swp_deltas{1.0, 1.1, 1.5};
  std::vector<double> swp_betas{1.0, 0.1, 0.01, 0.001, 0.0001, 0.00001};
  std::vector<double> swp_alphas{0.1, 0.5, 0.9, 0.99};
  std::size_t swp_repeats = 30;
  std::uint64_t swp_signal_seed = 0;
  std::string swp_scale = "variance";
  bool swp_no_cache = false;
  bool swp_equal_seeds = false;
  std::string swp_format = "csv";
  std::string swp_output;
  SegFlags swp_flags;
  swp->add_option("--preset", swp_preset, "Signal layout")
      ->check(CLI::IsMember(std::vector<std::string>{"alternating", "mixed"}))
      ->capture_default_str();
  swp->add_option("--deltas", swp_deltas, "Deltas for the alternating layout, one case each")
      ->delimiter(',')
      ->capture_default_str();
  swp->add_option("--betas", swp_betas, "Beta grid")->delimiter(',')->capture_default_str();
  swp->add_option("--alphas", swp_alphas, "Alpha grid")->delimiter(',')->capture_default_str();
  swp->add_option("--repeats", swp_repeats, "Runs per cell")->capture_default_str();
  swp->add_option("--signal-seed", swp_signal_seed, "Seed of the simulated signals")->capture_default_str();
  swp->add_option("--delta-scale", swp_scale, "What delta multiplies")
      ->check(CLI::IsMember(std::vector<std::string>{"variance", "amplitude"}))
      ->capture_default_str();
  swp->add_flag("--no-cache", swp_no_cache, "Recompute cuts and evidence in every run");
  swp->add_flag("--equal-seeds", swp_equal_seeds, "Use the same seed for every repeat");
  swp_flags.add_to(*swp);
  swp->add_option("--format", swp_format, "Report format")
      ->envname("SEQSEG_FORMAT")
      ->check(CLI::IsMember(std::vector<std::string>{"json", "csv"}))
      ->capture_default_str();
  swp->add_option("-o,--output", swp_output, "Report path (default stdout)");

  // bench
  CLI::App* bch = app.add_subcommand("bench", "Time the cut scan over sizes and resolutions");
  std::vector<std::size_t> bch_sizes{10000, 100000, 1000000};
  std::vector<std::size_t> bch_resolutions{1, 10, 100, 1000};
  BenchConfig bch_cfg;
  std::string bch_format = "csv";
  std::string bch_output;
  bch->add_option("--sizes", bch_sizes, "Signal lengths")->delimiter(',')->capture_default_str();
  bch->add_option("--resolutions", bch_resolutions, "Grid strides")->delimiter(',')->capture_default_str();
  bch->add_option("--seed", bch_cfg.seed, "Random seed")->envname("SEQSEG_SEED")->capture_default_str();
  bch->add_option("--threads", bch_cfg.threads, "Worker threads (0 = all cores)")
      ->envname("SEQSEG_THREADS")
      ->capture_default_str();
  bch->add_option("--repeats", bch_cfg.repeats, "Best-of count per cell")->capture_default_str();
  bch->add_option("--format", bch_format, "Report format")
      ->envname("SEQSEG_FORMAT")
      ->check(CLI::IsMember(std::vector<std::string>{"json", "csv"}))
      ->capture_default_str();
  bch->add_option("-o,--output", bch_output, "Report path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (seg->parsed()) {
      return cmd_segment(seg_input, seg_fs, seg_flags, seg_format, seg_output, out, err);
    }

    if (sim->parsed()) {
      SimSpec spec;
      if (!sim_preset.empty()) {
        spec = sim_preset == "mixed" ? mixed_spec(sim_seed) : alternating_spec(sim_delta, sim_seed);
      } else {
        spec.boundaries = sim_boundaries;
        spec.deltas = sim_deltas;
        spec.seed = sim_seed;
      }
      spec.sigma0 = sim_sigma0;
      spec.scale = kDeltaScaleNames.at(sim_scale);
      spec.validate();
      json logged{{"boundaries", spec.boundaries}, {"deltas", spec.deltas}, {"sigma0", spec.sigma0},
                  {"seed", spec.seed},             {"fs", sim_fs},         {"delta_scale", sim_scale},
                  {"encoding", sim_encoding},      {"output", sim_output}};
      log_config(err, "simulate", logged);
      const std::vector<double> samples = simulate_samples(spec);
      const std::string ext = std::filesystem::path(sim_output).extension().string();
      if (ext == ".wav" || ext == ".WAV") {
        write_wav(sim_output, samples, sim_fs, kEncodingNames.at(sim_encoding));
      } else if (ext == ".csv" || ext == ".txt") {
        write_text_samples(sim_output, samples);
      } else {
        write_f64(sim_output, samples);
      }
      err << "seqseg simulate: wrote " << samples.size() << " samples to " << sim_output << '\n';
      return kExitOk;
    }

    if (swp->parsed()) {
      std::vector<SweepCase> cases;
      if (swp_preset == "mixed") {
        SimSpec spec = mixed_spec(swp_signal_seed);
        spec.scale = kDeltaScaleNames.at(swp_scale);
        cases.push_back({delta_label(spec), spec});
      } else {
        for (double d : swp_deltas) {
          SimSpec spec = alternating_spec(d, swp_signal_seed);
          spec.scale = kDeltaScaleNames.at(swp_scale);
          cases.push_back({delta_label(spec), spec});
        }
      }
      if (cases.empty() || swp_betas.empty() || swp_alphas.empty()) {
        throw InvalidArgument("sweep needs nonempty --deltas, --betas and --alphas");
      }
      SegConfig cfg = swp_flags.config();
      SweepOptions options;
      options.distinct_seeds = !swp_equal_seeds;
      options.reuse_node_results = !swp_no_cache;
      json logged = config_json(cfg.resolved());
      logged.erase("beta");
      logged.erase("alpha");
      logged["preset"] = swp_preset;
      logged["deltas"] = swp_deltas;
      logged["betas"] = swp_betas;
      logged["alphas"] = swp_alphas;
      logged["repeats"] = swp_repeats;
      logged["signal_seed"] = swp_signal_seed;
      logged["delta_scale"] = swp_scale;
      logged["cache"] = options.reuse_node_results;
      logged["equal_seeds"] = swp_equal_seeds;
      log_config(err, "sweep", logged);

      const SweepReport report = sweep(cases, swp_betas, swp_alphas, swp_repeats, cfg, options);
      if (!report.rows.empty()) {
        std::ostringstream seeds;
        for (std::size_t i = 0; i < report.rows.front().seeds.size(); ++i) {
          seeds << (i ? "," : "") << report.rows.front().seeds[i];
        }
        err << "seqseg sweep: repeat seeds (every row) " << seeds.str() << '\n';
      }
      for (const SweepRow& row : report.rows) {
        for (const std::string& e : row.errors) {
          err << "seqseg sweep: delta=" << row.delta << " beta=" << row.beta << " alpha=" << row.alpha
              << " run failed: " << e << '\n';
        }
      }
      std::string text;
      if (swp_format == "json") {
        json doc = json::array();
        for (const SweepRow& row : report.rows) {
          doc.push_back({{"delta", row.delta},
                         {"beta", row.beta},
                         {"alpha", row.alpha},
                         {"min_segments", row.min_segments ? json(*row.min_segments) : json(nullptr)},
                         {"max_segments", row.max_segments ? json(*row.max_segments) : json(nullptr)},
                         {"mean_time_s", row.mean_time_s},
                         {"runs", row.runs},
                         {"segment_counts", row.segment_counts},
                         {"seeds", row.seeds},
                         {"errors", row.errors}});
        }
        text = doc.dump(2) + "\n";
      } else {
        std::ostringstream csv;
        write_sweep_csv(csv, report);
        text = csv.str();
      }
      emit(swp_output, text, out);
      return kExitOk;
    }

    if (bch->parsed()) {
      json logged{{"sizes", bch_sizes}, {"resolutions", bch_resolutions}, {"seed", bch_cfg.seed},
                  {"threads", bch_cfg.threads}, {"repeats", bch_cfg.repeats}};
      log_config(err, "bench", logged);
      const std::vector<BenchRow> rows = bench_resolution(bch_sizes, bch_resolutions, bch_cfg);
      for (const BenchRow& row : rows) {
        err << "seqseg bench: size=" << row.size << " resolution=" << row.resolution
            << " evaluations=" << row.evaluations << " seed=" << row.seed << '\n';
      }
      std::string text;
      if (bch_format == "json") {
        json doc = json::array();
        for (const BenchRow& row : rows) {
          doc.push_back({{"size", row.size},
                         {"resolution", row.resolution},
                         {"time_s", row.time_s},
                         {"evaluations", row.evaluations},
                         {"seed", row.seed}});
        }
        text = doc.dump(2) + "\n";
      } else {
        std::ostringstream csv;
        write_bench_csv(csv, rows);
        text = csv.str();
      }
      emit(bch_output, text, out);
      return kExitOk;
    }
  } catch (const InvalidArgument& e) {
    err << "seqseg: error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    err << "seqseg: error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "seqseg: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace seqseg::cli
