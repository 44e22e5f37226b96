// Copyright 2026 The plstomo Authors
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

// plstomo command-line front end.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "plstomo/analyze.hpp"
#include "plstomo/errors.hpp"
#include "plstomo/estimate.hpp"
#include "plstomo/harness.hpp"
#include "plstomo/io.hpp"
#include "plstomo/kernels.hpp"

namespace {

using namespace plstomo;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitViolation = 4;

std::atomic<bool> g_stop{false};

extern "C" void on_interrupt(int) { g_stop = true; }

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct SingleRun {
  std::string scheme = "mub";
  int d = 0;
  int k = 0;
  std::uint64_t n = 1000;
  std::uint64_t seed = 1;
  std::string state = "random-pure";
  bool exact = false;
  bool timing = false;

  void add_options(CLI::App* app) {
    app->add_option("--scheme", scheme, "mub | pauli-obs | pauli-basis | uniform")->capture_default_str();
    app->add_option("--d", d, "Dimension");
    app->add_option("--k", k, "Number of qubits (Pauli schemes)");
    app->add_option("--n", n, "Total number of samples")->capture_default_str();
    app->add_option("--seed", seed, "Seed")->capture_default_str();
    app->add_option("--state", state, "random-pure | random-rank:r | caricature:p | <matrix file>")
        ->capture_default_str();
    app->add_flag("--exact", exact, "Use exact Born probabilities instead of samples");
    app->add_flag("--timing", timing, "Record wall time");
  }

  Index dimension(SchemeKind kind) const {
    if (d > 0 && k > 0) throw ConfigError("give either --d or --k, not both");
    if (k > 0) {
      if (kind != SchemeKind::PauliObservables && kind != SchemeKind::PauliBasis) {
        throw ConfigError("--k applies to Pauli schemes only");
      }
      if (k > 12) throw ConfigError("--k: at most 12 qubits");
      return Index{1} << k;
    }
    if (d <= 0) throw ConfigError("--d (or --k) is required");
    return d;
  }

  TrialRecord run(MeasurementScheme& scheme_out) const {
    const SchemeKind kind = parse_scheme(scheme);
    ExperimentConfig cfg;
    cfg.scheme = kind;
    cfg.dims = {dimension(kind)};
    cfg.state = StateSpec::parse(state);
    cfg.n_grid = {n};
    validate(cfg);
    scheme_out = make_scheme(kind, cfg.dims[0]);
    const DensityMatrix rho = make_state(cfg.state, cfg.dims[0], seed);
    PipelineOptions opts;
    opts.exact_probabilities = exact;
    opts.keep_matrices = true;
    opts.timing = timing;
    return pls_pipeline(rho, scheme_out, n, seed, opts);
  }
};

struct ConfigOverrides {
  std::string config;
  std::string scheme, state, dims, n, n_mode, trials, seed, output, threads, eps, bound, rank;
  bool timing = false;

  void add_options(CLI::App* app, bool coverage) {
    app->add_option("--config", config, "key=value config file");
    app->add_option("--scheme", scheme, "mub | pauli-obs | pauli-basis | uniform");
    app->add_option("--state", state, "random-pure | random-rank:r | caricature:p | <matrix file>");
    app->add_option("--dims", dims, "Comma-separated dimensions");
    app->add_option("--n", n, "Comma-separated sample sizes");
    app->add_option("--n-mode", n_mode, "total | per_setting");
    app->add_option("--trials", trials, "Trials per point");
    app->add_option("--seed", seed, "Master seed");
    app->add_option("--output", output, "Output path, '-' for stdout");
    app->add_option("--threads", threads, std::string("Worker threads (default: $") + kThreadsEnv + ")");
    if (coverage) {
      app->add_option("--eps", eps, "Comma-separated accuracies");
      app->add_option("--bound", bound, "thm1 | essential | thm2 | thm4");
      app->add_option("--rank", rank, "Rank parameter r for thm4");
    } else {
      app->add_flag("--timing", timing, "Record wall time in runtime_ms");
    }
  }

  ExperimentConfig build() const {
    ExperimentConfig cfg = config.empty() ? ExperimentConfig{} : load_config_file(config);
    const std::pair<const char*, const std::string*> fields[] = {
        {"scheme", &scheme}, {"state", &state},     {"dims", &dims},       {"n", &n},
        {"n_mode", &n_mode}, {"trials", &trials},   {"seed", &seed},       {"output", &output},
        {"threads", &threads}, {"eps", &eps},       {"bound", &bound},     {"rank", &rank}};
    for (const auto& [key, value] : fields) {
      if (!value->empty()) apply_setting(cfg, key, *value);
    }
    if (timing) cfg.timing = true;
    return cfg;
  }
};

json record_json(const TrialRecord& rec) {
  return json{{"scheme", scheme_name(rec.scheme)},
              {"d", rec.d},
              {"n", rec.n},
              {"seed", rec.seed},
              {"r_true", rec.r_true},
              {"trace_error", rec.trace_error},
              {"op_error_L", rec.op_error_L},
              {"op_error_rho", rec.op_error_rho},
              {"x0", rec.x0},
              {"rank_estimate", rec.rank_estimate},
              {"sigma_rho", rec.sigma_rho},
              {"sigma_rho_hat", rec.sigma_rho_hat},
              {"radius_delta05", rec.radius_delta05},
              {"runtime_ms", rec.runtime_ms},
              {"projection_ms", rec.projection_ms}};
}

int cmd_simulate(const SingleRun& run) {
  MeasurementScheme scheme = MeasurementScheme::uniform(1);
  const TrialRecord rec = run.run(scheme);
  std::cout << record_json(rec).dump() << '\n';
  return kExitOk;
}

int cmd_estimate(const SingleRun& run, const std::string& out_path) {
  MeasurementScheme scheme = MeasurementScheme::uniform(1);
  const TrialRecord rec = run.run(scheme);
  if (out_path.empty() || out_path == "-") {
    io::write_matrix(std::cout, rec.estimate->matrix());
  } else {
    io::write_matrix_file(out_path, rec.estimate->matrix());
  }
  const json summary{{"trace_error", rec.trace_error},
                     {"op_error", rec.op_error_L},
                     {"x0", rec.x0},
                     {"rank", rec.rank_estimate}};
  std::cout << summary.dump() << '\n';
  return kExitOk;
}

int cmd_sweep(const ConfigOverrides& o) {
  const ExperimentConfig cfg = o.build();
  validate(cfg);
  std::signal(SIGINT, on_interrupt);
  std::signal(SIGTERM, on_interrupt);
  SweepResult result;
  if (cfg.output == "-") {
    result = run_sweep(cfg, &std::cout, &g_stop);
  } else {
    std::ofstream out(cfg.output);
    if (!out) throw IoError("cannot open for writing", cfg.output);
    result = run_sweep(cfg, &out, &g_stop);
    if (!out) throw IoError("write failed", cfg.output);
  }
  for (const auto& a : result.aggregates) {
    std::cerr << "d=" << a.d << " n=" << a.n << " trials=" << a.count << " mean=" << fmt(a.mean)
              << " median=" << fmt(a.median) << '\n';
  }
  for (const auto& s : result.slopes) std::cerr << "d=" << s.d << " slope=" << fmt(s.slope) << '\n';
  if (!result.complete) {
    std::cerr << "sweep interrupted after " << result.records.size() << " trials\n";
    return 130;
  }
  return kExitOk;
}

int cmd_coverage(const ConfigOverrides& o) {
  const ExperimentConfig cfg = o.build();
  const CoverageReport report = run_coverage_study(cfg, cfg.bound);
  if (cfg.output == "-") {
    write_coverage_report(std::cout, report);
  } else {
    std::ofstream out(cfg.output);
    if (!out) throw IoError("cannot open for writing", cfg.output);
    write_coverage_report(out, report);
  }
  std::cerr << report.points.size() << " points, " << report.violations << " violations\n";
  return report.violations > 0 ? kExitViolation : kExitOk;
}

int cmd_verify_design(const std::string& scheme, int d, const std::string& file) {
  std::vector<ComplexVector> vectors;
  if (!file.empty()) {
    vectors = io::read_vector_set_file(file).vectors;
  } else {
    if (scheme != "mub") throw ConfigError("verify-design builds MUB sets only; pass --file for other sets");
    if (d <= 0) throw ConfigError("--d is required");
    vectors = mub_vectors(d);
  }
  const DesignCheck c = verify_2design(vectors);
  std::cout << json{{"max_deviation", c.max_deviation}, {"pass", c.pass}, {"vectors", vectors.size()}}.dump()
            << '\n';
  return kExitOk;
}

struct BoundArgs {
  std::string which = "thm1";
  std::string scheme = "mub";
  int d = 2;
  double n = 1.0;
  int r = 1;
  double eps = 0.0;
  double delta = 0.05;
};

int cmd_bound(const BoundArgs& a) {
  const SchemeKind kind = parse_scheme(a.scheme);
  BoundParams p;
  p.d = a.d;
  p.n = a.n;
  p.r = a.r;
  p.epsilon = a.eps;
  p.delta = a.delta;
  if (kind != SchemeKind::UniformPovm) p.g = g_of_d(kind, a.d);
  double value = 0.0;
  if (a.which == "thm1") {
    if (kind == SchemeKind::UniformPovm) throw ConfigError("thm1 needs a finite scheme; use thm2 for uniform");
    value = thm1_tail(p);
  } else if (a.which == "thm2") {
    value = thm2_tail(p);
  } else if (a.which == "essential") {
    value = essential_opnorm_tail(p, kind);
  } else if (a.which == "radius") {
    value = kind == SchemeKind::UniformPovm ? uniform_confidence_radius(p, a.r) : confidence_radius(p, a.r);
  } else if (a.which == "samples") {
    if (kind == SchemeKind::UniformPovm) throw ConfigError("samples needs a finite scheme");
    std::cout << sample_complexity(p) << '\n';
    return kExitOk;
  } else {
    throw ConfigError("--which: expected thm1, thm2, essential, radius or samples");
  }
  std::printf("%.17g\n", value);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projected least squares quantum state tomography"};
  app.require_subcommand(1);
  bool show_isa = false;
  app.add_flag("--isa", show_isa, "Print the active SIMD kernel variant to stderr");

  SingleRun sim;
  auto* simulate = app.add_subcommand("simulate", "Run one tomography trial and print its record as JSON");
  sim.add_options(simulate);

  SingleRun est;
  std::string est_out;
  auto* estimate = app.add_subcommand("estimate", "Write the projected estimate and a JSON summary");
  est.add_options(estimate);
  estimate->add_option("--out", est_out, "Matrix output file (default: stdout)");

  ConfigOverrides sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Run a (d, n, trial) sweep and write CSV");
  sweep_opts.add_options(sweep, false);

  ConfigOverrides cov_opts;
  auto* cov = app.add_subcommand("coverage", "Compare empirical failure rates with a tail bound");
  cov_opts.add_options(cov, true);

  std::string vd_scheme = "mub";
  int vd_d = 0;
  std::string vd_file;
  auto* vd = app.add_subcommand("verify-design", "Check the 2-design condition of a vector set");
  vd->add_option("--scheme", vd_scheme, "mub")->capture_default_str();
  vd->add_option("--d", vd_d, "Dimension");
  vd->add_option("--file", vd_file, "Vector-set file");

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "Evaluate a bound formula");
  bound->add_option("--which", ba.which, "thm1 | thm2 | essential | radius | samples")->capture_default_str();
  bound->add_option("--scheme", ba.scheme, "mub | pauli-obs | pauli-basis | uniform")->capture_default_str();
  bound->add_option("--d", ba.d, "Dimension")->capture_default_str();
  bound->add_option("--n", ba.n, "Samples")->capture_default_str();
  bound->add_option("--r", ba.r, "Rank")->capture_default_str();
  bound->add_option("--eps", ba.eps, "Accuracy epsilon or tau")->capture_default_str();
  bound->add_option("--delta", ba.delta, "Failure probability")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  if (show_isa) std::cerr << "isa: " << kernels::isa_name(kernels::active_isa()) << '\n';

  try {
    if (*simulate) return cmd_simulate(sim);
    if (*estimate) return cmd_estimate(est, est_out);
    if (*sweep) return cmd_sweep(sweep_opts);
    if (*cov) return cmd_coverage(cov_opts);
    if (*vd) return cmd_verify_design(vd_scheme, vd_d, vd_file);
    if (*bound) return cmd_bound(ba);
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const CompletenessError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << ": " << e.path() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}
