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

#pragma once

// Experiment configuration, parallel trial sweeps, CSV output and coverage
// studies.
//
// Config files are flat `key = value` text; '#' starts a comment. Keys:
//   scheme   mub | pauli-obs | pauli-basis | uniform
//   state    random-pure | random-rank:<r> | caricature:<p> | <path to matrix text>
//   dims     comma-separated dimensions (prime for mub, powers of two for Pauli)
//   n        comma-separated, strictly increasing sample sizes
//   n_mode   total (n is the total sample count) | per_setting (n per setting)
//   trials   trials per (d, n) point
//   seed     master seed
//   output   CSV path ("-" for stdout)
//   threads  worker threads (0: PLSTOMO_THREADS or the hardware count)
//   eps      comma-separated accuracies for coverage studies
//   bound    thm1 | essential | thm2 | thm4
//   rank     rank parameter r for thm4 (0: rank of the true state)
//   timing   0 | 1; record wall time in runtime_ms

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "plstomo/analyze.hpp"
#include "plstomo/linalg.hpp"
#include "plstomo/measurements.hpp"
#include "plstomo/trial_record.hpp"

namespace plstomo {

/// Environment variable holding the default number of worker threads.
inline constexpr const char* kThreadsEnv = "PLSTOMO_THREADS";

struct StateSpec {
  enum class Kind { RandomPure, RandomRank, Caricature, File };
  Kind kind = Kind::RandomPure;
  Index rank = 1;
  double p = 0.0;
  std::string path;

  /// Throws ConfigError on malformed text.
  static StateSpec parse(const std::string& text);
  std::string str() const;
};

enum class NMode { Total, PerSetting };
enum class BoundKind { Thm1, Essential, Thm2, Thm4 };

SchemeKind parse_scheme(const std::string& name);
BoundKind parse_bound(const std::string& name);
const char* bound_name(BoundKind kind) noexcept;

struct ExperimentConfig {
  SchemeKind scheme = SchemeKind::StructuredPovm;
  StateSpec state;
  std::vector<Index> dims{5};
  std::vector<std::uint64_t> n_grid{1000};
  NMode n_mode = NMode::Total;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::string output = "-";
  unsigned threads = 0;
  std::vector<double> eps_grid;
  BoundKind bound = BoundKind::Thm1;
  Index rank = 0;
  bool timing = false;
};

/// Applies one key/value pair. Throws ConfigError naming the key.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config_file(const std::filesystem::path& path);
/// Throws ConfigError naming the first invalid field.
void validate(const ExperimentConfig& cfg);

/// PLSTOMO_THREADS if set to a positive integer, else the hardware thread count.
unsigned default_threads();
unsigned effective_threads(const ExperimentConfig& cfg);

/// Scheme of the given kind acting on C^d.
MeasurementScheme make_scheme(SchemeKind kind, Index d);
/// Draws (or loads) a state; random kinds use the stream (seed, State).
DensityMatrix make_state(const StateSpec& spec, Index d, std::uint64_t seed);
/// Total samples for a grid value under the config's n_mode.
std::uint64_t total_samples(const ExperimentConfig& cfg, const MeasurementScheme& scheme, std::uint64_t n);

/// Seed of trial t at grid point (d index, n index).
std::uint64_t trial_seed(std::uint64_t master, std::size_t d_index, std::size_t n_index, std::size_t trial);

struct Aggregate {
  Index d = 0;
  std::uint64_t n = 0;
  std::size_t count = 0;
  double mean = 0.0;
  double median = 0.0;
  double q10 = 0.0;
  double q90 = 0.0;
};

struct SlopeFit {
  Index d = 0;
  /// Least-squares slope of log(mean trace error) against log(n).
  double slope = 0.0;
  double intercept = 0.0;
};

struct SweepResult {
  std::vector<TrialRecord> records;
  std::vector<Aggregate> aggregates;
  std::vector<SlopeFit> slopes;
  bool complete = true;
};

/// Trace-error statistics per (d, n), in ascending (d, n) order.
std::vector<Aggregate> aggregate(std::span<const TrialRecord> records);
std::vector<SlopeFit> fit_slopes(std::span<const Aggregate> aggregates);

/// Runs every trial on a work queue of effective_threads(cfg) workers. Rows
/// are streamed to `csv` (if given) in (d, n, trial) order as they complete.
/// Setting `stop` ends the sweep early: the finished prefix is kept and the
/// CSV gets a trailing "# incomplete" line.
SweepResult run_sweep(const ExperimentConfig& cfg, std::ostream* csv = nullptr,
                      const std::atomic<bool>* stop = nullptr);

inline constexpr const char* kCsvHeader =
    "scheme,d,r_true,n,trial,seed,trace_error,op_error_L,x0,rank_estimate,sigma_1,radius_delta05,runtime_ms";

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const TrialRecord& rec);
void emit_csv(const SweepResult& result, std::ostream& out);
/// Throws IoError carrying the path.
void emit_csv(const SweepResult& result, const std::filesystem::path& path);
/// Reads rows written by emit_csv. sigma_rho holds sigma_1 only.
std::vector<TrialRecord> parse_csv(std::istream& in);

struct CoveragePoint {
  Index d = 0;
  std::uint64_t n = 0;
  double epsilon = 0.0;
  CoverageCheck check;
};

struct CoverageReport {
  BoundKind bound = BoundKind::Thm1;
  std::vector<CoveragePoint> points;
  std::size_t violations = 0;
};

/// For every (d, n) runs cfg.trials trials on one fixed state and compares
/// the empirical failure frequency at each eps with the selected bound.
CoverageReport run_coverage_study(const ExperimentConfig& cfg, BoundKind bound);
void write_coverage_report(std::ostream& out, const CoverageReport& report);

}  // namespace plstomo
