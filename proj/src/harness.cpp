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

#include "plstomo/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "plstomo/errors.hpp"
#include "plstomo/estimate.hpp"
#include "plstomo/io.hpp"

namespace plstomo {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw ConfigError(key + ": cannot parse '" + text + "'");
  return value;
}

double parse_real(const std::string& key, const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw ConfigError(key + ": cannot parse '" + text + "'");
  }
  return v;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round_to_csv(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

// Runs work(i) for i in [0, jobs) on `threads` workers and hands results to
// sink(i, value) on the calling thread in index order. Returns the number of
// results delivered; fewer than `jobs` only if `stop` was raised.
template <class T>
std::size_t run_ordered(std::size_t jobs, unsigned threads, const std::atomic<bool>* stop,
                        const std::function<T(std::size_t)>& work, const std::function<void(std::size_t, T&&)>& sink) {
  std::vector<std::optional<T>> slots(jobs);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  unsigned running = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs, 1))));

  auto worker = [&] {
    for (;;) {
      if (failed.load() || (stop && stop->load())) break;
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs) break;
      try {
        T value = work(i);
        std::lock_guard lock(mu);
        slots[i] = std::move(value);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        failed = true;
      }
      cv.notify_one();
    }
    std::lock_guard lock(mu);
    --running;
    cv.notify_one();
  };

  std::vector<std::thread> pool;
  const unsigned count = running;
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);

  std::size_t delivered = 0;
  for (;;) {
    std::vector<T> ready;
    bool done = false;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return running == 0 || (delivered < jobs && slots[delivered].has_value()); });
      std::size_t i = delivered;
      while (i < jobs && slots[i].has_value()) {
        ready.push_back(std::move(*slots[i]));
        slots[i].reset();
        ++i;
      }
      done = running == 0 && (i >= jobs || !slots[i].has_value());
    }
    if (!error) {
      for (auto& v : ready) sink(delivered++, std::move(v));
    }
    if (done || delivered >= jobs) break;
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return delivered;
}

struct Point {
  std::size_t d_index;
  std::size_t n_index;
  std::size_t trial;
};

Point split_job(const ExperimentConfig& cfg, std::size_t i) {
  const std::size_t t = i % cfg.trials;
  const std::size_t rest = i / cfg.trials;
  return {rest / cfg.n_grid.size(), rest % cfg.n_grid.size(), t};
}

}  // namespace

StateSpec StateSpec::parse(const std::string& text) {
  StateSpec s;
  const std::string t = trim(text);
  if (t.empty()) throw ConfigError("state: empty specification");
  if (t == "random-pure") return s;
  if (t.rfind("random-rank:", 0) == 0) {
    s.kind = Kind::RandomRank;
    s.rank = parse_number<Index>("state", t.substr(12));
    if (s.rank < 1) throw ConfigError("state: rank must be positive");
    return s;
  }
  if (t.rfind("caricature:", 0) == 0) {
    s.kind = Kind::Caricature;
    s.p = parse_real("state", t.substr(11));
    if (s.p < 0.0 || s.p > 1.0) throw ConfigError("state: caricature weight must lie in [0, 1]");
    return s;
  }
  s.kind = Kind::File;
  s.path = t;
  return s;
}

std::string StateSpec::str() const {
  switch (kind) {
    case Kind::RandomPure:
      return "random-pure";
    case Kind::RandomRank:
      return "random-rank:" + std::to_string(rank);
    case Kind::Caricature:
      return "caricature:" + format_real(p);
    case Kind::File:
      return path;
  }
  return {};
}

SchemeKind parse_scheme(const std::string& name) {
  for (auto k : {SchemeKind::StructuredPovm, SchemeKind::PauliObservables, SchemeKind::PauliBasis,
                 SchemeKind::UniformPovm}) {
    if (name == scheme_name(k)) return k;
  }
  throw ConfigError("scheme: unknown scheme '" + name + "' (expected mub, pauli-obs, pauli-basis or uniform)");
}

BoundKind parse_bound(const std::string& name) {
  for (auto k : {BoundKind::Thm1, BoundKind::Essential, BoundKind::Thm2, BoundKind::Thm4}) {
    if (name == bound_name(k)) return k;
  }
  throw ConfigError("bound: unknown bound '" + name + "' (expected thm1, essential, thm2 or thm4)");
}

const char* bound_name(BoundKind kind) noexcept {
  switch (kind) {
    case BoundKind::Thm1:
      return "thm1";
    case BoundKind::Essential:
      return "essential";
    case BoundKind::Thm2:
      return "thm2";
    case BoundKind::Thm4:
      return "thm4";
  }
  return "?";
}

void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "scheme") {
    cfg.scheme = parse_scheme(value);
  } else if (key == "state") {
    cfg.state = StateSpec::parse(value);
  } else if (key == "dims") {
    cfg.dims.clear();
    for (const auto& item : split(value, ',')) cfg.dims.push_back(parse_number<Index>(key, item));
  } else if (key == "n") {
    cfg.n_grid.clear();
    for (const auto& item : split(value, ',')) cfg.n_grid.push_back(parse_number<std::uint64_t>(key, item));
  } else if (key == "n_mode") {
    if (value == "total") {
      cfg.n_mode = NMode::Total;
    } else if (value == "per_setting") {
      cfg.n_mode = NMode::PerSetting;
    } else {
      throw ConfigError("n_mode: expected total or per_setting, got '" + value + "'");
    }
  } else if (key == "trials") {
    cfg.trials = parse_number<std::size_t>(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "output") {
    cfg.output = value;
  } else if (key == "threads") {
    cfg.threads = parse_number<unsigned>(key, value);
  } else if (key == "eps") {
    cfg.eps_grid.clear();
    for (const auto& item : split(value, ',')) cfg.eps_grid.push_back(parse_real(key, item));
  } else if (key == "bound") {
    cfg.bound = parse_bound(value);
  } else if (key == "rank") {
    cfg.rank = parse_number<Index>(key, value);
  } else if (key == "timing") {
    if (value != "0" && value != "1") throw ConfigError("timing: expected 0 or 1");
    cfg.timing = value == "1";
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

ExperimentConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse_config(in);
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.dims.empty()) throw ConfigError("dims: at least one dimension is required");
  for (Index d : cfg.dims) {
    if (d < 1) throw ConfigError("dims: dimensions must be positive");
    switch (cfg.scheme) {
      case SchemeKind::StructuredPovm:
        if (!is_prime(static_cast<int>(d))) throw ConfigError("dims: mub needs prime dimensions, got " + std::to_string(d));
        break;
      case SchemeKind::PauliObservables:
      case SchemeKind::PauliBasis:
        if (d < 2 || (d & (d - 1)) != 0) {
          throw ConfigError("dims: Pauli schemes need powers of two >= 2, got " + std::to_string(d));
        }
        break;
      case SchemeKind::UniformPovm:
        break;
    }
    if (cfg.state.kind == StateSpec::Kind::RandomRank && cfg.state.rank > d) {
      throw ConfigError("state: rank exceeds dimension " + std::to_string(d));
    }
  }
  if (cfg.n_grid.empty()) throw ConfigError("n: at least one sample size is required");
  for (std::size_t i = 0; i < cfg.n_grid.size(); ++i) {
    if (cfg.n_grid[i] == 0) throw ConfigError("n: sample sizes must be positive");
    if (i > 0 && cfg.n_grid[i] <= cfg.n_grid[i - 1]) throw ConfigError("n: grid must be strictly increasing");
  }
  if (cfg.trials < 1) throw ConfigError("trials: must be at least 1");
  if (cfg.rank < 0) throw ConfigError("rank: must be non-negative");
  for (double e : cfg.eps_grid) {
    if (!(e > 0.0)) throw ConfigError("eps: accuracies must be positive");
  }
}

unsigned default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    unsigned v = 0;
    const std::string s = env;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

unsigned effective_threads(const ExperimentConfig& cfg) { return cfg.threads > 0 ? cfg.threads : default_threads(); }

MeasurementScheme make_scheme(SchemeKind kind, Index d) {
  switch (kind) {
    case SchemeKind::StructuredPovm:
      return build_mub_scheme(static_cast<int>(d));
    case SchemeKind::PauliObservables:
      return build_pauli_observable_scheme(qubit_count(d));
    case SchemeKind::PauliBasis:
      return build_pauli_basis_scheme(qubit_count(d));
    case SchemeKind::UniformPovm:
      return MeasurementScheme::uniform(d);
  }
  throw DomainError("unknown scheme kind");
}

DensityMatrix make_state(const StateSpec& spec, Index d, std::uint64_t seed) {
  switch (spec.kind) {
    case StateSpec::Kind::RandomPure:
      return random_pure_state(d, seed);
    case StateSpec::Kind::RandomRank:
      return random_rank_r_state(d, spec.rank, seed);
    case StateSpec::Kind::Caricature:
      return caricature_state(random_pure_state(d, seed), spec.p);
    case StateSpec::Kind::File: {
      DensityMatrix rho = io::read_state_file(spec.path);
      if (rho.dim() != d) {
        throw ConfigError("state: file " + spec.path + " has dimension " + std::to_string(rho.dim()) +
                          ", expected " + std::to_string(d));
      }
      return rho;
    }
  }
  throw DomainError("unknown state kind");
}

std::uint64_t total_samples(const ExperimentConfig& cfg, const MeasurementScheme& scheme, std::uint64_t n) {
  if (cfg.n_mode == NMode::Total || scheme.kind() == SchemeKind::UniformPovm) return n;
  return n * scheme.settings();
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t d_index, std::size_t n_index, std::size_t trial) {
  return rng::derive(master, rng::Stream::Trial, {d_index, n_index, trial});
}

std::vector<Aggregate> aggregate(std::span<const TrialRecord> records) {
  std::map<std::pair<Index, std::uint64_t>, std::vector<double>> groups;
  for (const auto& r : records) groups[{r.d, r.n}].push_back(round_to_csv(r.trace_error));
  std::vector<Aggregate> out;
  for (auto& [key, errs] : groups) {
    Aggregate a;
    a.d = key.first;
    a.n = key.second;
    a.count = errs.size();
    double sum = 0.0;
    for (double e : errs) sum += e;
    a.mean = sum / static_cast<double>(errs.size());
    std::sort(errs.begin(), errs.end());
    a.median = quantile(errs, 0.5);
    a.q10 = quantile(errs, 0.1);
    a.q90 = quantile(errs, 0.9);
    out.push_back(a);
  }
  return out;
}

std::vector<SlopeFit> fit_slopes(std::span<const Aggregate> aggregates) {
  std::map<Index, std::vector<std::pair<double, double>>> by_d;
  for (const auto& a : aggregates) {
    if (a.mean > 0.0) by_d[a.d].emplace_back(std::log(static_cast<double>(a.n)), std::log(a.mean));
  }
  std::vector<SlopeFit> out;
  for (const auto& [d, pts] : by_d) {
    if (pts.size() < 2) continue;
    double mx = 0.0;
    double my = 0.0;
    for (const auto& [x, y] : pts) {
      mx += x;
      my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (const auto& [x, y] : pts) {
      sxy += (x - mx) * (y - my);
      sxx += (x - mx) * (x - mx);
    }
    SlopeFit f;
    f.d = d;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    out.push_back(f);
  }
  return out;
}

SweepResult run_sweep(const ExperimentConfig& cfg, std::ostream* csv, const std::atomic<bool>* stop) {
  validate(cfg);
  std::vector<MeasurementScheme> schemes;
  std::vector<std::optional<DensityMatrix>> fixed_states;
  for (Index d : cfg.dims) {
    schemes.push_back(make_scheme(cfg.scheme, d));
    if (cfg.state.kind == StateSpec::Kind::File) {
      fixed_states.emplace_back(make_state(cfg.state, d, cfg.seed));
    } else {
      fixed_states.emplace_back();
    }
  }

  PipelineOptions opts;
  opts.timing = cfg.timing;
  const std::size_t jobs = cfg.dims.size() * cfg.n_grid.size() * cfg.trials;
  std::function<TrialRecord(std::size_t)> work = [&](std::size_t i) {
    const Point p = split_job(cfg, i);
    const MeasurementScheme& scheme = schemes[p.d_index];
    const std::uint64_t seed = trial_seed(cfg.seed, p.d_index, p.n_index, p.trial);
    const DensityMatrix rho = fixed_states[p.d_index] ? *fixed_states[p.d_index]
                                                      : make_state(cfg.state, scheme.dim(), seed);
    TrialRecord rec = pls_pipeline(rho, scheme, total_samples(cfg, scheme, cfg.n_grid[p.n_index]), seed, opts);
    rec.trial = p.trial;
    return rec;
  };

  SweepResult result;
  result.records.reserve(jobs);
  if (csv) {
    write_csv_header(*csv);
    csv->flush();
  }
  std::function<void(std::size_t, TrialRecord&&)> sink = [&](std::size_t, TrialRecord&& rec) {
    if (csv) {
      write_csv_row(*csv, rec);
      csv->flush();
    }
    result.records.push_back(std::move(rec));
  };
  const std::size_t done = run_ordered<TrialRecord>(jobs, effective_threads(cfg), stop, work, sink);
  result.complete = done == jobs;
  if (!result.complete && csv) {
    *csv << "# incomplete\n";
    csv->flush();
  }
  result.aggregates = aggregate(result.records);
  result.slopes = fit_slopes(result.aggregates);
  return result;
}

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const TrialRecord& rec) {
  const double sigma1 = rec.sigma_rho_hat.empty() ? 0.0 : rec.sigma_rho_hat.front();
  out << scheme_name(rec.scheme) << ',' << rec.d << ',' << rec.r_true << ',' << rec.n << ',' << rec.trial << ','
      << rec.seed << ',' << format_real(rec.trace_error) << ',' << format_real(rec.op_error_L) << ','
      << format_real(rec.x0) << ',' << rec.rank_estimate << ',' << format_real(sigma1) << ','
      << format_real(rec.radius_delta05) << ',' << format_real(rec.runtime_ms) << '\n';
}

void emit_csv(const SweepResult& result, std::ostream& out) {
  std::vector<const TrialRecord*> rows;
  for (const auto& r : result.records) rows.push_back(&r);
  std::stable_sort(rows.begin(), rows.end(), [](const TrialRecord* a, const TrialRecord* b) {
    return std::tie(a->d, a->n, a->trial) < std::tie(b->d, b->n, b->trial);
  });
  write_csv_header(out);
  for (const auto* r : rows) write_csv_row(out, *r);
}

void emit_csv(const SweepResult& result, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing", path.string());
  emit_csv(result, out);
  out.flush();
  if (!out) throw IoError("write failed", path.string());
}

std::vector<TrialRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kCsvHeader) throw ConfigError("csv: missing or unexpected header");
  std::vector<TrialRecord> out;
  while (std::getline(in, line)) {
    if (trim(line).empty() || line[0] == '#') continue;
    const auto f = split(trim(line), ',');
    if (f.size() != 13) throw ConfigError("csv: expected 13 fields in '" + line + "'");
    TrialRecord r;
    r.scheme = parse_scheme(f[0]);
    r.d = parse_number<Index>("d", f[1]);
    r.r_true = parse_number<Index>("r_true", f[2]);
    r.n = parse_number<std::uint64_t>("n", f[3]);
    r.trial = parse_number<std::uint64_t>("trial", f[4]);
    r.seed = parse_number<std::uint64_t>("seed", f[5]);
    r.trace_error = parse_real("trace_error", f[6]);
    r.op_error_L = parse_real("op_error_L", f[7]);
    r.x0 = parse_real("x0", f[8]);
    r.rank_estimate = parse_number<Index>("rank_estimate", f[9]);
    r.sigma_rho_hat = {parse_real("sigma_1", f[10])};
    r.radius_delta05 = parse_real("radius_delta05", f[11]);
    r.runtime_ms = parse_real("runtime_ms", f[12]);
    out.push_back(std::move(r));
  }
  return out;
}

CoverageReport run_coverage_study(const ExperimentConfig& cfg, BoundKind bound) {
  validate(cfg);
  if (cfg.trials < 100) throw ConfigError("trials: coverage studies need at least 100 trials per point");
  if (cfg.eps_grid.empty()) throw ConfigError("eps: coverage studies need an accuracy grid");
  const bool uniform = cfg.scheme == SchemeKind::UniformPovm;
  if (bound == BoundKind::Thm2 && !uniform) throw ConfigError("bound: thm2 applies to the uniform POVM only");
  if ((bound == BoundKind::Thm1 || bound == BoundKind::Thm4) && uniform) {
    throw ConfigError("bound: " + std::string(bound_name(bound)) + " needs a finite measurement scheme");
  }
  for (double e : cfg.eps_grid) {
    if ((bound == BoundKind::Thm1 || bound == BoundKind::Thm4) && e > 1.0) {
      throw ConfigError("eps: trace-norm bounds hold for eps in (0, 1]");
    }
    if (bound == BoundKind::Essential) {
      for (Index d : cfg.dims) {
        if (e > essential_tau_max(cfg.scheme, d)) throw ConfigError("eps: tau outside the operator-norm tail range");
      }
    }
  }

  CoverageReport report;
  report.bound = bound;
  PipelineOptions opts;
  for (std::size_t di = 0; di < cfg.dims.size(); ++di) {
    const Index d = cfg.dims[di];
    const MeasurementScheme scheme = make_scheme(cfg.scheme, d);
    const DensityMatrix rho = make_state(cfg.state, d, rng::derive(cfg.seed, rng::Stream::Point, {di}));
    const Index r_true = std::max<Index>(1, numerical_rank(eigenvalues(rho.hermitian()), 1e-9));
    const Index r = cfg.rank > 0 ? std::min(cfg.rank, d) : r_true;
    for (std::size_t ni = 0; ni < cfg.n_grid.size(); ++ni) {
      const std::uint64_t n = total_samples(cfg, scheme, cfg.n_grid[ni]);
      std::vector<TrialRecord> trials;
      trials.reserve(cfg.trials);
      std::function<TrialRecord(std::size_t)> work = [&](std::size_t t) {
        const std::uint64_t seed = trial_seed(cfg.seed, di, ni, t);
        TrialRecord rec = pls_pipeline(rho, scheme, n, seed, opts);
        rec.trial = t;
        return rec;
      };
      std::function<void(std::size_t, TrialRecord&&)> sink = [&](std::size_t, TrialRecord&& rec) {
        trials.push_back(std::move(rec));
      };
      run_ordered<TrialRecord>(cfg.trials, effective_threads(cfg), nullptr, work, sink);

      for (double eps : cfg.eps_grid) {
        CoveragePoint pt;
        pt.d = d;
        pt.n = n;
        pt.epsilon = eps;
        BoundParams p;
        p.d = d;
        p.n = static_cast<double>(n);
        p.r = r;
        p.epsilon = eps;
        if (!uniform) p.g = g_of_d(cfg.scheme, d);
        if (bound == BoundKind::Thm4) {
          pt.check = thm4_effective_rank_check(trials, r, eps);
        } else {
          std::size_t failures = 0;
          for (const auto& t : trials) {
            const double err = bound == BoundKind::Essential ? t.op_error_L : t.trace_error;
            if (err >= eps) ++failures;
          }
          double value = 0.0;
          if (bound == BoundKind::Thm1) {
            value = thm1_tail(p);
          } else if (bound == BoundKind::Thm2) {
            value = thm2_tail(p);
          } else {
            value = essential_opnorm_tail(p, cfg.scheme);
          }
          pt.check = coverage(failures, trials.size(), value);
        }
        if (!pt.check.holds) ++report.violations;
        report.points.push_back(pt);
      }
    }
  }
  return report;
}

void write_coverage_report(std::ostream& out, const CoverageReport& report) {
  out << "bound,d,n,eps,trials,failures,empirical_failure,bound_value,slack,status\n";
  for (const auto& p : report.points) {
    const char* status = p.check.vacuous ? "vacuous" : (p.check.holds ? "ok" : "violation");
    out << bound_name(report.bound) << ',' << p.d << ',' << p.n << ',' << format_real(p.epsilon) << ','
        << p.check.trials << ',' << p.check.failures << ',' << format_real(p.check.empirical_failure) << ','
        << format_real(p.check.bound) << ',' << format_real(p.check.slack) << ',' << status << '\n';
  }
}

}  // namespace plstomo
