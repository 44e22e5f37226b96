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

#include "plstomo/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>

#include "plstomo/errors.hpp"
#include "plstomo/kernels.hpp"

namespace plstomo {

namespace {

constexpr double kClampTolerance = 1e-12;
constexpr double kSumTolerance = 1e-8;

void normalize_row(std::vector<double>& row, std::size_t setting) {
  double sum = 0.0;
  for (double& p : row) {
    if (p < 0.0) {
      if (p < -kSumTolerance) {
        throw DomainError("Born probability " + std::to_string(p) + " in setting " + std::to_string(setting) +
                          " is negative; is the state or scheme valid?");
      }
      p = 0.0;
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw DomainError("Born probabilities of setting " + std::to_string(setting) + " sum to " + std::to_string(sum) +
                      "; the scheme is not a POVM");
  }
  if (std::abs(sum - 1.0) > kClampTolerance) {
    for (double& p : row) p /= sum;
  }
}

std::span<const Complex> as_span(const ComplexVector& v) { return {v.data(), static_cast<std::size_t>(v.size())}; }

}  // namespace

std::uint64_t OutcomeCounts::total() const noexcept { return std::accumulate(shots.begin(), shots.end(), std::uint64_t{0}); }

FrequencyVector FrequencyVector::from_counts(const OutcomeCounts& counts) {
  FrequencyVector f;
  f.frequencies.resize(counts.settings());
  for (std::size_t s = 0; s < counts.settings(); ++s) {
    const double shots = static_cast<double>(counts.shots[s]);
    if (counts.shots[s] == 0) throw DomainError("setting " + std::to_string(s) + " received no shots");
    auto& row = f.frequencies[s];
    row.reserve(counts.counts[s].size());
    for (auto c : counts.counts[s]) row.push_back(static_cast<double>(c) / shots);
  }
  return f;
}

FrequencyVector FrequencyVector::from_probabilities(const ProbabilityTable& table) {
  return FrequencyVector{table.probabilities};
}

ProbabilityTable born_probabilities(const DensityMatrix& rho, const MeasurementScheme& scheme) {
  if (scheme.kind() == SchemeKind::UniformPovm) {
    throw DomainError("the uniform POVM has continuous outcomes; use sample_uniform_povm");
  }
  if (rho.dim() != scheme.dim()) {
    throw DimensionError("state dimension " + std::to_string(rho.dim()) + " does not match scheme dimension " +
                         std::to_string(scheme.dim()));
  }
  const auto d = static_cast<std::size_t>(rho.dim());
  const std::span<const Complex> a{rho.matrix().data(), d * d};
  ProbabilityTable table;
  table.probabilities.resize(scheme.settings());
  for (std::size_t s = 0; s < scheme.settings(); ++s) {
    auto& row = table.probabilities[s];
    row.resize(scheme.outcomes_per_setting());
    if (scheme.kind() == SchemeKind::PauliObservables) {
      const HermitianMatrix w = pauli_matrix(scheme.setting_word(s));
      const double mean = kernels::real_inner({w.matrix().data(), d * d}, a);
      row[0] = 0.5 * (1.0 + mean);
      row[1] = 0.5 * (1.0 - mean);
    } else {
      const double weight = scheme.effect_weight(s);
      for (std::size_t o = 0; o < row.size(); ++o) {
        const ComplexVector v = scheme.effect_vector(s, o);
        row[o] = weight * kernels::hermitian_form(a, d, as_span(v));
      }
    }
    normalize_row(row, s);
  }
  return table;
}

std::vector<std::uint64_t> allocate_shots(std::uint64_t n, std::size_t settings) {
  if (settings == 0) throw DomainError("cannot allocate shots over zero settings");
  std::vector<std::uint64_t> shots(settings, n / settings);
  const std::uint64_t rem = n % settings;
  for (std::uint64_t s = 0; s < rem; ++s) ++shots[s];
  return shots;
}

std::vector<std::uint64_t> sample_multinomial(std::span<const double> probabilities, std::uint64_t shots,
                                              rng::Engine& eng) {
  std::vector<std::uint64_t> out(probabilities.size(), 0);
  std::uint64_t remaining = shots;
  double mass = 1.0;
  for (std::size_t o = 0; o + 1 < probabilities.size() && remaining > 0; ++o) {
    const double p = mass > 0.0 ? std::clamp(probabilities[o] / mass, 0.0, 1.0) : 0.0;
    out[o] = rng::binomial(eng, remaining, p);
    remaining -= out[o];
    mass -= probabilities[o];
  }
  if (!out.empty()) out.back() += remaining;
  return out;
}

OutcomeCounts sample_counts(const ProbabilityTable& table, std::span<const std::uint64_t> shots, std::uint64_t seed) {
  if (shots.size() != table.settings()) throw DimensionError("shot allocation does not match setting count");
  OutcomeCounts out;
  out.shots.assign(shots.begin(), shots.end());
  out.counts.resize(table.settings());
  for (std::size_t s = 0; s < table.settings(); ++s) {
    if (shots[s] < 1) throw DomainError("every setting needs at least one shot");
    rng::Engine eng = rng::make_engine(rng::derive(seed, rng::Stream::Setting, {s}));
    out.counts[s] = sample_multinomial(table.probabilities[s], shots[s], eng);
  }
  return out;
}

OutcomeCounts sample_counts(const ProbabilityTable& table, std::uint64_t shots_per_setting, std::uint64_t seed) {
  const std::vector<std::uint64_t> shots(table.settings(), shots_per_setting);
  return sample_counts(table, shots, seed);
}

double sample_overlap_beta(Index d, rng::Engine& eng) {
  // Second-smallest of d uniforms is Beta(2, d - 1).
  double smallest = 2.0;
  double second = 2.0;
  for (Index i = 0; i < d; ++i) {
    const double u = rng::uniform01(eng);
    if (u < smallest) {
      second = smallest;
      smallest = u;
    } else if (u < second) {
      second = u;
    }
  }
  return second;
}

UniformPovmSample sample_uniform_povm(const DensityMatrix& rho, std::uint64_t n, std::uint64_t seed) {
  if (n < 1) throw DomainError("uniform POVM sampling needs n >= 1");
  const Index d = rho.dim();
  const EigenDecomposition eig = eigh(rho.hermitian());
  std::vector<double> cumulative(static_cast<std::size_t>(d));
  double acc = 0.0;
  for (Index i = 0; i < d; ++i) {
    acc += std::max(0.0, eig.eigenvalues[i]);
    cumulative[static_cast<std::size_t>(i)] = acc;
  }

  rng::Engine eng = rng::make_engine(rng::derive(seed, rng::Stream::Uniform));
  UniformPovmSample out;
  out.dim = d;
  out.vectors.reserve(n);
  for (std::uint64_t draw = 0; draw < n; ++draw) {
    const double u = rng::uniform01(eng) * acc;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const Index idx = std::min<Index>(d - 1, static_cast<Index>(it - cumulative.begin()));
    const ComplexVector x = eig.eigenvectors.col(idx);
    if (d == 1) {
      out.vectors.push_back(x);
      continue;
    }
    const double t = sample_overlap_beta(d, eng);
    const double phi = 2.0 * std::numbers::pi * rng::uniform01(eng);
    // Haar direction on the orthogonal complement of x.
    ComplexVector w(d);
    for (Index i = 0; i < d; ++i) w[i] = rng::complex_normal(eng);
    w -= x * x.dot(w);
    w /= w.norm();
    ComplexVector v = std::sqrt(t) * std::polar(1.0, phi) * x + std::sqrt(1.0 - t) * w;
    v /= v.norm();
    out.vectors.push_back(std::move(v));
  }
  return out;
}

void write_counts_csv(std::ostream& out, const OutcomeCounts& counts) {
  out << "setting,outcome,count,shots\n";
  for (std::size_t s = 0; s < counts.settings(); ++s) {
    for (std::size_t o = 0; o < counts.counts[s].size(); ++o) {
      out << s << ',' << o << ',' << counts.counts[s][o] << ',' << counts.shots[s] << '\n';
    }
  }
}

}  // namespace plstomo
