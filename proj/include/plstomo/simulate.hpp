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

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "plstomo/linalg.hpp"
#include "plstomo/measurements.hpp"

namespace plstomo {

/// Born-rule probabilities, one vector per setting; each sums to 1.
struct ProbabilityTable {
  std::vector<std::vector<double>> probabilities;

  std::size_t settings() const noexcept { return probabilities.size(); }
};

struct OutcomeCounts {
  std::vector<std::vector<std::uint64_t>> counts;
  /// Shots spent on each setting; counts[s] sums to shots[s].
  std::vector<std::uint64_t> shots;

  std::size_t settings() const noexcept { return counts.size(); }
  std::uint64_t total() const noexcept;
};

/// Outcome frequencies normalized within each setting (each row sums to 1).
/// Estimators document how they reweight rows across settings.
struct FrequencyVector {
  std::vector<std::vector<double>> frequencies;

  std::size_t settings() const noexcept { return frequencies.size(); }

  static FrequencyVector from_counts(const OutcomeCounts& counts);
  /// Exact-probability limit: frequencies equal to the probabilities.
  static FrequencyVector from_probabilities(const ProbabilityTable& table);
};

/// Outcomes of the uniform (covariant) POVM: unit vectors in C^d.
struct UniformPovmSample {
  Index dim = 0;
  std::vector<ComplexVector> vectors;
};

/// tr(effect * rho) for every (setting, outcome). Negative rounding noise is
/// clamped to zero and the row renormalized; a row whose sum is off by more
/// than 1e-8 raises DomainError.
ProbabilityTable born_probabilities(const DensityMatrix& rho, const MeasurementScheme& scheme);

/// Equal split of n shots over the settings; the remainder goes one shot each
/// to the lowest-indexed settings.
std::vector<std::uint64_t> allocate_shots(std::uint64_t n, std::size_t settings);

/// Independent multinomial draw per setting from the stream (seed, setting),
/// by sequential conditional binomials.
OutcomeCounts sample_counts(const ProbabilityTable& table, std::span<const std::uint64_t> shots, std::uint64_t seed);
OutcomeCounts sample_counts(const ProbabilityTable& table, std::uint64_t shots_per_setting, std::uint64_t seed);

/// Single multinomial draw of `shots` trials over `probabilities`.
std::vector<std::uint64_t> sample_multinomial(std::span<const double> probabilities, std::uint64_t shots,
                                              rng::Engine& eng);

/// Exact draws from the outcome density d <v|rho|v> dv of the uniform POVM.
///
/// Each draw picks an eigenvector x of rho with probability equal to its
/// eigenvalue, draws the squared overlap t = |<x|v>|^2 ~ Beta(2, d-1) as the
/// second-smallest of d independent uniforms, and sets
/// v = sqrt(t) e^{i phi} x + sqrt(1 - t) w with phi uniform and w Haar-random
/// on the orthogonal complement of x.
UniformPovmSample sample_uniform_povm(const DensityMatrix& rho, std::uint64_t n, std::uint64_t seed);

/// Beta(2, d - 1) variate as the second order statistic of d uniforms (d >= 2).
double sample_overlap_beta(Index d, rng::Engine& eng);

/// CSV with header `setting,outcome,count,shots`.
void write_counts_csv(std::ostream& out, const OutcomeCounts& counts);

}  // namespace plstomo
