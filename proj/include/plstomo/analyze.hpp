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

// Tail bounds, sample complexities and confidence radii for projected least
// squares, plus checks of the conversion inequalities on concrete instances.
// Bounds larger than 1 are returned as-is; callers treat them as vacuous.

#include <cstdint>
#include <span>

#include "plstomo/linalg.hpp"
#include "plstomo/measurements.hpp"
#include "plstomo/trial_record.hpp"

namespace plstomo {

struct BoundParams {
  Index d = 2;
  double n = 1.0;
  Index r = 1;
  /// Trace-norm accuracy (or operator-norm accuracy tau for the operator-norm tails).
  double epsilon = 0.0;
  double delta = 0.05;
  /// Dimension factor g(d); see g_of_d.
  double g = 0.0;
};

/// 2d (structured), d^2 (Pauli observables), 3^k (Pauli basis, d = 2^k).
/// Throws DomainError for the uniform POVM, which has its own bounds.
double g_of_d(SchemeKind kind, Index d);

/// Throws DomainError on d < 1, n <= 0, r outside [1, d], delta outside (0, 1),
/// epsilon < 0 or g <= 0.
void validate(const BoundParams& p);

/// d exp(-n eps^2 / (43 g r^2)), eps in [0, 1].
double thm1_tail(const BoundParams& p);

/// rank * sqrt(43 g log(d / delta) / n).
double confidence_radius(const BoundParams& p, Index rank_estimate);

/// ceil(43 g r^2 / eps^2 * log(d / delta)).
std::uint64_t sample_complexity(const BoundParams& p);

/// Largest tau for which the operator-norm tail is stated for this family.
double essential_tau_max(SchemeKind kind, Index d);

/// Pr[||L_hat - rho||_op >= tau] bound with tau = p.epsilon:
/// d exp(-3 n tau^2 / (8 g)) for the three finite families;
/// 2 exp(2 log(3) d - n tau^2 / 480) for the uniform POVM.
double essential_opnorm_tail(const BoundParams& p, SchemeKind kind);

/// exp(2.2 d - eps^2 n / (480 r^2)), eps > 0.
double thm2_tail(const BoundParams& p);

/// Smallest eps with thm2_tail = delta: r sqrt(480 (2.2 d + log(1/delta)) / n).
double uniform_confidence_radius(const BoundParams& p, Index rank_estimate);

/// One-sided binomial slack 3 sqrt(b (1 - b) / trials), b clamped to [0, 1].
double binomial_slack(double bound, std::size_t trials);

struct InequalityCheck {
  double lhs;
  double rhs;
  bool holds;
};

/// ||rho_hat - rho||_1 <= 4 r tau + 2 min(sigma_r(rho), sigma_r(rho_hat)).
InequalityCheck prop1_conversion_check(double tau, const DensityMatrix& rho, const DensityMatrix& rho_hat, Index r);

/// ||rho - sigma||_1 <= 2 r ||rho - sigma||_op + 2 min(sigma_r(rho), sigma_r(sigma)).
InequalityCheck rank_comparison_check(const DensityMatrix& rho, const DensityMatrix& sigma, Index r);

struct CoverageCheck {
  std::size_t trials = 0;
  std::size_t failures = 0;
  double empirical_failure = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  bool vacuous = false;
  bool holds = true;
};

/// Compares an empirical failure count with a bound value plus binomial slack.
CoverageCheck coverage(std::size_t failures, std::size_t trials, double bound);

/// Over a batch with common (scheme, rho, n): empirical frequency of
/// ||rho_hat - rho||_1 >= eps + 2 min(sigma_r(rho), sigma_r(rho_hat)) against
/// d exp(-n eps^2 / (43 g r^2)).
CoverageCheck thm4_effective_rank_check(std::span<const TrialRecord> trials, Index r, double epsilon);

/// Structured POVM: || sum_k (d/m) <v_k|rho|v_k> ((d+1)|v_k><v_k| - I)^2 - ((d-1)(rho + I) + I) ||_op,
/// where the sum runs over the whole vector set.
double design_second_moment_check(const MeasurementScheme& scheme, const DensityMatrix& rho);

}  // namespace plstomo
