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

#include "plstomo/analyze.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "plstomo/errors.hpp"

namespace plstomo {

namespace {

constexpr double kBoundConstant = 43.0;
constexpr double kUniformExponent = 2.2;
constexpr double kUniformDenominator = 480.0;
constexpr double kInequalitySlack = 1e-9;

}  // namespace

double g_of_d(SchemeKind kind, Index d) {
  const auto dd = static_cast<double>(d);
  switch (kind) {
    case SchemeKind::StructuredPovm:
      return 2.0 * dd;
    case SchemeKind::PauliObservables:
      return dd * dd;
    case SchemeKind::PauliBasis:
      return std::pow(3.0, qubit_count(d));
    case SchemeKind::UniformPovm:
      break;
  }
  throw DomainError("g(d) is not defined for the uniform POVM; use thm2_tail");
}

void validate(const BoundParams& p) {
  if (p.d < 1) throw DomainError("bound parameters: d must be positive");
  if (!(p.n > 0.0)) throw DomainError("bound parameters: n must be positive");
  if (p.r < 1 || p.r > p.d) throw DomainError("bound parameters: r must lie in [1, d]");
  if (!(p.delta > 0.0 && p.delta < 1.0)) throw DomainError("bound parameters: delta must lie in (0, 1)");
  if (!(p.epsilon >= 0.0)) throw DomainError("bound parameters: epsilon must be non-negative");
  if (!(p.g > 0.0)) throw DomainError("bound parameters: g(d) must be positive");
}

double thm1_tail(const BoundParams& p) {
  validate(p);
  if (p.epsilon > 1.0) throw DomainError("trace-norm tail bound holds for epsilon in [0, 1]");
  const double r = static_cast<double>(p.r);
  return static_cast<double>(p.d) * std::exp(-p.n * p.epsilon * p.epsilon / (kBoundConstant * p.g * r * r));
}

double confidence_radius(const BoundParams& p, Index rank_estimate) {
  validate(p);
  return static_cast<double>(rank_estimate) *
         std::sqrt(kBoundConstant * p.g * std::log(static_cast<double>(p.d) / p.delta) / p.n);
}

std::uint64_t sample_complexity(const BoundParams& p) {
  validate(p);
  if (!(p.epsilon > 0.0)) throw DomainError("sample complexity needs epsilon > 0");
  const double r = static_cast<double>(p.r);
  const double n =
      kBoundConstant * p.g * r * r / (p.epsilon * p.epsilon) * std::log(static_cast<double>(p.d) / p.delta);
  return static_cast<std::uint64_t>(std::ceil(n));
}

double essential_tau_max(SchemeKind kind, Index d) {
  switch (kind) {
    case SchemeKind::StructuredPovm:
      return 2.0;
    case SchemeKind::PauliObservables:
      return static_cast<double>(d) / 2.0;
    case SchemeKind::PauliBasis:
    case SchemeKind::UniformPovm:
      return 1.0;
  }
  return 1.0;
}

double essential_opnorm_tail(const BoundParams& p, SchemeKind kind) {
  const double tau = p.epsilon;
  if (kind == SchemeKind::UniformPovm) {
    if (p.d < 1 || !(p.n > 0.0)) throw DomainError("bound parameters: d and n must be positive");
    if (!(tau >= 0.0 && tau <= 1.0)) throw DomainError("uniform POVM operator-norm tail holds for tau in [0, 1]");
    const double dd = static_cast<double>(p.d);
    return 2.0 * std::exp(2.0 * std::log(3.0) * dd - p.n * tau * tau / kUniformDenominator);
  }
  validate(p);
  const double tmax = essential_tau_max(kind, p.d);
  if (tau > tmax) {
    throw DomainError("operator-norm tail for " + std::string(scheme_name(kind)) + " holds for tau in [0, " +
                      std::to_string(tmax) + "]");
  }
  return static_cast<double>(p.d) * std::exp(-3.0 * p.n * tau * tau / (8.0 * p.g));
}

double thm2_tail(const BoundParams& p) {
  if (p.d < 1 || !(p.n > 0.0) || p.r < 1 || p.r > p.d) {
    throw DomainError("bound parameters: need d >= 1, n > 0, r in [1, d]");
  }
  if (!(p.epsilon > 0.0)) throw DomainError("uniform POVM tail bound needs epsilon > 0");
  const double r = static_cast<double>(p.r);
  return std::exp(kUniformExponent * static_cast<double>(p.d) -
                  p.epsilon * p.epsilon * p.n / (kUniformDenominator * r * r));
}

double uniform_confidence_radius(const BoundParams& p, Index rank_estimate) {
  if (p.d < 1 || !(p.n > 0.0)) throw DomainError("bound parameters: d and n must be positive");
  if (!(p.delta > 0.0 && p.delta < 1.0)) throw DomainError("bound parameters: delta must lie in (0, 1)");
  return static_cast<double>(rank_estimate) *
         std::sqrt(kUniformDenominator * (kUniformExponent * static_cast<double>(p.d) + std::log(1.0 / p.delta)) /
                   p.n);
}

double binomial_slack(double bound, std::size_t trials) {
  const double b = std::clamp(bound, 0.0, 1.0);
  return 3.0 * std::sqrt(b * (1.0 - b) / static_cast<double>(trials));
}

InequalityCheck prop1_conversion_check(double tau, const DensityMatrix& rho, const DensityMatrix& rho_hat, Index r) {
  if (rho.dim() != rho_hat.dim()) throw DimensionError("conversion check: states have different dimensions");
  const double lhs = trace_norm_distance(rho_hat, rho);
  const double rhs = 4.0 * static_cast<double>(r) * tau +
                     2.0 * std::min(rank_r_residual(rho, r), rank_r_residual(rho_hat, r));
  return {lhs, rhs, lhs <= rhs + kInequalitySlack};
}

InequalityCheck rank_comparison_check(const DensityMatrix& rho, const DensityMatrix& sigma, Index r) {
  if (rho.dim() != sigma.dim()) throw DimensionError("rank comparison: states have different dimensions");
  const HermitianMatrix diff = rho.hermitian() - sigma.hermitian();
  const RealVector ev = eigenvalues(diff);
  const double lhs = ev.cwiseAbs().sum();
  const double op = std::max(std::abs(ev[0]), std::abs(ev[ev.size() - 1]));
  const double rhs =
      2.0 * static_cast<double>(r) * op + 2.0 * std::min(rank_r_residual(rho, r), rank_r_residual(sigma, r));
  return {lhs, rhs, lhs <= rhs + kInequalitySlack};
}

CoverageCheck coverage(std::size_t failures, std::size_t trials, double bound) {
  if (trials == 0) throw DomainError("coverage check needs at least one trial");
  CoverageCheck c;
  c.trials = trials;
  c.failures = failures;
  c.empirical_failure = static_cast<double>(failures) / static_cast<double>(trials);
  c.bound = bound;
  c.vacuous = bound >= 1.0;
  c.slack = binomial_slack(bound, trials);
  c.holds = c.vacuous || c.empirical_failure <= bound + c.slack;
  return c;
}

CoverageCheck thm4_effective_rank_check(std::span<const TrialRecord> trials, Index r, double epsilon) {
  if (trials.empty()) throw DomainError("effective-rank check needs at least one trial");
  const TrialRecord& first = trials.front();
  std::size_t failures = 0;
  for (const auto& t : trials) {
    if (t.scheme != first.scheme || t.d != first.d || t.n != first.n) {
      throw DomainError("effective-rank check needs trials with a common scheme, dimension and n");
    }
    const auto ri = static_cast<std::size_t>(r - 1);
    if (ri >= t.sigma_rho.size() || ri >= t.sigma_rho_hat.size()) {
      throw DomainError("trial record lacks residuals for r=" + std::to_string(r));
    }
    const double threshold = epsilon + 2.0 * std::min(t.sigma_rho[ri], t.sigma_rho_hat[ri]);
    if (t.trace_error >= threshold) ++failures;
  }
  BoundParams p;
  p.d = first.d;
  p.n = static_cast<double>(first.n);
  p.r = r;
  p.epsilon = epsilon;
  p.g = g_of_d(first.scheme, first.d);
  return coverage(failures, trials.size(), thm1_tail(p));
}

double design_second_moment_check(const MeasurementScheme& scheme, const DensityMatrix& rho) {
  if (scheme.kind() != SchemeKind::StructuredPovm) {
    throw DomainError("second-moment identity applies to structured POVMs");
  }
  if (rho.dim() != scheme.dim()) throw DimensionError("second-moment check: dimension mismatch");
  const Index d = scheme.dim();
  const auto& vecs = scheme.vectors();
  const double dd = static_cast<double>(d);
  const double w = dd / static_cast<double>(vecs.size());
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  ComplexMatrix second = ComplexMatrix::Zero(d, d);
  for (const auto& v : vecs) {
    const double prob = w * v.dot(rho.matrix() * v).real();
    const ComplexMatrix x = (dd + 1.0) * (v * v.adjoint()) - id;
    second += prob * (x * x);
  }
  const ComplexMatrix expected = (dd - 1.0) * (rho.matrix() + id) + id;
  return operator_norm(HermitianMatrix(second - expected));
}

}  // namespace plstomo
