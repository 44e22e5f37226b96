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

#include "plstomo/estimate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "plstomo/analyze.hpp"
#include "plstomo/errors.hpp"
#include "plstomo/kernels.hpp"

namespace plstomo {

namespace {

constexpr double kConditionLimit = 1e10;
constexpr double kDichotomyTolerance = 1e-12;
constexpr double kTraceTolerance = 1e-8;
constexpr double kClampTolerance = 1e-10;

std::span<Complex> as_span(ComplexMatrix& m) { return {m.data(), static_cast<std::size_t>(m.size())}; }
std::span<const Complex> as_span(const ComplexMatrix& m) { return {m.data(), static_cast<std::size_t>(m.size())}; }
std::span<const Complex> as_span(const ComplexVector& v) { return {v.data(), static_cast<std::size_t>(v.size())}; }

void check_rows(const MeasurementScheme& scheme, const FrequencyVector& f) {
  if (f.settings() != scheme.settings()) {
    throw DimensionError("frequency table has " + std::to_string(f.settings()) + " settings, scheme has " +
                         std::to_string(scheme.settings()));
  }
  for (const auto& row : f.frequencies) {
    if (row.size() != scheme.outcomes_per_setting()) throw DimensionError("frequency row has the wrong length");
  }
}

// Coordinates of a Hermitian matrix in the basis E_ii, (E_ij + E_ji)/sqrt2,
// i(E_ij - E_ji)/sqrt2 (i < j).
Eigen::VectorXd coordinates(const ComplexMatrix& e) {
  const Index d = e.rows();
  Eigen::VectorXd c(d * d);
  Index a = 0;
  for (Index i = 0; i < d; ++i) c[a++] = e(i, i).real();
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      c[a++] = std::sqrt(2.0) * e(i, j).real();
      c[a++] = std::sqrt(2.0) * e(i, j).imag();
    }
  }
  return c;
}

ComplexMatrix from_coordinates(const Eigen::VectorXd& c, Index d) {
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  Index a = 0;
  for (Index i = 0; i < d; ++i) m(i, i) = c[a++];
  const double s = 1.0 / std::sqrt(2.0);
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      const Complex z{s * c[a], s * c[a + 1]};
      a += 2;
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return m;
}

// Sum_o f_o (x)_i Q(axis_i, o_i) over the outcomes o of one setting, where
// Q(axis, b) = 3|b><b| - I. Outcome bits are ordered most significant first.
ComplexMatrix basis_tensor_sum(const std::string& axes, std::size_t first, std::span<const double> f) {
  if (first == axes.size()) return ComplexMatrix::Constant(1, 1, f[0]);
  const std::size_t half = f.size() / 2;
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  ComplexMatrix out;
  for (int bit = 0; bit < 2; ++bit) {
    const auto part = f.subspan(bit * half, half);
    if (std::all_of(part.begin(), part.end(), [](double x) { return x == 0.0; })) continue;
    const ComplexVector b = pauli_eigenvector(axes[first], bit);
    const ComplexMatrix q = 3.0 * (b * b.adjoint()) - id;
    ComplexMatrix term = kron(q, basis_tensor_sum(axes, first + 1, part));
    if (out.size() == 0) {
      out = std::move(term);
    } else {
      out += term;
    }
  }
  if (out.size() == 0) {
    const Index dim = Index{1} << (axes.size() - first);
    out = ComplexMatrix::Zero(dim, dim);
  }
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

LinearInversionEstimate ls_generic(const std::vector<HermitianMatrix>& effects, std::span<const double> f) {
  if (effects.empty()) throw DimensionError("least squares needs at least one effect");
  if (effects.size() != f.size()) throw DimensionError("effects and frequencies differ in length");
  const Index d = effects.front().dim();
  if (d > kGenericMaxDim) {
    throw DimensionError("generic least squares is limited to d <= " + std::to_string(kGenericMaxDim));
  }
  const Index p = d * d;
  Eigen::MatrixXd normal = Eigen::MatrixXd::Zero(p, p);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(p);
  for (std::size_t i = 0; i < effects.size(); ++i) {
    if (effects[i].dim() != d) throw DimensionError("effects have different dimensions");
    const Eigen::VectorXd a = coordinates(effects[i].matrix());
    normal.selfadjointView<Eigen::Lower>().rankUpdate(a);
    rhs += f[i] * a;
  }
  normal = normal.selfadjointView<Eigen::Lower>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(normal);
  if (es.info() != Eigen::Success) throw NumericalError("normal-matrix eigensolver failed", d);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  const double cond = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  if (!(cond <= kConditionLimit)) {
    throw CompletenessError("measurement is not tomographically complete (condition number " +
                                std::to_string(cond) + ")",
                            cond);
  }
  const Eigen::VectorXd c = es.eigenvectors() * (es.eigenvectors().transpose() * rhs).cwiseQuotient(es.eigenvalues());
  LinearInversionEstimate out{HermitianMatrix(from_coordinates(c, d)), SchemeKind::StructuredPovm, 0, cond};
  return out;
}

LinearInversionEstimate ls_generic(const GenericProblem& problem) {
  return ls_generic(problem.effects, problem.frequencies);
}

GenericProblem generic_problem(const MeasurementScheme& scheme, const FrequencyVector& f) {
  if (scheme.kind() == SchemeKind::UniformPovm) throw DomainError("the uniform POVM has no finite effect list");
  check_rows(scheme, f);
  GenericProblem p;
  if (scheme.kind() == SchemeKind::PauliObservables) {
    p.effects.push_back(HermitianMatrix::identity(scheme.dim()));
    p.frequencies.push_back(1.0);
    p.effects.push_back(HermitianMatrix::zero(scheme.dim()));
    p.frequencies.push_back(0.0);
  }
  for (std::size_t s = 0; s < scheme.settings(); ++s) {
    for (std::size_t o = 0; o < scheme.outcomes_per_setting(); ++o) {
      p.effects.push_back(scheme.effect(s, o));
      p.frequencies.push_back(f.frequencies[s][o]);
    }
  }
  return p;
}

LinearInversionEstimate ls_structured(const MeasurementScheme& scheme, const FrequencyVector& f) {
  if (scheme.kind() != SchemeKind::StructuredPovm) throw DomainError("ls_structured needs a structured POVM");
  check_rows(scheme, f);
  const Index d = scheme.dim();
  const auto du = static_cast<std::size_t>(d);
  const double per_setting = 1.0 / static_cast<double>(scheme.settings());
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (std::size_t s = 0; s < scheme.settings(); ++s) {
    for (std::size_t o = 0; o < scheme.outcomes_per_setting(); ++o) {
      const double w = f.frequencies[s][o];
      if (w == 0.0) continue;
      const ComplexVector v = scheme.effect_vector(s, o);
      kernels::rank_one_update(as_span(acc), du, as_span(v), (static_cast<double>(d) + 1.0) * per_setting * w);
    }
  }
  acc -= ComplexMatrix::Identity(d, d);
  return {HermitianMatrix(acc), SchemeKind::StructuredPovm, 0, std::nullopt};
}

LinearInversionEstimate ls_pauli_observables(const MeasurementScheme& scheme, const FrequencyVector& f) {
  if (scheme.kind() != SchemeKind::PauliObservables) {
    throw DomainError("ls_pauli_observables needs a Pauli observable scheme");
  }
  check_rows(scheme, f);
  const Index d = scheme.dim();
  const double inv_d = 1.0 / static_cast<double>(d);
  ComplexMatrix acc = inv_d * ComplexMatrix::Identity(d, d);
  for (std::size_t s = 0; s < scheme.settings(); ++s) {
    const auto& row = f.frequencies[s];
    if (std::abs(row[0] + row[1] - 1.0) > kDichotomyTolerance) {
      throw DomainError("setting " + std::to_string(s) + ": f+ + f- differs from 1");
    }
    const double mean = row[0] - row[1];
    if (mean == 0.0) continue;
    const HermitianMatrix w = pauli_matrix(scheme.setting_word(s));
    kernels::axpy(as_span(acc), as_span(w.matrix()), inv_d * mean);
  }
  return {HermitianMatrix(acc), SchemeKind::PauliObservables, 0, std::nullopt};
}

LinearInversionEstimate ls_pauli_basis(const MeasurementScheme& scheme, const FrequencyVector& f) {
  if (scheme.kind() != SchemeKind::PauliBasis) throw DomainError("ls_pauli_basis needs a Pauli basis scheme");
  check_rows(scheme, f);
  const Index d = scheme.dim();
  const double scale = 1.0 / static_cast<double>(scheme.settings());
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (std::size_t s = 0; s < scheme.settings(); ++s) {
    const ComplexMatrix term = basis_tensor_sum(scheme.setting_label(s), 0, f.frequencies[s]);
    kernels::axpy(as_span(acc), as_span(term), scale);
  }
  return {HermitianMatrix(acc), SchemeKind::PauliBasis, 0, std::nullopt};
}

LinearInversionEstimate ls_pauli_basis_depolarizing(const MeasurementScheme& scheme, const FrequencyVector& f) {
  if (scheme.kind() != SchemeKind::PauliBasis) throw DomainError("ls_pauli_basis needs a Pauli basis scheme");
  check_rows(scheme, f);
  const Index d = scheme.dim();
  const auto du = static_cast<std::size_t>(d);
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (std::size_t s = 0; s < scheme.settings(); ++s) {
    for (std::size_t o = 0; o < scheme.outcomes_per_setting(); ++o) {
      const double w = f.frequencies[s][o];
      if (w == 0.0) continue;
      const ComplexVector v = scheme.effect_vector(s, o);
      kernels::rank_one_update(as_span(acc), du, as_span(v), w);
    }
  }
  HermitianMatrix out = depolarizing_inverse_apply(HermitianMatrix(acc));
  out *= 1.0 / static_cast<double>(scheme.settings());
  return {std::move(out), SchemeKind::PauliBasis, 0, std::nullopt};
}

LinearInversionEstimate ls_uniform(const UniformPovmSample& sample) {
  if (sample.vectors.empty()) throw DomainError("ls_uniform needs a non-empty sample");
  const Index d = sample.dim;
  const auto du = static_cast<std::size_t>(d);
  const double w = (static_cast<double>(d) + 1.0) / static_cast<double>(sample.vectors.size());
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (const auto& v : sample.vectors) {
    if (v.size() != d) throw DimensionError("sample vector has the wrong dimension");
    kernels::rank_one_update(as_span(acc), du, as_span(v), w);
  }
  acc -= ComplexMatrix::Identity(d, d);
  return {HermitianMatrix(acc), SchemeKind::UniformPovm, sample.vectors.size(), std::nullopt};
}

LinearInversionEstimate linear_inversion(const MeasurementScheme& scheme, const FrequencyVector& f) {
  switch (scheme.kind()) {
    case SchemeKind::StructuredPovm:
      return ls_structured(scheme, f);
    case SchemeKind::PauliObservables:
      return ls_pauli_observables(scheme, f);
    case SchemeKind::PauliBasis:
      return ls_pauli_basis(scheme, f);
    case SchemeKind::UniformPovm:
      break;
  }
  throw DomainError("the uniform POVM estimator takes a sample, not frequencies");
}

double threshold_x0(const RealVector& spectrum) {
  if (spectrum.size() == 0) throw DimensionError("empty spectrum");
  double prefix = 0.0;
  double x0 = spectrum[0] - 1.0;
  for (Index j = 0; j < spectrum.size(); ++j) {
    prefix += spectrum[j];
    const double candidate = (prefix - 1.0) / static_cast<double>(j + 1);
    if (spectrum[j] > candidate) x0 = candidate;
  }
  return x0;
}

PlsEstimate project_to_states(const LinearInversionEstimate& l) {
  const double tr = l.matrix.trace();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw DomainError("projection needs a unit-trace input, got trace " + std::to_string(tr));
  }
  const EigenDecomposition ed = eigh(l.matrix);
  double x0 = threshold_x0(ed.eigenvalues);
  if (x0 < 0.0 && ed.eigenvalues.minCoeff() >= 0.0) x0 = 0.0;
  RealVector kept = (ed.eigenvalues.array() - x0).max(0.0).matrix();
  const double total = kept.sum();
  if (!(total > 0.0)) throw NumericalError("projection produced an empty spectrum", l.matrix.dim());
  kept /= total;
  PlsEstimate out;
  out.state = DensityMatrix::from_hermitian(ed.reconstruct(kept), kClampTolerance);
  out.x0 = x0;
  out.spectrum = kept;
  out.least_squares = l.matrix;
  return out;
}

TrialRecord pls_pipeline(const DensityMatrix& rho, const MeasurementScheme& scheme, std::uint64_t n,
                         std::uint64_t seed, const PipelineOptions& opts) {
  if (rho.dim() != scheme.dim()) throw DimensionError("state and scheme dimensions differ");
  if (n == 0) throw DomainError("pipeline needs n >= 1");
  const auto start = std::chrono::steady_clock::now();

  LinearInversionEstimate l{HermitianMatrix::zero(1), scheme.kind(), n, std::nullopt};
  if (scheme.kind() == SchemeKind::UniformPovm) {
    if (opts.exact_probabilities) {
      l.matrix = rho.hermitian();
    } else {
      l = ls_uniform(sample_uniform_povm(rho, n, seed));
    }
  } else {
    const ProbabilityTable table = born_probabilities(rho, scheme);
    const FrequencyVector f = opts.exact_probabilities
                                  ? FrequencyVector::from_probabilities(table)
                                  : FrequencyVector::from_counts(sample_counts(table, allocate_shots(n, scheme.settings()), seed));
    l = linear_inversion(scheme, f);
  }
  l.n = n;

  const auto proj_start = std::chrono::steady_clock::now();
  PlsEstimate est = project_to_states(l);
  const double proj_ms = opts.timing ? elapsed_ms(proj_start) : 0.0;

  TrialRecord rec;
  rec.scheme = scheme.kind();
  rec.d = scheme.dim();
  rec.n = n;
  rec.seed = seed;
  const RealVector rho_spec = eigenvalues(rho.hermitian());
  rec.r_true = std::max<Index>(1, numerical_rank(rho_spec, 1e-9));
  rec.trace_error = trace_norm_distance(est.state, rho);
  rec.op_error_L = operator_norm_distance(l.matrix, rho.hermitian());
  rec.op_error_rho = operator_norm_distance(est.state.hermitian(), rho.hermitian());
  rec.x0 = est.x0;
  rec.rank_estimate = std::max<Index>(1, numerical_rank(est.spectrum, kTolerance));
  for (Index r = 1; r <= rec.d; ++r) {
    rec.sigma_rho.push_back(rank_r_residual(rho_spec, r));
    rec.sigma_rho_hat.push_back(rank_r_residual(est.spectrum, r));
  }
  BoundParams bp;
  bp.d = rec.d;
  bp.n = static_cast<double>(n);
  bp.r = rec.rank_estimate;
  bp.delta = 0.05;
  if (scheme.kind() == SchemeKind::UniformPovm) {
    rec.radius_delta05 = uniform_confidence_radius(bp, rec.rank_estimate);
  } else {
    bp.g = g_of_d(scheme.kind(), rec.d);
    rec.radius_delta05 = confidence_radius(bp, rec.rank_estimate);
  }
  if (opts.keep_matrices) {
    rec.least_squares = l.matrix;
    rec.estimate = est.state;
  }
  if (opts.timing) {
    rec.runtime_ms = elapsed_ms(start);
    rec.projection_ms = proj_ms;
  }
  return rec;
}

}  // namespace plstomo
