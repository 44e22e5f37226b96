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

// Linear-inversion estimators and the projection onto density matrices.

#include <cstdint>
#include <optional>
#include <vector>

#include "plstomo/linalg.hpp"
#include "plstomo/measurements.hpp"
#include "plstomo/simulate.hpp"
#include "plstomo/trial_record.hpp"

namespace plstomo {

/// Unconstrained least-squares estimate. Generally indefinite.
struct LinearInversionEstimate {
  HermitianMatrix matrix;
  SchemeKind kind = SchemeKind::StructuredPovm;
  std::uint64_t n = 0;
  /// Set by ls_generic only.
  std::optional<double> condition_number;
};

struct PlsEstimate {
  DensityMatrix state;
  double x0 = 0.0;
  /// Eigenvalues of the state, non-increasing (exact zeros for discarded directions).
  RealVector spectrum;
  HermitianMatrix least_squares;
};

/// Flattened least-squares problem: one effect per frequency.
struct GenericProblem {
  std::vector<HermitianMatrix> effects;
  std::vector<double> frequencies;
};

/// Largest dimension for which ls_generic builds the d^2 x d^2 normal matrix.
inline constexpr Index kGenericMaxDim = 16;

/// argmin_X sum_i (tr(E_i X) - f_i)^2 via the normal equations in an
/// orthonormal Hermitian basis. Throws CompletenessError if the normal matrix
/// has condition number above 1e10, DimensionError for d > kGenericMaxDim.
LinearInversionEstimate ls_generic(const std::vector<HermitianMatrix>& effects, std::span<const double> f);
LinearInversionEstimate ls_generic(const GenericProblem& problem);

/// Effects and frequencies of every setting of the scheme. For Pauli
/// observables the identity word is included with f+ = 1, f- = 0.
GenericProblem generic_problem(const MeasurementScheme& scheme, const FrequencyVector& f);

/// (d + 1) sum_i f_i |v_i><v_i| - I, where f_i is the within-setting frequency
/// divided by the number of settings.
LinearInversionEstimate ls_structured(const MeasurementScheme& scheme, const FrequencyVector& f);

/// (1/d) sum_W (f+ - f-) W with the identity word contributing I.
/// Throws DomainError if some |f+ + f- - 1| > 1e-12.
LinearInversionEstimate ls_pauli_observables(const MeasurementScheme& scheme, const FrequencyVector& f);

/// 3^-k sum_{s,o} f_o^(s) (x)_i (3|b_i><b_i| - I), built one qubit at a time.
LinearInversionEstimate ls_pauli_basis(const MeasurementScheme& scheme, const FrequencyVector& f);

/// Same estimator as 3^-k D_{1/3}^{-1 (x) k}(sum_{s,o} f_o^(s) |b><b|).
LinearInversionEstimate ls_pauli_basis_depolarizing(const MeasurementScheme& scheme, const FrequencyVector& f);

/// Mean of (d + 1)|v><v| - I over the sample. Throws DomainError if empty.
LinearInversionEstimate ls_uniform(const UniformPovmSample& sample);

/// Closed-form estimator matching the scheme kind (not the uniform POVM).
LinearInversionEstimate linear_inversion(const MeasurementScheme& scheme, const FrequencyVector& f);

/// Threshold x0 with sum_i max(lambda_i - x0, 0) = 1 for a non-increasing spectrum.
double threshold_x0(const RealVector& spectrum);

/// Frobenius-nearest density matrix: U diag([lambda - x0]_+) U^dagger.
/// Throws DomainError if |tr(L) - 1| > 1e-8.
PlsEstimate project_to_states(const LinearInversionEstimate& l);

struct PipelineOptions {
  /// Replace sampled frequencies by exact Born probabilities.
  bool exact_probabilities = false;
  /// Store L_hat and rho_hat in the record.
  bool keep_matrices = false;
  /// Measure runtime_ms and projection_ms; otherwise both stay 0.
  bool timing = false;
};

/// Born probabilities (or uniform draws), sampling, linear inversion and
/// projection for a single trial. n is the total number of samples.
TrialRecord pls_pipeline(const DensityMatrix& rho, const MeasurementScheme& scheme, std::uint64_t n,
                         std::uint64_t seed, const PipelineOptions& opts = {});

}  // namespace plstomo
