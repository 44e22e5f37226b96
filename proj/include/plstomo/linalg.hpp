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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "plstomo/rng.hpp"

namespace plstomo {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Absolute tolerance used by equality and validity checks unless a call overrides it.
inline constexpr double kTolerance = 1e-10;

/// Dense Hermitian d x d matrix. Inputs are symmetrized as (A + A^dagger) / 2.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  /// Throws DimensionError for non-square input, NumericalError for non-finite entries.
  explicit HermitianMatrix(const ComplexMatrix& m);

  static HermitianMatrix zero(Index d);
  static HermitianMatrix identity(Index d);
  /// |v><v| (v is used as given, not normalized).
  static HermitianMatrix projector(const ComplexVector& v);
  static HermitianMatrix diagonal(const RealVector& diag);

  Index dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  double trace() const { return m_.trace().real(); }

  HermitianMatrix& operator+=(const HermitianMatrix& o);
  HermitianMatrix& operator-=(const HermitianMatrix& o);
  HermitianMatrix& operator*=(double s);

  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator*(HermitianMatrix a, double s) { return a *= s; }
  friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }

 private:
  struct Trusted {};
  HermitianMatrix(ComplexMatrix m, Trusted) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// Eigen-decomposition with eigenvalues sorted non-increasing; column i of
/// `eigenvectors` belongs to eigenvalue i.
struct EigenDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  /// U diag(values) U^dagger.
  HermitianMatrix reconstruct(const RealVector& values) const;
  HermitianMatrix reconstruct() const { return reconstruct(eigenvalues); }
};

/// Quantum state: Hermitian, positive semidefinite, unit trace.
class DensityMatrix {
 public:
  DensityMatrix() = default;

  /// Validates min eigenvalue >= -tol and |tr - 1| <= tol; throws DomainError otherwise.
  static DensityMatrix from_hermitian(HermitianMatrix h, double tol = kTolerance);
  /// |psi><psi| / <psi|psi>.
  static DensityMatrix pure(const ComplexVector& psi);
  static DensityMatrix maximally_mixed(Index d);

  Index dim() const noexcept { return h_.dim(); }
  const HermitianMatrix& hermitian() const noexcept { return h_; }
  const ComplexMatrix& matrix() const noexcept { return h_.matrix(); }

 private:
  explicit DensityMatrix(HermitianMatrix h) : h_(std::move(h)) {}
  HermitianMatrix h_;
};

/// Throws NumericalError if the solver does not converge.
EigenDecomposition eigh(const HermitianMatrix& a);

/// Eigenvalues only, sorted non-increasing.
RealVector eigenvalues(const HermitianMatrix& a);

/// Sum of absolute eigenvalues.
double trace_norm(const HermitianMatrix& a);
double trace_norm_distance(const HermitianMatrix& a, const HermitianMatrix& b);
inline double trace_norm_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return trace_norm_distance(a.hermitian(), b.hermitian());
}

/// Largest absolute eigenvalue.
double operator_norm(const HermitianMatrix& a);
double operator_norm_distance(const HermitianMatrix& a, const HermitianMatrix& b);

double frobenius_distance(const HermitianMatrix& a, const HermitianMatrix& b);

/// Trace-norm error of the best rank-r approximation: sum of all but the r
/// largest eigenvalues. Requires 1 <= r <= d.
double rank_r_residual(const DensityMatrix& rho, Index r);
/// Same, from a non-increasing spectrum.
double rank_r_residual(const RealVector& spectrum, Index r);

/// Number of eigenvalues above tol.
Index numerical_rank(const RealVector& spectrum, double tol = kTolerance);

/// Normalized vector of i.i.d. standard complex Gaussians (Haar-distributed direction).
ComplexVector random_unit_vector(Index d, rng::Engine& eng);

DensityMatrix random_pure_state(Index d, std::uint64_t seed);
DensityMatrix random_pure_state(Index d, rng::Engine& eng);

/// G G^dagger / tr(G G^dagger) for a d x r complex Ginibre matrix G.
DensityMatrix random_rank_r_state(Index d, Index r, std::uint64_t seed);
DensityMatrix random_rank_r_state(Index d, Index r, rng::Engine& eng);

/// (1 - p)|psi><psi| + (p / d) I. Requires psi rank one and p in [0, 1].
DensityMatrix caricature_state(const DensityMatrix& psi, double p);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

}  // namespace plstomo
