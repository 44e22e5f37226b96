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

#include "plstomo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "plstomo/errors.hpp"

namespace plstomo {

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError("Hermitian matrix must be square and non-empty, got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
  if (!m.allFinite()) {
    throw NumericalError("non-finite entry in Hermitian matrix", m.rows());
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::zero(Index d) { return {ComplexMatrix::Zero(d, d), Trusted{}}; }

HermitianMatrix HermitianMatrix::identity(Index d) { return {ComplexMatrix::Identity(d, d), Trusted{}}; }

HermitianMatrix HermitianMatrix::projector(const ComplexVector& v) {
  ComplexMatrix m = v * v.adjoint();
  for (Index i = 0; i < m.rows(); ++i) m(i, i) = m(i, i).real();
  return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::diagonal(const RealVector& diag) {
  return {diag.cast<Complex>().asDiagonal().toDenseMatrix(), Trusted{}};
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
  if (o.dim() != dim()) throw DimensionError("dimension mismatch in Hermitian sum");
  m_ += o.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
  if (o.dim() != dim()) throw DimensionError("dimension mismatch in Hermitian difference");
  m_ -= o.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

HermitianMatrix EigenDecomposition::reconstruct(const RealVector& values) const {
  return HermitianMatrix(eigenvectors * values.cast<Complex>().asDiagonal() * eigenvectors.adjoint());
}

DensityMatrix DensityMatrix::from_hermitian(HermitianMatrix h, double tol) {
  const double tr = h.trace();
  if (std::abs(tr - 1.0) > tol) {
    throw DomainError("density matrix must have unit trace, got " + std::to_string(tr));
  }
  const RealVector ev = eigenvalues(h);
  if (ev[ev.size() - 1] < -tol) {
    throw DomainError("density matrix must be positive semidefinite, min eigenvalue " +
                      std::to_string(ev[ev.size() - 1]));
  }
  return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DomainError("pure state vector must be non-zero and finite");
  }
  return DensityMatrix(HermitianMatrix::projector(psi / norm));
}

DensityMatrix DensityMatrix::maximally_mixed(Index d) {
  return DensityMatrix(HermitianMatrix::identity(d) * (1.0 / static_cast<double>(d)));
}

EigenDecomposition eigh(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigensolver did not converge", a.dim());
  }
  // Eigen sorts ascending; flip to non-increasing.
  EigenDecomposition out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

RealVector eigenvalues(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigensolver did not converge", a.dim());
  }
  return solver.eigenvalues().reverse();
}

double trace_norm(const HermitianMatrix& a) { return eigenvalues(a).cwiseAbs().sum(); }

double trace_norm_distance(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("trace distance of matrices with different dimensions");
  return trace_norm(a - b);
}

double operator_norm(const HermitianMatrix& a) {
  const RealVector ev = eigenvalues(a);
  return std::max(std::abs(ev[0]), std::abs(ev[ev.size() - 1]));
}

double operator_norm_distance(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("operator-norm distance of matrices with different dimensions");
  return operator_norm(a - b);
}

double frobenius_distance(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("Frobenius distance of matrices with different dimensions");
  return (a.matrix() - b.matrix()).norm();
}

double rank_r_residual(const RealVector& spectrum, Index r) {
  if (r < 1 || r > spectrum.size()) {
    throw DomainError("rank parameter r=" + std::to_string(r) + " outside [1, " + std::to_string(spectrum.size()) +
                      "]");
  }
  return std::max(0.0, spectrum.tail(spectrum.size() - r).sum());
}

double rank_r_residual(const DensityMatrix& rho, Index r) { return rank_r_residual(eigenvalues(rho.hermitian()), r); }

Index numerical_rank(const RealVector& spectrum, double tol) {
  return static_cast<Index>(std::count_if(spectrum.begin(), spectrum.end(), [tol](double x) { return x > tol; }));
}

ComplexVector random_unit_vector(Index d, rng::Engine& eng) {
  ComplexVector v(d);
  for (Index i = 0; i < d; ++i) v[i] = rng::complex_normal(eng);
  return v / v.norm();
}

DensityMatrix random_pure_state(Index d, rng::Engine& eng) {
  if (d < 1) throw DomainError("dimension must be positive");
  return DensityMatrix::pure(random_unit_vector(d, eng));
}

DensityMatrix random_pure_state(Index d, std::uint64_t seed) {
  rng::Engine eng = rng::make_engine(rng::derive(seed, rng::Stream::State));
  return random_pure_state(d, eng);
}

DensityMatrix random_rank_r_state(Index d, Index r, rng::Engine& eng) {
  if (d < 1 || r < 1 || r > d) {
    throw DomainError("rank r=" + std::to_string(r) + " outside [1, " + std::to_string(d) + "]");
  }
  ComplexMatrix g(d, r);
  for (Index j = 0; j < r; ++j) {
    for (Index i = 0; i < d; ++i) g(i, j) = rng::complex_normal(eng);
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  HermitianMatrix h(rho);
  // Re-normalize after symmetrization so the trace is 1 to rounding.
  h *= 1.0 / h.trace();
  return DensityMatrix::from_hermitian(std::move(h));
}

DensityMatrix random_rank_r_state(Index d, Index r, std::uint64_t seed) {
  rng::Engine eng = rng::make_engine(rng::derive(seed, rng::Stream::State));
  return random_rank_r_state(d, r, eng);
}

DensityMatrix caricature_state(const DensityMatrix& psi, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("failure probability p must lie in [0, 1]");
  const RealVector ev = eigenvalues(psi.hermitian());
  if (numerical_rank(ev) != 1) throw DomainError("caricature state requires a pure target state");
  const Index d = psi.dim();
  HermitianMatrix h = (1.0 - p) * psi.hermitian() + HermitianMatrix::identity(d) * (p / static_cast<double>(d));
  return DensityMatrix::from_hermitian(std::move(h));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a[i] * b;
  return out;
}

}  // namespace plstomo
