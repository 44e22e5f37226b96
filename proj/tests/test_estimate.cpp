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

#include <gtest/gtest.h>

#include <cmath>

#include "plstomo/errors.hpp"
#include "plstomo/estimate.hpp"
#include "support/oracles.hpp"

namespace {

using namespace plstomo;

std::vector<MeasurementScheme> finite_schemes() {
  return {build_mub_scheme(2),           build_mub_scheme(3),           build_mub_scheme(5),
          build_pauli_observable_scheme(1), build_pauli_observable_scheme(2), build_pauli_basis_scheme(1),
          build_pauli_basis_scheme(2)};
}

TEST(LinearInversion, ExactProbabilitiesRecoverState) {
  auto eng = rng::make_engine(1);
  for (const auto& s : finite_schemes()) {
    for (int rep = 0; rep < 5; ++rep) {
      const DensityMatrix rho = oracle::random_state(s.dim(), eng);
      const auto f = FrequencyVector::from_probabilities(born_probabilities(rho, s));
      const auto l = linear_inversion(s, f);
      EXPECT_LT(operator_norm_distance(l.matrix, rho.hermitian()), 1e-10) << scheme_name(s.kind());
      EXPECT_LT(operator_norm_distance(ls_generic(generic_problem(s, f)).matrix, rho.hermitian()), 1e-8);
    }
  }
}

TEST(LinearInversion, ClosedFormsMatchGeneric) {
  for (const auto& s : finite_schemes()) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const DensityMatrix rho = random_rank_r_state(s.dim(), 1, seed);
      const auto f = oracle::sampled_frequencies(rho, s, 50 + seed, seed);
      const auto closed = linear_inversion(s, f);
      const auto generic = ls_generic(generic_problem(s, f));
      EXPECT_LT(operator_norm_distance(closed.matrix, generic.matrix), 1e-8) << scheme_name(s.kind());
      EXPECT_NEAR(closed.matrix.trace(), 1.0, 1e-10);
      ASSERT_TRUE(generic.condition_number.has_value());
    }
  }
}

TEST(LinearInversion, GenericMatchesPseudoinverse) {
  for (const auto& s : {build_mub_scheme(3), build_pauli_basis_scheme(2), build_pauli_observable_scheme(2)}) {
    const DensityMatrix rho = random_pure_state(s.dim(), 4);
    const auto f = oracle::sampled_frequencies(rho, s, 40, 4);
    const GenericProblem p = generic_problem(s, f);
    const ComplexMatrix ref = oracle::pinv_least_squares(p.effects, p.frequencies);
    EXPECT_LT((ls_generic(p).matrix.matrix() - ref).norm(), 1e-9) << scheme_name(s.kind());
  }
}

TEST(LinearInversion, IncompleteSchemeRaises) {
  const auto s = MeasurementScheme::structured({ComplexVector::Unit(2, 0), ComplexVector::Unit(2, 1)}, 1);
  const auto f = FrequencyVector::from_probabilities(born_probabilities(DensityMatrix::maximally_mixed(2), s));
  EXPECT_THROW(ls_generic(generic_problem(s, f)), CompletenessError);
}

TEST(LinearInversion, GenericDimensionLimit) {
  std::vector<HermitianMatrix> e{HermitianMatrix::identity(17)};
  const std::vector<double> f{1.0};
  EXPECT_THROW(ls_generic(e, f), DimensionError);
}

TEST(LinearInversion, StructuredTraceIsOne) {
  const auto s = build_mub_scheme(7);
  const auto f = oracle::sampled_frequencies(random_pure_state(7, 2), s, 10, 2);
  EXPECT_NEAR(ls_structured(s, f).matrix.trace(), 1.0, 1e-12);
}

TEST(LinearInversion, PauliObservablesMaximallyMixed) {
  const auto s = build_pauli_observable_scheme(2);
  const auto f = FrequencyVector::from_probabilities(born_probabilities(DensityMatrix::maximally_mixed(4), s));
  EXPECT_LT((ls_pauli_observables(s, f).matrix.matrix() - ComplexMatrix::Identity(4, 4) / 4.0).norm(), 1e-14);
}

TEST(LinearInversion, PauliObservablesDichotomy) {
  const auto s = build_pauli_observable_scheme(1);
  FrequencyVector f;
  f.frequencies = {{0.5, 0.5}, {0.6, 0.5}, {1.0, 0.0}};
  EXPECT_THROW(ls_pauli_observables(s, f), DomainError);
}

TEST(LinearInversion, PauliBasisTwoFormsAgree) {
  for (int k = 1; k <= 3; ++k) {
    const auto s = build_pauli_basis_scheme(k);
    const auto f = oracle::sampled_frequencies(random_pure_state(s.dim(), 6), s, 30, 6);
    const auto a = ls_pauli_basis(s, f);
    const auto b = ls_pauli_basis_depolarizing(s, f);
    EXPECT_LT(operator_norm_distance(a.matrix, b.matrix), 1e-10);
    EXPECT_NEAR(a.matrix.trace(), 1.0, 1e-12);
  }
}

TEST(LinearInversion, WrongSchemeKind) {
  const auto s = build_mub_scheme(2);
  const auto f = FrequencyVector::from_probabilities(born_probabilities(DensityMatrix::maximally_mixed(2), s));
  EXPECT_THROW(ls_pauli_basis(s, f), DomainError);
  EXPECT_THROW(ls_pauli_observables(s, f), DomainError);
}

TEST(Uniform, SingleSample) {
  UniformPovmSample s;
  s.dim = 3;
  const ComplexVector v = (ComplexVector(3) << Complex(0.6, 0), Complex(0, 0.8), 0).finished();
  s.vectors = {v};
  const auto l = ls_uniform(s);
  const ComplexMatrix expect = 4.0 * v * v.adjoint() - ComplexMatrix::Identity(3, 3);
  EXPECT_LT((l.matrix.matrix() - expect).norm(), 1e-14);
  EXPECT_NEAR(l.matrix.trace(), 1.0, 1e-14);
  EXPECT_THROW(ls_uniform(UniformPovmSample{3, {}}), DomainError);
}

TEST(Uniform, LargeSampleCloseInOperatorNorm) {
  const auto rho = random_rank_r_state(4, 2, 31);
  int good = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto l = ls_uniform(sample_uniform_povm(rho, 100000, seed));
    if (operator_norm_distance(l.matrix, rho.hermitian()) < 0.1) ++good;
  }
  EXPECT_EQ(good, 20);
}

TEST(Threshold, WorkedExamples) {
  const RealVector a = (RealVector(2) << 1.2, -0.2).finished();
  EXPECT_NEAR(threshold_x0(a), oracle::bisection_x0(a), 1e-12);
  EXPECT_NEAR(threshold_x0(a), 0.2, 1e-15);
  const RealVector b = (RealVector(3) << 0.9, 0.6, -0.5).finished();
  EXPECT_NEAR(threshold_x0(b), oracle::bisection_x0(b), 1e-12);
  EXPECT_NEAR(threshold_x0(b), 0.25, 1e-15);
}

TEST(Threshold, MatchesBisection) {
  auto eng = rng::make_engine(8);
  for (int rep = 0; rep < 200; ++rep) {
    const auto d = static_cast<Index>(1 + rng::uniform01(eng) * 40);
    const RealVector ev = eigenvalues(oracle::random_indefinite_unit_trace(d, eng));
    EXPECT_NEAR(threshold_x0(ev), oracle::bisection_x0(ev), 1e-10);
  }
}

TEST(Projection, WorkedExampleSpectrum) {
  const RealVector lam = (RealVector(3) << 0.9, 0.6, -0.5).finished();
  const LinearInversionEstimate l{HermitianMatrix::diagonal(lam), SchemeKind::StructuredPovm, 0, {}};
  const PlsEstimate p = project_to_states(l);
  EXPECT_NEAR(p.x0, 0.25, 1e-15);
  const RealVector ev = eigenvalues(p.state.hermitian());
  EXPECT_NEAR(ev[0], 0.65, 1e-14);
  EXPECT_NEAR(ev[1], 0.35, 1e-14);
  EXPECT_NEAR(ev[2], 0.0, 1e-14);
}

TEST(Projection, DensityInputUnchanged) {
  const auto rho = random_rank_r_state(4, 3, 12);
  const PlsEstimate p = project_to_states({rho.hermitian(), SchemeKind::StructuredPovm, 0, {}});
  EXPECT_LT(frobenius_distance(p.state.hermitian(), rho.hermitian()), 1e-12);
  EXPECT_NEAR(p.x0, 0.0, 1e-14);
  EXPECT_GE(p.x0, 0.0);
}

TEST(Projection, TracePrecondition) {
  const LinearInversionEstimate l{HermitianMatrix::identity(2), SchemeKind::StructuredPovm, 0, {}};
  EXPECT_THROW(project_to_states(l), DomainError);
}

TEST(Projection, OptimalAndKkt) {
  auto eng = rng::make_engine(14);
  for (int rep = 0; rep < 20; ++rep) {
    const auto d = static_cast<Index>(2 + rng::uniform01(eng) * 6);
    const HermitianMatrix l = oracle::random_indefinite_unit_trace(d, eng);
    const PlsEstimate p = project_to_states({l, SchemeKind::StructuredPovm, 0, {}});
    const double best = frobenius_distance(l, p.state.hermitian());
    for (int k = 0; k < 100; ++k) {
      const DensityMatrix sigma = oracle::random_state(d, eng);
      EXPECT_LE(best, frobenius_distance(l, sigma.hermitian()) + 1e-12);
      EXPECT_LE(frobenius_distance(p.state.hermitian(), sigma.hermitian()),
                frobenius_distance(l, sigma.hermitian()) + 1e-12);
    }
    const EigenDecomposition e = eigh(l);
    const RealVector out = (e.eigenvectors.adjoint() * p.state.matrix() * e.eigenvectors).diagonal().real();
    for (Index i = 0; i < d; ++i) {
      if (out[i] > 1e-12) {
        EXPECT_NEAR(e.eigenvalues[i] - out[i], p.x0, 1e-10);
      } else {
        EXPECT_LE(e.eigenvalues[i], p.x0 + 1e-10);
      }
    }
  }
}

TEST(Pipeline, ExactShortcut) {
  for (const auto& s : finite_schemes()) {
    const auto rho = random_pure_state(s.dim(), 3);
    PipelineOptions o;
    o.exact_probabilities = true;
    o.keep_matrices = true;
    const TrialRecord r = pls_pipeline(rho, s, 1000, 3, o);
    ASSERT_TRUE(r.estimate.has_value());
    EXPECT_LT(operator_norm_distance(r.estimate->hermitian(), rho.hermitian()), 1e-9);
  }
}

TEST(Pipeline, Deterministic) {
  const auto s = build_pauli_basis_scheme(2);
  const auto rho = random_rank_r_state(4, 2, 5);
  const TrialRecord a = pls_pipeline(rho, s, 9000, 77);
  const TrialRecord b = pls_pipeline(rho, s, 9000, 77);
  EXPECT_EQ(a.trace_error, b.trace_error);
  EXPECT_EQ(a.op_error_L, b.op_error_L);
  EXPECT_EQ(a.x0, b.x0);
  EXPECT_EQ(a.sigma_rho_hat, b.sigma_rho_hat);
  EXPECT_EQ(a.runtime_ms, 0.0);
}

TEST(Pipeline, RecordFields) {
  const auto s = build_mub_scheme(3);
  const auto rho = random_pure_state(3, 1);
  const TrialRecord r = pls_pipeline(rho, s, 3000, 1);
  EXPECT_EQ(r.d, 3);
  EXPECT_EQ(r.r_true, 1);
  EXPECT_EQ(r.n, 3000u);
  EXPECT_EQ(r.sigma_rho.size(), 3u);
  EXPECT_GE(r.trace_error, 0.0);
  EXPECT_LE(r.trace_error, 2.0);
  EXPECT_GE(r.x0, 0.0);
  EXPECT_LE(r.x0, r.op_error_L + 1e-10);
  EXPECT_LE(r.op_error_rho, 2.0 * r.op_error_L + 1e-10);
  EXPECT_GT(r.radius_delta05, 0.0);
}

TEST(Pipeline, LargeNConsistency) {
  const auto s = build_mub_scheme(2);
  int good = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto rho = random_pure_state(2, seed);
    if (pls_pipeline(rho, s, 1000000, seed).trace_error < 0.05) ++good;
  }
  EXPECT_GE(good, 99);
}

TEST(Pipeline, UniformScheme) {
  const auto rho = random_rank_r_state(3, 2, 2);
  const TrialRecord r = pls_pipeline(rho, MeasurementScheme::uniform(3), 5000, 2);
  EXPECT_EQ(r.scheme, SchemeKind::UniformPovm);
  EXPECT_LT(r.trace_error, 2.0);
}

}  // namespace
