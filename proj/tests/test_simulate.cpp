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
#include <numeric>
#include <sstream>

#include "plstomo/errors.hpp"
#include "plstomo/simulate.hpp"
#include "support/oracles.hpp"

namespace {

using namespace plstomo;

TEST(Born, MatchesTraceFormula) {
  auto eng = rng::make_engine(11);
  const std::vector<MeasurementScheme> schemes{build_mub_scheme(3), build_pauli_observable_scheme(2),
                                               build_pauli_basis_scheme(2)};
  for (const auto& s : schemes) {
    const DensityMatrix rho = oracle::random_state(s.dim(), eng);
    const ProbabilityTable t = born_probabilities(rho, s);
    ASSERT_EQ(t.settings(), s.settings());
    for (std::size_t k = 0; k < s.settings(); ++k) {
      double sum = 0.0;
      for (std::size_t o = 0; o < s.outcomes_per_setting(); ++o) {
        const double p = (s.effect(k, o).matrix() * rho.matrix()).trace().real();
        EXPECT_NEAR(t.probabilities[k][o], p, 1e-12);
        sum += t.probabilities[k][o];
      }
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

TEST(Born, PureStateInItsBasis) {
  const auto rho = DensityMatrix::pure(ComplexVector::Unit(3, 1));
  const ProbabilityTable t = born_probabilities(rho, build_mub_scheme(3));
  EXPECT_NEAR(t.probabilities[0][1], 1.0, 1e-14);
  EXPECT_NEAR(t.probabilities[0][0], 0.0, 1e-14);
  for (std::size_t k = 1; k < 4; ++k) {
    for (double p : t.probabilities[k]) EXPECT_NEAR(p, 1.0 / 3.0, 1e-12);
  }
}

TEST(Born, RejectsMismatches) {
  EXPECT_THROW(born_probabilities(DensityMatrix::maximally_mixed(2), build_mub_scheme(3)), DimensionError);
  EXPECT_THROW(born_probabilities(DensityMatrix::maximally_mixed(2), MeasurementScheme::uniform(2)), DomainError);
}

TEST(Shots, EqualSplitWithRemainderFirst) {
  EXPECT_EQ(allocate_shots(10, 4), (std::vector<std::uint64_t>{3, 3, 2, 2}));
  EXPECT_EQ(allocate_shots(8, 4), (std::vector<std::uint64_t>{2, 2, 2, 2}));
  EXPECT_THROW(allocate_shots(8, 0), DomainError);
}

TEST(Counts, SumsAndDeterminism) {
  const auto s = build_mub_scheme(5);
  const auto rho = random_pure_state(5, 3);
  const ProbabilityTable t = born_probabilities(rho, s);
  const auto shots = allocate_shots(1003, s.settings());
  const OutcomeCounts a = sample_counts(t, shots, 77);
  const OutcomeCounts b = sample_counts(t, shots, 77);
  const OutcomeCounts c = sample_counts(t, shots, 78);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_NE(a.counts, c.counts);
  EXPECT_EQ(a.total(), 1003u);
  for (std::size_t k = 0; k < a.settings(); ++k) {
    EXPECT_EQ(std::accumulate(a.counts[k].begin(), a.counts[k].end(), std::uint64_t{0}), shots[k]);
  }
  const FrequencyVector f = FrequencyVector::from_counts(a);
  for (const auto& row : f.frequencies) EXPECT_NEAR(std::accumulate(row.begin(), row.end(), 0.0), 1.0, 1e-12);
}

TEST(Counts, MultinomialChiSquare) {
  const std::vector<double> p{0.1, 0.25, 0.05, 0.3, 0.3};
  auto eng = rng::make_engine(12);
  const std::uint64_t shots = 50;
  const int reps = 4000;
  std::vector<double> totals(p.size(), 0.0);
  for (int r = 0; r < reps; ++r) {
    const auto c = sample_multinomial(p, shots, eng);
    for (std::size_t i = 0; i < p.size(); ++i) totals[i] += static_cast<double>(c[i]);
  }
  double chi2 = 0.0;
  const double n = static_cast<double>(shots) * reps;
  for (std::size_t i = 0; i < p.size(); ++i) chi2 += std::pow(totals[i] - n * p[i], 2) / (n * p[i]);
  EXPECT_GT(oracle::chi_square_p_value(chi2, static_cast<double>(p.size() - 1)), 0.001);
}

TEST(Counts, ZeroProbabilityNeverDrawn) {
  auto eng = rng::make_engine(1);
  const std::vector<double> p{0.0, 1.0, 0.0};
  EXPECT_EQ(sample_multinomial(p, 100, eng), (std::vector<std::uint64_t>{0, 100, 0}));
}

TEST(Overlap, BetaMarginal) {
  auto eng = rng::make_engine(21);
  for (Index d : {2, 5}) {
    std::vector<double> x(20000);
    for (auto& v : x) v = sample_overlap_beta(d, eng);
    const double b = static_cast<double>(d - 1);
    const double ks = oracle::ks_statistic(x, [b](double t) { return oracle::beta2_cdf(t, b); });
    EXPECT_GT(oracle::ks_p_value(ks, static_cast<double>(x.size())), 0.001) << d;
  }
}

TEST(UniformPovm, PureStateOverlapAndDeterminism) {
  const Index d = 4;
  const ComplexVector psi = ComplexVector::Unit(d, 2);
  const auto rho = DensityMatrix::pure(psi);
  const UniformPovmSample s = sample_uniform_povm(rho, 20000, 5);
  ASSERT_EQ(s.vectors.size(), 20000u);
  std::vector<double> t;
  for (const auto& v : s.vectors) {
    EXPECT_NEAR(v.norm(), 1.0, 1e-12);
    t.push_back(std::norm(psi.dot(v)));
  }
  const double ks = oracle::ks_statistic(t, [](double x) { return oracle::beta2_cdf(x, 3.0); });
  EXPECT_GT(oracle::ks_p_value(ks, static_cast<double>(t.size())), 0.001);
  const UniformPovmSample again = sample_uniform_povm(rho, 20000, 5);
  EXPECT_EQ((again.vectors[123] - s.vectors[123]).norm(), 0.0);
}

TEST(UniformPovm, AgreesWithRejectionSampler) {
  const auto rho = random_rank_r_state(3, 2, 8);
  const UniformPovmSample s = sample_uniform_povm(rho, 20000, 9);
  auto eng = rng::make_engine(10);
  const auto ref = oracle::rejection_uniform_povm(rho, 20000, eng);
  std::vector<double> a;
  std::vector<double> b;
  for (const auto& v : s.vectors) a.push_back(v.dot(rho.matrix() * v).real());
  for (const auto& v : ref) b.push_back(v.dot(rho.matrix() * v).real());
  const double ks = oracle::ks_two_sample_statistic(a, b);
  EXPECT_GT(oracle::ks_p_value(ks, 10000.0), 0.001);
}

TEST(UniformPovm, OneDimensional) {
  const UniformPovmSample s = sample_uniform_povm(DensityMatrix::maximally_mixed(1), 3, 1);
  EXPECT_EQ(s.vectors.size(), 3u);
}

TEST(CountsCsv, Header) {
  OutcomeCounts c;
  c.counts = {{1, 2}};
  c.shots = {3};
  std::ostringstream out;
  write_counts_csv(out, c);
  EXPECT_EQ(out.str(), "setting,outcome,count,shots\n0,0,1,3\n0,1,2,3\n");
}

}  // namespace
