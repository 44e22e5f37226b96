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

#include "plstomo/analyze.hpp"
#include "plstomo/errors.hpp"
#include "plstomo/estimate.hpp"
#include "support/oracles.hpp"

namespace {

using namespace plstomo;

BoundParams params(Index d, double n, Index r, double eps, double g) {
  BoundParams p;
  p.d = d;
  p.n = n;
  p.r = r;
  p.epsilon = eps;
  p.g = g;
  return p;
}

TEST(GOfD, PerScheme) {
  EXPECT_EQ(g_of_d(SchemeKind::StructuredPovm, 5), 10.0);
  EXPECT_EQ(g_of_d(SchemeKind::PauliObservables, 4), 16.0);
  EXPECT_EQ(g_of_d(SchemeKind::PauliBasis, 8), 27.0);
  EXPECT_THROW(g_of_d(SchemeKind::UniformPovm, 4), DomainError);
}

TEST(GOfD, PauliBasisExponent) {
  for (int k = 1; k <= 10; ++k) {
    const double d = std::pow(2.0, k);
    const double g = g_of_d(SchemeKind::PauliBasis, static_cast<Index>(d));
    EXPECT_GE(g, std::pow(d, 1.58));
    EXPECT_LE(g, std::pow(d, 1.585));
  }
}

TEST(Thm1, Examples) {
  EXPECT_DOUBLE_EQ(thm1_tail(params(5, 1000, 1, 0.0, 10)), 5.0);
  const long double n = 43.0L * 10.0L * std::log(5.0L) / 0.25L;
  EXPECT_NEAR(thm1_tail(params(5, static_cast<double>(n), 1, 0.5, 10)), 1.0, 1e-12);
  double prev = 1e300;
  for (double n2 : {100.0, 1000.0, 1e4, 1e5}) {
    const double v = thm1_tail(params(5, n2, 1, 0.3, 10));
    EXPECT_LT(v, prev);
    prev = v;
  }
  EXPECT_THROW(thm1_tail(params(5, 100, 1, 1.5, 10)), DomainError);
  EXPECT_THROW(thm1_tail(params(5, 100, 6, 0.5, 10)), DomainError);
  BoundParams bad = params(5, 100, 1, 0.5, 10);
  bad.delta = 1.0;
  EXPECT_THROW(thm1_tail(bad), DomainError);
}

TEST(Radius, Examples) {
  const double expected = std::sqrt(430.0L * std::log(100.0L) / 1e5L);
  EXPECT_NEAR(confidence_radius(params(5, 1e5, 1, 0.0, 10), 1), expected, 1e-15);
  EXPECT_NEAR(confidence_radius(params(5, 1e5, 1, 0.0, 10), 1), 0.1407, 5e-5);
  EXPECT_NEAR(confidence_radius(params(5, 4e5, 1, 0.0, 10), 1), expected / 2.0, 1e-15);
  BoundParams degenerate = params(5, 1e5, 1, 0.0, 10);
  degenerate.delta = 5.0;
  EXPECT_THROW(confidence_radius(degenerate, 1), DomainError);
}

TEST(SampleComplexity, Examples) {
  const auto expected = static_cast<std::uint64_t>(std::ceil(43000.0L * std::log(100.0L)));
  EXPECT_EQ(sample_complexity(params(5, 1, 1, 0.1, 10)), expected);
  const std::uint64_t one = sample_complexity(params(5, 1, 1, 0.2, 10));
  const std::uint64_t two = sample_complexity(params(5, 1, 2, 0.2, 10));
  EXPECT_LE(two, 4 * one);
  EXPECT_GE(two + 4, 4 * one);
  EXPECT_THROW(sample_complexity(params(5, 1, 1, 0.0, 10)), DomainError);
}

TEST(Essential, Examples) {
  EXPECT_DOUBLE_EQ(essential_opnorm_tail(params(5, 100, 1, 0.0, 10), SchemeKind::StructuredPovm), 5.0);
  const double v = essential_opnorm_tail(params(4, 640, 1, 1.0, 8), SchemeKind::StructuredPovm);
  EXPECT_NEAR(v, 4.0 * std::exp(-3.0 * 640.0 / 64.0), 1e-15);
  EXPECT_NO_THROW(essential_opnorm_tail(params(4, 640, 1, 2.0, 8), SchemeKind::StructuredPovm));
  EXPECT_THROW(essential_opnorm_tail(params(4, 640, 1, 2.5, 8), SchemeKind::StructuredPovm), DomainError);
  EXPECT_NO_THROW(essential_opnorm_tail(params(4, 640, 1, 2.0, 16), SchemeKind::PauliObservables));
  EXPECT_THROW(essential_opnorm_tail(params(4, 640, 1, 1.5, 9), SchemeKind::PauliBasis), DomainError);
  const double u = essential_opnorm_tail(params(4, 1e5, 1, 0.5, 0), SchemeKind::UniformPovm);
  EXPECT_NEAR(u, 2.0 * std::exp(8.0 * std::log(3.0) - 1e5 * 0.25 / 480.0), 1e-20);
}

TEST(Thm2, Examples) {
  const double n = 2.2 * 4 * 480 / 0.25;
  EXPECT_NEAR(thm2_tail(params(4, n, 1, 0.5, 0)), 1.0, 1e-12);
  EXPECT_NEAR(std::log(thm2_tail(params(4, 1e5, 1, 0.8, 0))), 8.8 - 0.64e5 / 480.0, 1e-9);
  EXPECT_LT(thm2_tail(params(4, 2e5, 1, 0.8, 0)), thm2_tail(params(4, 1e5, 1, 0.8, 0)));
  EXPECT_GT(thm2_tail(params(5, 1e5, 1, 0.8, 0)), thm2_tail(params(4, 1e5, 1, 0.8, 0)));
  EXPECT_THROW(thm2_tail(params(4, 1e5, 1, 0.0, 0)), DomainError);
  const BoundParams p = params(4, 1e5, 1, 0.0, 0);
  BoundParams inv = p;
  inv.epsilon = uniform_confidence_radius(p, 1);
  EXPECT_NEAR(thm2_tail(inv), p.delta, 1e-12);
}

TEST(Slack, Formula) {
  EXPECT_NEAR(binomial_slack(0.25, 300), 3.0 * std::sqrt(0.25 * 0.75 / 300.0), 1e-15);
  EXPECT_EQ(binomial_slack(3.0, 10), 0.0);
}

TEST(Coverage, VacuousAndViolation) {
  const CoverageCheck v = coverage(100, 100, 1.5);
  EXPECT_TRUE(v.vacuous);
  EXPECT_TRUE(v.holds);
  const CoverageCheck bad = coverage(50, 100, 0.01);
  EXPECT_FALSE(bad.holds);
  const CoverageCheck ok = coverage(2, 100, 0.01);
  EXPECT_TRUE(ok.holds);
  EXPECT_THROW(coverage(0, 0, 0.5), DomainError);
}

TEST(Prop1, IdenticalStates) {
  const auto rho = random_pure_state(3, 1);
  const InequalityCheck c = prop1_conversion_check(0.0, rho, rho, 1);
  EXPECT_NEAR(c.lhs, 0.0, 1e-12);
  EXPECT_TRUE(c.holds);
}

TEST(RankComparison, OrthogonalPureStatesEquality) {
  const auto a = DensityMatrix::pure(ComplexVector::Unit(4, 0));
  const auto b = DensityMatrix::pure(ComplexVector::Unit(4, 3));
  const InequalityCheck c = rank_comparison_check(a, b, 1);
  EXPECT_NEAR(c.lhs, 2.0, 1e-14);
  EXPECT_NEAR(c.rhs, 2.0, 1e-14);
  EXPECT_TRUE(c.holds);
}

TEST(RankComparison, RandomPairs) {
  auto eng = rng::make_engine(3);
  for (int rep = 0; rep < 100; ++rep) {
    const auto d = static_cast<Index>(2 + rng::uniform01(eng) * 7);
    const auto a = oracle::random_state(d, eng);
    const auto b = oracle::random_state(d, eng);
    for (Index r = 1; r <= d; ++r) EXPECT_TRUE(rank_comparison_check(a, b, r).holds);
  }
}

TEST(SecondMoment, MubIdentity) {
  auto eng = rng::make_engine(9);
  EXPECT_LT(design_second_moment_check(build_mub_scheme(2), oracle::random_state(2, eng)), 1e-10);
  EXPECT_LT(design_second_moment_check(build_mub_scheme(7), DensityMatrix::maximally_mixed(7)), 1e-10);
  EXPECT_THROW(design_second_moment_check(build_pauli_basis_scheme(1), DensityMatrix::maximally_mixed(2)),
               DomainError);
}

TEST(Thm4, CaricatureBatch) {
  const auto s = build_pauli_basis_scheme(2);
  const auto rho = caricature_state(random_pure_state(4, 1), 0.2);
  std::vector<TrialRecord> trials;
  for (std::uint64_t t = 0; t < 100; ++t) trials.push_back(pls_pipeline(rho, s, 20000, t));
  const CoverageCheck c = thm4_effective_rank_check(trials, 1, 0.5);
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.trials, 100u);
  const CoverageCheck loose = thm4_effective_rank_check(trials, 1, 0.01);
  EXPECT_TRUE(loose.vacuous);
  EXPECT_TRUE(loose.holds);
}

}  // namespace
