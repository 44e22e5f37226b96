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
#include "plstomo/measurements.hpp"
#include "support/oracles.hpp"

namespace {

using namespace plstomo;

ComplexMatrix pauli(char c) {
  ComplexMatrix m(2, 2);
  switch (c) {
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      m = ComplexMatrix::Identity(2, 2);
  }
  return m;
}

TEST(Mub, UnbiasedAcrossBases) {
  for (int d : {2, 3, 5, 7, 11}) {
    const auto v = mub_vectors(d);
    ASSERT_EQ(v.size(), static_cast<std::size_t>(d * (d + 1)));
    for (std::size_t i = 0; i < v.size(); ++i) {
      EXPECT_NEAR(v[i].norm(), 1.0, 1e-13);
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        const double o = std::norm(v[i].dot(v[j]));
        if (i / d == j / d) {
          EXPECT_NEAR(o, 0.0, 1e-12);
        } else {
          EXPECT_NEAR(o, 1.0 / d, 1e-12);
        }
      }
    }
  }
}

TEST(Mub, ComputationalBasisFirst) {
  const auto v = mub_vectors(3);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(std::abs(v[i][i] - Complex(1)), 0.0, 1e-15);
  EXPECT_EQ(mub_vectors(3, false).size(), 9u);
}

TEST(Mub, RejectsNonPrime) {
  EXPECT_THROW(mub_vectors(4), UnsupportedDimension);
  EXPECT_THROW(mub_vectors(9), UnsupportedDimension);
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(15));
}

TEST(Design, MubPassesTwoDesignCheck) {
  for (int d : {2, 3, 5, 7, 11}) {
    const auto v = mub_vectors(d);
    const DesignCheck c = verify_2design(v);
    EXPECT_TRUE(c.pass) << d;
    EXPECT_LE(c.max_deviation, 1e-10);
  }
}

TEST(Design, SingleBasisFails) {
  const std::vector<ComplexVector> v{ComplexVector::Unit(2, 0), ComplexVector::Unit(2, 1)};
  const ComplexMatrix sym = (ComplexMatrix(ComplexMatrix::Identity(4, 4)) +
                             (ComplexMatrix(4, 4) << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1).finished()) /
                            6.0;
  ComplexMatrix frame = ComplexMatrix::Zero(4, 4);
  for (const auto& x : v) {
    const ComplexVector xx = kron(x, x);
    frame += 0.5 * xx * xx.adjoint();
  }
  const double expected = operator_norm(HermitianMatrix(frame - sym));
  const DesignCheck c = verify_2design(v);
  EXPECT_FALSE(c.pass);
  EXPECT_NEAR(c.max_deviation, expected, 1e-12);
}

TEST(Structured, EffectsFormPovmPerSetting) {
  const auto s = build_mub_scheme(5);
  EXPECT_EQ(s.settings(), 6u);
  EXPECT_EQ(s.outcomes_per_setting(), 5u);
  for (std::size_t k = 0; k < s.settings(); ++k) {
    ComplexMatrix sum = ComplexMatrix::Zero(5, 5);
    for (std::size_t o = 0; o < 5; ++o) sum += s.effect(k, o).matrix();
    EXPECT_LT((sum - ComplexMatrix::Identity(5, 5)).norm(), 1e-12);
  }
}

TEST(Structured, ValidatesInput) {
  std::vector<ComplexVector> bad{ComplexVector::Unit(2, 0), 2.0 * ComplexVector::Unit(2, 1)};
  EXPECT_THROW(MeasurementScheme::structured(bad, 1), DomainError);
  std::vector<ComplexVector> incomplete{ComplexVector::Unit(2, 0), ComplexVector::Unit(2, 0)};
  EXPECT_THROW(MeasurementScheme::structured(incomplete, 1), DomainError);
  EXPECT_THROW(MeasurementScheme::structured(mub_vectors(3), 3), DomainError);
}

TEST(PauliWord, ValidatesLetters) {
  EXPECT_THROW(PauliWord("XQ"), DomainError);
  EXPECT_TRUE(PauliWord("II").is_identity());
  EXPECT_FALSE(PauliWord("IZ").is_identity());
}

TEST(PauliObservables, WordOrderAndMatrices) {
  const auto s = build_pauli_observable_scheme(2);
  EXPECT_EQ(s.settings(), 15u);
  EXPECT_EQ(s.words().size(), 16u);
  EXPECT_EQ(s.words()[0].letters(), "II");
  EXPECT_EQ(s.words()[1].letters(), "IX");
  EXPECT_EQ(s.words()[4].letters(), "XI");
  EXPECT_EQ(s.setting_word(0).letters(), "IX");
  for (const auto& w : s.words()) {
    const ComplexMatrix expect = kron(pauli(w[0]), pauli(w[1]));
    EXPECT_LT((pauli_matrix(w).matrix() - expect).norm(), 1e-15) << w.letters();
  }
}

TEST(PauliObservables, OrthogonalWords) {
  const auto s = build_pauli_observable_scheme(2);
  for (std::size_t i = 0; i < s.words().size(); ++i) {
    for (std::size_t j = 0; j < s.words().size(); ++j) {
      const Complex ip = (pauli_matrix(s.words()[i]).matrix() * pauli_matrix(s.words()[j]).matrix()).trace();
      EXPECT_NEAR(std::abs(ip - Complex(i == j ? 4.0 : 0.0)), 0.0, 1e-13);
    }
  }
}

TEST(PauliBasis, LabelsAndEffects) {
  const auto s = build_pauli_basis_scheme(2);
  EXPECT_EQ(s.settings(), 9u);
  EXPECT_EQ(s.outcomes_per_setting(), 4u);
  EXPECT_EQ(s.setting_label(0), "xx");
  EXPECT_EQ(s.setting_label(1), "xy");
  EXPECT_EQ(s.setting_label(8), "zz");
  const ComplexVector v = s.effect_vector(8, 1);
  EXPECT_NEAR(std::abs(v[1] - Complex(1)), 0.0, 1e-15);
  for (std::size_t k = 0; k < s.settings(); ++k) {
    ComplexMatrix sum = ComplexMatrix::Zero(4, 4);
    for (std::size_t o = 0; o < 4; ++o) sum += s.effect(k, o).matrix();
    EXPECT_LT((sum - ComplexMatrix::Identity(4, 4)).norm(), 1e-12);
  }
}

TEST(PauliBasis, EigenvectorsOfSingleQubitPaulis) {
  for (char a : {'x', 'y', 'z'}) {
    for (int o : {0, 1}) {
      const ComplexVector b = pauli_eigenvector(a, o);
      const ComplexMatrix p = pauli(static_cast<char>(std::toupper(a)));
      EXPECT_LT((p * b - (o == 0 ? 1.0 : -1.0) * b).norm(), 1e-14);
    }
  }
  EXPECT_THROW(pauli_eigenvector('w', 0), DomainError);
}

TEST(Depolarizing, SingleQubitDefinition) {
  auto eng = rng::make_engine(4);
  const HermitianMatrix x = oracle::random_hermitian(2, eng);
  const ComplexMatrix expect = 0.3 * x.matrix() + 0.35 * x.trace() * ComplexMatrix::Identity(2, 2);
  EXPECT_LT((depolarizing_apply(x, 0.3).matrix() - expect).norm(), 1e-14);
}

TEST(Depolarizing, InverseUndoesOneThird) {
  auto eng = rng::make_engine(5);
  for (int k = 1; k <= 3; ++k) {
    const HermitianMatrix x = oracle::random_hermitian(Index{1} << k, eng);
    const HermitianMatrix y = depolarizing_inverse_apply(depolarizing_apply(x, 1.0 / 3.0));
    EXPECT_LT(operator_norm_distance(x, y), 1e-12);
  }
}

TEST(Depolarizing, InverseOnProjector) {
  for (char a : {'x', 'y', 'z'}) {
    const ComplexVector b = pauli_eigenvector(a, 1);
    const auto p = HermitianMatrix::projector(b);
    const ComplexMatrix q = 3.0 * p.matrix() - ComplexMatrix::Identity(2, 2);
    EXPECT_LT((depolarizing_inverse_apply(p).matrix() - q).norm(), 1e-14);
    EXPECT_LT((q * q - 5.0 * depolarizing_apply(p, 0.6).matrix()).norm(), 1e-14);
  }
}

TEST(Depolarizing, RequiresQubitDimension) {
  EXPECT_THROW(depolarizing_apply(HermitianMatrix::identity(3), 0.5), DimensionError);
  EXPECT_EQ(qubit_count(8), 3);
}

}  // namespace
