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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "plstomo/linalg.hpp"

namespace plstomo {

enum class SchemeKind { StructuredPovm, PauliObservables, PauliBasis, UniformPovm };

const char* scheme_name(SchemeKind kind) noexcept;

/// Tensor product of single-qubit Paulis, written as a string over {I,X,Y,Z}.
/// The first letter acts on the most significant qubit.
class PauliWord {
 public:
  explicit PauliWord(std::string letters);

  std::size_t size() const noexcept { return letters_.size(); }
  const std::string& letters() const noexcept { return letters_; }
  char operator[](std::size_t i) const { return letters_[i]; }
  bool is_identity() const noexcept;

  friend bool operator==(const PauliWord&, const PauliWord&) = default;

 private:
  std::string letters_;
};

/// One of the four measurement families. Immutable after construction.
///
/// Settings are separate experimental configurations, each a POVM whose
/// effects sum to the identity. Outcome frequencies are always normalized
/// within a setting.
class MeasurementScheme {
 public:
  /// Unit vectors grouped into `settings` equal consecutive blocks. Block s
  /// holds m_s = m / settings vectors with effects (d / m_s)|v><v|. Throws
  /// DomainError if a vector is not unit norm or a block is not a POVM.
  static MeasurementScheme structured(std::vector<ComplexVector> vectors, std::size_t settings);
  /// All 4^k words; settings are the 4^k - 1 non-identity words.
  static MeasurementScheme pauli_observables(int k);
  /// 3^k local bases, 2^k outcomes each.
  static MeasurementScheme pauli_basis(int k);
  static MeasurementScheme uniform(Index d);

  SchemeKind kind() const noexcept { return kind_; }
  Index dim() const noexcept { return dim_; }
  std::size_t settings() const noexcept { return settings_; }
  /// Zero for the uniform POVM, whose outcomes are continuous.
  std::size_t outcomes_per_setting() const noexcept { return outcomes_; }
  /// Number of qubits for the Pauli families, 0 otherwise.
  int qubits() const noexcept { return qubits_; }

  /// Rank-one families (structured, Pauli basis): the unit vector of effect (s, o).
  ComplexVector effect_vector(std::size_t setting, std::size_t outcome) const;
  /// Weight w with effect(s, o) = w |v><v| for rank-one families.
  double effect_weight(std::size_t setting) const;
  /// The POVM element of outcome o in setting s.
  HermitianMatrix effect(std::size_t setting, std::size_t outcome) const;

  /// Structured only: the stored vectors in setting order.
  const std::vector<ComplexVector>& vectors() const;
  /// Pauli observables only: all d^2 words, identity first.
  const std::vector<PauliWord>& words() const;
  /// Pauli observables: word measured by setting s (= words()[s + 1]).
  const PauliWord& setting_word(std::size_t setting) const;
  /// Pauli basis: setting label over {x,y,z}^k.
  std::string setting_label(std::size_t setting) const;

 private:
  MeasurementScheme() = default;

  SchemeKind kind_ = SchemeKind::UniformPovm;
  Index dim_ = 0;
  std::size_t settings_ = 0;
  std::size_t outcomes_ = 0;
  int qubits_ = 0;
  std::vector<ComplexVector> vectors_;
  std::vector<PauliWord> words_;
};

/// Maximal set of mutually unbiased bases for prime d: the computational basis
/// first (if requested), then bases a = 0..d-1 with components
/// omega^(a k^2 + b k) / sqrt(d). For d = 2 the eigenbases of Z, X, Y.
/// Throws UnsupportedDimension if d is not prime.
std::vector<ComplexVector> mub_vectors(int d, bool include_computational = true);
MeasurementScheme build_mub_scheme(int d, bool include_computational = true);
MeasurementScheme build_pauli_observable_scheme(int k);
MeasurementScheme build_pauli_basis_scheme(int k);

bool is_prime(int n) noexcept;

/// 2^k x 2^k tensor product of the word's Pauli matrices.
HermitianMatrix pauli_matrix(const PauliWord& word);

/// Single-qubit eigenvector of sigma_s (s in {x,y,z}) with eigenvalue +1
/// (outcome 0) or -1 (outcome 1).
ComplexVector pauli_eigenvector(char axis, int outcome);

struct DesignCheck {
  double max_deviation;
  bool pass;
};

/// || (1/m) sum (|v><v|)^{(x)2} - P_sym / C(d+1, 2) ||_op, pass iff <= 1e-9.
DesignCheck verify_2design(std::span<const ComplexVector> vectors);

/// Per-qubit depolarizing channel D_p(X) = p X + (1 - p) tr(X) / 2 I applied to
/// every qubit of a 2^k-dimensional operator. D_{1/3}(X) = X/3 + tr(X)/3 I.
HermitianMatrix depolarizing_apply(const HermitianMatrix& x, double p);

/// Inverse of D_{1/3} on every qubit: X -> 3 X - tr(X) I per tensor factor.
HermitianMatrix depolarizing_inverse_apply(const HermitianMatrix& x);

/// Number of qubits k with 2^k == d; throws DimensionError otherwise.
int qubit_count(Index d);

}  // namespace plstomo
