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

#include "plstomo/measurements.hpp"

#include <cmath>
#include <numbers>

#include "plstomo/errors.hpp"
#include "plstomo/kernels.hpp"

namespace plstomo {

namespace {

constexpr double kUnitNormTolerance = 1e-12;
constexpr double kDesignTolerance = 1e-9;

std::size_t ipow(std::size_t base, int exp) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// X -> a X + b tr_q(X) (x) I_q on qubit q (0 = most significant).
void apply_local(ComplexMatrix& x, int k, int qubit, double a, double b) {
  const Index d = x.rows();
  const Index mask = Index{1} << (k - 1 - qubit);
  for (Index c = 0; c < d; ++c) {
    if (c & mask) continue;
    for (Index r = 0; r < d; ++r) {
      if (r & mask) continue;
      const Complex b00 = x(r, c);
      const Complex b11 = x(r | mask, c | mask);
      const Complex tr = b00 + b11;
      x(r, c) = a * b00 + b * tr;
      x(r | mask, c | mask) = a * b11 + b * tr;
      x(r, c | mask) *= a;
      x(r | mask, c) *= a;
    }
  }
}

ComplexMatrix single_pauli(char letter) {
  ComplexMatrix m(2, 2);
  const Complex i{0.0, 1.0};
  switch (letter) {
    case 'I':
      m << 1, 0, 0, 1;
      break;
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, -i, i, 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      throw DomainError(std::string("invalid Pauli letter '") + letter + "'");
  }
  return m;
}

}  // namespace

const char* scheme_name(SchemeKind kind) noexcept {
  switch (kind) {
    case SchemeKind::StructuredPovm:
      return "mub";
    case SchemeKind::PauliObservables:
      return "pauli-obs";
    case SchemeKind::PauliBasis:
      return "pauli-basis";
    case SchemeKind::UniformPovm:
      return "uniform";
  }
  return "unknown";
}

PauliWord::PauliWord(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw DomainError("Pauli word must have at least one letter");
  for (char c : letters_) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw DomainError("Pauli word '" + letters_ + "' contains letters outside {I,X,Y,Z}");
    }
  }
}

bool PauliWord::is_identity() const noexcept {
  return letters_.find_first_not_of('I') == std::string::npos;
}

bool is_prime(int n) noexcept {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

int qubit_count(Index d) {
  int k = 0;
  Index v = 1;
  while (v < d) {
    v <<= 1;
    ++k;
  }
  if (v != d || k == 0) throw DimensionError("dimension " + std::to_string(d) + " is not a power of 2 (>= 2)");
  return k;
}

MeasurementScheme MeasurementScheme::structured(std::vector<ComplexVector> vectors, std::size_t settings) {
  if (vectors.empty()) throw DomainError("structured POVM needs at least one vector");
  if (settings == 0 || vectors.size() % settings != 0) {
    throw DomainError("vector count " + std::to_string(vectors.size()) + " not divisible into " +
                      std::to_string(settings) + " settings");
  }
  const Index d = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != d) throw DimensionError("structured POVM vectors have differing dimensions");
    if (std::abs(v.norm() - 1.0) > kUnitNormTolerance) {
      throw DomainError("structured POVM vector is not unit norm (norm " + std::to_string(v.norm()) + ")");
    }
  }
  MeasurementScheme s;
  s.kind_ = SchemeKind::StructuredPovm;
  s.dim_ = d;
  s.settings_ = settings;
  s.outcomes_ = vectors.size() / settings;
  s.vectors_ = std::move(vectors);
  const double w = s.effect_weight(0);
  for (std::size_t st = 0; st < settings; ++st) {
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (std::size_t o = 0; o < s.outcomes_; ++o) {
      const auto& v = s.vectors_[st * s.outcomes_ + o];
      kernels::rank_one_update({sum.data(), static_cast<std::size_t>(sum.size())}, static_cast<std::size_t>(d),
                               {v.data(), static_cast<std::size_t>(d)}, w);
    }
    const double dev = (sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (dev > kTolerance) {
      throw DomainError("setting " + std::to_string(st) + " effects do not sum to the identity (deviation " +
                        std::to_string(dev) + ")");
    }
  }
  return s;
}

MeasurementScheme MeasurementScheme::pauli_observables(int k) {
  if (k < 1) throw DomainError("Pauli observables need k >= 1 qubits");
  MeasurementScheme s;
  s.kind_ = SchemeKind::PauliObservables;
  s.qubits_ = k;
  s.dim_ = Index{1} << k;
  const std::size_t count = ipow(4, k);
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  s.words_.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::string w(static_cast<std::size_t>(k), 'I');
    std::size_t rem = idx;
    for (int q = k - 1; q >= 0; --q) {
      w[static_cast<std::size_t>(q)] = kLetters[rem % 4];
      rem /= 4;
    }
    s.words_.emplace_back(std::move(w));
  }
  s.settings_ = count - 1;
  s.outcomes_ = 2;
  return s;
}

MeasurementScheme MeasurementScheme::pauli_basis(int k) {
  if (k < 1) throw DomainError("Pauli basis measurements need k >= 1 qubits");
  MeasurementScheme s;
  s.kind_ = SchemeKind::PauliBasis;
  s.qubits_ = k;
  s.dim_ = Index{1} << k;
  s.settings_ = ipow(3, k);
  s.outcomes_ = static_cast<std::size_t>(s.dim_);
  return s;
}

MeasurementScheme MeasurementScheme::uniform(Index d) {
  if (d < 1) throw DomainError("uniform POVM needs d >= 1");
  MeasurementScheme s;
  s.kind_ = SchemeKind::UniformPovm;
  s.dim_ = d;
  return s;
}

std::string MeasurementScheme::setting_label(std::size_t setting) const {
  if (kind_ != SchemeKind::PauliBasis) throw DomainError("setting labels exist only for Pauli basis schemes");
  if (setting >= settings_) throw DomainError("setting index out of range");
  std::string label(static_cast<std::size_t>(qubits_), 'x');
  std::size_t rem = setting;
  for (int q = qubits_ - 1; q >= 0; --q) {
    label[static_cast<std::size_t>(q)] = "xyz"[rem % 3];
    rem /= 3;
  }
  return label;
}

double MeasurementScheme::effect_weight(std::size_t /*setting*/) const {
  switch (kind_) {
    case SchemeKind::StructuredPovm:
      return static_cast<double>(dim_) / static_cast<double>(outcomes_);
    case SchemeKind::PauliBasis:
      return 1.0;
    default:
      throw DomainError(std::string("scheme '") + scheme_name(kind_) + "' has no rank-one effects");
  }
}

ComplexVector MeasurementScheme::effect_vector(std::size_t setting, std::size_t outcome) const {
  if (setting >= settings_ || outcome >= outcomes_) throw DomainError("effect index out of range");
  switch (kind_) {
    case SchemeKind::StructuredPovm:
      return vectors_[setting * outcomes_ + outcome];
    case SchemeKind::PauliBasis: {
      const std::string label = setting_label(setting);
      ComplexVector v = pauli_eigenvector(label[0], static_cast<int>((outcome >> (qubits_ - 1)) & 1U));
      for (int q = 1; q < qubits_; ++q) {
        v = kron(v, pauli_eigenvector(label[static_cast<std::size_t>(q)],
                                      static_cast<int>((outcome >> (qubits_ - 1 - q)) & 1U)));
      }
      return v;
    }
    default:
      throw DomainError(std::string("scheme '") + scheme_name(kind_) + "' has no rank-one effects");
  }
}

HermitianMatrix MeasurementScheme::effect(std::size_t setting, std::size_t outcome) const {
  if (kind_ == SchemeKind::UniformPovm) throw DomainError("the uniform POVM has a continuum of effects");
  if (setting >= settings_ || outcome >= outcomes_) throw DomainError("effect index out of range");
  if (kind_ == SchemeKind::PauliObservables) {
    const double sign = outcome == 0 ? 1.0 : -1.0;
    return 0.5 * (HermitianMatrix::identity(dim_) + sign * pauli_matrix(setting_word(setting)));
  }
  return effect_weight(setting) * HermitianMatrix::projector(effect_vector(setting, outcome));
}

const std::vector<ComplexVector>& MeasurementScheme::vectors() const {
  if (kind_ != SchemeKind::StructuredPovm) throw DomainError("only structured POVMs store vectors");
  return vectors_;
}

const std::vector<PauliWord>& MeasurementScheme::words() const {
  if (kind_ != SchemeKind::PauliObservables) throw DomainError("only Pauli observable schemes store words");
  return words_;
}

const PauliWord& MeasurementScheme::setting_word(std::size_t setting) const {
  if (setting >= settings_) throw DomainError("setting index out of range");
  return words().at(setting + 1);
}

std::vector<ComplexVector> mub_vectors(int d, bool include_computational) {
  if (!is_prime(d)) {
    throw UnsupportedDimension("MUB construction requires a prime dimension, got " + std::to_string(d));
  }
  std::vector<ComplexVector> out;
  if (include_computational) {
    for (int b = 0; b < d; ++b) out.push_back(ComplexVector::Unit(d, b));
  }
  if (d == 2) {
    for (int o = 0; o < 2; ++o) out.push_back(pauli_eigenvector('x', o));
    for (int o = 0; o < 2; ++o) out.push_back(pauli_eigenvector('y', o));
    return out;
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  const double base = 2.0 * std::numbers::pi / static_cast<double>(d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      ComplexVector v(d);
      for (int k = 0; k < d; ++k) {
        const long long e = (static_cast<long long>(a) * k * k + static_cast<long long>(b) * k) % d;
        v[k] = scale * std::polar(1.0, base * static_cast<double>(e));
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

MeasurementScheme build_mub_scheme(int d, bool include_computational) {
  auto vecs = mub_vectors(d, include_computational);
  const std::size_t settings = vecs.size() / static_cast<std::size_t>(d);
  return MeasurementScheme::structured(std::move(vecs), settings);
}

MeasurementScheme build_pauli_observable_scheme(int k) { return MeasurementScheme::pauli_observables(k); }

MeasurementScheme build_pauli_basis_scheme(int k) { return MeasurementScheme::pauli_basis(k); }

HermitianMatrix pauli_matrix(const PauliWord& word) {
  ComplexMatrix m = single_pauli(word[0]);
  for (std::size_t q = 1; q < word.size(); ++q) m = kron(m, single_pauli(word[q]));
  return HermitianMatrix(m);
}

ComplexVector pauli_eigenvector(char axis, int outcome) {
  const double s = 1.0 / std::sqrt(2.0);
  const double sign = outcome == 0 ? 1.0 : -1.0;
  ComplexVector v(2);
  switch (axis) {
    case 'x':
      v << s, sign * s;
      break;
    case 'y':
      v << s, Complex{0.0, sign * s};
      break;
    case 'z':
      if (outcome == 0) {
        v << 1, 0;
      } else {
        v << 0, 1;
      }
      break;
    default:
      throw DomainError(std::string("invalid Pauli axis '") + axis + "'");
  }
  return v;
}

DesignCheck verify_2design(std::span<const ComplexVector> vectors) {
  if (vectors.empty()) throw DomainError("2-design check needs at least one vector");
  const Index d = vectors.front().size();
  const Index d2 = d * d;
  ComplexMatrix frame = ComplexMatrix::Zero(d2, d2);
  const double w = 1.0 / static_cast<double>(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != d) throw DimensionError("2-design check: vectors have differing dimensions");
    const ComplexVector vv = kron(v, v);
    kernels::rank_one_update({frame.data(), static_cast<std::size_t>(frame.size())}, static_cast<std::size_t>(d2),
                             {vv.data(), static_cast<std::size_t>(d2)}, w);
  }
  // P_sym / C(d+1, 2) with P_sym = (I + F) / 2.
  const double c = 1.0 / (static_cast<double>(d) * static_cast<double>(d + 1));
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      frame(i * d + j, i * d + j) -= c;
      frame(i * d + j, j * d + i) -= c;
    }
  }
  const double dev = operator_norm(HermitianMatrix(frame));
  return {dev, dev <= kDesignTolerance};
}

HermitianMatrix depolarizing_apply(const HermitianMatrix& x, double p) {
  const int k = qubit_count(x.dim());
  ComplexMatrix m = x.matrix();
  for (int q = 0; q < k; ++q) apply_local(m, k, q, p, 0.5 * (1.0 - p));
  return HermitianMatrix(m);
}

HermitianMatrix depolarizing_inverse_apply(const HermitianMatrix& x) {
  const int k = qubit_count(x.dim());
  ComplexMatrix m = x.matrix();
  for (int q = 0; q < k; ++q) apply_local(m, k, q, 3.0, -1.0);
  return HermitianMatrix(m);
}

}  // namespace plstomo
