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

#include "plstomo/kernels.hpp"

namespace plstomo::kernels::scalar {

void rank_one_update(std::span<Complex> a, std::size_t d, std::span<const Complex> v, double weight) {
  for (std::size_t j = 0; j < d; ++j) {
    const Complex c = weight * std::conj(v[j]);
    Complex* col = a.data() + j * d;
    for (std::size_t i = 0; i < d; ++i) {
      col[i] += c * v[i];
    }
  }
}

void axpy(std::span<Complex> y, std::span<const Complex> x, double alpha) {
  const std::size_t n = y.size();
  for (std::size_t i = 0; i < n; ++i) {
    y[i] += alpha * x[i];
  }
}

double hermitian_form(std::span<const Complex> a, std::size_t d, std::span<const Complex> v) {
  double acc = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    const Complex* col = a.data() + j * d;
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < d; ++i) {
      s += std::conj(v[i]) * col[i];
    }
    acc += (s * v[j]).real();
  }
  return acc;
}

double real_inner(std::span<const Complex> x, std::span<const Complex> y) {
  double acc = 0.0;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    acc += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
  }
  return acc;
}

}  // namespace plstomo::kernels::scalar
