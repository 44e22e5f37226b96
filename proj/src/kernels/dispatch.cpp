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

#include <cstdlib>
#include <string_view>

#include "plstomo/kernels.hpp"

namespace plstomo::kernels {

namespace {

struct Table {
  Isa isa;
  void (*rank_one_update)(std::span<Complex>, std::size_t, std::span<const Complex>, double);
  void (*axpy)(std::span<Complex>, std::span<const Complex>, double);
  double (*hermitian_form)(std::span<const Complex>, std::size_t, std::span<const Complex>);
  double (*real_inner)(std::span<const Complex>, std::span<const Complex>);
};

Table select() {
  const char* env = std::getenv("PLSTOMO_ISA");
  const bool force_scalar = env != nullptr && std::string_view(env) == "scalar";
  if (!force_scalar && isa_available(Isa::Avx2)) {
    return {Isa::Avx2, avx2::rank_one_update, avx2::axpy, avx2::hermitian_form, avx2::real_inner};
  }
  return {Isa::Scalar, scalar::rank_one_update, scalar::axpy, scalar::hermitian_form, scalar::real_inner};
}

const Table& table() {
  static const Table t = select();
  return t;
}

}  // namespace

const char* isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(PLSTOMO_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() noexcept { return table().isa; }

void rank_one_update(std::span<Complex> a, std::size_t d, std::span<const Complex> v, double weight) {
  table().rank_one_update(a, d, v, weight);
}

void axpy(std::span<Complex> y, std::span<const Complex> x, double alpha) { table().axpy(y, x, alpha); }

double hermitian_form(std::span<const Complex> a, std::size_t d, std::span<const Complex> v) {
  return table().hermitian_form(a, d, v);
}

double real_inner(std::span<const Complex> x, std::span<const Complex> y) { return table().real_inner(x, y); }

}  // namespace plstomo::kernels
