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

// Inner loops of estimator formation and Born-rule evaluation.
//
// Every kernel has a portable scalar reference in `kernels::scalar` and an
// AVX2/FMA variant in `kernels::avx2`. The unqualified entry points dispatch
// once per process to the best variant the CPU supports; setting the
// environment variable PLSTOMO_ISA=scalar forces the reference path.
//
// Matrices are dense, column-major (Eigen's default), d x d, stored as
// contiguous std::complex<double>.

#include <complex>
#include <cstddef>
#include <span>

namespace plstomo::kernels {

using Complex = std::complex<double>;

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa) noexcept;

/// True if the CPU (and this build) can execute the given variant.
bool isa_available(Isa isa) noexcept;

/// Variant chosen by the dispatcher. Fixed for the lifetime of the process.
Isa active_isa() noexcept;

/// a += weight * v v^dagger, i.e. a(i,j) += weight * v_i * conj(v_j).
void rank_one_update(std::span<Complex> a, std::size_t d, std::span<const Complex> v, double weight);

/// y += alpha * x, elementwise.
void axpy(std::span<Complex> y, std::span<const Complex> x, double alpha);

/// Re(v^dagger a v). Exact for Hermitian a up to rounding.
double hermitian_form(std::span<const Complex> a, std::size_t d, std::span<const Complex> v);

/// Re(sum_ij conj(x_ij) y_ij) = Re tr(x^dagger y).
double real_inner(std::span<const Complex> x, std::span<const Complex> y);

namespace scalar {
void rank_one_update(std::span<Complex> a, std::size_t d, std::span<const Complex> v, double weight);
void axpy(std::span<Complex> y, std::span<const Complex> x, double alpha);
double hermitian_form(std::span<const Complex> a, std::size_t d, std::span<const Complex> v);
double real_inner(std::span<const Complex> x, std::span<const Complex> y);
}  // namespace scalar

namespace avx2 {
// Callers must check isa_available(Isa::Avx2) first.
void rank_one_update(std::span<Complex> a, std::size_t d, std::span<const Complex> v, double weight);
void axpy(std::span<Complex> y, std::span<const Complex> x, double alpha);
double hermitian_form(std::span<const Complex> a, std::size_t d, std::span<const Complex> v);
double real_inner(std::span<const Complex> x, std::span<const Complex> y);
}  // namespace avx2

}  // namespace plstomo::kernels
