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

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#endif

namespace plstomo::kernels::avx2 {

#if defined(__AVX2__) && defined(__FMA__)

namespace {

// Two complex doubles per register: (re0, im0, re1, im1).
inline __m256d load2(const Complex* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(Complex* p, __m256d x) { _mm256_storeu_pd(reinterpret_cast<double*>(p), x); }

inline double hsum(__m256d x) {
  const __m128d lo = _mm256_castpd256_pd128(x);
  const __m128d hi = _mm256_extractf128_pd(x, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// y += c * x for a complex scalar c over n complex entries.
inline void complex_axpy(Complex* y, const Complex* x, std::size_t n, Complex c) {
  const __m256d cr = _mm256_set1_pd(c.real());
  const __m256d ci = _mm256_set1_pd(c.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = load2(x + i);
    const __m256d xs = _mm256_permute_pd(xv, 0b0101);
    const __m256d t = _mm256_mul_pd(xs, ci);
    // even lanes: xr*cr - xi*ci, odd lanes: xi*cr + xr*ci
    const __m256d prod = _mm256_fmaddsub_pd(xv, cr, t);
    store2(y + i, _mm256_add_pd(load2(y + i), prod));
  }
  for (; i < n; ++i) {
    y[i] += c * x[i];
  }
}

}  // namespace

void rank_one_update(std::span<Complex> a, std::size_t d, std::span<const Complex> v, double weight) {
  for (std::size_t j = 0; j < d; ++j) {
    complex_axpy(a.data() + j * d, v.data(), d, weight * std::conj(v[j]));
  }
}

void axpy(std::span<Complex> y, std::span<const Complex> x, double alpha) {
  // Real scalar: treat the interleaved storage as a flat double array.
  double* yd = reinterpret_cast<double*>(y.data());
  const double* xd = reinterpret_cast<const double*>(x.data());
  const std::size_t n = 2 * y.size();
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(yd + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(xd + i), _mm256_loadu_pd(yd + i)));
  }
  for (; i < n; ++i) {
    yd[i] += alpha * xd[i];
  }
}

double hermitian_form(std::span<const Complex> a, std::size_t d, std::span<const Complex> v) {
  double acc = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    const Complex* col = a.data() + j * d;
    // s = sum_i conj(v_i) col_i;  re = vr*ar + vi*ai, im = vr*ai - vi*ar
    __m256d re_acc = _mm256_setzero_pd();
    __m256d im_acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= d; i += 2) {
      const __m256d vv = load2(v.data() + i);
      const __m256d av = load2(col + i);
      re_acc = _mm256_fmadd_pd(vv, av, re_acc);
      im_acc = _mm256_fmadd_pd(vv, _mm256_permute_pd(av, 0b0101), im_acc);
    }
    alignas(32) double im_lanes[4];
    _mm256_store_pd(im_lanes, im_acc);
    Complex s{hsum(re_acc), im_lanes[0] - im_lanes[1] + im_lanes[2] - im_lanes[3]};
    for (; i < d; ++i) {
      s += std::conj(v[i]) * col[i];
    }
    acc += (s * v[j]).real();
  }
  return acc;
}

double real_inner(std::span<const Complex> x, std::span<const Complex> y) {
  const double* xd = reinterpret_cast<const double*>(x.data());
  const double* yd = reinterpret_cast<const double*>(y.data());
  const std::size_t n = 2 * x.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(xd + i), _mm256_loadu_pd(yd + i), acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    s += xd[i] * yd[i];
  }
  return s;
}

#else

// Built without AVX2 support; isa_available(Isa::Avx2) is false so these are never dispatched.
void rank_one_update(std::span<Complex> a, std::size_t d, std::span<const Complex> v, double weight) {
  scalar::rank_one_update(a, d, v, weight);
}
void axpy(std::span<Complex> y, std::span<const Complex> x, double alpha) { scalar::axpy(y, x, alpha); }
double hermitian_form(std::span<const Complex> a, std::size_t d, std::span<const Complex> v) {
  return scalar::hermitian_form(a, d, v);
}
double real_inner(std::span<const Complex> x, std::span<const Complex> y) { return scalar::real_inner(x, y); }

#endif

}  // namespace plstomo::kernels::avx2
