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

// Reference computations used by the tests. Each one is deliberately written
// differently from the library code it checks.

#include <cstdint>
#include <functional>
#include <vector>

#include "plstomo/linalg.hpp"
#include "plstomo/measurements.hpp"
#include "plstomo/rng.hpp"
#include "plstomo/simulate.hpp"

namespace plstomo::oracle {

/// Root of sum_i max(lambda_i - x, 0) = 1 by bisection on [min - 1, max].
double bisection_x0(const RealVector& spectrum, int iterations = 200);

/// Least squares by a dense complex pseudoinverse on vec(X).
ComplexMatrix pinv_least_squares(const std::vector<HermitianMatrix>& effects, const std::vector<double>& f);

/// Random Hermitian matrix with i.i.d. Gaussian entries.
HermitianMatrix random_hermitian(Index d, rng::Engine& eng);

/// Random unit-trace Hermitian matrix that is generally indefinite.
HermitianMatrix random_indefinite_unit_trace(Index d, rng::Engine& eng);

/// Random density matrix of random rank.
DensityMatrix random_state(Index d, rng::Engine& eng);

/// Per-setting frequencies from a multinomial draw of `shots` per setting.
FrequencyVector sampled_frequencies(const DensityMatrix& rho, const MeasurementScheme& scheme, std::uint64_t shots,
                                    std::uint64_t seed);

/// sum_i tr(E_i X) E_i with E_i every effect of the scheme (all settings).
ComplexMatrix frame_operator(const std::vector<HermitianMatrix>& effects, const ComplexMatrix& x);

/// One-sample Kolmogorov-Smirnov statistic against a continuous CDF.
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);
/// Two-sample Kolmogorov-Smirnov statistic.
double ks_two_sample_statistic(std::vector<double> a, std::vector<double> b);
/// Asymptotic p-value of a KS statistic with effective sample size ne.
double ks_p_value(double statistic, double ne);

/// Beta(2, b) cumulative distribution 1 - (1 - x)^b (1 + b x).
double beta2_cdf(double x, double b);

/// Draws from the density d <v|rho|v> on the unit sphere by rejection from Haar vectors.
std::vector<ComplexVector> rejection_uniform_povm(const DensityMatrix& rho, std::size_t n, rng::Engine& eng);

/// Upper-tail chi-square probability.
double chi_square_p_value(double statistic, double dof);

}  // namespace plstomo::oracle
