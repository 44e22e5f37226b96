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

#include <cstdint>
#include <optional>
#include <vector>

#include "plstomo/linalg.hpp"
#include "plstomo/measurements.hpp"

namespace plstomo {

/// Outcome of one simulated tomography run.
struct TrialRecord {
  SchemeKind scheme = SchemeKind::StructuredPovm;
  Index d = 0;
  Index r_true = 0;
  std::uint64_t n = 0;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;

  double trace_error = 0.0;     // ||rho_hat - rho||_1
  double op_error_L = 0.0;      // ||L_hat - rho||_op
  double op_error_rho = 0.0;    // ||rho_hat - rho||_op
  double x0 = 0.0;
  Index rank_estimate = 0;      // rank(rho_hat)
  std::vector<double> sigma_rho;      // sigma_r(rho), r = 1..d
  std::vector<double> sigma_rho_hat;  // sigma_r(rho_hat), r = 1..d
  double radius_delta05 = 0.0;  // confidence radius at delta = 0.05

  double runtime_ms = 0.0;
  double projection_ms = 0.0;

  std::optional<HermitianMatrix> least_squares;
  std::optional<DensityMatrix> estimate;
};

}  // namespace plstomo
