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

// Plain-text import and export.
//
// Matrix text format: a header line "d <rows> <cols>" followed by one line
// per entry in row-major order, each "re im".
//
// Vector-set format: a header line "<dim> <count> <settings>" followed by one
// line per vector holding 2*dim numbers "re_0 im_0 re_1 im_1 ...". Vectors are
// grouped into `settings` consecutive blocks. Lines starting with '#' are
// ignored in both formats.

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "plstomo/linalg.hpp"

namespace plstomo::io {

void write_matrix(std::ostream& out, const ComplexMatrix& m);
ComplexMatrix read_matrix(std::istream& in);

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);
ComplexMatrix read_matrix_file(const std::filesystem::path& path);

/// Reads a matrix file and validates it as a density matrix (tolerance 1e-8).
DensityMatrix read_state_file(const std::filesystem::path& path);

struct VectorSet {
  std::vector<ComplexVector> vectors;
  std::size_t settings = 1;
};

VectorSet read_vector_set(std::istream& in);
VectorSet read_vector_set_file(const std::filesystem::path& path);
void write_vector_set(std::ostream& out, const VectorSet& set);

}  // namespace plstomo::io
