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

#include "plstomo/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "plstomo/errors.hpp"

namespace plstomo::io {

namespace {

// Next line that is neither blank nor a comment.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
  out << "d " << m.rows() << ' ' << m.cols() << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      out << format_double(m(i, j).real()) << ' ' << format_double(m(i, j).imag()) << '\n';
    }
  }
}

ComplexMatrix read_matrix(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw ConfigError("matrix text: missing header");
  std::istringstream header(line);
  std::string tag;
  Index rows = 0;
  Index cols = 0;
  if (!(header >> tag >> rows >> cols) || tag != "d" || rows < 1 || cols < 1) {
    throw ConfigError("matrix text: header must read 'd <rows> <cols>'");
  }
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      if (!next_line(in, line)) throw ConfigError("matrix text: too few entries");
      const char* p = line.c_str();
      char* end = nullptr;
      const double re = std::strtod(p, &end);
      if (end == p) throw ConfigError("matrix text: malformed entry '" + line + "'");
      p = end;
      const double im = std::strtod(p, &end);
      if (end == p) throw ConfigError("matrix text: malformed entry '" + line + "'");
      m(i, j) = {re, im};
    }
  }
  return m;
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing", path.string());
  write_matrix(out, m);
  if (!out) throw IoError("write failed", path.string());
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading", path.string());
  return read_matrix(in);
}

DensityMatrix read_state_file(const std::filesystem::path& path) {
  const ComplexMatrix m = read_matrix_file(path);
  if (m.rows() != m.cols()) throw DimensionError("state file holds a non-square matrix");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-8) throw DomainError("state file holds a non-Hermitian matrix");
  return DensityMatrix::from_hermitian(HermitianMatrix(m), 1e-8);
}

VectorSet read_vector_set(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw ConfigError("vector set: missing header");
  std::istringstream header(line);
  Index dim = 0;
  std::size_t count = 0;
  VectorSet set;
  if (!(header >> dim >> count >> set.settings) || dim < 1 || count < 1 || set.settings < 1) {
    throw ConfigError("vector set: header must read '<dim> <count> <settings>'");
  }
  for (std::size_t k = 0; k < count; ++k) {
    if (!next_line(in, line)) throw ConfigError("vector set: too few vectors");
    std::istringstream row(line);
    ComplexVector v(dim);
    for (Index i = 0; i < dim; ++i) {
      double re = 0.0;
      double im = 0.0;
      if (!(row >> re >> im)) throw ConfigError("vector set: malformed vector line " + std::to_string(k + 1));
      v[i] = {re, im};
    }
    set.vectors.push_back(std::move(v));
  }
  return set;
}

VectorSet read_vector_set_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading", path.string());
  return read_vector_set(in);
}

void write_vector_set(std::ostream& out, const VectorSet& set) {
  const Index dim = set.vectors.empty() ? 0 : set.vectors.front().size();
  out << dim << ' ' << set.vectors.size() << ' ' << set.settings << '\n';
  for (const auto& v : set.vectors) {
    for (Index i = 0; i < v.size(); ++i) {
      if (i) out << ' ';
      out << format_double(v[i].real()) << ' ' << format_double(v[i].imag());
    }
    out << '\n';
  }
}

}  // namespace plstomo::io
