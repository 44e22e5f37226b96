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
#include <stdexcept>
#include <string>

namespace plstomo {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible or invalid shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the range an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A dimension the construction cannot handle (e.g. a non-prime MUB dimension).
class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// An iterative routine failed or produced non-finite values.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, std::ptrdiff_t dim);
  std::ptrdiff_t dim() const noexcept { return dim_; }

 private:
  std::ptrdiff_t dim_;
};

/// The measurement does not determine the state (singular or ill-conditioned M^dagger M).
class CompletenessError : public Error {
 public:
  CompletenessError(const std::string& what, double condition_number);
  double condition_number() const noexcept { return condition_number_; }

 private:
  double condition_number_;
};

/// Malformed experiment configuration or CLI input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  IoError(const std::string& what, std::string path);
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace plstomo
