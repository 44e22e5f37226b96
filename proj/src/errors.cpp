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

#include "plstomo/errors.hpp"

#include <utility>

namespace plstomo {

NumericalError::NumericalError(const std::string& what, std::ptrdiff_t dim)
    : Error(what + " (dimension " + std::to_string(dim) + ")"), dim_(dim) {}

CompletenessError::CompletenessError(const std::string& what, double condition_number)
    : Error(what), condition_number_(condition_number) {}

IoError::IoError(const std::string& what, std::string path)
    : Error(what + ": " + path), path_(std::move(path)) {}

}  // namespace plstomo
