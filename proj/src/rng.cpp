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

#include "plstomo/rng.hpp"

#include <algorithm>
#include <boost/random/binomial_distribution.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>
#include <cmath>

namespace plstomo::rng {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) noexcept {
  std::uint64_t h = mix64(seed + kGolden);
  for (std::uint64_t k : keys) {
    h = mix64(h + kGolden * (k + 1));
  }
  return h;
}

Engine make_engine(std::uint64_t stream_seed) { return Engine(stream_seed); }

double uniform01(Engine& eng) {
  boost::random::uniform_01<double> dist;
  return dist(eng);
}

double standard_normal(Engine& eng) {
  boost::random::normal_distribution<double> dist(0.0, 1.0);
  return dist(eng);
}

std::complex<double> complex_normal(Engine& eng) {
  static const double kScale = 1.0 / std::sqrt(2.0);
  const double re = standard_normal(eng);
  const double im = standard_normal(eng);
  return {kScale * re, kScale * im};
}

std::uint64_t binomial(Engine& eng, std::uint64_t trials, double p) {
  if (trials == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  boost::random::binomial_distribution<std::int64_t, double> dist(static_cast<std::int64_t>(trials), p);
  return static_cast<std::uint64_t>(dist(eng));
}

}  // namespace plstomo::rng
