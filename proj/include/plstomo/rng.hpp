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

// Seeded random streams.
//
// Every stream is a std::mt19937_64 (bit-exact by the C++ standard) whose seed
// is derived from a master seed and a tuple of integer keys through the
// SplitMix64 finalizer. A stream keyed by (seed, trial, setting) therefore
// produces the same numbers no matter which thread runs it or in what order.
// Distributions come from Boost.Random, whose algorithms are fixed across
// platforms (unlike the <random> distributions).

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace plstomo::rng {

using Engine = std::mt19937_64;

/// Stream purposes; used as the first derivation key so streams never collide.
enum class Stream : std::uint64_t {
  State = 0x5354415445ULL,
  Setting = 0x53455454ULL,
  Uniform = 0x554e4946ULL,
  Trial = 0x545249414cULL,
  Point = 0x504f494e54ULL,
};

/// SplitMix64 output function (Steele, Lea, Flood 2014).
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Folds keys into seed: h = mix64(h + golden * (key + 1)) for each key.
std::uint64_t derive(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) noexcept;

inline std::uint64_t derive(std::uint64_t seed, Stream tag, std::initializer_list<std::uint64_t> keys = {}) noexcept {
  std::uint64_t h = derive(seed, {static_cast<std::uint64_t>(tag)});
  return derive(h, keys);
}

Engine make_engine(std::uint64_t stream_seed);

/// Uniform on [0, 1).
double uniform01(Engine& eng);

double standard_normal(Engine& eng);

/// Complex Gaussian with E|z|^2 = 1: two independent real normals scaled by 1/sqrt(2).
std::complex<double> complex_normal(Engine& eng);

/// Binomial(trials, p) draw. p is clamped to [0, 1].
std::uint64_t binomial(Engine& eng, std::uint64_t trials, double p);

}  // namespace plstomo::rng
