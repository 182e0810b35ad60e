// Copyright 2026 The fatalpoint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Portable randomness. The bit source is std::mt19937_64, whose output stream
// is fixed by the C++ standard; every distribution on top of it is written
// out here because the standard library's distributions are not portable
// across implementations.

#include <cstddef>
#include <cstdint>
#include <random>

namespace fatalpoint::random {

/// SplitMix64 finalizer (Steele, Lea & Flood).
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Stable seed for sub-stream `stream` of `base`, e.g. (sweep seed, k) or
/// (run seed, restart).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  /// Standard normal via Box-Muller; the second variate is cached.
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace fatalpoint::random
