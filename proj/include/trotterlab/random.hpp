// Copyright 2026 The TrotterLab Authors
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
#include <random>
#include <string_view>

namespace trotterlab {

/// Name written into output provenance. The raw engine output of
/// std::mt19937_64 is fixed by the C++ standard; the mapping to doubles below
/// is done by hand because std::uniform_real_distribution is not.
inline constexpr std::string_view kGeneratorName =
    "mt19937_64 (53-bit mantissa uniform), seeds mixed with splitmix64";

/// One splitmix64 finalization round.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Child seed for grid point `point` and trial `trial` of a sweep:
///   splitmix64(splitmix64(splitmix64(master) ^ point) ^ trial)
/// Only depends on the three integers, so any subset of work items can be
/// re-run in isolation.
constexpr std::uint64_t mix_seed(std::uint64_t master, std::uint64_t point,
                                 std::uint64_t trial) {
  return splitmix64(splitmix64(splitmix64(master) ^ point) ^ trial);
}

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) from the top 53 bits of one engine draw.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace trotterlab
