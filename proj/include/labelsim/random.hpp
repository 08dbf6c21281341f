// Copyright 2026 The labelsim Authors
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

/**
 * @file
 * Seeded, platform-stable random streams.
 *
 * Uniform draws are built from the raw 64-bit output of std::mt19937_64, so
 * the same seed gives the same sequence on every standard library.
 */
#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace labelsim {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Index drawn with probability proportional to `weights`.
    std::size_t pick(const std::vector<double> &weights);

    /// Standard normal deviate (Box-Muller, no cached pair).
    double normal();

  private:
    std::mt19937_64 engine_;
};

/// Mixes a user seed with a stream name (FNV-1a over the name, then a
/// splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream);

} // namespace labelsim
