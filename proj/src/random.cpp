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

#include "labelsim/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "labelsim/errors.hpp"

namespace labelsim {

std::size_t Rng::pick(const std::vector<double> &weights) {
    if (weights.empty()) {
        throw ParameterError("cannot pick from an empty distribution");
    }
    std::vector<double> cumulative(weights.size());
    std::partial_sum(weights.begin(), weights.end(), cumulative.begin());
    const double total = cumulative.back();
    if (!(total > 0.0)) {
        throw ParameterError("distribution has no positive weight");
    }
    const double u = uniform() * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    auto idx = static_cast<std::size_t>(it - cumulative.begin());
    idx = std::min(idx, weights.size() - 1);
    // never land on a zero-weight entry through rounding at the top end
    while (weights[idx] <= 0.0 && idx > 0) {
        --idx;
    }
    return idx;
}

double Rng::normal() {
    double u1 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char c : stream) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::uint64_t z = seed ^ h;
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace labelsim
