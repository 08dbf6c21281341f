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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "labelsim/errors.hpp"
#include "labelsim/grid.hpp"
#include "oracles.hpp"

using namespace labelsim;

namespace {

const Domain kDomain{-64.0, 64.0};

double mass(const GridWavefunction &wf) {
    double m = 0.0;
    for (const auto &a : wf.amplitudes()) {
        m += std::norm(a);
    }
    return m * wf.dx();
}

double max_diff(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

} // namespace

TEST(Grid, ConstructionRules) {
    EXPECT_THROW(GridWavefunction(kDomain, std::vector<Complex>(100)), GridError);
    EXPECT_THROW(GridWavefunction({1.0, 1.0}, std::vector<Complex>(64)), GridError);
    EXPECT_NO_THROW(GridWavefunction(kDomain, std::vector<Complex>(64)));
}

TEST(Grid, GaussianPacketMoments) {
    const auto g = gaussian_packet(1024, kDomain, 3.0, 4.0);
    EXPECT_NEAR(mass(g), 1.0, 1e-12);
    const auto m = moments(g);
    EXPECT_NEAR(m.mean, 3.0, 1e-9);
    EXPECT_NEAR(m.std, 4.0, 1e-9);
    EXPECT_TRUE(g.contained());
    const auto p = moments(momentum_spectrum(g));
    EXPECT_NEAR(p.mean, 0.0, 1e-9);
    EXPECT_NEAR(p.std, 1.0 / 8.0, 1e-9);
    EXPECT_NEAR(m.std * p.std, 0.5, 1e-9);
}

TEST(Grid, FftMatchesDirectSum) {
    std::vector<Complex> raw(64);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        raw[i] = {std::sin(0.3 * i) + 0.1 * i, std::cos(1.7 * i * i)};
    }
    const GridWavefunction wf(kDomain, raw);
    EXPECT_LT(max_diff(to_momentum(wf), oracle::naive_dft(raw)), 1e-10);
}

TEST(Grid, ParsevalAndRoundTrip) {
    const auto g = translate(gaussian_packet(512, kDomain, -5.0, 3.0), 0.0);
    const auto spec = momentum_spectrum(g);
    EXPECT_NEAR(std::accumulate(spec.probabilities.begin(), spec.probabilities.end(), 0.0),
                mass(g), 1e-12);
    EXPECT_TRUE(std::is_sorted(spec.momenta.begin(), spec.momenta.end()));
    const double dp = 2.0 * std::numbers::pi / (512 * g.dx());
    EXPECT_NEAR(spec.momenta[1] - spec.momenta[0], dp, 1e-12);
    const auto back = from_momentum(g.domain(), to_momentum(g));
    EXPECT_LT(max_diff(back.amplitudes(), g.amplitudes()), 1e-10);
}

TEST(Grid, TranslationMatchesShiftedPacket) {
    const auto g = gaussian_packet(1024, kDomain, 0.0, 3.0);
    for (const double shift : {2.0, -7.5, 0.3}) {
        const auto moved = translate(g, shift);
        const auto ref = gaussian_packet(1024, kDomain, shift, 3.0);
        EXPECT_LT(max_diff(moved.amplitudes(), ref.amplitudes()), 1e-9);
        EXPECT_NEAR(moments(moved).mean, shift, 1e-9);
    }
}

TEST(Grid, ContainmentDetectsLeakage) {
    EXPECT_FALSE(gaussian_packet(1024, kDomain, 60.0, 4.0).contained());
}

TEST(Window, InsideAndOutsidePartitionTheMass) {
    const auto g = gaussian_packet(1024, kDomain, 1.0, 5.0);
    const Interval iv{-3.0, 4.0};
    const auto in = window_project(g, iv, true);
    const auto out = window_project(g, iv, false);
    EXPECT_NEAR(in.probability + out.probability, 1.0, 1e-12);
    EXPECT_NEAR(mass(in.state), 1.0, 1e-12);
    EXPECT_NEAR(mass(out.state), 1.0, 1e-12);
    EXPECT_THROW(window_project(g, {-100.0, 0.0}, true), GridError);
    EXPECT_THROW(window_project(g, {-64.0, 63.99}, false), GridError);
}

TEST(Dicke, SpoonWindowCarriesEpsilonSquared) {
    DickeParams p;
    p.tray_width = 10.0;
    p.spoon_width = 0.5;
    p.epsilon = 0.1;
    const auto wf = gaussian_superposition(p, 8192);
    EXPECT_NEAR(mass(wf), 1.0, 1e-12);
    const auto spoon = window_project(
        wf, {p.spoon_center - 5.0 * p.spoon_width, p.spoon_center + 5.0 * p.spoon_width}, true);
    EXPECT_NEAR(spoon.probability, 0.01, 1e-3);
    EXPECT_TRUE(wf.contained());
}

TEST(Dicke, WidthUncertaintyPerPacket) {
    DickeParams p;
    const auto wf = gaussian_superposition(p, 4096);
    const auto tray = window_project(wf, {-4.0 * p.tray_width, 4.0 * p.tray_width}, true);
    const double sx = moments(tray.state).std;
    const double sp = moments(momentum_spectrum(tray.state)).std;
    EXPECT_NEAR(sx, p.tray_width / std::sqrt(2.0), 1e-3);
    EXPECT_GE(sx * sp, 0.5 - 1e-6);
}

TEST(Dicke, ParameterValidation) {
    DickeParams p;
    p.spoon_width = 2.0;
    EXPECT_THROW(p.validate(), ParameterError);
    p = {};
    p.epsilon = 1.0;
    EXPECT_THROW(p.validate(), ParameterError);
    p = {};
    p.spoon_center = 20.0;
    EXPECT_THROW(p.validate(), ParameterError);
    EXPECT_THROW(gaussian_superposition(DickeParams{}, 256), GridError);
    EXPECT_THROW(gaussian_superposition(DickeParams{}, 4096, Domain{-45.0, 70.0}), GridError);
}
