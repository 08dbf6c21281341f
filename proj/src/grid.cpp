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

#include "labelsim/grid.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include <fftw3.h>

#include "labelsim/errors.hpp"

namespace labelsim {

namespace {

constexpr double kContainment = 1e-6;
constexpr double kPacketMargin = 6.0;
constexpr double kMinMargin = 5.0;
constexpr double kSamplesPerSpoon = 8.0;

bool power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

// FFTW's planner is not thread-safe; execution on a private plan is.
std::mutex &planner_mutex() {
    static std::mutex m;
    return m;
}

std::vector<Complex> dft(const std::vector<Complex> &in, int sign) {
    const auto n = static_cast<int>(in.size());
    std::vector<Complex> out(in.size());
    auto *src = const_cast<fftw_complex *>(
        reinterpret_cast<const fftw_complex *>(in.data()));
    auto *dst = reinterpret_cast<fftw_complex *>(out.data());
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_1d(n, src, dst, sign,
                                FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (auto &v : out) {
        v *= scale;
    }
    return out;
}

double momentum_of(std::size_t k, std::size_t n, double dx) {
    const auto half = static_cast<std::ptrdiff_t>(n / 2);
    auto centered = static_cast<std::ptrdiff_t>(k);
    if (centered >= half) {
        centered -= static_cast<std::ptrdiff_t>(n);
    }
    return 2.0 * std::numbers::pi * static_cast<double>(centered) /
           (static_cast<double>(n) * dx);
}

std::vector<Complex> sample_gaussian(std::size_t n, Domain domain, double center,
                                     double width) {
    const double dx = (domain.x_max - domain.x_min) / static_cast<double>(n);
    std::vector<Complex> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = domain.x_min + static_cast<double>(i) * dx - center;
        out[i] = std::exp(-x * x / (2.0 * width * width));
    }
    return out;
}

double unit_scale(const std::vector<Complex> &v, double dx) {
    double s = 0.0;
    for (const auto &a : v) {
        s += std::norm(a);
    }
    return 1.0 / std::sqrt(s * dx);
}

} // namespace

GridWavefunction::GridWavefunction(Domain domain, std::vector<Complex> amplitudes)
    : domain_(domain), amplitudes_(std::move(amplitudes)) {
    if (!power_of_two(amplitudes_.size())) {
        throw GridError("grid size must be a power of two");
    }
    if (!(domain_.x_max > domain_.x_min)) {
        throw GridError("grid domain must have x_max > x_min");
    }
}

double GridWavefunction::norm_squared() const {
    double s = 0.0;
    for (const auto &a : amplitudes_) {
        s += std::norm(a);
    }
    return s * dx();
}

GridWavefunction GridWavefunction::normalized() const {
    const double n2 = norm_squared();
    if (n2 <= 0.0) {
        throw GridError("cannot normalize a zero wavefunction");
    }
    auto amps = amplitudes_;
    const double scale = 1.0 / std::sqrt(n2);
    for (auto &a : amps) {
        a *= scale;
    }
    return {domain_, std::move(amps)};
}

bool GridWavefunction::contained() const {
    double peak = 0.0;
    for (const auto &a : amplitudes_) {
        peak = std::max(peak, std::abs(a));
    }
    return std::abs(amplitudes_.front()) < kContainment * peak &&
           std::abs(amplitudes_.back()) < kContainment * peak;
}

GridWavefunction gaussian_packet(std::size_t n, Domain domain, double center,
                                 double sigma) {
    if (!(sigma > 0.0)) {
        throw GridError("Gaussian width must be positive");
    }
    return GridWavefunction(
               domain, sample_gaussian(n, domain, center, std::sqrt(2.0) * sigma))
        .normalized();
}

void DickeParams::validate() const {
    if (!(tray_width > 0.0) || !(spoon_width > 0.0)) {
        throw ParameterError("tray and spoon widths must be positive");
    }
    if (spoon_width > tray_width / 10.0) {
        throw ParameterError("spoon width must be at most a tenth of the tray width");
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw ParameterError("epsilon must lie in (0, 1)");
    }
    if (std::abs(tray_center - spoon_center) < 5.0 * (tray_width + spoon_width)) {
        throw ParameterError("tray and spoon must be at least 5(L + l) apart");
    }
}

Domain dicke_domain(const DickeParams &p) {
    const double tray_lo = p.tray_center - kPacketMargin * p.tray_width;
    const double tray_hi = p.tray_center + kPacketMargin * p.tray_width;
    const double spoon_lo = p.spoon_center - kPacketMargin * p.spoon_width;
    const double spoon_hi = p.spoon_center + kPacketMargin * p.spoon_width;
    return {std::min(tray_lo, spoon_lo), std::max(tray_hi, spoon_hi)};
}

GridWavefunction gaussian_superposition(const DickeParams &params, std::size_t n,
                                        std::optional<Domain> domain) {
    params.validate();
    const Domain d = domain.value_or(dicke_domain(params));
    auto covers = [&](double center, double width) {
        return center - kMinMargin * width >= d.x_min &&
               center + kMinMargin * width <= d.x_max;
    };
    if (!covers(params.tray_center, params.tray_width) ||
        !covers(params.spoon_center, params.spoon_width)) {
        throw GridError("domain leaves less than five widths around a packet");
    }
    if (!power_of_two(n)) {
        throw GridError("grid size must be a power of two");
    }
    const double dx = (d.x_max - d.x_min) / static_cast<double>(n);
    if (dx > params.spoon_width / kSamplesPerSpoon) {
        throw GridError("grid does not resolve the spoon (dx > l/8)");
    }
    auto tray = sample_gaussian(n, d, params.tray_center, params.tray_width);
    auto spoon = sample_gaussian(n, d, params.spoon_center, params.spoon_width);
    const double n1 = unit_scale(tray, dx);
    const double n2 = unit_scale(spoon, dx);
    const double weight = std::sqrt(1.0 - params.epsilon * params.epsilon);
    std::vector<Complex> psi(n);
    for (std::size_t i = 0; i < n; ++i) {
        psi[i] = weight * n1 * tray[i] + params.epsilon * n2 * spoon[i];
    }
    GridWavefunction out = GridWavefunction(d, std::move(psi)).normalized();
    if (!out.contained()) {
        throw GridError("wavefunction is not contained in the domain");
    }
    return out;
}

WindowResult window_project(const GridWavefunction &wf, Interval interval,
                            bool keep_inside) {
    const auto &d = wf.domain();
    if (interval.lo > interval.hi || interval.lo < d.x_min ||
        interval.hi > d.x_max) {
        throw GridError("window must lie within the grid domain");
    }
    auto amps = wf.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double x = wf.x(i);
        const bool inside = x >= interval.lo && x <= interval.hi;
        if (inside != keep_inside) {
            amps[i] = 0.0;
        }
    }
    GridWavefunction kept(d, std::move(amps));
    const double p = kept.norm_squared() / wf.norm_squared();
    if (p <= kProbabilityFloor) {
        throw GridError("window projection has zero probability");
    }
    return {p, kept.normalized()};
}

std::vector<Complex> to_momentum(const GridWavefunction &wf) {
    return dft(wf.amplitudes(), FFTW_FORWARD);
}

GridWavefunction from_momentum(Domain domain, const std::vector<Complex> &phi) {
    return {domain, dft(phi, FFTW_BACKWARD)};
}

MomentumSpectrum momentum_spectrum(const GridWavefunction &wf) {
    const auto phi = to_momentum(wf);
    const auto n = phi.size();
    const double dx = wf.dx();
    MomentumSpectrum out;
    out.momenta.reserve(n);
    out.probabilities.reserve(n);
    // ascending momentum: k = n/2 .. n-1 (negative), then 0 .. n/2-1
    for (std::size_t j = 0; j < n; ++j) {
        const auto k = (j + n / 2) % n;
        out.momenta.push_back(momentum_of(k, n, dx));
        out.probabilities.push_back(std::norm(phi[k]) * dx);
    }
    return out;
}

Moments moments(const GridWavefunction &wf) {
    const double dx = wf.dx();
    double mean = 0.0;
    for (std::size_t i = 0; i < wf.size(); ++i) {
        mean += wf.x(i) * std::norm(wf.amplitudes()[i]) * dx;
    }
    double var = 0.0;
    for (std::size_t i = 0; i < wf.size(); ++i) {
        const double d = wf.x(i) - mean;
        var += d * d * std::norm(wf.amplitudes()[i]) * dx;
    }
    return {mean, std::sqrt(var)};
}

Moments moments(const MomentumSpectrum &spectrum) {
    double mean = 0.0;
    for (std::size_t i = 0; i < spectrum.momenta.size(); ++i) {
        mean += spectrum.momenta[i] * spectrum.probabilities[i];
    }
    double var = 0.0;
    for (std::size_t i = 0; i < spectrum.momenta.size(); ++i) {
        const double d = spectrum.momenta[i] - mean;
        var += d * d * spectrum.probabilities[i];
    }
    return {mean, std::sqrt(var)};
}

GridWavefunction translate(const GridWavefunction &wf, double shift) {
    auto phi = to_momentum(wf);
    const auto n = phi.size();
    for (std::size_t k = 0; k < n; ++k) {
        phi[k] *= std::polar(1.0, -momentum_of(k, n, wf.dx()) * shift);
    }
    return from_momentum(wf.domain(), phi);
}

} // namespace labelsim
