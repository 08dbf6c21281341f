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
 * Uniformly sampled 1D wavefunctions (ħ = 1): Gaussian packets, the
 * wide-plus-narrow two-packet superposition, window projections, unitary-DFT
 * momentum spectra and moments.
 *
 * Sample i sits at x_min + i·Δx with Δx = (x_max − x_min)/n, and the
 * normalization is Σ|ψ_i|²·Δx = 1. Momentum samples are p_k = 2πk/(nΔx) for
 * centered k ∈ [−n/2, n/2), reported in ascending order.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "labelsim/register.hpp"

namespace labelsim {

struct Domain {
    double x_min = 0.0;
    double x_max = 0.0;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

class GridWavefunction {
  public:
    /// Throws GridError unless n is a power of two (≥ 2) and x_max > x_min.
    GridWavefunction(Domain domain, std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t size() const { return amplitudes_.size(); }
    [[nodiscard]] const Domain &domain() const { return domain_; }
    [[nodiscard]] double dx() const {
        return (domain_.x_max - domain_.x_min) /
               static_cast<double>(amplitudes_.size());
    }
    [[nodiscard]] double x(std::size_t i) const {
        return domain_.x_min + static_cast<double>(i) * dx();
    }
    [[nodiscard]] const std::vector<Complex> &amplitudes() const {
        return amplitudes_;
    }
    [[nodiscard]] double norm_squared() const;
    [[nodiscard]] GridWavefunction normalized() const;
    /// Boundary samples below 1e-6 of the peak magnitude.
    [[nodiscard]] bool contained() const;

  private:
    Domain domain_;
    std::vector<Complex> amplitudes_;
};

/// Normalized Gaussian whose position density has standard deviation `sigma`:
/// ψ(x) ∝ exp(−(x − center)² / 4σ²).
GridWavefunction gaussian_packet(std::size_t n, Domain domain, double center,
                                 double sigma);

/// Tray/spoon parameters. Packet shapes are exp(−(x − c)²/2w²) with w the
/// tray or spoon width; `epsilon` is the spoon amplitude weight.
struct DickeParams {
    double tray_width = 10.0;
    double spoon_width = 1.0;
    double tray_center = 0.0;
    double spoon_center = 56.0;
    double epsilon = 0.01;

    /// Throws ParameterError on ℓ > L/10, ε ∉ (0,1), or packets closer than
    /// 5(L + ℓ).
    void validate() const;
};

/// Default domain: six packet widths beyond each packet's outer side.
Domain dicke_domain(const DickeParams &params);

/// √(1−ε²)·N₁·tray + ε·N₂·spoon, with N₁, N₂ making each packet unit-norm
/// on the grid, then renormalized as a whole. Throws GridError if the domain
/// leaves less than five widths of margin or Δx > ℓ/8.
GridWavefunction gaussian_superposition(const DickeParams &params,
                                        std::size_t n = 4096,
                                        std::optional<Domain> domain = {});

struct WindowResult {
    double probability;
    GridWavefunction state;
};

/// Zeroes the samples outside (keep_inside) or inside (!keep_inside) the
/// closed interval and renormalizes. `probability` is the retained mass.
/// Throws GridError if the interval leaves the domain or nothing is kept.
WindowResult window_project(const GridWavefunction &wf, Interval interval,
                            bool keep_inside);

struct MomentumSpectrum {
    std::vector<double> momenta;
    std::vector<double> probabilities;
};

/// Unitary DFT amplitudes, scaled so Σ|φ_k|²·Δx = 1, in FFT order.
std::vector<Complex> to_momentum(const GridWavefunction &wf);
/// Inverse of to_momentum on the same domain.
GridWavefunction from_momentum(Domain domain, const std::vector<Complex> &phi);

MomentumSpectrum momentum_spectrum(const GridWavefunction &wf);

struct Moments {
    double mean;
    double std;
};

Moments moments(const GridWavefunction &wf);
Moments moments(const MomentumSpectrum &spectrum);

/// ψ(x) -> ψ(x − shift) by a Fourier phase ramp; exact for band-limited,
/// contained wavefunctions and any real shift.
GridWavefunction translate(const GridWavefunction &wf, double shift);

} // namespace labelsim
