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

#include <cmath>

#include "labelsim/errors.hpp"
#include "labelsim/measure.hpp"
#include "labelsim/random.hpp"

namespace labelsim {

namespace {

constexpr double kSamplesPerSigma = 8.0;

} // namespace

Domain WeakParams::resolved_domain() const {
    if (domain) {
        return *domain;
    }
    const double half = static_cast<double>(points) / 2.0;
    return {-half, half};
}

WeakJointState weak_measure(const StateVector &state, const std::string &subsystem,
                            const std::map<std::string, double, std::less<>> &observable,
                            const WeakParams &params) {
    if (!(params.sigma > 0.0) || !std::isfinite(params.coupling)) {
        throw ParameterError("weak measurement needs sigma > 0 and a finite coupling");
    }
    const auto &reg = state.reg();
    const auto sub = reg.index_of(subsystem);
    std::vector<double> eigen(reg.subsystem_dimension(sub));
    for (std::size_t i = 0; i < eigen.size(); ++i) {
        const auto it = observable.find(reg.label(sub, i));
        if (it == observable.end()) {
            throw ParameterError("observable has no eigenvalue for label '" +
                                 reg.label(sub, i) + "'");
        }
        eigen[i] = it->second;
    }
    for (const auto &[label, value] : observable) {
        (void)value;
        static_cast<void>(reg.label_index(sub, label));
    }

    const Domain domain = params.resolved_domain();
    const auto pointer = gaussian_packet(params.points, domain, 0.0, params.sigma);
    if (params.sigma / pointer.dx() < kSamplesPerSigma) {
        throw GridError("pointer grid under-resolves sigma (fewer than 8 samples)");
    }

    const auto normalized = state.normalized();
    std::map<double, GridWavefunction> shifted;
    WeakJointState out{state.register_ptr(), {}};
    for (const auto &[joint, amp] : normalized.amplitudes()) {
        const double shift = params.coupling * eigen[reg.digit(joint, sub)];
        auto it = shifted.find(shift);
        if (it == shifted.end()) {
            if (shift < domain.x_min || shift >= domain.x_max) {
                throw GridError("shifted pointer leaves the grid domain");
            }
            auto moved = shift == 0.0 ? pointer : translate(pointer, shift);
            if (!moved.contained()) {
                throw GridError("shifted pointer leaves the grid domain");
            }
            it = shifted.emplace(shift, std::move(moved)).first;
        }
        out.branches.push_back({joint, amp, it->second});
    }
    return out;
}

std::vector<double> WeakJointState::reading_distribution() const {
    const auto n = grid().size();
    const double dx = grid().dx();
    std::vector<double> p(n, 0.0);
    for (const auto &b : branches) {
        const double w = std::norm(b.coefficient);
        const auto &amps = b.pointer.amplitudes();
        for (std::size_t i = 0; i < n; ++i) {
            p[i] += w * std::norm(amps[i]) * dx;
        }
    }
    return p;
}

StateVector WeakJointState::conditional_state(std::size_t i) const {
    StateVector::Amplitudes amps;
    for (const auto &b : branches) {
        amps[b.joint] += b.coefficient * b.pointer.amplitudes().at(i);
    }
    StateVector s(reg, std::move(amps));
    if (s.norm_squared() <= 0.0) {
        throw ImpossibleOutcome("pointer reading has zero probability");
    }
    return s.normalized();
}

PointerReading read_pointer(const WeakJointState &joint, std::uint64_t seed) {
    Rng rng(seed);
    const auto i = rng.pick(joint.reading_distribution());
    return {joint.grid().x(i), joint.conditional_state(i)};
}

std::vector<double> sample_readings(const WeakJointState &joint, std::size_t count,
                                    std::uint64_t seed) {
    const auto weights = joint.reading_distribution();
    Rng rng(seed);
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(joint.grid().x(rng.pick(weights)));
    }
    return out;
}

double mean_readout_fidelity(const WeakJointState &joint,
                             const StateVector &reference) {
    const auto weights = joint.reading_distribution();
    double total = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] > kProbabilityFloor) {
            total += weights[i] * fidelity(joint.conditional_state(i), reference);
        }
    }
    return total;
}

} // namespace labelsim
