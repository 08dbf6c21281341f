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
 * Born-rule readout, post-selection, the two-outcome partial measurement,
 * erasure of a partial measurement, and weak measurement with a sampled
 * Gaussian pointer.
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "labelsim/evolve.hpp"
#include "labelsim/grid.hpp"
#include "labelsim/register.hpp"

namespace labelsim {

struct MeasurementRecord {
    std::string subsystem;
    std::string outcome;
    double probability = 0.0;
    StateVector post_state;
};

/// Marginal distribution of one subsystem, in label order. Labels with zero
/// weight are included.
std::vector<std::pair<std::string, double>>
born_probabilities(const StateVector &state, const std::string &subsystem);

/// Born weight of a partial assignment.
double probability(const StateVector &state, const Assignment &condition);

/// Throws ImpossibleOutcome if the label has probability <= kProbabilityFloor.
MeasurementRecord project(const StateVector &state, const std::string &subsystem,
                          const std::string &label);

/// Projects onto every label except `label`; outcome reads "not <label>".
MeasurementRecord project_complement(const StateVector &state,
                                     const std::string &subsystem,
                                     const std::string &label);

/// Joint projection onto a partial assignment. The record's subsystem and
/// outcome fields list the names and labels comma-separated in register order.
MeasurementRecord postselect(const StateVector &state, const Assignment &condition);

MeasurementRecord sample_measure(const StateVector &state,
                                 const std::string &subsystem, std::uint64_t seed);

inline constexpr std::string_view kClick = "click";
inline constexpr std::string_view kNoClick = "no-click";

/// Two-outcome measurement coupling to a fraction `epsilon` of the monitored
/// label: click = √ε·P, no-click = (1 − P) + √(1−ε)·P.
MeasurementRecord partial_project(const StateVector &state,
                                  const std::string &subsystem,
                                  const std::string &monitored, double epsilon,
                                  bool click);

MeasurementRecord partial_measure(const StateVector &state,
                                  const std::string &subsystem,
                                  const std::string &monitored, double epsilon,
                                  std::uint64_t seed);

struct ErasureResult {
    double epsilon = 0.0;
    double success_probability = 0.0;
    StateVector post_state;
};

/// Chooses ε′ with √(1−ε′)·|a| = |b| for the pair (boosted a, suppressed b)
/// and applies the no-click branch of partial_project on `boosted`. Throws
/// ImpossibleOutcome when b = 0 and OperationError when |a| < |b|.
ErasureResult erase_partial(const StateVector &state, const std::string &subsystem,
                            const LabelPair &pair);

/// Smallest number of no-click outcomes on a branch of weight p_monitored
/// after which the complementary weight reaches `target`.
std::size_t no_click_count(double p_monitored, double epsilon, double target);

struct WeakParams {
    double coupling = 1.0;
    double sigma = 10.0;
    std::size_t points = 1024;
    /// Defaults to a unit-spaced grid centered on 0.
    std::optional<Domain> domain;

    [[nodiscard]] Domain resolved_domain() const;
};

struct WeakBranch {
    std::uint64_t joint = 0;
    Complex coefficient;
    GridWavefunction pointer;
};

/// System ⊗ pointer after the coupling: one normalized pointer per populated
/// system basis state.
struct WeakJointState {
    RegisterPtr reg;
    std::vector<WeakBranch> branches;

    /// Pointer position density at every grid sample (sums to 1).
    [[nodiscard]] std::vector<double> reading_distribution() const;
    /// System state left behind by a reading at grid sample `i`.
    [[nodiscard]] StateVector conditional_state(std::size_t i) const;
    [[nodiscard]] const GridWavefunction &grid() const {
        return branches.front().pointer;
    }
};

/// Shifts each branch's pointer by coupling × eigenvalue. Every label of the
/// subsystem must carry an eigenvalue. Throws GridError when σ spans fewer
/// than 8 samples or a shifted pointer is not contained.
WeakJointState weak_measure(const StateVector &state, const std::string &subsystem,
                            const std::map<std::string, double, std::less<>> &observable,
                            const WeakParams &params);

struct PointerReading {
    double reading = 0.0;
    StateVector post_state;
};

PointerReading read_pointer(const WeakJointState &joint, std::uint64_t seed);

/// `count` independent pointer readings from one seeded stream.
std::vector<double> sample_readings(const WeakJointState &joint, std::size_t count,
                                    std::uint64_t seed);

/// Outcome-averaged fidelity of the post-readout system with `reference`.
double mean_readout_fidelity(const WeakJointState &joint,
                             const StateVector &reference);

} // namespace labelsim
