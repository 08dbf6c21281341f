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
 * Scenario reports: a timeline of state snapshots plus named checks and
 * plot-ready numeric series.
 */
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "labelsim/entangle.hpp"
#include "labelsim/register.hpp"

namespace labelsim {

struct AmplitudeEntry {
    Assignment assignment;
    Complex amplitude;
};

struct Distribution {
    std::string name;
    std::vector<std::pair<std::string, double>> probabilities;
};

struct EntropyEntry {
    std::string cut;
    double bits = 0.0;
};

struct Step {
    std::string label;
    /// Largest amplitudes (at most kSnapshotAmplitudes), in canonical order.
    std::vector<AmplitudeEntry> amplitudes;
    std::vector<Distribution> distributions;
    std::vector<EntropyEntry> entropies;
    std::vector<std::pair<std::string, double>> metrics;

    Step &metric(std::string name, double value) {
        metrics.emplace_back(std::move(name), value);
        return *this;
    }
};

inline constexpr std::size_t kSnapshotAmplitudes = 16;

enum class Relation { approx, at_least, at_most, greater, less };

std::string to_string(Relation r);

struct Check {
    std::string name;
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;
    Relation relation = Relation::approx;
    bool pass = false;
    std::string provenance;
};

/// Evaluates `actual` against `expected` under the relation:
/// approx |a − e| ≤ tol; at_least a ≥ e − tol; at_most a ≤ e + tol;
/// greater a > e; less a < e.
Check make_check(std::string name, double expected, double actual, double tolerance,
                 Relation relation, std::string provenance);

struct Series {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

using ParamMap = std::map<std::string, double, std::less<>>;

struct ScenarioReport {
    std::string scenario;
    ParamMap params;
    std::uint64_t seed = 0;
    std::vector<Step> steps;
    std::vector<Check> checks;
    std::vector<Series> series;
    std::vector<std::string> notes;

    [[nodiscard]] bool all_passed() const;
    /// Throws ParameterError if absent.
    [[nodiscard]] const Check &check(std::string_view name) const;
    [[nodiscard]] const Step &step(std::string_view label) const;
};

/// "a,b|c,d" naming of a bipartition.
std::string cut_name(const Bipartition &cut);

/// Snapshot of a state: top amplitudes, marginals of the listed subsystems,
/// and entropies across the listed cuts.
Step snapshot(std::string label, const StateVector &state,
              const std::vector<std::string> &marginals = {},
              const std::vector<Bipartition> &cuts = {});

} // namespace labelsim
