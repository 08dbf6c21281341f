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

#include "labelsim/report.hpp"

#include <algorithm>
#include <cmath>

#include "labelsim/errors.hpp"
#include "labelsim/measure.hpp"

namespace labelsim {

std::string to_string(Relation r) {
    switch (r) {
    case Relation::approx:
        return "approx";
    case Relation::at_least:
        return "at_least";
    case Relation::at_most:
        return "at_most";
    case Relation::greater:
        return "greater";
    case Relation::less:
        return "less";
    }
    return "approx";
}

Check make_check(std::string name, double expected, double actual, double tolerance,
                 Relation relation, std::string provenance) {
    bool pass = false;
    switch (relation) {
    case Relation::approx:
        pass = std::abs(actual - expected) <= tolerance;
        break;
    case Relation::at_least:
        pass = actual >= expected - tolerance;
        break;
    case Relation::at_most:
        pass = actual <= expected + tolerance;
        break;
    case Relation::greater:
        pass = actual > expected;
        break;
    case Relation::less:
        pass = actual < expected;
        break;
    }
    if (std::isnan(actual)) {
        pass = false;
    }
    return {std::move(name), expected,  actual, tolerance,
            relation,        pass,      std::move(provenance)};
}

bool ScenarioReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check &c) { return c.pass; });
}

const Check &ScenarioReport::check(std::string_view name) const {
    for (const auto &c : checks) {
        if (c.name == name) {
            return c;
        }
    }
    throw ParameterError("report has no check named '" + std::string(name) + "'");
}

const Step &ScenarioReport::step(std::string_view label) const {
    for (const auto &s : steps) {
        if (s.label == label) {
            return s;
        }
    }
    throw ParameterError("report has no step labeled '" + std::string(label) + "'");
}

std::string cut_name(const Bipartition &cut) {
    std::string out;
    for (std::size_t i = 0; i < cut.first.size(); ++i) {
        out += (i ? "," : "") + cut.first[i];
    }
    out += "|";
    for (std::size_t i = 0; i < cut.second.size(); ++i) {
        out += (i ? "," : "") + cut.second[i];
    }
    return out;
}

Step snapshot(std::string label, const StateVector &state,
              const std::vector<std::string> &marginals,
              const std::vector<Bipartition> &cuts) {
    Step step;
    step.label = std::move(label);
    const auto unit = state.normalized();

    std::vector<std::pair<std::uint64_t, Complex>> entries(unit.amplitudes().begin(),
                                                           unit.amplitudes().end());
    if (entries.size() > kSnapshotAmplitudes) {
        std::stable_sort(entries.begin(), entries.end(), [](const auto &a, const auto &b) {
            return std::abs(a.second) > std::abs(b.second);
        });
        entries.resize(kSnapshotAmplitudes);
        std::sort(entries.begin(), entries.end(),
                  [](const auto &a, const auto &b) { return a.first < b.first; });
    }
    for (const auto &[joint, amp] : entries) {
        step.amplitudes.push_back({unit.reg().decode(joint), amp});
    }
    for (const auto &name : marginals) {
        step.distributions.push_back({name, born_probabilities(unit, name)});
    }
    for (const auto &cut : cuts) {
        step.entropies.push_back({cut_name(cut), entropy(unit, cut)});
    }
    return step;
}

} // namespace labelsim
