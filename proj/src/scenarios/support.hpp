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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "labelsim/entangle.hpp"
#include "labelsim/evolve.hpp"
#include "labelsim/measure.hpp"
#include "labelsim/report.hpp"

namespace labelsim::scenarios {

/// Shared state of one scenario run: the report being built, the step the
/// script is in, and per-purpose random streams.
class Script {
  public:
    Script(std::string name, ParamMap params, std::uint64_t seed);

    [[nodiscard]] double param(std::string_view name) const;
    [[nodiscard]] const std::string &current() const { return current_; }
    /// Seed for a named sub-stream, derived from (seed, scenario, purpose).
    [[nodiscard]] std::uint64_t stream(std::string_view purpose) const;

    /// Marks the step that subsequent operations belong to.
    void at(std::string label) { current_ = std::move(label); }

    Step &record(std::string label, const StateVector &state,
                 const std::vector<std::string> &marginals = {},
                 const std::vector<Bipartition> &cuts = {});

    /// A step without a register state (grid pipelines); metrics only.
    Step &mark(std::string label);

    const Check &check(std::string name, double expected, double actual,
                       double tolerance, Relation relation, std::string provenance);
    void note(std::string text) { report_.notes.push_back(std::move(text)); }
    Series &series(std::string name, std::vector<std::string> columns);

    ScenarioReport finish() { return std::move(report_); }

  private:
    ScenarioReport report_;
    std::string current_;
};

/// Largest Schmidt-based entropy across `cut` (bits), 0 on a product.
double cut_entropy(const StateVector &state, const Bipartition &cut);

/// n′ = ⌈π/2α⌉ unless `cycles` is positive.
std::size_t zeno_cycles(double alpha, double cycles);

ScenarioReport qo_core(Script &s);
ScenarioReport hardy_ci(Script &s);
ScenarioReport atom_collision(Script &s);
ScenarioReport oblivion_with_pointers(Script &s);
ScenarioReport ghostly_mirror(Script &s);
ScenarioReport zeno_basic(Script &s);
ScenarioReport zeno_counterfactual(Script &s);
ScenarioReport zeno_ghost_entanglement(Script &s);
ScenarioReport partial_erasure(Script &s);
ScenarioReport weak_ensemble(Script &s);
ScenarioReport quantum_erasure(Script &s);
ScenarioReport dicke_tray_spoon(Script &s);
ScenarioReport ab_toy(Script &s);

} // namespace labelsim::scenarios
