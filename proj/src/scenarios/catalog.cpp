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
#include <functional>
#include <numbers>
#include <sstream>

#include "labelsim/errors.hpp"
#include "labelsim/scenarios.hpp"
#include "support.hpp"

namespace labelsim {

namespace {

using Runner = std::function<ScenarioReport(scenarios::Script &)>;

constexpr double kPi = std::numbers::pi;

ParamSpec real(std::string name, double def, double lo, double hi, bool lo_open,
               bool hi_open, std::string description) {
    return {std::move(name), def, lo, hi, lo_open, hi_open, false, std::move(description)};
}

ParamSpec whole(std::string name, double def, double lo, double hi,
                std::string description) {
    return {std::move(name), def, lo, hi, false, false, true, std::move(description)};
}

std::vector<ParamSpec> zeno_params(double alpha) {
    return {real("alpha", alpha, 0.0, kPi / 4.0, true, true,
                 "rotation angle per cycle (radians)"),
            whole("cycles", 0, 0, 100000, "cycle count; 0 selects ceil(pi/(2 alpha))")};
}

struct Entry {
    ScenarioInfo info;
    Runner run;
};

const std::vector<Entry> &catalog() {
    static const std::vector<Entry> entries = {
        {{"qo_core",
          "electron-positron annihilation couplings at t1 and t2 with READY "
          "post-selections; entropy timeline and recombination asymmetry",
          {}},
         scenarios::qo_core},
        {{"hardy_ci",
          "critical-interval electron-positron state: Schmidt spectrum, "
          "position correlation, and disentanglement at t2",
          {}},
         scenarios::hardy_ci},
        {{"atom_collision",
          "two-atom collision relabelings leaving four equal branches", {}},
         scenarios::atom_collision},
        {{"oblivion_with_pointers",
          "atom collision recorded by two pointers; reversal before and after "
          "a projective pointer readout",
          {}},
         scenarios::oblivion_with_pointers},
        {{"ghostly_mirror",
          "spin mirror in X basis, no-scatter post-selection, then a Z readout",
          {}},
         scenarios::ghostly_mirror},
        {{"zeno_basic",
          "two-sided cavity rotation with and without a right-side detector",
          zeno_params(kPi / 20.0)},
         scenarios::zeno_basic},
        {{"zeno_counterfactual",
          "Zeno interrogation of a spin-1/2 bomb that only absorbs on Z+",
          zeno_params(kPi / 40.0)},
         scenarios::zeno_counterfactual},
        {{"zeno_ghost_entanglement",
          "three-region photon interrogating two spin-1/2 bombs; conditional "
          "bomb-pair states",
          zeno_params(kPi / 40.0)},
         scenarios::zeno_ghost_entanglement},
        {{"partial_erasure",
          "iterated partial measurement toward a target bias, then erasure",
          {real("epsilon", 0.5, 0.0, 1.0, true, false, "coupling fraction per round"),
           real("target", 0.99, 0.5, 1.0, true, true, "probability to reach on the unmonitored side"),
           real("phase", 0.0, -kPi, kPi, false, false,
                "relative phase of the initial superposition")}},
         scenarios::partial_erasure},
        {{"weak_ensemble",
          "weak measurement of a +/-1 observable with a Gaussian pointer",
          {real("coupling", 1.0, 0.0, 16.0, true, false, "pointer shift per unit eigenvalue (grid units)"),
           real("sigma", 10.0, 8.0, 64.0, false, false, "pointer width (grid units)"),
           whole("ensemble", 10000, 1, 1000000, "number of independent readings"),
           real("p_up", 0.5, 0.0, 1.0, false, false, "weight of the +1 eigenstate"),
           real("sigma_fidelity", 20.0, 8.0, 64.0, false, false,
                "pointer width for the single-shot disturbance check")}},
         scenarios::weak_ensemble},
        {{"quantum_erasure",
          "interferometer with a which-path marker, read raw and in the "
          "marker's conjugate basis",
          {whole("points", 32, 4, 4096, "phase samples over [0, 2 pi)")}},
         scenarios::quantum_erasure},
        {{"dicke_tray_spoon",
          "wide tray plus narrow far spoon on a grid; tray null result and "
          "momentum spread",
          {real("l_tray", 10.0, 0.0, 100.0, true, false, "tray width L"),
           real("l_spoon", 1.0, 0.0, 10.0, true, false, "spoon width l (at most L/10)"),
           real("x_spoon", 56.0, -1000.0, 1000.0, false, false, "spoon center (tray at 0)"),
           real("epsilon", 0.01, 0.0, 1.0, true, true, "spoon amplitude"),
           whole("grid_points", 4096, 256, 65536, "samples (power of two)")}},
         scenarios::dicke_tray_spoon},
        {{"ab_toy",
          "electron path entangles with a d-level solenoid pointer and is "
          "released again",
          {real("phi", kPi / 3.0, -2.0 * kPi, 2.0 * kPi, false, false,
                "phase accumulated on the left path"),
           whole("levels", 3, 2, 16, "solenoid pointer dimension")}},
         scenarios::ab_toy},
    };
    return entries;
}

std::string format_number(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

void ParamSpec::validate(double value) const {
    const bool below = min_open ? value <= min : value < min;
    const bool above = max_open ? value >= max : value > max;
    if (!std::isfinite(value) || below || above) {
        throw ParameterError("parameter '" + name + "' = " + format_number(value) +
                             " is outside " + (min_open ? "(" : "[") +
                             format_number(min) + ", " + format_number(max) +
                             (max_open ? ")" : "]"));
    }
    if (integer && value != std::floor(value)) {
        throw ParameterError("parameter '" + name + "' must be an integer");
    }
}

const ParamSpec *ScenarioInfo::find(std::string_view param) const {
    for (const auto &p : params) {
        if (p.name == param) {
            return &p;
        }
    }
    return nullptr;
}

const std::vector<ScenarioInfo> &list_scenarios() {
    static const std::vector<ScenarioInfo> infos = [] {
        std::vector<ScenarioInfo> out;
        for (const auto &e : catalog()) {
            out.push_back(e.info);
        }
        return out;
    }();
    return infos;
}

const ScenarioInfo &scenario_info(std::string_view name) {
    for (const auto &e : catalog()) {
        if (e.info.name == name) {
            return e.info;
        }
    }
    throw ParameterError("unknown scenario '" + std::string(name) + "'");
}

ParamMap resolve_params(const ScenarioInfo &info, const ParamMap &overrides) {
    ParamMap out;
    for (const auto &p : info.params) {
        out[p.name] = p.default_value;
    }
    for (const auto &[key, value] : overrides) {
        const auto *spec = info.find(key);
        if (spec == nullptr) {
            throw ParameterError("scenario '" + info.name + "' has no parameter '" +
                                 key + "'");
        }
        spec->validate(value);
        out[key] = value;
    }
    return out;
}

ScenarioReport run_scenario(std::string_view name, const ParamMap &overrides,
                            std::uint64_t seed) {
    for (const auto &e : catalog()) {
        if (e.info.name != name) {
            continue;
        }
        scenarios::Script script(e.info.name, resolve_params(e.info, overrides), seed);
        try {
            return e.run(script);
        } catch (const ImpossibleOutcome &err) {
            throw ImpossibleOutcome("step '" + script.current() + "': " + err.what());
        }
    }
    throw ParameterError("unknown scenario '" + std::string(name) + "'");
}

} // namespace labelsim
