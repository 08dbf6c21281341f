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

#include "support.hpp"

namespace labelsim::scenarios {

namespace {

const std::string kMirror = "mirror";
const std::string kElectron = "e-";
const std::string kScatter = "scatter";

Assignment at(const std::string &m, const std::string &e,
              const std::string &scatter = "none") {
    return {{kMirror, m}, {kElectron, e}, {kScatter, scatter}};
}

} // namespace

ScenarioReport ghostly_mirror(Script &s) {
    const auto reg = new_register({{kMirror, {"Z+", "Z-", "X+", "X-"}},
                                   {kElectron, {"L", "R"}},
                                   {kScatter, {"none", "scattered"}}});
    const std::vector<std::string> marginals = {kMirror, kElectron, kScatter};
    const Bipartition cut{{kMirror}, {kElectron, kScatter}};
    const double r2 = 1.0 / std::sqrt(2.0);
    OpLog log;

    const auto initial = superpose(reg, {{r2, at("Z+", "L")}, {r2, at("Z+", "R")}}, false);
    s.record("prepared", initial, marginals, {cut});

    s.at("mirror in X basis");
    auto state = log.record(initial, BasisChangeOp{kMirror, {"Z+", "Z-"}, hadamard(),
                                                   LabelPair{"X+", "X-"}});
    s.record("mirror in X basis", state, marginals, {cut});
    const auto x_basis = superpose(reg,
                                   {{0.5, at("X+", "L")},
                                    {0.5, at("X+", "R")},
                                    {0.5, at("X-", "L")},
                                    {0.5, at("X-", "R")}},
                                   false);
    s.check("state in X basis", 1.0, fidelity(state, x_basis), 1e-10, Relation::approx,
            "transcribed state");

    s.at("scattering");
    state = log.record(state, RelabelOp{{{kMirror, "X-"}, {kElectron, "L"}},
                                        {{{{kScatter, "none"}}, {{kScatter, "scattered"}}}}});
    s.record("scattering", state, marginals, {cut});
    const auto coupled = state;

    s.at("no-scatter post-selection");
    const auto none = project(state, kScatter, "none");
    log.mark_projection("scatter=none");
    state = none.post_state;
    s.record("no-scatter post-selection", state, marginals, {cut})
        .metric("probability", none.probability);
    const double r3 = 1.0 / std::sqrt(3.0);
    const auto no_scatter = superpose(
        reg, {{r3, at("X+", "L")}, {r3, at("X+", "R")}, {r3, at("X-", "R")}}, false);
    s.check("P(scatter=none)", 0.75, none.probability, 1e-10, Relation::approx,
            "oracle: squared amplitudes of the three unscattered branches");
    s.check("state after no-scatter post-selection", 1.0, fidelity(state, no_scatter),
            1e-10, Relation::approx, "transcribed state");

    s.at("mirror in Z basis");
    const Operation to_z = BasisChangeOp{kMirror, {"X+", "X-"}, hadamard(),
                                         LabelPair{"Z+", "Z-"}};
    state = log.record(state, to_z);
    s.record("mirror in Z basis", state, marginals, {cut});
    const double r6 = 1.0 / std::sqrt(6.0);
    const auto z_basis = superpose(
        reg, {{r6, at("Z+", "L")}, {2.0 * r6, at("Z+", "R")}, {r6, at("Z-", "L")}}, false);
    s.check("state in Z basis", 1.0, fidelity(state, z_basis), 1e-10, Relation::approx,
            "transcribed state");
    const std::vector<std::pair<Assignment, double>> coefficients = {
        {at("Z+", "L"), r6}, {at("Z+", "R"), 2.0 * r6}, {at("Z-", "L"), r6},
        {at("Z-", "R"), 0.0}};
    for (const auto &[a, c] : coefficients) {
        s.check("coefficient(" + a.at(kMirror) + "," + a.at(kElectron) + ")", c,
                amplitude(state, a).real(), 1e-10, Relation::approx, "transcribed state");
    }

    s.at("Z readout");
    const auto down = postselect(state, {{kMirror, "Z-"}});
    log.mark_projection("mirror=Z-");
    s.record("Z readout", down.post_state, marginals, {cut})
        .metric("probability", down.probability);
    s.check("P(mirror=Z-)", 1.0 / 6.0, down.probability, 1e-10, Relation::approx,
            "oracle: squared Z- coefficient");
    s.check("final state", 1.0, fidelity(down.post_state, basis_state(reg, at("Z-", "L"))),
            1e-10, Relation::approx, "transcribed state");

    const auto deferred = labelsim::apply(coupled, to_z);
    const auto joint = postselect(deferred, {{kScatter, "none"}, {kMirror, "Z-"}});
    s.check("P(none, Z-) sequential vs joint", joint.probability,
            none.probability * down.probability, 1e-10, Relation::approx,
            "oracle: joint Born weight with deferred readout");
    s.note("The particle is labeled e- throughout; the conclusion is sometimes "
           "phrased in terms of a photon on the left.");
    return s.finish();
}

} // namespace labelsim::scenarios
