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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "support.hpp"

namespace labelsim::scenarios {

namespace {

const std::string kPhoton = "photon";
const std::string kMarker = "marker";
const std::string kElectron = "e-";
const std::string kSolenoid = "solenoid";
const SplitPorts kPorts{"src", "upper", "lower", "dump"};
const SplitPorts kElectronPorts{"src", "left", "right", "dump"};

double visibility(const std::vector<double> &p) {
    const auto [lo, hi] = std::minmax_element(p.begin(), p.end());
    return *hi + *lo > 0.0 ? (*hi - *lo) / (*hi + *lo) : 0.0;
}

} // namespace

ScenarioReport quantum_erasure(Script &s) {
    const auto points = static_cast<std::size_t>(s.param("points"));
    const auto reg = new_register(
        {{kPhoton, {"src", "dump", "upper", "lower"}}, {kMarker, {"b", "c", "plus", "minus"}}});
    const auto source = basis_state(reg, {{kPhoton, "src"}, {kMarker, "b"}});
    const Bipartition cut{{kPhoton}, {kMarker}};
    s.record("source", source, {kPhoton, kMarker}, {cut});

    std::vector<double> raw;
    std::vector<double> plus;
    std::vector<double> minus;
    double worst_fringe = 0.0;
    double worst_joint = 0.0;
    std::vector<std::vector<double>> rows;
    for (std::size_t k = 0; k < points; ++k) {
        const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) /
                           static_cast<double>(points);
        s.at("phase sample " + std::to_string(k));
        auto st = apply_split(source, kPhoton, kPorts);
        st = controlled_relabel(st, {{kPhoton, "lower"}},
                                {{{{kMarker, "b"}}, {{kMarker, "c"}}}});
        st = controlled_phase(st, {{kPhoton, "upper"}}, phi);
        if (k == 1) {
            s.record("which-path marked", st, {kPhoton, kMarker}, {cut})
                .metric("phi", phi);
        }
        st = apply_split(st, kPhoton, kPorts);
        raw.push_back(probability(st, {{kPhoton, "src"}}));

        const auto erased = apply_basis_change(st, kMarker, {"b", "c"}, hadamard(),
                                               LabelPair{"plus", "minus"});
        const auto on_plus = project(erased, kMarker, "plus");
        const auto on_minus = project(erased, kMarker, "minus");
        const double p_plus = probability(on_plus.post_state, {{kPhoton, "src"}});
        plus.push_back(p_plus);
        minus.push_back(probability(on_minus.post_state, {{kPhoton, "src"}}));
        const double fringe = std::pow(std::cos(phi / 2.0), 2.0);
        worst_fringe = std::max(worst_fringe, std::abs(p_plus - fringe));
        const double joint = probability(erased, {{kMarker, "plus"}, {kPhoton, "src"}});
        worst_joint = std::max(worst_joint, std::abs(joint - on_plus.probability * p_plus));
        rows.push_back({phi, raw.back(), p_plus, minus.back(), fringe});
        if (k == 1) {
            s.record("marker read as plus", on_plus.post_state, {kPhoton, kMarker}, {cut})
                .metric("probability", on_plus.probability);
        }
    }
    s.series("fringes", {"phi", "P_src", "P_src_given_plus", "P_src_given_minus",
                         "cos2_half_phi"})
        .rows = std::move(rows);
    s.check("unconditioned visibility", 0.01, visibility(raw), 0.0, Relation::less,
            "oracle: orthogonal marker states");
    s.check("plus-conditioned visibility", 0.99, visibility(plus), 0.0, Relation::greater,
            "oracle: two-qubit closed form");
    s.check("minus-conditioned visibility", 0.99, visibility(minus), 0.0,
            Relation::greater, "oracle: two-qubit closed form");
    s.check("plus-conditioned fringe vs cos^2(phi/2)", 0.0, worst_fringe, 1e-10,
            Relation::approx, "oracle: two-qubit closed form");
    s.check("P(plus, src) sequential vs joint", 0.0, worst_joint, 1e-10, Relation::approx,
            "oracle: joint Born weight");
    return s.finish();
}

ScenarioReport ab_toy(Script &s) {
    const double phi = s.param("phi");
    const auto d = static_cast<std::size_t>(s.param("levels"));
    std::vector<std::string> levels;
    for (std::size_t i = 0; i < d; ++i) {
        levels.push_back("s" + std::to_string(i));
    }
    const auto reg = new_register(
        {{kElectron, {"src", "dump", "left", "right"}}, {kSolenoid, levels}});
    const Bipartition cut{{kElectron}, {kSolenoid}};
    std::vector<Relabel> shift;
    std::vector<Relabel> unshift;
    for (std::size_t i = 0; i < d; ++i) {
        shift.push_back({{{kSolenoid, levels[i]}}, {{kSolenoid, levels[(i + 1) % d]}}});
        unshift.push_back({{{kSolenoid, levels[(i + 1) % d]}}, {{kSolenoid, levels[i]}}});
    }

    OpLog log;
    const auto source = basis_state(reg, {{kElectron, "src"}, {kSolenoid, "s0"}});
    s.record("source", source, {kElectron, kSolenoid}, {cut});
    const double h0 = cut_entropy(source, cut);

    s.at("split");
    auto st = log.record(source, SplitOp{kElectron, kElectronPorts});
    s.at("entry");
    st = log.record(st, RelabelOp{{{kElectron, "left"}}, shift});
    st = log.record(st, PhaseOp{{{kElectron, "left"}, {kSolenoid, "s1"}}, phi});
    s.record("inside", st, {kElectron, kSolenoid}, {cut})
        .metric("recombination", recombine_probability(st, kElectron, kElectronPorts));
    const double h1 = cut_entropy(st, cut);

    s.at("exit");
    st = log.record(st, RelabelOp{{{kElectron, "left"}}, unshift});
    const double recombination = recombine_probability(st, kElectron, kElectronPorts);
    s.record("exit", st, {kElectron, kSolenoid}, {cut}).metric("recombination", recombination);
    const double h2 = cut_entropy(st, cut);

    s.check("entropy e-|solenoid at source", 0.0, h0, 1e-9, Relation::at_most,
            "product input");
    s.check("entropy e-|solenoid inside", 0.1, h1, 0.0, Relation::greater,
            "oracle: orthogonal solenoid records");
    s.check("entropy e-|solenoid after exit", 1e-9, h2, 0.0, Relation::less,
            "oracle: solenoid returns to s0");
    s.check("recombination", std::pow(std::cos(phi / 2.0), 2.0), recombination, 1e-10,
            Relation::approx, "oracle: cos^2(phi/2)");
    s.check("full reversal", 1.0, fidelity(time_reverse(st, log), source), 1e-9,
            Relation::approx, "unitarity of the pipeline");
    return s.finish();
}

} // namespace labelsim::scenarios
