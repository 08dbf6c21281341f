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

#include "support.hpp"

namespace labelsim::scenarios {

namespace {

const std::string kA1 = "A1";
const std::string kA2 = "A2";
const std::string kP1 = "P1";
const std::string kP2 = "P2";

const SplitPorts kA2Ports{"src", "1", "2", "dump"};
const SplitPorts kA1Ports{"src", "3", "4", "dump"};

std::vector<SubsystemSpec> atom_specs() {
    return {{kA2, {"src", "dump", "1", "2", "1'", "2'"}},
            {kA1, {"src", "dump", "3", "4", "3'", "3''"}}};
}

RelabelOp collision(const std::string &a2, const std::string &a1,
                    const std::string &a2_out, const std::string &a1_out) {
    return {{}, {{{{kA2, a2}, {kA1, a1}}, {{kA2, a2_out}, {kA1, a1_out}}}}};
}

/// The A2 wave packet that did not collide drifts on to the primed region.
RelabelOp drift() {
    return {{{kA1, "4"}},
            {{{{kA2, "1"}}, {{kA2, "1'"}}}, {{{kA2, "2"}}, {{kA2, "2'"}}}}};
}

RelabelOp kick(const std::string &pointer, const std::string &a1) {
    return {{{kA1, a1}}, {{{{pointer, "rest"}}, {{pointer, "kicked"}}}}};
}

StateVector collide(OpLog &log, const StateVector &source) {
    auto s = log.record(source, SplitOp{kA2, kA2Ports});
    s = log.record(s, SplitOp{kA1, kA1Ports});
    s = log.record(s, collision("2", "3", "2'", "3'"));
    s = log.record(s, collision("1", "3", "1'", "3''"));
    return log.record(s, drift());
}

Assignment with(Assignment base, const std::string &a2, const std::string &a1) {
    base[kA2] = a2;
    base[kA1] = a1;
    return base;
}

} // namespace

ScenarioReport atom_collision(Script &s) {
    const auto reg = new_register(atom_specs());
    const Bipartition cut{{kA2}, {kA1}};
    OpLog log;
    const auto source = basis_state(reg, {{kA2, "src"}, {kA1, "src"}});
    s.record("source", source, {kA2, kA1}, {cut});
    s.at("collisions");
    const auto state = collide(log, source);
    s.record("collisions", state, {kA2, kA1}, {cut});

    const auto transcribed = superpose(reg,
                                       {{0.5, {{kA2, "1'"}, {kA1, "3''"}}},
                                        {0.5, {{kA2, "2'"}, {kA1, "3'"}}},
                                        {0.5, {{kA2, "1'"}, {kA1, "4"}}},
                                        {0.5, {{kA2, "2'"}, {kA1, "4"}}}},
                                       false);
    s.check("four-branch state", 1.0, fidelity(state, transcribed), 1e-10,
            Relation::approx, "transcribed state");
    const std::vector<std::pair<std::string, std::string>> branches = {
        {"1'", "3''"}, {"2'", "3'"}, {"1'", "4"}, {"2'", "4"}};
    for (const auto &[a2, a1] : branches) {
        s.check("|amplitude(" + a2 + "," + a1 + ")|", 0.5,
                std::abs(amplitude(state, {{kA2, a2}, {kA1, a1}})), 1e-10,
                Relation::approx, "transcribed state");
    }
    s.check("P(A2=1')", 0.5, probability(state, {{kA2, "1'"}}), 1e-10, Relation::approx,
            "oracle: sum of squared branch amplitudes");
    s.check("P(A2=2')", 0.5, probability(state, {{kA2, "2'"}}), 1e-10, Relation::approx,
            "oracle: sum of squared branch amplitudes");
    s.check("full reversal", 1.0, fidelity(time_reverse(state, log), source), 1e-9,
            Relation::approx, "unitarity of the collision pipeline");
    return s.finish();
}

ScenarioReport oblivion_with_pointers(Script &s) {
    auto specs = atom_specs();
    specs.push_back({kP1, {"rest", "kicked"}});
    specs.push_back({kP2, {"rest", "kicked"}});
    const auto reg = new_register(std::move(specs));
    const std::vector<std::string> all = {kA2, kA1, kP1, kP2};
    const auto a2_cut = split_off(*reg, {kA2});
    std::vector<Bipartition> singles;
    for (const auto &name : all) {
        singles.push_back(split_off(*reg, {name}));
    }

    OpLog log;
    const Assignment rest = {{kP1, "rest"}, {kP2, "rest"}};
    const auto source = basis_state(reg, with(rest, "src", "src"));
    s.record("source", source, all, singles);
    const double h_source = cut_entropy(source, a2_cut);

    s.at("collisions");
    auto state = collide(log, source);
    s.record("collisions", state, all, singles);
    s.at("pointer coupling");
    state = log.record(state, kick(kP1, "3'"));
    state = log.record(state, kick(kP2, "3''"));
    s.record("pointer coupling", state, all, singles);
    const auto entangled = state;
    double h_min = 1.0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const double h = cut_entropy(entangled, singles[i]);
        h_min = std::min(h_min, h);
        s.check("entropy " + all[i] + "|rest after pointer coupling", 0.0, h, 0.0,
                Relation::greater, "oracle: nonzero second Schmidt coefficient");
    }
    const double h_peak = cut_entropy(entangled, a2_cut);

    s.at("reversal before readout");
    const auto reversed = time_reverse(entangled, log);
    s.record("reversal before readout", reversed, all, singles);
    const double h_reversed = cut_entropy(reversed, a2_cut);
    s.check("entropy A2|rest at source", 0.0, h_source, 1e-9, Relation::at_most,
            "product input");
    s.check("entropy A2|rest after pointer coupling", 0.1, h_peak, 0.0,
            Relation::greater, "oracle: Schmidt spectrum");
    s.check("entropy A2|rest after reversal", 1e-9, h_reversed, 0.0, Relation::less,
            "oracle: product source");
    s.check("full reversal before readout", 1.0, fidelity(reversed, source), 1e-9,
            Relation::approx, "unitarity of the pipeline");
    s.check("A2 recombination before readout", 1.0,
            probability(reversed, {{kA2, "src"}}), 1e-9, Relation::approx,
            "unitarity of the pipeline");

    // sampled projective readout of both pointers
    s.at("pointer readout");
    const auto r1 = sample_measure(entangled, kP1, s.stream("readout/P1"));
    const auto r2 = sample_measure(r1.post_state, kP2, s.stream("readout/P2"));
    log.mark_projection("pointer readout");
    s.record("pointer readout", r2.post_state, all, singles)
        .metric("P(P1=" + r1.outcome + ")", r1.probability)
        .metric("P(P2=" + r2.outcome + " | P1)", r2.probability);
    const auto joint = postselect(entangled, {{kP1, r1.outcome}, {kP2, r2.outcome}});
    s.check("readout probability sequential vs joint", joint.probability,
            r1.probability * r2.probability, 1e-10, Relation::approx,
            "oracle: joint Born weight");

    std::vector<Operation> ops;
    for (const auto &op : log.entries()) {
        if (!std::holds_alternative<ProjectionMarker>(op)) {
            ops.push_back(op);
        }
    }
    auto undo = [&](StateVector st) {
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
            st = labelsim::apply(st, inverse(*it));
        }
        return st;
    };

    s.at("reversal after readout");
    const auto sampled_back = undo(r2.post_state);
    s.record("reversal after readout", sampled_back, all, singles);
    s.check("reversal after readout (sampled outcome)", 1.0,
            fidelity(sampled_back, source), 1e-6, Relation::less,
            "readout is not undone by the inverse unitaries");
    s.check("A2 recombination after readout (sampled outcome)", 1.0 + 1e-9,
            probability(sampled_back, {{kA2, "src"}}), 0.0, Relation::less,
            "bounded by 1");

    double mean_recombination = 0.0;
    double best_fidelity = 0.0;
    auto &table = s.series("readout outcomes", {"P1_kicked", "P2_kicked", "probability",
                                                "reversal_fidelity", "A2_recombination"});
    for (const std::string p1 : {"rest", "kicked"}) {
        for (const std::string p2 : {"rest", "kicked"}) {
            const double p = probability(entangled, {{kP1, p1}, {kP2, p2}});
            if (p <= kProbabilityFloor) {
                continue;
            }
            const auto back = undo(postselect(entangled, {{kP1, p1}, {kP2, p2}}).post_state);
            const double f = fidelity(back, source);
            const double rec = probability(back, {{kA2, "src"}});
            best_fidelity = std::max(best_fidelity, f);
            mean_recombination += p * rec;
            table.rows.push_back({p1 == "kicked" ? 1.0 : 0.0, p2 == "kicked" ? 1.0 : 0.0,
                                  p, f, rec});
        }
    }
    s.check("best reversal fidelity over readout outcomes", 1.0, best_fidelity, 0.0,
            Relation::less, "oracle: overlap of each projected branch with the source");
    s.check("mean A2 recombination after readout", 0.75, mean_recombination, 1e-9,
            Relation::approx, "oracle: 1/2*1 + 1/4*1/2 + 1/4*1/2");
    s.check("A2 recombination fails after readout", 1.0, mean_recombination, 0.0,
            Relation::less, "oracle: outcome-averaged recombination");
    return s.finish();
}

} // namespace labelsim::scenarios
