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

const std::string kEm = "e-";
const std::string kEp = "e+";
const std::string kPhotons = "photons";
const std::string kDet1 = "det1";
const std::string kDet2 = "det2";

const SplitPorts kElectronPorts{"src", "1", "2", "dump"};
const SplitPorts kPositronPorts{"src", "3", "4", "dump"};

RegisterPtr qo_register() {
    return new_register({{kEm, {"src", "dump", "1", "2", "ann"}},
                         {kEp, {"src", "dump", "3", "4", "ann"}},
                         {kPhotons, {"none", "pair@t1", "pair@t2"}},
                         {kDet1, {"READY", "CLICK"}},
                         {kDet2, {"READY", "CLICK"}}});
}

Assignment full(const std::string &em, const std::string &ep,
                const std::string &photons = "none") {
    return {{kEm, em}, {kEp, ep}, {kPhotons, photons}, {kDet1, "READY"}, {kDet2, "READY"}};
}

RelabelOp annihilation(const std::string &em, const std::string &ep,
                       const std::string &flag) {
    return {{},
            {{{{kEm, em}, {kEp, ep}, {kPhotons, "none"}},
              {{kEm, "ann"}, {kEp, "ann"}, {kPhotons, flag}}}}};
}

RelabelOp detector_read(const std::string &det, const std::string &flag) {
    return {{{kPhotons, flag}}, {{{{det, "READY"}}, {{det, "CLICK"}}}}};
}

StateVector source_state(const RegisterPtr &reg) {
    return basis_state(reg, full("src", "src"));
}

StateVector split_both(OpLog &log, const StateVector &s) {
    auto out = log.record(s, SplitOp{kEm, kElectronPorts});
    return log.record(out, SplitOp{kEp, kPositronPorts});
}

StateVector transcribed_ci(const RegisterPtr &reg) {
    const double a = 1.0 / std::sqrt(3.0);
    return superpose(reg,
                     {{a, full("1", "4")}, {a, full("2", "4")}, {a, full("1", "3")}},
                     false);
}

StateVector transcribed_final(const RegisterPtr &reg) {
    const double a = 1.0 / std::sqrt(2.0);
    return superpose(reg, {{a, full("1", "4")}, {a, full("2", "4")}}, false);
}

const std::vector<std::string> kMarginals = {kEm, kEp, kDet1, kDet2};

} // namespace

ScenarioReport qo_core(Script &s) {
    const auto reg = qo_register();
    const auto cut = split_off(*reg, {kEm});
    const std::vector<Bipartition> cuts = {cut};
    OpLog log;

    const auto source = source_state(reg);
    s.record("source", source, kMarginals, cuts);
    const double h_source = cut_entropy(source, cut);

    s.at("split");
    auto state = split_both(log, source);
    s.record("split", state, kMarginals, cuts);

    s.at("t1 coupling");
    state = log.record(state, annihilation("2", "3", "pair@t1"));
    state = log.record(state, detector_read(kDet1, "pair@t1"));
    s.record("t1 coupling", state, kMarginals, cuts);
    const auto unprojected_t1 = state;
    const double p_click1 = probability(state, {{kDet1, "CLICK"}});

    s.at("t1 readout");
    auto rec1 = project(state, kDet1, "READY");
    log.mark_projection("det1=READY");
    state = rec1.post_state;
    s.record("t1 readout", state, kMarginals, cuts).metric("probability", rec1.probability);
    const double h_ci = cut_entropy(state, cut);
    const auto ci = state;

    s.at("t2 coupling");
    state = log.record(state, annihilation("1", "3", "pair@t2"));
    state = log.record(state, detector_read(kDet2, "pair@t2"));
    s.record("t2 coupling", state, kMarginals, cuts);
    const auto unprojected_t2 = state;
    const double p_click2 = probability(state, {{kDet2, "CLICK"}});

    s.at("t2 readout");
    auto rec2 = project(state, kDet2, "READY");
    log.mark_projection("det2=READY");
    state = rec2.post_state;
    s.record("t2 readout", state, kMarginals, cuts).metric("probability", rec2.probability);
    const double h_final = cut_entropy(state, cut);
    const auto final_state = state;

    // the same couplings with both readouts deferred to a single joint query
    s.at("deferred readout");
    OpLog unitary_log;
    auto deferred = split_both(unitary_log, source);
    deferred = unitary_log.record(deferred, annihilation("2", "3", "pair@t1"));
    deferred = unitary_log.record(deferred, detector_read(kDet1, "pair@t1"));
    deferred = unitary_log.record(deferred, annihilation("1", "3", "pair@t2"));
    deferred = unitary_log.record(deferred, detector_read(kDet2, "pair@t2"));
    s.record("deferred readout", deferred, kMarginals, cuts);
    const auto joint = postselect(deferred, {{kDet1, "READY"}, {kDet2, "READY"}});

    s.check("state after t1 readout", 1.0, fidelity(ci, transcribed_ci(reg)), 1e-10,
            Relation::approx, "transcribed state");
    s.check("state after t2 readout", 1.0, fidelity(final_state, transcribed_final(reg)),
            1e-10, Relation::approx, "transcribed state");
    s.check("P(det1=CLICK)", 0.25, p_click1, 1e-10, Relation::approx,
            "oracle: squared amplitude of the (2,3) branch");
    s.check("P(det2=CLICK | det1=READY)", 1.0 / 3.0, p_click2, 1e-10, Relation::approx,
            "oracle: squared amplitude of the (1,3) branch");
    s.check("P(silence) sequential", 0.5, rec1.probability * rec2.probability, 1e-10,
            Relation::approx, "oracle: product of sequential Born weights 3/4 * 2/3");
    s.check("P(silence) joint", rec1.probability * rec2.probability, joint.probability,
            1e-10, Relation::approx, "oracle: joint Born weight with deferred readout");
    s.check("deferred state matches sequential", 1.0,
            fidelity(joint.post_state, final_state), 1e-10, Relation::approx,
            "oracle: deferred measurement");
    s.check("entropy e-|rest at source", 0.0, h_source, 1e-9, Relation::at_most,
            "product input");
    s.check("entropy e-|rest in critical interval", 0.1, h_ci, 0.0, Relation::greater,
            "oracle: Schmidt spectrum of the critical-interval state");
    s.check("entropy e-|rest after t2 readout", 1e-9, h_final, 0.0, Relation::less,
            "oracle: rank-1 amplitude matrix");
    s.check("electron recombination", 1.0,
            recombine_probability(final_state, kEm, kElectronPorts), 1e-9,
            Relation::approx, "oracle: inverse splitter on (1+2)/sqrt2");
    s.check("positron recombination", 0.5,
            recombine_probability(final_state, kEp, kPositronPorts), 1e-9,
            Relation::approx, "oracle: inverse splitter on a single port");
    s.check("full reversal before projection", 1.0,
            fidelity(time_reverse(deferred, unitary_log), source), 1e-9,
            Relation::approx, "unitarity of the deferred pipeline");
    const auto segments = log.segments();
    const double seg_t1 = fidelity(time_reverse(unprojected_t1, segments.at(0)), source);
    const double seg_t2 = fidelity(time_reverse(unprojected_t2, segments.at(1)), ci);
    s.check("segment reversal", 1.0, std::min(seg_t1, seg_t2), 1e-9, Relation::approx,
            "unitarity within a segment");
    auto across = final_state;
    for (auto it = log.entries().rbegin(); it != log.entries().rend(); ++it) {
        if (!std::holds_alternative<ProjectionMarker>(*it)) {
            across = labelsim::apply(across, inverse(*it));
        }
    }
    s.check("reversal across projections", 1.0, fidelity(across, source), 1e-6,
            Relation::less, "projections are not undone by the inverse unitaries");
    s.note("The final state is a product across e-|rest (Schmidt rank 1); it is "
           "reported as a product even where it is described as entangled.");
    s.record("final state", final_state, kMarginals, cuts);
    return s.finish();
}

ScenarioReport hardy_ci(Script &s) {
    const auto reg = qo_register();
    const auto cut = split_off(*reg, {kEm});
    OpLog log;
    const auto source = source_state(reg);
    s.record("source", source, kMarginals, {cut});
    s.at("split");
    auto state = split_both(log, source);
    s.at("t1 coupling");
    state = log.record(state, annihilation("2", "3", "pair@t1"));
    state = log.record(state, detector_read(kDet1, "pair@t1"));
    s.at("t1 readout");
    state = project(state, kDet1, "READY").post_state;
    const auto ci_full = state;

    const auto pair = drop_definite(ci_full, {kPhotons, kDet1, kDet2});
    const auto pair_cut = Bipartition{{kEm}, {kEp}};
    s.record("critical interval", pair, {kEm, kEp}, {pair_cut});
    const double a = 1.0 / std::sqrt(3.0);
    const auto transcribed = superpose(pair.register_ptr(),
                                       {{a, {{kEm, "1"}, {kEp, "4"}}},
                                        {a, {{kEm, "2"}, {kEp, "4"}}},
                                        {a, {{kEm, "1"}, {kEp, "3"}}}},
                                       false);
    s.check("critical-interval state", 1.0, fidelity(pair, transcribed), 1e-10,
            Relation::approx, "transcribed state");

    const auto spectrum = schmidt(pair, pair_cut);
    const double l1 = (3.0 + std::sqrt(5.0)) / 6.0;
    const double l2 = (3.0 - std::sqrt(5.0)) / 6.0;
    const double h_oracle = -l1 * std::log2(l1) - l2 * std::log2(l2);
    s.check("Schmidt rank", 2.0, static_cast<double>(spectrum.rank()), 0.0,
            Relation::approx, "oracle: eigenvalues of M M^dagger");
    s.check("Schmidt coefficient 1", l1,
            spectrum.coefficients.empty() ? 0.0 : spectrum.coefficients[0], 1e-9,
            Relation::approx, "oracle: (3+sqrt5)/6");
    s.check("Schmidt coefficient 2", l2, spectrum.second(), 1e-9, Relation::approx,
            "oracle: (3-sqrt5)/6");
    s.check("entropy e-|e+", h_oracle, entropy(spectrum), 1e-9, Relation::approx,
            "oracle: entropy of the closed-form spectrum");
    s.check("is_product e-|e+", 0.0, is_product(pair, pair_cut) ? 1.0 : 0.0, 0.0,
            Relation::approx, "oracle: rank 2");

    s.at("position query e+=3");
    const auto rec = project(pair, kEp, "3");
    s.record("position query e+=3", rec.post_state, {kEm, kEp}, {pair_cut})
        .metric("probability", rec.probability);
    s.check("P(e+=3)", 1.0 / 3.0, rec.probability, 1e-10, Relation::approx,
            "oracle: squared amplitude of the (1,3) branch");
    s.check("P(e-=1 | e+=3)", 1.0, probability(rec.post_state, {{kEm, "1"}}), 1e-10,
            Relation::approx, "oracle: single surviving branch");

    s.at("t2 coupling");
    state = log.record(ci_full, annihilation("1", "3", "pair@t2"));
    state = log.record(state, detector_read(kDet2, "pair@t2"));
    s.at("t2 readout");
    const auto rec2 = project(state, kDet2, "READY");
    s.record("t2 readout", rec2.post_state, kMarginals, {cut})
        .metric("probability", rec2.probability);
    s.check("entropy e-|rest in critical interval", 0.1, cut_entropy(ci_full, cut), 0.0,
            Relation::greater, "oracle: Schmidt spectrum");
    s.check("entropy e-|rest after t2 readout", 1e-9, cut_entropy(rec2.post_state, cut),
            0.0, Relation::less, "oracle: rank-1 amplitude matrix");
    return s.finish();
}

} // namespace labelsim::scenarios
