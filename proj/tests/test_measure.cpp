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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "labelsim/errors.hpp"
#include "labelsim/measure.hpp"
#include "oracles.hpp"

using namespace labelsim;

namespace {

const SplitPorts kE{"src", "1", "2", "dump"};
const SplitPorts kP{"src", "3", "4", "dump"};

RegisterPtr pair_register() {
    return new_register({{"e-", {"src", "dump", "1", "2", "ann"}},
                         {"e+", {"src", "dump", "3", "4", "ann"}},
                         {"photons", {"none", "pair@t1", "pair@t2"}},
                         {"det1", {"READY", "CLICK"}},
                         {"det2", {"READY", "CLICK"}}});
}

StateVector after_t1_coupling() {
    const auto reg = pair_register();
    auto s = basis_state(reg, {{"e-", "src"}, {"e+", "src"}, {"photons", "none"},
                               {"det1", "READY"}, {"det2", "READY"}});
    s = apply_split(apply_split(s, "e-", kE), "e+", kP);
    s = controlled_relabel(s, {},
                           {{{{"e-", "2"}, {"e+", "3"}, {"photons", "none"}},
                             {{"e-", "ann"}, {"e+", "ann"}, {"photons", "pair@t1"}}}});
    return controlled_relabel(s, {{"photons", "pair@t1"}},
                              {{{{"det1", "READY"}}, {{"det1", "CLICK"}}}});
}

StateVector after_t2_coupling(const StateVector &ci) {
    auto s = controlled_relabel(ci, {},
                                {{{{"e-", "1"}, {"e+", "3"}, {"photons", "none"}},
                                  {{"e-", "ann"}, {"e+", "ann"}, {"photons", "pair@t2"}}}});
    return controlled_relabel(s, {{"photons", "pair@t2"}},
                              {{{{"det2", "READY"}}, {{"det2", "CLICK"}}}});
}

double lookup(const std::vector<std::pair<std::string, double>> &d, const std::string &k) {
    for (const auto &[l, p] : d) {
        if (l == k) {
            return p;
        }
    }
    return -1.0;
}

StateVector spin(double p_up, double phase = 0.0) {
    const auto reg = new_register({{"s", {"up", "down"}}});
    return superpose(reg,
                     {{std::sqrt(p_up), {{"s", "up"}}},
                      {std::polar(std::sqrt(1.0 - p_up), phase), {{"s", "down"}}}},
                     false);
}

} // namespace

TEST(Born, DetectorMarginalsAfterCouplings) {
    const auto t1 = after_t1_coupling();
    const auto d1 = born_probabilities(t1, "det1");
    EXPECT_NEAR(lookup(d1, "CLICK"), 0.25, 1e-12);
    EXPECT_NEAR(lookup(d1, "READY"), 0.75, 1e-12);
    const auto ci = project(t1, "det1", "READY");
    EXPECT_NEAR(ci.probability, 0.75, 1e-12);
    const auto d2 = born_probabilities(after_t2_coupling(ci.post_state), "det2");
    EXPECT_NEAR(lookup(d2, "CLICK"), 1.0 / 3.0, 1e-12);
}

TEST(Born, DistributionsSumToOne) {
    const auto t1 = after_t1_coupling();
    for (const auto &spec : t1.reg().subsystems()) {
        const auto d = born_probabilities(t1, spec.name);
        double total = 0.0;
        for (const auto &[l, p] : d) {
            total += p;
        }
        EXPECT_NEAR(total, 1.0, 1e-10);
    }
    EXPECT_THROW(born_probabilities(t1, "nope"), LabelError);
}

TEST(Born, JointWeightMatchesDenseOracle) {
    const auto dense = oracle::annihilation_pipeline();
    const double silent = dense.weight([](const oracle::Digits &d) { return d[3] == 0 && d[4] == 0; });
    const auto ci = project(after_t1_coupling(), "det1", "READY");
    const auto end = project(after_t2_coupling(ci.post_state), "det2", "READY");
    EXPECT_NEAR(ci.probability * end.probability, silent, 1e-12);
    EXPECT_NEAR(silent, 0.5, 1e-12);
}

TEST(Project, ZeroProbabilityIsAnError) {
    const auto t1 = after_t1_coupling();
    EXPECT_THROW(project(t1, "det2", "CLICK"), ImpossibleOutcome);
    EXPECT_THROW(postselect(t1, {{"det1", "CLICK"}, {"photons", "none"}}), ImpossibleOutcome);
}

TEST(Project, Idempotent) {
    const auto first = project(after_t1_coupling(), "det1", "READY");
    const auto second = project(first.post_state, "det1", "READY");
    EXPECT_NEAR(second.probability, 1.0, 1e-12);
    EXPECT_NEAR(fidelity(first.post_state, second.post_state), 1.0, 1e-12);
}

TEST(Postselect, FullSupportIsTrivial) {
    const auto t1 = after_t1_coupling();
    const auto r = postselect(t1, {{"det2", "READY"}});
    EXPECT_NEAR(r.probability, 1.0, 1e-12);
    EXPECT_NEAR(fidelity(r.post_state, t1), 1.0, 1e-12);
}

TEST(SampleMeasure, DeterministicAndFrequencyMatchesBorn) {
    const auto ci = project(after_t1_coupling(), "det1", "READY").post_state;
    const auto t2 = after_t2_coupling(ci);
    const auto a = sample_measure(t2, "det2", 99);
    const auto b = sample_measure(t2, "det2", 99);
    EXPECT_EQ(a.outcome, b.outcome);
    EXPECT_EQ(a.probability, b.probability);
    int clicks = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        clicks += sample_measure(t2, "det2", static_cast<std::uint64_t>(i)).outcome == "CLICK";
    }
    EXPECT_NEAR(static_cast<double>(clicks) / draws, 1.0 / 3.0, 0.01);
}

TEST(SampleMeasure, DegenerateDistribution) {
    const auto s = spin(1.0);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        EXPECT_EQ(sample_measure(s, "s", seed).outcome, "up");
    }
}

TEST(Partial, ReducesToProjectiveAndIdentity) {
    const auto s = spin(0.5, 0.3);
    const auto full = partial_project(s, "s", "down", 1.0, false);
    EXPECT_NEAR(full.probability, 0.5, 1e-12);
    EXPECT_NEAR(probability(full.post_state, {{"s", "up"}}), 1.0, 1e-12);
    const auto none = partial_measure(s, "s", "down", 0.0, 5);
    EXPECT_EQ(none.outcome, "no-click");
    EXPECT_NEAR(none.probability, 1.0, 1e-12);
    EXPECT_NEAR(fidelity(none.post_state, s), 1.0, 1e-12);
}

TEST(Partial, OutcomesAreComplete) {
    for (const double eps : {0.1, 0.35, 0.8}) {
        for (const double p : {0.2, 0.5, 0.9}) {
            const auto s = spin(p);
            const double click = partial_project(s, "s", "down", eps, true).probability;
            const double quiet = partial_project(s, "s", "down", eps, false).probability;
            EXPECT_NEAR(click + quiet, 1.0, 1e-10);
            EXPECT_NEAR(click, eps * (1.0 - p), 1e-12);
        }
    }
}

TEST(Partial, RepeatedNoClickRaisesComplement) {
    auto s = spin(0.5);
    double last = 0.5;
    std::size_t rounds = 0;
    while (probability(s, {{"s", "up"}}) < 0.99) {
        s = partial_project(s, "s", "down", 0.5, false).post_state;
        const double now = probability(s, {{"s", "up"}});
        EXPECT_GT(now, last);
        last = now;
        ++rounds;
    }
    EXPECT_EQ(rounds, no_click_count(0.5, 0.5, 0.99));
    EXPECT_EQ(rounds, 7u);
}

TEST(Erasure, EqualBranchesNeedNothing) {
    const auto s = spin(0.5, 1.1);
    const auto e = erase_partial(s, "s", {"up", "down"});
    EXPECT_NEAR(e.epsilon, 0.0, 1e-12);
    EXPECT_NEAR(e.success_probability, 1.0, 1e-12);
    EXPECT_NEAR(fidelity(e.post_state, s), 1.0, 1e-12);
}

TEST(Erasure, NinetyNineToOne) {
    const double theta = 0.77;
    const auto e = erase_partial(spin(0.99, theta), "s", {"up", "down"});
    EXPECT_NEAR(e.epsilon, 1.0 - 0.01 / 0.99, 1e-12);
    EXPECT_NEAR(e.success_probability, 0.02, 1e-12);
    EXPECT_NEAR(fidelity(e.post_state, spin(0.5, theta)), 1.0, 1e-12);
    const auto up = amplitude(e.post_state, {{"s", "up"}});
    const auto down = amplitude(e.post_state, {{"s", "down"}});
    EXPECT_NEAR(std::abs(up), std::abs(down), 1e-10);
    EXPECT_NEAR(std::arg(down / up), theta, 1e-12);
}

TEST(Erasure, CrossCheckedByIteration) {
    // erase_partial's single round equals the composition of smaller rounds
    // with the same total no-click operator
    const auto s = spin(0.99);
    const auto e = erase_partial(s, "s", {"up", "down"});
    const double per_round = 1.0 - std::sqrt(1.0 - e.epsilon);
    auto it = s;
    double p = 1.0;
    for (int k = 0; k < 2; ++k) {
        const auto r = partial_project(it, "s", "up", per_round, false);
        it = r.post_state;
        p *= r.probability;
    }
    EXPECT_NEAR(p, e.success_probability, 1e-12);
    EXPECT_NEAR(fidelity(it, e.post_state), 1.0, 1e-12);
}

TEST(Erasure, Failures) {
    EXPECT_THROW(erase_partial(spin(1.0), "s", {"up", "down"}), ImpossibleOutcome);
    EXPECT_THROW(erase_partial(spin(0.2), "s", {"up", "down"}), OperationError);
}

TEST(Weak, ZeroCouplingLeavesEverythingAlone) {
    const auto s = spin(0.5);
    WeakParams p;
    p.coupling = 0.0;
    const auto joint = weak_measure(s, "s", {{"up", 1.0}, {"down", -1.0}}, p);
    EXPECT_NEAR(mean_readout_fidelity(joint, s), 1.0, 1e-10);
    const auto r = read_pointer(joint, 3);
    EXPECT_NEAR(fidelity(r.post_state, s), 1.0, 1e-12);
}

TEST(Weak, FidelityMatchesShiftedGaussianOverlap) {
    const auto s = spin(0.5);
    for (const double sigma : {10.0, 20.0, 40.0}) {
        WeakParams p;
        p.sigma = sigma;
        const auto joint = weak_measure(s, "s", {{"up", 1.0}, {"down", -1.0}}, p);
        const double oracle = 0.5 * (1.0 + std::exp(-1.0 / (2.0 * sigma * sigma)));
        EXPECT_NEAR(mean_readout_fidelity(joint, s), oracle, 1e-9);
    }
}

TEST(Weak, EnsembleMeanWithinStatisticalError) {
    WeakParams p;
    const auto joint = weak_measure(spin(0.5), "s", {{"up", 1.0}, {"down", -1.0}}, p);
    const auto r = sample_readings(joint, 10000, 17);
    const double mean = std::accumulate(r.begin(), r.end(), 0.0) / r.size();
    const double se = std::sqrt(100.0 + 1.0) / std::sqrt(10000.0);
    EXPECT_LT(std::abs(mean), 3.0 * se);
}

TEST(Weak, StrongLimitReproducesProjectiveStatistics) {
    // sigma / g = 0.1: readings separate the eigenvalues cleanly
    WeakParams p;
    p.sigma = 8.0;
    p.coupling = 80.0;
    const auto s = spin(0.3);
    const auto joint = weak_measure(s, "s", {{"up", 1.0}, {"down", -1.0}}, p);
    const auto r = sample_readings(joint, 20000, 5);
    const auto ups = std::count_if(r.begin(), r.end(), [](double x) { return x > 0.0; });
    EXPECT_NEAR(static_cast<double>(ups) / r.size(), 0.3, 4.0 * std::sqrt(0.21 / 20000.0));
    const auto one = read_pointer(joint, 8);
    const double pu = probability(one.post_state, {{"s", "up"}});
    EXPECT_TRUE(pu > 1.0 - 1e-9 || pu < 1e-9);
}

TEST(Weak, UnderResolvedPointerRejected) {
    WeakParams p;
    p.sigma = 4.0;
    EXPECT_THROW(weak_measure(spin(0.5), "s", {{"up", 1.0}, {"down", -1.0}}, p), GridError);
    WeakParams q;
    q.coupling = 600.0;
    EXPECT_THROW(weak_measure(spin(0.5), "s", {{"up", 1.0}, {"down", -1.0}}, q), GridError);
    EXPECT_THROW(weak_measure(spin(0.5), "s", {{"up", 1.0}}, WeakParams{}), ParameterError);
}
