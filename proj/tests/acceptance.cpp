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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// line fails.

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "labelsim/errors.hpp"
#include "labelsim/scenarios.hpp"
#include "labelsim/serialize.hpp"
#include "oracles.hpp"

using namespace labelsim;

namespace {

int failures = 0;

void line(const std::string &id, const std::string &what, bool ok, const std::string &detail) {
    std::printf("%s %-4s %s  [%s]\n", ok ? "PASS" : "FAIL", id.c_str(), what.c_str(),
                detail.c_str());
    failures += ok ? 0 : 1;
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct Timed {
    ScenarioReport report;
    double seconds;
};

Timed timed(const std::string &name, const ParamMap &p = {}, std::uint64_t seed = 0) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = run_scenario(name, p, seed);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    return {std::move(r), dt.count()};
}

double actual(const ScenarioReport &r, const std::string &check) {
    return r.check(check).actual;
}

// mirror (Z/X share two levels) x e- {L,R} x scatter {none,scattered}
double ghost_mirror_oracle() {
    oracle::Dense s({2, 2, 2});
    const double r = 1.0 / std::sqrt(2.0);
    s.at({0, 0, 0}) = r;
    s.at({0, 1, 0}) = r;
    s.hadamard(0, 0, 1);
    s.permute([](const oracle::Digits &d) {
        auto e = d;
        if (d[0] == 1 && d[1] == 0) {
            e[2] = 1 - d[2];
        }
        return e;
    });
    s.project([](const oracle::Digits &d) { return d[2] == 0; });
    s.hadamard(0, 0, 1);
    return s.weight([](const oracle::Digits &d) { return d[0] == 1; });
}

std::vector<double> hardy_svd_oracle() {
    Eigen::Matrix2d m;
    m << 1.0, 1.0, 0.0, 1.0;
    m /= std::sqrt(3.0);
    const Eigen::JacobiSVD<Eigen::Matrix2d> svd(m);
    const auto s = svd.singularValues();
    return {s(0) * s(0), s(1) * s(1)};
}

void criterion1() {
    const auto qo = timed("qo_core");
    const auto gm = timed("ghostly_mirror");
    const auto ac = timed("atom_collision");
    const auto hc = timed("hardy_ci");
    const double tol = 1e-10;
    bool ok = true;
    for (const auto *c : {"state after t1 readout", "state after t2 readout"}) {
        ok = ok && actual(qo.report, c) >= 1.0 - tol;
    }
    line("1a", "qo_core critical-interval and final states", ok,
         "fidelities " + num(actual(qo.report, "state after t1 readout")) + ", " +
             num(actual(qo.report, "state after t2 readout")));
    const double r6 = 1.0 / std::sqrt(6.0);
    const double coeff_err = std::max(
        {std::abs(actual(gm.report, "coefficient(Z+,L)") - r6),
         std::abs(actual(gm.report, "coefficient(Z+,R)") - 2.0 * r6),
         std::abs(actual(gm.report, "coefficient(Z-,L)") - r6),
         std::abs(actual(gm.report, "coefficient(Z-,R)"))});
    const bool gm_ok = actual(gm.report, "state in X basis") >= 1.0 - tol &&
                       actual(gm.report, "state after no-scatter post-selection") >= 1.0 - tol &&
                       actual(gm.report, "state in Z basis") >= 1.0 - tol &&
                       actual(gm.report, "final state") >= 1.0 - tol && coeff_err <= tol;
    line("1b", "ghostly_mirror branch states and coefficients", gm_ok,
         "max coefficient error " + num(coeff_err));
    double amp_err = 0.0;
    for (const auto *c : {"|amplitude(1',3'')|", "|amplitude(2',3')|", "|amplitude(1',4)|",
                          "|amplitude(2',4)|"}) {
        amp_err = std::max(amp_err, std::abs(actual(ac.report, c) - 0.5));
    }
    line("1c", "atom_collision four branches at amplitude 1/2",
         amp_err <= tol && actual(ac.report, "four-branch state") >= 1.0 - tol,
         "max amplitude error " + num(amp_err));
    line("1d", "hardy_ci critical-interval pair state",
         actual(hc.report, "critical-interval state") >= 1.0 - tol,
         "fidelity " + num(actual(hc.report, "critical-interval state")));
    const double slowest = std::max({qo.seconds, gm.seconds, ac.seconds, hc.seconds});
    line("1e", "state-reproduction runtimes in milliseconds", slowest < 0.1,
         "slowest " + num(slowest * 1e3) + " ms");
}

void criterion2() {
    const auto dense = oracle::annihilation_pipeline();
    const auto qo = run_scenario("qo_core");
    const double click1 = dense.weight([](const oracle::Digits &d) { return d[3] == 1; });
    const double click2 =
        dense.weight([](const oracle::Digits &d) { return d[3] == 0 && d[4] == 1; }) /
        dense.weight([](const oracle::Digits &d) { return d[3] == 0; });
    const double silence =
        dense.weight([](const oracle::Digits &d) { return d[3] == 0 && d[4] == 0; });
    const double tol = 1e-10;
    const double e1 = std::abs(actual(qo, "P(det1=CLICK)") - click1);
    const double e2 = std::abs(actual(qo, "P(det2=CLICK | det1=READY)") - click2);
    const double e3 = std::abs(actual(qo, "P(silence) sequential") - silence);
    line("2a", "qo_core P(click@t1)=1/4 vs dense oracle",
         e1 <= tol && std::abs(click1 - 0.25) <= tol, "oracle " + num(click1));
    line("2b", "qo_core P(click@t2 | silence@t1)=1/3 vs dense oracle",
         e2 <= tol && std::abs(click2 - 1.0 / 3.0) <= tol, "oracle " + num(click2));
    line("2c", "qo_core P(total silence)=1/2 vs dense oracle",
         e3 <= tol && std::abs(silence - 0.5) <= tol, "oracle " + num(silence));
    const auto gm = run_scenario("ghostly_mirror");
    const double z = ghost_mirror_oracle();
    line("2d", "ghostly_mirror P(Z-)=1/6 vs dense oracle",
         std::abs(actual(gm, "P(mirror=Z-)") - z) <= tol && std::abs(z - 1.0 / 6.0) <= tol,
         "oracle " + num(z) + ", run " + num(actual(gm, "P(mirror=Z-)")));
}

void criterion3() {
    struct Timeline {
        const char *scenario;
        const char *start;
        const char *middle;
        const char *end;
    };
    const std::vector<Timeline> timelines = {
        {"qo_core", "entropy e-|rest at source", "entropy e-|rest in critical interval",
         "entropy e-|rest after t2 readout"},
        {"ab_toy", "entropy e-|solenoid at source", "entropy e-|solenoid inside",
         "entropy e-|solenoid after exit"},
        {"oblivion_with_pointers", "entropy A2|rest at source",
         "entropy A2|rest after pointer coupling", "entropy A2|rest after reversal"}};
    for (std::size_t i = 0; i < timelines.size(); ++i) {
        const auto &t = timelines[i];
        const auto r = run_scenario(t.scenario);
        const double a = actual(r, t.start);
        const double b = actual(r, t.middle);
        const double c = actual(r, t.end);
        line(std::string("3") + static_cast<char>('a' + i),
             std::string(t.scenario) + " entropy timeline 0 -> >0.1 -> <1e-9",
             a <= 1e-9 && b > 0.1 && c < 1e-9, num(a) + " -> " + num(b) + " -> " + num(c));
    }
    const auto hc = run_scenario("hardy_ci");
    const auto svd = hardy_svd_oracle();
    const double err = std::max(std::abs(actual(hc, "Schmidt coefficient 1") - svd[0]),
                                std::abs(actual(hc, "Schmidt coefficient 2") - svd[1]));
    line("3d", "pair-state Schmidt spectrum vs SVD oracle", err <= 1e-9,
         "max error " + num(err));
}

void criterion4() {
    const auto qo = run_scenario("qo_core");
    const double e = actual(qo, "electron recombination");
    const double p = actual(qo, "positron recombination");
    line("4a", "electron recombination 1, positron 0.5",
         std::abs(e - 1.0) <= 1e-9 && std::abs(p - 0.5) <= 1e-9,
         "electron " + num(e) + ", positron " + num(p));
    const double rev = actual(qo, "full reversal before projection");
    line("4b", "full-log time reversal before projection", std::abs(rev - 1.0) <= 1e-9,
         "fidelity " + num(rev));
    const auto ob = run_scenario("oblivion_with_pointers");
    const double before = actual(ob, "full reversal before readout");
    const double after = actual(ob, "best reversal fidelity over readout outcomes");
    const double recomb = actual(ob, "mean A2 recombination after readout");
    line("4c", "reversal fails after pointer readout",
         std::abs(before - 1.0) <= 1e-9 && after < 1.0 && recomb < 1.0,
         "before " + num(before) + ", best after " + num(after) + ", recombination " +
             num(recomb));
}

void criterion5() {
    const double alpha = std::numbers::pi / 20.0;
    const auto zb = run_scenario("zeno_basic");
    const double survival = actual(zb, "with-detector survival (Born product)");
    const double c10 = std::pow(std::cos(alpha), 10.0);
    const double linear = 1.0 - std::numbers::pi * alpha / 4.0;
    line("5a", "with-detector survival equals cos^10(pi/20) to 1e-10",
         std::abs(survival - c10) <= 1e-10,
         "Born survival " + num(survival) + " = cos^20, target " + num(c10) +
             "; amplitude " + num(actual(zb, "surviving amplitude")));
    line("5b", "with-detector survival within 0.02 of 1 - pi alpha/4",
         std::abs(survival - linear) <= 0.02,
         "survival " + num(survival) + ", reference " + num(linear));
    const double left = std::abs(actual(zb, "no-detector left amplitude"));
    line("5c", "no-detector left amplitude after n' cycles < 1e-9", left < 1e-9,
         "amplitude " + num(left));
    const auto zc = run_scenario("zeno_counterfactual");
    const double up = actual(zc, "P(Z+ | photon left, no explosion)");
    line("5d", "counterfactual P(Z+) >= 0.99 at alpha = pi/40", up >= 0.99, num(up));
}

void criterion6() {
    const auto pe = run_scenario("partial_erasure");
    const auto &rounds = pe.check("no-click rounds to reach target");
    line("6a", "iterated no-click count matches closed form",
         rounds.actual == rounds.expected,
         "iterated " + num(rounds.actual) + ", closed form " + num(rounds.expected));
    const double f = actual(pe, "fidelity with initial superposition");
    const auto &succ = pe.check("erasure success probability");
    const double f99 = actual(pe, "99/1 erasure fidelity");
    const double s99 = actual(pe, "99/1 erasure success probability");
    line("6b", "erase_partial fidelity >= 1-1e-9, success 2|b|^2 +- 1e-9",
         f >= 1.0 - 1e-9 && std::abs(succ.actual - succ.expected) <= 1e-9 &&
             f99 >= 1.0 - 1e-9 && std::abs(s99 - 0.02) <= 1e-9,
         "fidelity " + num(f) + ", success " + num(succ.actual) + " vs " +
             num(succ.expected) + "; 99/1 " + num(f99) + ", " + num(s99));
}

void criterion7() {
    const auto we = timed("weak_ensemble");
    const auto &mean = we.report.check("ensemble mean reading / g");
    line("7a", "ensemble mean within 3 standard errors (sigma/g=10, N=1e4)",
         std::abs(mean.actual - mean.expected) <= mean.tolerance,
         "mean " + num(mean.actual) + ", <A> " + num(mean.expected) + ", 3SE " +
             num(mean.tolerance));
    const double f = actual(we.report, "single-shot state preservation");
    line("7b", "single-shot fidelity >= 0.999 at sigma/g=20", f >= 0.999, num(f));
    line("7c", "weak ensemble runtime < 10 s", we.seconds < 10.0, num(we.seconds) + " s");
}

void criterion8() {
    const auto qe = run_scenario("quantum_erasure", {{"points", 32.0}});
    const double raw = actual(qe, "unconditioned visibility");
    const double plus = actual(qe, "plus-conditioned visibility");
    const double minus = actual(qe, "minus-conditioned visibility");
    line("8", "visibility < 0.01 unconditioned, > 0.99 conditioned (32 phases)",
         raw < 0.01 && plus > 0.99 && minus > 0.99,
         num(raw) + ", " + num(plus) + ", " + num(minus));
}

void criterion9() {
    const auto dk = timed("dicke_tray_spoon", {{"grid_points", 4096.0}});
    for (const int ratio : {10, 20, 40}) {
        const std::string tag = "L/l=" + std::to_string(ratio);
        const double q = actual(dk.report, "momentum std ratio at " + tag);
        line("9", "momentum std ratio within 20% at " + tag,
             std::abs(q - ratio) <= 0.2 * ratio, num(q));
    }
    double parseval = actual(dk.report, "Parseval");
    double product = actual(dk.report, "uncertainty product");
    for (const int ratio : {10, 20, 40}) {
        const std::string tag = "L/l=" + std::to_string(ratio);
        parseval = std::max(parseval, actual(dk.report, "Parseval at " + tag));
        product = std::min(product, actual(dk.report, "uncertainty product at " + tag));
    }
    line("9", "Parseval and uncertainty on every constructed state",
         parseval <= 1e-9 && product >= 0.5 - 1e-3,
         "worst Parseval " + num(parseval) + ", smallest product " + num(product));
    line("9", "Dicke runtime < 5 s at n=4096", dk.seconds < 5.0, num(dk.seconds) + " s");
}

void criterion10() {
    bool same = true;
    std::string differing;
    for (const auto &info : list_scenarios()) {
        const auto a = run_scenario(info.name, {}, 1234);
        const auto b = run_scenario(info.name, {}, 1234);
        if (report_to_json(a) != report_to_json(b) || report_to_csv(a) != report_to_csv(b)) {
            same = false;
            differing += info.name + " ";
        }
    }
    line("10a", "byte-identical reports for a fixed seed", same,
         same ? "all scenarios" : differing);
    std::size_t compared = 0;
    double worst = 0.0;
    for (const auto &info : list_scenarios()) {
        const auto r = run_scenario(info.name);
        for (const auto &c : r.checks) {
            if (c.name.find("sequential vs joint") != std::string::npos ||
                c.name == "P(silence) joint") {
                ++compared;
                worst = std::max(worst, std::abs(c.actual - c.expected));
            }
        }
    }
    line("10b", "sequential projections equal joint Born weights", compared > 0 && worst <= 1e-10,
         std::to_string(compared) + " comparisons, worst " + num(worst));
}

} // namespace

int main() {
    try {
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
        criterion8();
        criterion9();
        criterion10();
    } catch (const Error &e) {
        std::printf("FAIL      aborted: %s\n", e.what());
        return 2;
    }
    std::printf("%d failing line(s)\n", failures);
    return failures == 0 ? 0 : 1;
}
