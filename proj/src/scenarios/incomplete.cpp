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
#include <complex>

#include "labelsim/errors.hpp"
#include "support.hpp"

namespace labelsim::scenarios {

namespace {

const std::string kSpin = "spin";
constexpr std::size_t kMaxRounds = 1000000;

RegisterPtr spin_register() { return new_register({{kSpin, {"up", "down"}}}); }

StateVector spin_state(const RegisterPtr &reg, double p_up, double phase) {
    return superpose(reg,
                     {{std::sqrt(p_up), {{kSpin, "up"}}},
                      {std::polar(std::sqrt(1.0 - p_up), phase), {{kSpin, "down"}}}},
                     false);
}

double relative_phase(const StateVector &st) {
    return std::arg(amplitude(st, {{kSpin, "down"}}) /
                    amplitude(st, {{kSpin, "up"}}));
}

} // namespace

ScenarioReport partial_erasure(Script &s) {
    const double eps = s.param("epsilon");
    const double target = s.param("target");
    const double phase = s.param("phase");
    const auto reg = spin_register();
    const auto initial = spin_state(reg, 0.5, phase);
    s.record("initial superposition", initial, {kSpin});

    auto state = initial;
    std::size_t rounds = 0;
    double p_all = 1.0;
    bool monotone = true;
    double previous = probability(state, {{kSpin, "up"}});
    auto &table = s.series("no-click rounds", {"round", "P(up)", "no_click_probability"});
    table.rows.push_back({0.0, previous, 1.0});
    while (probability(state, {{kSpin, "up"}}) < target) {
        if (++rounds > kMaxRounds) {
            throw ParameterError("target not reached within the round limit");
        }
        s.at("no-click round " + std::to_string(rounds));
        const auto rec = partial_project(state, kSpin, "down", eps, false);
        state = rec.post_state;
        p_all *= rec.probability;
        const double p = probability(state, {{kSpin, "up"}});
        monotone = monotone && p > previous;
        previous = p;
        table.rows.push_back({static_cast<double>(rounds), p, rec.probability});
    }
    s.record("biased", state, {kSpin})
        .metric("rounds", static_cast<double>(rounds))
        .metric("P(all no-click)", p_all);
    s.check("no-click rounds to reach target",
            static_cast<double>(no_click_count(0.5, eps, target)),
            static_cast<double>(rounds), 0.0, Relation::approx,
            "oracle: closed-form product of no-click operators");
    s.check("P(up) rises with every no-click", 1.0, monotone ? 1.0 : 0.0, 0.0,
            Relation::approx, "no-click operator shrinks the monitored branch");

    const double a2 = probability(state, {{kSpin, "up"}});
    const double b2 = 1.0 - a2;
    s.at("erasure");
    const auto erased = erase_partial(state, kSpin, {"up", "down"});
    s.record("erasure", erased.post_state, {kSpin})
        .metric("epsilon'", erased.epsilon)
        .metric("success probability", erased.success_probability);
    s.check("erasure strength", 1.0 - b2 / a2, erased.epsilon, 1e-9, Relation::approx,
            "oracle: sqrt(1 - eps') |a| = |b|");
    s.check("erasure success probability", 2.0 * b2, erased.success_probability, 1e-9,
            Relation::approx, "oracle: 2|b|^2");
    s.check("fidelity with initial superposition", 1.0,
            fidelity(erased.post_state, initial), 1e-9, Relation::approx,
            "oracle: equal magnitudes with the original phase");
    s.check("relative phase preserved", 0.0,
            std::abs(std::remainder(relative_phase(erased.post_state) - phase,
                                    2.0 * std::acos(-1.0))),
            1e-9, Relation::approx, "oracle: diagonal 2x2 operators");

    s.at("erasure of a 99/1 state");
    const auto skewed = spin_state(reg, 0.99, phase);
    const auto canonical = erase_partial(skewed, kSpin, {"up", "down"});
    s.record("erasure of a 99/1 state", canonical.post_state, {kSpin})
        .metric("epsilon'", canonical.epsilon)
        .metric("success probability", canonical.success_probability);
    s.check("99/1 erasure strength", 1.0 - 0.01 / 0.99, canonical.epsilon, 1e-9,
            Relation::approx, "oracle: 1 - |b|^2/|a|^2");
    s.check("99/1 erasure success probability", 0.02, canonical.success_probability, 1e-9,
            Relation::approx, "oracle: 2|b|^2");
    s.check("99/1 erasure fidelity", 1.0, fidelity(canonical.post_state, initial), 1e-9,
            Relation::approx, "oracle: equal magnitudes with the original phase");
    return s.finish();
}

ScenarioReport weak_ensemble(Script &s) {
    const double g = s.param("coupling");
    const double sigma = s.param("sigma");
    const auto count = static_cast<std::size_t>(s.param("ensemble"));
    const double p_up = s.param("p_up");
    const double sigma_quiet = s.param("sigma_fidelity");
    const auto reg = spin_register();
    const auto pre = spin_state(reg, p_up, 0.0);
    const std::map<std::string, double, std::less<>> observable = {{"up", 1.0},
                                                                   {"down", -1.0}};
    const double expectation = 2.0 * p_up - 1.0;
    s.record("system", pre, {kSpin}).metric("<A>", expectation);

    s.at("ensemble");
    WeakParams params;
    params.coupling = g;
    params.sigma = sigma;
    const auto joint = weak_measure(pre, kSpin, observable, params);
    const auto readings = sample_readings(joint, count, s.stream("ensemble"));
    double sum = 0.0;
    auto &table = s.series("running mean", {"shots", "mean_reading_over_g"});
    const std::size_t stride = std::max<std::size_t>(1, count / 20);
    for (std::size_t i = 0; i < readings.size(); ++i) {
        sum += readings[i];
        if ((i + 1) % stride == 0 || i + 1 == readings.size()) {
            table.rows.push_back({static_cast<double>(i + 1),
                                  sum / static_cast<double>(i + 1) / g});
        }
    }
    const double mean = sum / static_cast<double>(count) / g;
    const double spread = std::sqrt(sigma * sigma + g * g * (1.0 - expectation * expectation));
    const double se = spread / (g * std::sqrt(static_cast<double>(count)));
    s.record("ensemble", pre, {kSpin})
        .metric("mean reading / g", mean)
        .metric("standard error", se);
    s.check("ensemble mean reading / g", expectation, mean, 3.0 * se, Relation::approx,
            "oracle: Gaussian-mixture mean, 3 standard errors");

    s.at("single-shot disturbance");
    WeakParams quiet = params;
    quiet.sigma = sigma_quiet;
    const auto gentle = weak_measure(pre, kSpin, observable, quiet);
    const double f = mean_readout_fidelity(gentle, pre);
    const auto sampled = read_pointer(gentle, s.stream("single shot"));
    s.record("single-shot disturbance", sampled.post_state, {kSpin})
        .metric("reading", sampled.reading)
        .metric("mean fidelity", f);
    const double overlap = std::exp(-g * g / (2.0 * sigma_quiet * sigma_quiet));
    const double q = 1.0 - p_up;
    s.check("outcome-averaged fidelity", p_up * p_up + q * q + 2.0 * p_up * q * overlap, f,
            1e-6, Relation::approx, "oracle: overlap of shifted Gaussian pointers");
    s.check("single-shot state preservation", 0.999, f, 0.0, Relation::at_least,
            "oracle: overlap of shifted Gaussian pointers");
    return s.finish();
}

} // namespace labelsim::scenarios
