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

#include "labelsim/measure.hpp"

#include <cmath>
#include <sstream>

#include "labelsim/errors.hpp"
#include "labelsim/random.hpp"

namespace labelsim {

namespace {

StateVector filtered(const StateVector &state, const Pattern &pattern, bool keep) {
    StateVector::Amplitudes out;
    for (const auto &[joint, amp] : state.amplitudes()) {
        if (pattern.matches(state.reg(), joint) == keep) {
            out.emplace(joint, amp);
        }
    }
    return {state.register_ptr(), std::move(out)};
}

MeasurementRecord finish(const StateVector &state, StateVector kept,
                         std::string subsystem, std::string outcome) {
    const double total = state.norm_squared();
    const double p = kept.norm_squared() / total;
    if (p <= kProbabilityFloor) {
        throw ImpossibleOutcome("outcome " + subsystem + "=" + outcome +
                                " has zero probability");
    }
    return {std::move(subsystem), std::move(outcome), p, kept.normalized()};
}

void check_epsilon(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw ParameterError("partial-measurement strength must lie in [0, 1]");
    }
}

} // namespace

std::vector<std::pair<std::string, double>>
born_probabilities(const StateVector &state, const std::string &subsystem) {
    const auto &reg = state.reg();
    const auto sub = reg.index_of(subsystem);
    std::vector<double> weights(reg.subsystem_dimension(sub), 0.0);
    double total = 0.0;
    for (const auto &[joint, amp] : state.amplitudes()) {
        weights[reg.digit(joint, sub)] += std::norm(amp);
        total += std::norm(amp);
    }
    std::vector<std::pair<std::string, double>> out;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        out.emplace_back(reg.label(sub, i), weights[i] / total);
    }
    return out;
}

double probability(const StateVector &state, const Assignment &condition) {
    const Pattern pattern(state.reg(), condition);
    double hit = 0.0;
    for (const auto &[joint, amp] : state.amplitudes()) {
        if (pattern.matches(state.reg(), joint)) {
            hit += std::norm(amp);
        }
    }
    return hit / state.norm_squared();
}

MeasurementRecord project(const StateVector &state, const std::string &subsystem,
                          const std::string &label) {
    const Pattern pattern(state.reg(), Assignment{{subsystem, label}});
    return finish(state, filtered(state, pattern, true), subsystem, label);
}

MeasurementRecord project_complement(const StateVector &state,
                                     const std::string &subsystem,
                                     const std::string &label) {
    const Pattern pattern(state.reg(), Assignment{{subsystem, label}});
    return finish(state, filtered(state, pattern, false), subsystem,
                  "not " + label);
}

MeasurementRecord postselect(const StateVector &state, const Assignment &condition) {
    const auto &reg = state.reg();
    const Pattern pattern(reg, condition);
    std::string names;
    std::string labels;
    for (const auto &[sub, label] : pattern.digits()) {
        if (!names.empty()) {
            names += ",";
            labels += ",";
        }
        names += reg.subsystem(sub).name;
        labels += reg.label(sub, label);
    }
    return finish(state, filtered(state, pattern, true), names, labels);
}

MeasurementRecord sample_measure(const StateVector &state,
                                 const std::string &subsystem, std::uint64_t seed) {
    const auto dist = born_probabilities(state, subsystem);
    std::vector<double> weights;
    for (const auto &[label, p] : dist) {
        weights.push_back(p > kProbabilityFloor ? p : 0.0);
    }
    Rng rng(seed);
    return project(state, subsystem, dist[rng.pick(weights)].first);
}

MeasurementRecord partial_project(const StateVector &state,
                                  const std::string &subsystem,
                                  const std::string &monitored, double epsilon,
                                  bool click) {
    check_epsilon(epsilon);
    const auto &reg = state.reg();
    const auto sub = reg.index_of(subsystem);
    const auto target = reg.label_index(sub, monitored);
    const double on = click ? std::sqrt(epsilon) : std::sqrt(1.0 - epsilon);
    const double off = click ? 0.0 : 1.0;
    StateVector::Amplitudes out;
    for (const auto &[joint, amp] : state.amplitudes()) {
        const double k = reg.digit(joint, sub) == target ? on : off;
        if (k != 0.0) {
            out.emplace(joint, k * amp);
        }
    }
    return finish(state, StateVector(state.register_ptr(), std::move(out)),
                  subsystem, std::string(click ? kClick : kNoClick));
}

MeasurementRecord partial_measure(const StateVector &state,
                                  const std::string &subsystem,
                                  const std::string &monitored, double epsilon,
                                  std::uint64_t seed) {
    check_epsilon(epsilon);
    const double p_click = epsilon * probability(state, {{subsystem, monitored}});
    Rng rng(seed);
    const bool click =
        p_click > kProbabilityFloor && rng.uniform() < p_click;
    return partial_project(state, subsystem, monitored, epsilon, click);
}

ErasureResult erase_partial(const StateVector &state, const std::string &subsystem,
                            const LabelPair &pair) {
    const double a2 = probability(state, {{subsystem, pair.first}});
    const double b2 = probability(state, {{subsystem, pair.second}});
    if (b2 <= kProbabilityFloor) {
        throw ImpossibleOutcome("erasure impossible: label '" + pair.second +
                                "' carries no amplitude");
    }
    if (a2 + kNormTolerance < b2) {
        throw OperationError("erasure pair is ordered (boosted, suppressed) but '" +
                             pair.first + "' is the weaker branch");
    }
    const double eps = std::max(0.0, 1.0 - b2 / a2);
    auto rec = partial_project(state, subsystem, pair.first, eps, false);
    return {eps, rec.probability, std::move(rec.post_state)};
}

std::size_t no_click_count(double p_monitored, double epsilon, double target) {
    check_epsilon(epsilon);
    if (!(p_monitored > 0.0 && p_monitored < 1.0) || !(target > 0.0 && target < 1.0)) {
        throw ParameterError("branch weight and target must lie in (0, 1)");
    }
    const double q = 1.0 - p_monitored;
    if (q >= target) {
        return 0;
    }
    if (epsilon >= 1.0) {
        return 1;
    }
    if (epsilon <= 0.0) {
        throw ParameterError("no-click outcomes never bias the state at epsilon 0");
    }
    // q / (q + p (1-ε)^k) >= t  <=>  (1-ε)^k <= q (1-t) / (p t)
    const double bound = q * (1.0 - target) / (p_monitored * target);
    const double k = std::log(bound) / std::log(1.0 - epsilon);
    auto n = static_cast<std::size_t>(std::ceil(k - 1e-12));
    return n;
}

} // namespace labelsim
