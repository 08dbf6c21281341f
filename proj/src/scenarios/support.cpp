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

#include "support.hpp"

#include <cmath>
#include <numbers>

#include "labelsim/errors.hpp"
#include "labelsim/random.hpp"

namespace labelsim::scenarios {

Script::Script(std::string name, ParamMap params, std::uint64_t seed) {
    report_.scenario = std::move(name);
    report_.params = std::move(params);
    report_.seed = seed;
}

double Script::param(std::string_view name) const {
    const auto it = report_.params.find(name);
    if (it == report_.params.end()) {
        throw ParameterError("scenario has no parameter '" + std::string(name) + "'");
    }
    return it->second;
}

std::uint64_t Script::stream(std::string_view purpose) const {
    return derive_seed(report_.seed, report_.scenario + "/" + std::string(purpose));
}

Step &Script::record(std::string label, const StateVector &state,
                     const std::vector<std::string> &marginals,
                     const std::vector<Bipartition> &cuts) {
    current_ = label;
    report_.steps.push_back(snapshot(std::move(label), state, marginals, cuts));
    return report_.steps.back();
}

Step &Script::mark(std::string label) {
    current_ = label;
    report_.steps.push_back(Step{std::move(label), {}, {}, {}, {}});
    return report_.steps.back();
}

const Check &Script::check(std::string name, double expected, double actual,
                           double tolerance, Relation relation,
                           std::string provenance) {
    report_.checks.push_back(make_check(std::move(name), expected, actual, tolerance,
                                        relation, std::move(provenance)));
    return report_.checks.back();
}

Series &Script::series(std::string name, std::vector<std::string> columns) {
    report_.series.push_back({std::move(name), std::move(columns), {}});
    return report_.series.back();
}

double cut_entropy(const StateVector &state, const Bipartition &cut) {
    return entropy(state, cut);
}

std::size_t zeno_cycles(double alpha, double cycles) {
    if (cycles >= 1.0) {
        return static_cast<std::size_t>(cycles);
    }
    const double exact = std::numbers::pi / (2.0 * alpha);
    const double nearest = std::round(exact);
    if (std::abs(exact - nearest) < 1e-9) {
        return static_cast<std::size_t>(nearest);
    }
    return static_cast<std::size_t>(std::ceil(exact));
}

} // namespace labelsim::scenarios
