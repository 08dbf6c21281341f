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

/**
 * @file
 * Catalog of scripted scenarios and the runner that turns a name, parameter
 * overrides and a seed into a ScenarioReport.
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "labelsim/report.hpp"

namespace labelsim {

struct ParamSpec {
    std::string name;
    double default_value = 0.0;
    double min = 0.0;
    double max = 0.0;
    bool min_open = false;
    bool max_open = false;
    bool integer = false;
    std::string description;

    /// Throws ParameterError when `value` is outside the range or not an
    /// integer for integer parameters.
    void validate(double value) const;
};

struct ScenarioInfo {
    std::string name;
    std::string summary;
    std::vector<ParamSpec> params;

    [[nodiscard]] const ParamSpec *find(std::string_view param) const;
};

/// Every scenario, in a fixed order.
const std::vector<ScenarioInfo> &list_scenarios();

/// Throws ParameterError for unknown names.
const ScenarioInfo &scenario_info(std::string_view name);

/// Defaults overlaid with validated overrides. Unknown keys throw
/// ParameterError.
ParamMap resolve_params(const ScenarioInfo &info, const ParamMap &overrides);

/// Runs one scenario. Unknown names and out-of-range parameters throw
/// ParameterError; an impossible post-selection throws ImpossibleOutcome whose
/// message names the step.
ScenarioReport run_scenario(std::string_view name, const ParamMap &overrides = {},
                            std::uint64_t seed = 0);

} // namespace labelsim
