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
 * JSON and CSV encodings of scenario reports and the scenario catalog.
 */
#pragma once

#include <string>
#include <vector>

#include "labelsim/report.hpp"
#include "labelsim/scenarios.hpp"

namespace labelsim {

/// Report as JSON text. Numbers use shortest round-trip formatting; key order
/// is fixed, so equal reports serialize to identical bytes.
std::string report_to_json(const ScenarioReport &report);

/// Checks table, then each series as its own block after a blank line.
std::string report_to_csv(const ScenarioReport &report);

std::string catalog_to_json(const std::vector<ScenarioInfo> &catalog);
std::string catalog_to_text(const std::vector<ScenarioInfo> &catalog);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

/// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(const std::string &text);

} // namespace labelsim
