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

#include "labelsim/serialize.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace labelsim {

namespace {

using Json = nlohmann::ordered_json;

Json number(double v) {
    if (!std::isfinite(v)) {
        return nullptr;
    }
    return v;
}

Json step_json(const Step &step) {
    Json amps = Json::array();
    for (const auto &a : step.amplitudes) {
        Json assignment = Json::object();
        for (const auto &[name, label] : a.assignment) {
            assignment[name] = label;
        }
        amps.push_back({{"assignment", assignment},
                        {"amplitude", {a.amplitude.real(), a.amplitude.imag()}}});
    }
    Json dists = Json::array();
    for (const auto &d : step.distributions) {
        Json probs = Json::object();
        for (const auto &[label, p] : d.probabilities) {
            probs[label] = number(p);
        }
        dists.push_back({{"subsystem", d.name}, {"probabilities", probs}});
    }
    Json entropies = Json::array();
    for (const auto &e : step.entropies) {
        entropies.push_back({{"cut", e.cut}, {"bits", number(e.bits)}});
    }
    Json metrics = Json::object();
    for (const auto &[name, v] : step.metrics) {
        metrics[name] = number(v);
    }
    return {{"label", step.label},
            {"amplitudes", amps},
            {"distributions", dists},
            {"entropies", entropies},
            {"metrics", metrics}};
}

} // namespace

std::string format_double(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return {buf, res.ptr};
}

std::string csv_field(const std::string &text) {
    if (text.find_first_of(",\"\n\r") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (const char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string report_to_json(const ScenarioReport &report) {
    Json params = Json::object();
    for (const auto &[k, v] : report.params) {
        params[k] = number(v);
    }
    Json steps = Json::array();
    for (const auto &s : report.steps) {
        steps.push_back(step_json(s));
    }
    Json checks = Json::array();
    for (const auto &c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"expected", number(c.expected)},
                          {"actual", number(c.actual)},
                          {"tolerance", number(c.tolerance)},
                          {"relation", to_string(c.relation)},
                          {"pass", c.pass},
                          {"provenance", c.provenance}});
    }
    Json series = Json::array();
    for (const auto &s : report.series) {
        Json rows = Json::array();
        for (const auto &row : s.rows) {
            Json r = Json::array();
            for (const double v : row) {
                r.push_back(number(v));
            }
            rows.push_back(std::move(r));
        }
        series.push_back({{"name", s.name}, {"columns", s.columns}, {"rows", rows}});
    }
    Json doc = {{"scenario", report.scenario},
                {"params", params},
                {"seed", report.seed},
                {"all_passed", report.all_passed()},
                {"steps", steps},
                {"checks", checks},
                {"series", series},
                {"notes", report.notes}};
    return doc.dump(2) + "\n";
}

std::string report_to_csv(const ScenarioReport &report) {
    std::ostringstream os;
    os << "check,expected,actual,tolerance,relation,pass,provenance\n";
    for (const auto &c : report.checks) {
        os << csv_field(c.name) << ',' << format_double(c.expected) << ','
           << format_double(c.actual) << ',' << format_double(c.tolerance) << ','
           << to_string(c.relation) << ',' << (c.pass ? "true" : "false") << ','
           << csv_field(c.provenance) << '\n';
    }
    for (const auto &s : report.series) {
        os << "\n# " << s.name << '\n';
        for (std::size_t i = 0; i < s.columns.size(); ++i) {
            os << (i ? "," : "") << csv_field(s.columns[i]);
        }
        os << '\n';
        for (const auto &row : s.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << (i ? "," : "") << format_double(row[i]);
            }
            os << '\n';
        }
    }
    return os.str();
}

std::string catalog_to_json(const std::vector<ScenarioInfo> &catalog) {
    Json out = Json::array();
    for (const auto &info : catalog) {
        Json params = Json::array();
        for (const auto &p : info.params) {
            params.push_back({{"name", p.name},
                              {"default", p.default_value},
                              {"min", p.min},
                              {"max", p.max},
                              {"min_open", p.min_open},
                              {"max_open", p.max_open},
                              {"integer", p.integer},
                              {"description", p.description}});
        }
        out.push_back({{"name", info.name}, {"summary", info.summary}, {"params", params}});
    }
    return out.dump(2) + "\n";
}

std::string catalog_to_text(const std::vector<ScenarioInfo> &catalog) {
    std::ostringstream os;
    for (const auto &info : catalog) {
        os << info.name << "\t";
        if (info.params.empty()) {
            os << "-";
        }
        for (std::size_t i = 0; i < info.params.size(); ++i) {
            os << (i ? "," : "") << info.params[i].name << "="
               << format_double(info.params[i].default_value);
        }
        os << "\t" << info.summary << "\n";
    }
    return os.str();
}

} // namespace labelsim
