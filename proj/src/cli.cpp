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

#include "labelsim/cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "labelsim/errors.hpp"
#include "labelsim/scenarios.hpp"
#include "labelsim/serialize.hpp"

namespace labelsim {

namespace {

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

double parse_number(const std::string &text, const std::string &what) {
    double v = 0.0;
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    const auto res = std::from_chars(first, last, v);
    if (text.empty() || res.ec != std::errc() || res.ptr != last) {
        throw UsageError(what + ": '" + text + "' is not a number");
    }
    return v;
}

ParamMap parse_overrides(const std::vector<std::string> &pairs) {
    ParamMap out;
    for (const auto &kv : pairs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw UsageError("--param expects key=value, got '" + kv + "'");
        }
        out[kv.substr(0, eq)] = parse_number(kv.substr(eq + 1), "--param " + kv.substr(0, eq));
    }
    return out;
}

std::vector<double> parse_range(const std::string &spec) {
    std::vector<std::string> parts;
    std::string part;
    const char sep = spec.find(':') != std::string::npos ? ':' : ',';
    std::istringstream is(spec);
    while (std::getline(is, part, sep)) {
        parts.push_back(part);
    }
    if (sep == ',') {
        std::vector<double> values;
        for (const auto &p : parts) {
            values.push_back(parse_number(p, "sweep value"));
        }
        if (values.empty()) {
            throw UsageError("empty sweep range");
        }
        return values;
    }
    if (parts.size() != 3) {
        throw UsageError("sweep range must be start:stop:steps or a comma list");
    }
    const double start = parse_number(parts[0], "sweep start");
    const double stop = parse_number(parts[1], "sweep stop");
    const double steps = parse_number(parts[2], "sweep steps");
    if (!(steps >= 1.0) || steps != std::floor(steps) || steps > 1e6) {
        throw UsageError("sweep steps must be a positive integer");
    }
    const auto n = static_cast<std::size_t>(steps);
    std::vector<double> values;
    for (std::size_t i = 0; i < n; ++i) {
        values.push_back(n == 1 ? start
                                : start + (stop - start) * static_cast<double>(i) /
                                              static_cast<double>(n - 1));
    }
    return values;
}

/// Writes to stdout, or to `path` through a temporary file and a rename.
void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    const std::filesystem::path target(path);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw UsageError("cannot open '" + tmp.string() + "' for writing");
        }
        f << text;
        if (!f.flush()) {
            throw UsageError("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw UsageError("cannot move output into '" + path + "'");
    }
}

std::string sweep_csv(const std::string &param, const std::vector<double> &values,
                      const std::vector<ScenarioReport> &reports) {
    std::vector<std::string> names;
    for (const auto &r : reports) {
        for (const auto &c : r.checks) {
            if (std::find(names.begin(), names.end(), c.name) == names.end()) {
                names.push_back(c.name);
            }
        }
    }
    std::ostringstream os;
    os << csv_field(param);
    for (const auto &n : names) {
        os << ',' << csv_field(n);
    }
    os << ",all_passed\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        os << format_double(values[i]);
        for (const auto &n : names) {
            os << ',';
            for (const auto &c : reports[i].checks) {
                if (c.name == n) {
                    os << format_double(c.actual);
                    break;
                }
            }
        }
        os << ',' << (reports[i].all_passed() ? "true" : "false") << '\n';
    }
    return os.str();
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Labeled-register quantum scenario simulator", "labelsim"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string list_format = "text";
    std::string out_path;
    std::string scenario;
    std::string sweep_param;
    std::string sweep_range;
    std::vector<std::string> overrides;
    std::uint64_t seed = 0;

    auto *list = app.add_subcommand("list", "List scenarios and their parameters");
    list->add_option("--format", list_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--param", overrides, "Parameter override key=value (repeatable)");
        cmd->add_option("--seed", seed, "Random seed");
        cmd->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "Output file (default: standard output)");
    };
    auto *run = app.add_subcommand("run", "Run one scenario and emit its report");
    run->add_option("scenario", scenario, "Scenario name")->required();
    add_common(run);

    auto *sweep = app.add_subcommand("sweep", "Run a scenario over a parameter range");
    sweep->add_option("scenario", scenario, "Scenario name")->required();
    sweep->add_option("parameter", sweep_param, "Parameter to vary")->required();
    sweep->add_option("range", sweep_range, "start:stop:steps or v1,v2,...")->required();
    add_common(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*list) {
            const auto &catalog = list_scenarios();
            out << (list_format == "json" ? catalog_to_json(catalog)
                                          : catalog_to_text(catalog));
            return kExitPass;
        }
        const auto params = parse_overrides(overrides);
        const auto &info = scenario_info(scenario);
        resolve_params(info, params);

        if (*run) {
            const auto report = run_scenario(scenario, params, seed);
            emit(format == "csv" ? report_to_csv(report) : report_to_json(report),
                 out_path, out);
            return report.all_passed() ? kExitPass : kExitCheckFailed;
        }

        const auto *spec = info.find(sweep_param);
        if (spec == nullptr) {
            throw UsageError("scenario '" + scenario + "' has no parameter '" +
                             sweep_param + "'");
        }
        const auto values = parse_range(sweep_range);
        std::vector<ScenarioReport> reports;
        for (const double v : values) {
            spec->validate(v);
        }
        for (const double v : values) {
            auto point = params;
            point[sweep_param] = v;
            reports.push_back(run_scenario(scenario, point, seed));
        }
        std::string text;
        if (format == "csv") {
            text = sweep_csv(sweep_param, values, reports);
        } else {
            std::string joined = "[\n";
            for (std::size_t i = 0; i < reports.size(); ++i) {
                auto body = report_to_json(reports[i]);
                body.pop_back();
                joined += body + (i + 1 < reports.size() ? ",\n" : "\n");
            }
            text = joined + "]\n";
        }
        emit(text, out_path, out);
        const bool ok = std::all_of(reports.begin(), reports.end(),
                                    [](const ScenarioReport &r) { return r.all_passed(); });
        return ok ? kExitPass : kExitCheckFailed;
    } catch (const ImpossibleOutcome &e) {
        err << "impossible outcome: " << e.what() << "\n";
        return kExitImpossible;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace labelsim
