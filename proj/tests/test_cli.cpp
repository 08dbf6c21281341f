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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "labelsim/cli.hpp"

using namespace labelsim;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), "labelsim");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST(Cli, ListText) {
    const auto r = cli({"list"});
    EXPECT_EQ(r.code, kExitPass);
    EXPECT_NE(r.out.find("qo_core"), std::string::npos);
    EXPECT_NE(r.out.find("ab_toy"), std::string::npos);
}

TEST(Cli, ListJson) {
    const auto r = cli({"list", "--format", "json"});
    ASSERT_EQ(r.code, kExitPass);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 13u);
    EXPECT_EQ(j[0]["name"], "qo_core");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(cli({}).code, kExitUsage);
    EXPECT_EQ(cli({"run"}).code, kExitUsage);
    EXPECT_EQ(cli({"run", "qo_core", "--bogus"}).code, kExitUsage);
    EXPECT_EQ(cli({"run", "no_such"}).code, kExitUsage);
    EXPECT_EQ(cli({"run", "qo_core", "--format", "xml"}).code, kExitUsage);
    EXPECT_EQ(cli({"run", "dicke_tray_spoon", "--param", "l_spoon=0.0"}).code, kExitUsage);
    EXPECT_EQ(cli({"run", "ab_toy", "--param", "phi"}).code, kExitUsage);
    EXPECT_EQ(cli({"run", "ab_toy", "--param", "phi=abc"}).code, kExitUsage);
    EXPECT_EQ(cli({"sweep", "ab_toy", "phi", "0:1:0"}).code, kExitUsage);
    EXPECT_EQ(cli({"sweep", "ab_toy", "phi", ""}).code, kExitUsage);
    EXPECT_EQ(cli({"sweep", "ab_toy", "nope", "0:1:3"}).code, kExitUsage);
}

TEST(Cli, ExitCodesFollowChecks) {
    EXPECT_EQ(cli({"run", "qo_core"}).code, kExitPass);
    EXPECT_EQ(cli({"run", "zeno_basic"}).code, kExitCheckFailed);
    const auto impossible = cli({"run", "partial_erasure", "--param", "epsilon=1"});
    EXPECT_EQ(impossible.code, kExitImpossible);
    EXPECT_FALSE(impossible.err.empty());
}

TEST(Cli, JsonRoundTripsAndIsStable) {
    const auto a = cli({"run", "weak_ensemble", "--seed", "42"});
    const auto b = cli({"run", "weak_ensemble", "--seed", "42"});
    ASSERT_EQ(a.code, kExitPass);
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::ordered_json::parse(a.out);
    EXPECT_EQ(j.dump(2) + "\n", a.out);
    EXPECT_EQ(j["seed"], 42);
    EXPECT_EQ(j["scenario"], "weak_ensemble");
    EXPECT_TRUE(j["all_passed"].get<bool>());
}

TEST(Cli, CsvHasChecksTable) {
    const auto r = cli({"run", "ab_toy", "--format", "csv"});
    ASSERT_EQ(r.code, kExitPass);
    EXPECT_EQ(r.out.rfind("check,expected,actual,", 0), 0u) << r.out.substr(0, 80);
    EXPECT_NE(r.out.find("recombination"), std::string::npos);
}

TEST(Cli, OutFileWrittenAtomically) {
    const auto dir = std::filesystem::temp_directory_path() / "labelsim_cli_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const auto path = dir / "report.json";
    const auto r = cli({"run", "hardy_ci", "--out", path.string()});
    ASSERT_EQ(r.code, kExitPass);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(slurp(path), cli({"run", "hardy_ci"}).out);
    std::size_t entries = 0;
    for ([[maybe_unused]] const auto &e : std::filesystem::directory_iterator(dir)) {
        ++entries;
    }
    EXPECT_EQ(entries, 1u);
    std::filesystem::remove_all(dir);
}

TEST(Cli, SweepRows) {
    const auto r = cli({"sweep", "ab_toy", "phi", "0:3.14159:5", "--format", "csv"});
    ASSERT_EQ(r.code, kExitPass);
    std::size_t lines = 0;
    for (const char c : r.out) {
        lines += c == '\n';
    }
    EXPECT_EQ(lines, 6u);
    const auto list = cli({"sweep", "zeno_basic", "cycles", "5,10", "--format", "json"});
    const auto j = nlohmann::json::parse(list.out);
    EXPECT_EQ(j.size(), 2u);
}
