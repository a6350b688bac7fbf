// Copyright 2026 The Erasure Threshold Authors
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

#include "erasure/cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "erasure/markov.h"

using namespace erasure;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    auto r = run(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out);
}

std::vector<std::vector<std::string>> csv_rows(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        if (!line.empty() && line.back() == ',') {
            cells.emplace_back();
        }
        rows.push_back(cells);
    }
    return rows;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / ("erasure_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST(ParseGrid, forms) {
    EXPECT_EQ(parse_grid("0.01,0.05,0.1"), (std::vector<Rational>{Rational(1, 100), Rational(1, 20), Rational(1, 10)}));
    EXPECT_EQ(parse_grid("0:0.1:0.05"), (std::vector<Rational>{0, Rational(1, 20), Rational(1, 10)}));
    EXPECT_EQ(parse_grid("0"), std::vector<Rational>{0});
    EXPECT_THROW(parse_grid("0:1"), std::invalid_argument);
    EXPECT_THROW(parse_grid("0:1:0"), std::invalid_argument);
    EXPECT_THROW(parse_grid("1:0:0.1"), std::invalid_argument);
    EXPECT_THROW(parse_grid(""), std::invalid_argument);
    EXPECT_THROW(parse_grid("0.1,x"), std::invalid_argument);
}

TEST(CliClassify, reports) {
    auto j = run_json({"classify", "MMM...."});
    EXPECT_EQ(j["correctability"], "Correctable");
    EXPECT_EQ(j["weight"], 3);
    EXPECT_EQ(j["class"]["label"], "3");
    EXPECT_EQ(j["model"], "ideal");

    auto zero = run_json({"classify", "......."});
    EXPECT_EQ(zero["weight"], 0);
    EXPECT_EQ(zero["correctability"], "Done");

    auto bad = run_json({"classify", "EEEE..."});
    EXPECT_EQ(bad["correctability"], "ProcedureFail");
    EXPECT_EQ(bad["model"], "lossy");
    EXPECT_EQ(bad["class"]["label"], "fail");

    auto line = run_json({"classify", "....MMM"});
    EXPECT_EQ(line["correctability"], "ProcedureFail");
    EXPECT_EQ(line["supports_logical"], true);

    auto empty_lossy = run_json({"classify", ".......", "--model", "lossy"});
    EXPECT_EQ(empty_lossy["class"]["label"], "[0,0]");
}

TEST(CliClassify, parse_errors) {
    for (const char *bad : {"MM", "........", "..X....", "M.Z...."}) {
        auto r = run({"classify", bad});
        EXPECT_EQ(r.code, 2) << bad;
        EXPECT_TRUE(r.out.empty());
        auto e = json::parse(r.err);
        EXPECT_TRUE(e.contains("error"));
        EXPECT_TRUE(e.contains("message"));
    }
    EXPECT_EQ(run({"classify", "Z......", "--model", "ideal"}).code, 2);
}

TEST(CliUsage, errors_are_json) {
    for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
             {}, {"frobnicate"}, {"threshold", "--model", "quantum"}, {"series", "--order", "8"},
             {"concat", "--eps", "0.1", "--levels", "11"}, {"sweep", "--eps", "0.6"},
             {"classes", "--format", "xml"}, {"mc", "--eps", "0.1", "--delta", "0.1"}}) {
        auto r = run(args);
        EXPECT_NE(r.code, 0);
        EXPECT_NO_THROW(json::parse(r.err)) << r.err;
    }
    auto help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("threshold"), std::string::npos);
}

TEST(CliThreshold, measurement_flags_rounded_published_value) {
    auto j = run_json({"threshold", "--model", "measurement"});
    EXPECT_EQ(j["root"], "0.2559");
    EXPECT_EQ(j["condition"], "measurement");
    EXPECT_EQ(j["published_reference"]["value"], "0.25");
    EXPECT_EQ(j["published_reference"]["flag"], true);
    EXPECT_LE(j["width"].get<double>(), 1e-6);
    EXPECT_EQ(j["manifest"]["command"], "threshold");
    EXPECT_EQ(j["manifest"]["circuit_config_hash"], CircuitConfig().hash());
}

TEST(CliThreshold, fixtures) {
    auto j = run_json({"threshold", "--model", "lossy", "--fixture", "paper-eq10"});
    EXPECT_NEAR(std::stod(j["root"].get<std::string>()), 0.0178, 0.0005);
    EXPECT_EQ(j["recursion"], "paper-eq10");
    EXPECT_EQ(j["below_measurement_threshold"], true);

    auto r = run({"threshold", "--model", "ideal", "--fixture", "paper-eq9"});
    EXPECT_EQ(r.code, 1);
    auto e = json::parse(r.err);
    EXPECT_EQ(e["error"], "no_sign_change");
    EXPECT_LT(e["g_lo"]["value"].get<double>(), 0);
    EXPECT_LT(e["g_hi"]["value"].get<double>(), 0);

    EXPECT_EQ(run({"threshold", "--model", "ideal", "--fixture", "paper-eq10"}).code, 2);
    EXPECT_EQ(run({"threshold", "--model", "measurement", "--fixture", "paper-eq9"}).code, 2);
}

TEST(CliThreshold, full_chain_and_csv) {
    auto j = run_json({"threshold", "--model", "ideal", "--tol", "1e-4"});
    EXPECT_EQ(j["recursion"], "full-chain");
    EXPECT_NEAR(std::stod(j["root"].get<std::string>()), 0.1215, 2e-4);
    auto r = run({"threshold", "--model", "measurement", "--format", "csv"});
    auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0][0], "condition");
    EXPECT_EQ(rows[1][0], "measurement");
}

TEST(CliSeries, published_columns) {
    auto r = run({"series", "--model", "ideal", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 9u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"order", "coefficient", "value", "published", "deviation"}));
    EXPECT_EQ(rows[4][1], "49");
    EXPECT_EQ(rows[4][3], "56");
    EXPECT_EQ(rows[4][4], "-7");
    EXPECT_EQ(rows[1][3], "");

    auto j = run_json({"series", "--model", "lossy", "--order", "4"});
    EXPECT_EQ(j["coefficients"].size(), 5u);
    EXPECT_EQ(j["coefficients"][3]["coefficient"]["exact"], "203/2");
    EXPECT_EQ(j["coefficients"][3]["published"], "1050");

    auto fixture = run_json({"series", "--model", "ideal", "--fixture", "paper-eq9"});
    EXPECT_EQ(fixture["coefficients"][3]["deviation"]["exact"], "0");
}

TEST(CliSweep, zero_grid) {
    auto r = run({"sweep", "--eps", "0", "--format", "csv", "--trials", "1000"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"eps", "encoded_failure_exact", "mc_mean", "mc_stderr"}));
    EXPECT_EQ(rows[1], (std::vector<std::string>{"0", "0", "0", "0"}));
}

TEST(CliSweep, exact_column_matches_chain) {
    auto r = run({"sweep", "--eps", "0.01,0.05,0.1", "--format", "csv", "--trials", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 4u);
    EncodedChain chain(Model::Ideal);
    const Rational xs[] = {Rational(1, 100), Rational(1, 20), Rational(1, 10)};
    for (size_t k = 0; k < 3; k++) {
        EXPECT_EQ(std::stod(rows[k + 1][1]), to_double(chain.encoded_failure(xs[k], 0)));
        EXPECT_EQ(rows[k + 1][2], "");
    }
    auto j = run_json({"sweep", "--model", "lossy", "--eps", "0.01", "--trials", "0"});
    EXPECT_EQ(j["rows"][0]["delta"]["exact"], "1/100");
}

TEST(CliSweep, rerun_is_byte_identical) {
    ::setenv("SOURCE_DATE_EPOCH", "1700000000", 1);
    auto dir = temp_dir();
    auto a = dir / "a.csv";
    auto b = dir / "b.csv";
    std::vector<std::string> args = {"sweep", "--model", "lossy", "--eps", "0:0.02:0.01", "--trials", "20000",
                                     "--seed", "7", "--format", "csv", "--out"};
    auto ra = args;
    ra.push_back(a.string());
    auto rb = args;
    rb.push_back(b.string());
    ASSERT_EQ(run(ra).code, 0);
    ASSERT_EQ(run(rb).code, 0);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_EQ(slurp(a.string() + ".manifest.json"), slurp(b.string() + ".manifest.json"));
    auto manifest = json::parse(slurp(a.string() + ".manifest.json"));
    EXPECT_EQ(manifest["timestamp"], "2023-11-14T22:13:20Z");
    EXPECT_EQ(manifest["command"], "sweep");
    EXPECT_EQ(manifest["parameters"]["seed"], 7);
    EXPECT_EQ(manifest["tool_version"], tool_version());
    ::unsetenv("SOURCE_DATE_EPOCH");
    std::filesystem::remove_all(dir);
}

TEST(CliSweep, unwritable_output) {
    auto r = run({"sweep", "--eps", "0", "--trials", "0", "--out", "/nonexistent/dir/x.csv"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(json::parse(r.err)["error"], "io");
}

TEST(CliMc, csv_columns) {
    auto r = run({"mc", "--model", "lossy", "--eps", "0.02", "--trials", "20000", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"eps", "delta", "trials", "mean", "stderr", "z_vs_exact"}));
    EXPECT_EQ(rows[1][1], "0.02");
    EXPECT_EQ(rows[1][2], "20000");
    EXPECT_LE(std::abs(std::stod(rows[1][5])), 4.0);

    auto j = run_json({"mc", "--eps", "0", "--trials", "100"});
    EXPECT_EQ(j["mean"], 0.0);
    EXPECT_TRUE(j["z_vs_exact"].is_null());
}

TEST(CliConcat, tables) {
    auto zero = run({"concat", "--model", "measurement", "--delta", "0", "--levels", "4", "--format", "csv"});
    auto rows = csv_rows(zero.out);
    ASSERT_EQ(rows.size(), 5u);
    for (size_t k = 1; k < rows.size(); k++) {
        EXPECT_EQ(rows[k][1], "0");
    }

    auto j = run_json({"concat", "--model", "measurement", "--delta", "0.1"});
    ASSERT_EQ(j["levels"].size(), 3u);
    EXPECT_EQ(j["levels"][0]["rate_exact"]["exact"], "51383/2000000");
    double prev = 0.1;
    for (const auto &row : j["levels"]) {
        double v = row["rate_exact"]["value"];
        EXPECT_LT(v, prev);
        prev = v;
    }

    auto ideal = run_json({"concat", "--model", "ideal", "--eps", "0.05", "--levels", "2"});
    EXPECT_LT(ideal["levels"][1]["rate_exact"]["value"].get<double>(), 0.05);
    auto eq10 = run_json({"concat", "--model", "lossy", "--eps", "0.01", "--fixture", "paper-eq10", "--levels", "1"});
    EXPECT_EQ(eq10["recursion"], "paper-eq10");
}

TEST(CliClassesAndChain, exports) {
    auto c = run_json({"classes", "--model", "lossy"});
    EXPECT_EQ(c["class_count"], 11);
    EXPECT_EQ(c["pattern_count"], 2187);
    auto csv = csv_rows(run({"classes", "--format", "csv"}).out);
    EXPECT_EQ(csv.size(), 6u);

    auto chain = run_json({"chain", "--eps", "1/100"});
    EXPECT_EQ(chain["encoded_failure"]["exact"], "144723470598547394584778567/2720488222573222580000000000000");
    EXPECT_EQ(chain["initial"].size(), 5u);
    auto rows = csv_rows(run({"chain", "--model", "lossy", "--format", "csv"}).out);
    EXPECT_EQ(rows[0][0], "from");
    EXPECT_GT(rows.size(), 11u);
}

TEST(CliCircuitConfig, alternative_inventory) {
    auto dir = temp_dir();
    auto path = dir / "config.json";
    {
        std::ofstream f(path);
        f << R"({"z_recovery": {"detectors_per_helper": 2}})";
    }
    auto base = run_json({"threshold", "--model", "lossy", "--tol", "1e-4"});
    auto alt = run_json({"threshold", "--model", "lossy", "--tol", "1e-4", "--circuit-config", path.string()});
    EXPECT_NE(base["circuit_config_hash"], alt["circuit_config_hash"]);
    EXPECT_LT(std::stod(alt["root"].get<std::string>()), std::stod(base["root"].get<std::string>()));

    {
        std::ofstream f(path);
        f << R"({"z_recovery": {"typo": 2}})";
    }
    auto r = run({"threshold", "--model", "lossy", "--circuit-config", path.string()});
    EXPECT_NE(r.code, 0);
    EXPECT_NO_THROW(json::parse(r.err));
    EXPECT_NE(run({"classes", "--circuit-config", (dir / "missing.json").string()}).code, 0);
    std::filesystem::remove_all(dir);
}
