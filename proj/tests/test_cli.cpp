// Copyright 2026 The su2wigner Authors
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

#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtest/gtest.h"

namespace fs = std::filesystem;
using nlohmann::json;
using std::numbers::pi;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = su2w::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::vector<double> split_doubles(const std::string& line) {
    std::vector<double> out;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) out.push_back(std::strtod(cell.c_str(), nullptr));
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("su2w_cli_test_" + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

}  // namespace

TEST(FormatValue, TwelveSignificantDigits) {
    EXPECT_EQ(su2w::cli::format_value(0.125), "0.125");
    EXPECT_EQ(su2w::cli::format_value((1 - 3 * std::sqrt(3.0)) / 8), "-0.524519052838");
    EXPECT_EQ(su2w::cli::format_value(-0.0), "0");
    EXPECT_EQ(su2w::cli::format_value(1e-20), "1e-20");
}

TEST(CliEval, PureGhzMinimum) {
    const auto r = run({"eval", "--nu", "1", "--theta", "1.5707963", "--phi", "3.1415927", "--s", "w"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(std::stod(r.out), -0.524519053, 1e-9);
}

TEST(CliEval, FullyMixed) {
    const auto r = run({"eval", "--nu", "0", "--theta", "0.3", "--phi", "1.1", "--s", "w"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0.125\n");
}

TEST(CliEval, AcceleratedNorthPole) {
    const auto r = run({"eval", "--nu", "1", "--r", "0.7853982", "--accelerated", "1", "--theta", "0", "--phi", "0",
                        "--s", "w"});
    ASSERT_EQ(r.code, 0) << r.err;
    // 0.7853982 is pi/4 cut to 7 decimals, which moves the value by about 4e-9.
    EXPECT_NEAR(std::stod(r.out), 1.308012702, 1e-8);
    const auto exact = run({"eval", "--nu", "1", "--r", "0.78539816339744828", "--accelerated", "1", "--theta", "0",
                            "--phi", "0"});
    EXPECT_NEAR(std::stod(exact.out), 1.3080127019, 1e-10);
}

TEST(CliEval, IndexListForm) {
    const auto a = run({"eval", "--nu", "0.7", "--r", "0.6", "--accelerated", "0,1", "--theta", "1", "--phi", "0.4"});
    const auto b = run({"eval", "--nu", "0.7", "--r", "0.6", "--accelerated", "2", "--theta", "1", "--phi", "0.4"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_NEAR(std::stod(a.out), 0.4486884207967774, 1e-11);
    EXPECT_EQ(a.out, b.out);
    const auto husimi =
        run({"eval", "--nu", "0.7", "--r", "0.6", "--accelerated", "0,1", "--theta", "1", "--phi", "0.4", "--s", "q"});
    EXPECT_NEAR(std::stod(husimi.out), 0.23728889603086625, 1e-11);
}

TEST(CliEval, ArgumentErrors) {
    EXPECT_EQ(run({"eval", "--nu", "1", "--theta", "0"}).code, 2);
    EXPECT_EQ(run({"eval", "--nu", "1.5", "--theta", "0", "--phi", "0"}).code, 2);
    EXPECT_EQ(run({"eval", "--nu", "1", "--r", "0.9", "--theta", "0", "--phi", "0"}).code, 2);
    EXPECT_EQ(run({"eval", "--nu", "1", "--s", "x", "--theta", "0", "--phi", "0"}).code, 2);
    EXPECT_EQ(run({"eval", "--nu", "1", "--accelerated", "4", "--theta", "0", "--phi", "0"}).code, 2);
    EXPECT_EQ(run({"eval", "--nu", "1", "--accelerated", "0,0", "--theta", "0", "--phi", "0"}).code, 2);
    EXPECT_EQ(run({"eval", "--nu", "1", "--accelerated", "3,", "--theta", "0", "--phi", "0"}).code, 2);
    EXPECT_EQ(run({"eval", "--nu", "abc", "--theta", "0", "--phi", "0"}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(CliHelp, ExitsZero) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("eval"), std::string::npos);
}

TEST(CliGrid, RowCountAndHeader) {
    const auto r = run({"grid", "--nu", "1", "--theta-steps", "91", "--phi-steps", "181"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 16472u);
    EXPECT_EQ(rows.front(), "theta,phi,nu,r,k,s,W");
    EXPECT_EQ(r.out.find('\r'), std::string::npos);
    EXPECT_EQ(r.out.back(), '\n');
    // theta-major: the first phi_steps rows share theta = 0.
    EXPECT_EQ(split_doubles(rows[1])[0], 0.0);
    EXPECT_EQ(split_doubles(rows[181])[0], 0.0);
    EXPECT_GT(split_doubles(rows[182])[0], 0.0);
}

TEST(CliGrid, AccelerationRaisesMinimum) {
    auto min_of = [](const std::string& text) {
        double m = 1e300;
        const auto rows = lines(text);
        for (std::size_t i = 1; i < rows.size(); ++i) m = std::min(m, split_doubles(rows[i])[6]);
        return m;
    };
    const auto k0 = run({"grid", "--nu", "1", "--r", "0.6", "--accelerated", "0", "--theta-steps", "37",
                         "--phi-steps", "73"});
    const auto k1 = run({"grid", "--nu", "1", "--r", "0.6", "--accelerated", "1", "--theta-steps", "37",
                         "--phi-steps", "73"});
    ASSERT_EQ(k0.code, 0);
    ASSERT_EQ(k1.code, 0);
    EXPECT_GT(min_of(k1.out), min_of(k0.out));
}

TEST(CliGrid, CsvRoundTrip) {
    TempDir dir;
    const auto path = dir.path() / "grid.csv";
    const auto r = run({"grid", "--nu", "0.7", "--r", "0.3", "--accelerated", "2", "--s", "p", "--theta-steps", "9",
                        "--phi-steps", "12", "-o", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    const auto rows = lines(slurp(path));
    ASSERT_EQ(rows.size(), 109u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto v = split_doubles(rows[i]);
        ASSERT_EQ(v.size(), 7u);
        EXPECT_EQ(v[2], 0.7);
        EXPECT_EQ(v[4], 2.0);
        EXPECT_EQ(v[5], 1.0);
        std::string rebuilt;
        for (std::size_t c = 0; c < v.size(); ++c) {
            if (c) rebuilt += ',';
            rebuilt += (c == 4 || c == 5) ? std::to_string(static_cast<int>(v[c])) : su2w::cli::format_value(v[c]);
        }
        EXPECT_EQ(rebuilt, rows[i]);
    }
}

TEST(CliGrid, JsonLayout) {
    const auto r = run({"grid", "--nu", "0.5", "--theta-steps", "3", "--phi-steps", "4", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = json::parse(r.out);
    ASSERT_TRUE(doc.contains("meta"));
    ASSERT_TRUE(doc.contains("samples"));
    EXPECT_EQ(doc["meta"]["command"], "grid");
    EXPECT_EQ(doc["meta"]["theta_steps"], 3);
    ASSERT_EQ(doc["samples"].size(), 12u);
    EXPECT_EQ(doc["samples"][0].size(), 7u);
    // Keys come out sorted.
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc["meta"].items()) keys.push_back(k);
    EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
    EXPECT_LT(r.out.find("\"meta\""), r.out.find("\"samples\""));
}

TEST(CliGrid, DegenerateGridWritesNothing) {
    TempDir dir;
    const auto path = dir.path() / "none.csv";
    EXPECT_EQ(run({"grid", "--nu", "1", "--theta-steps", "1", "-o", path.string()}).code, 2);
    EXPECT_FALSE(fs::exists(path));
}

TEST(CliGrid, UnwritablePath) {
    TempDir dir;
    const auto path = dir.path() / "missing" / "sub" / "grid.csv";
    const auto r = run({"grid", "--nu", "1", "--theta-steps", "3", "--phi-steps", "3", "-o", path.string()});
    EXPECT_EQ(r.code, 3);
    EXPECT_FALSE(r.err.empty());
}

TEST(CliGrid, Deterministic) {
    const std::vector<std::string> args{"grid", "--nu", "0.4", "--r", "0.5", "--accelerated", "3",
                                        "--theta-steps", "20", "--phi-steps", "30"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliScan, RScanShape) {
    const auto r = run({"scan-r", "--nu", "1", "--accelerated", "1", "--r-steps", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 6u);
    const auto first = split_doubles(rows[1]);
    const auto last = split_doubles(rows[5]);
    EXPECT_NEAR(first[6], (1 - 3 * std::sqrt(3.0)) / 8, 1e-11);
    EXPECT_NEAR(last[3], pi / 4, 1e-11);
    EXPECT_NEAR(last[6], (1 - 3 * std::sqrt(3.0) * std::cos(pi / 4)) / 8, 1e-11);
}

TEST(CliScan, NuScanReportsThreshold) {
    const auto r = run({"scan-nu", "--nu-steps", "11", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_NEAR(doc["meta"]["nu_star"].get<double>(), 1 / (3 * std::sqrt(3.0)), 1e-9);
    EXPECT_EQ(doc["samples"].size(), 11u);
    EXPECT_NE(r.err.find("nu_star=0.19245"), std::string::npos);
}

TEST(CliVerify, StatusesAndLayout) {
    const auto r = run({"verify", "--theta-steps", "20", "--phi-steps", "20"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["grid"]["theta_steps"], 20);
    bool acc2_zero_flagged = false;
    for (const auto& v : doc["variants"]) {
        const std::string tag = v["tag"];
        if (tag == "GHZ" || tag == "ACC1") {
            EXPECT_EQ(v["status"], "MATCH") << v.dump();
            EXPECT_LE(v["max_abs_diff"].get<double>(), 1e-12);
        }
        if (tag == "ACC2" && v["r"].get<double>() == 0.0) {
            EXPECT_EQ(v["status"], "DISCREPANT");
            EXPECT_TRUE(v.contains("argmax"));
            acc2_zero_flagged = true;
        }
    }
    EXPECT_TRUE(acc2_zero_flagged);
    for (const auto& d : doc["derived"]) EXPECT_EQ(d["status"], "MATCH") << d.dump();
    for (const auto& c : doc["coefficients"]) {
        if (c["variant"] == "A") {
            EXPECT_EQ(c["status"], "MATCH") << c.dump();
        }
    }
}

TEST(CliVerify, DefaultsToFiftyByFiftyAndRestricts) {
    const auto r = run({"verify", "--nu", "1", "--r", "0.3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["grid"]["theta_steps"], 50);
    EXPECT_EQ(doc["grid"]["phi_steps"], 50);
    // GHZ once, then ACC1..ACC3 once each.
    EXPECT_EQ(doc["variants"].size(), 4u);
    EXPECT_EQ(doc["coefficients"].size(), 3u);
}

TEST(CliFigures, FilesAndContents) {
    TempDir dir;
    const auto out = dir.path() / "figs";
    const auto r = run({"figures", "-o", out.string(), "--theta-steps", "11", "--phi-steps", "13", "--r-steps", "7",
                        "--nu-steps", "11"});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::vector<std::string> names{"fig1a", "fig1b", "fig1c", "fig2a", "fig2b", "fig2c", "fig3a", "fig3b",
                                         "fig3c", "fig4a", "fig4b", "fig4c", "fig5a", "fig5b", "fig5c", "fig5d"};
    for (const auto& name : names) {
        const auto path = out / (name + ".csv");
        ASSERT_TRUE(fs::exists(path)) << name;
        EXPECT_EQ(lines(slurp(path)).front(), "theta,phi,nu,r,k,s,W");
    }
    std::size_t file_count = 0;
    for ([[maybe_unused]] const auto& entry : fs::directory_iterator(out)) ++file_count;
    EXPECT_EQ(file_count, names.size());

    // fig5: three curves of r_steps rows; all equal at r = 0 for nu = 1.
    const auto fig5a = lines(slurp(out / "fig5a.csv"));
    ASSERT_EQ(fig5a.size(), 1u + 3u * 7u);
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_NEAR(split_doubles(fig5a[1 + 7 * k])[6], -0.524519053, 1e-9);
    }

    // fig1c at nu = 0.1 and theta = pi/2 sits above the threshold.
    bool found = false;
    for (const auto& row : lines(slurp(out / "fig1c.csv"))) {
        if (row.rfind("theta", 0) == 0) continue;
        const auto v = split_doubles(row);
        if (std::abs(v[2] - 0.1) < 1e-12 && std::abs(v[0] - pi / 2) < 1e-9) {
            EXPECT_GT(v[6], 0.0);
            found = true;
        }
    }
    EXPECT_TRUE(found);

    EXPECT_EQ(lines(slurp(out / "fig1a.csv")).size(), 1u + 11u * 13u);
    EXPECT_EQ(lines(slurp(out / "fig2c.csv")).size(), 1u + 11u * 7u);
}

TEST(CliFigures, UnwritableDirectory) {
    TempDir dir;
    const auto blocker = dir.path() / "file";
    std::ofstream(blocker) << "x";
    EXPECT_EQ(run({"figures", "-o", (blocker / "sub").string(), "--theta-steps", "3", "--phi-steps", "3"}).code, 3);
}
