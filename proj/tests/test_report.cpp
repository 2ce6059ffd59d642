// Copyright 2026 The nohide Authors
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
#include <vector>

#include "nohide/cli.hpp"
#include "nohide/report.hpp"

namespace nohide {
namespace {

namespace fs = std::filesystem;

std::vector<double> csv_fields(const std::string& row) {
    std::vector<double> out;
    std::istringstream in(row);
    for (std::string f; std::getline(in, f, ',');) out.push_back(std::stod(f));
    return out;
}

void expect_endpoint(const std::string& row, double p, double trace_distance) {
    auto f = csv_fields(row);
    ASSERT_EQ(f.size(), 7u) << row;
    EXPECT_EQ(f[0], p);
    EXPECT_NEAR(f[1], trace_distance, 1e-12);
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

class TempDir : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("nohide_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    struct Run {
        int code;
        std::string out, err;
    };
    Run cli(std::vector<std::string> args) {
        args.insert(args.begin(), "nohide");
        std::vector<const char*> argv;
        for (auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return {code, out.str(), err.str()};
    }
    fs::path dir_;
};

TEST(Report, FormatDoubleUses17Digits) {
    EXPECT_EQ(report::format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(report::format_double(0.5), "0.5");
    EXPECT_EQ(std::stod(report::format_double(1.0 / 3)), 1.0 / 3);
}

TEST(Report, CountsRoundTrip) {
    tomo::ShotCounts c{"XY", {{"00", 3}, {"11", 5}}, 8};
    auto j = report::counts_json(c);
    EXPECT_EQ(j["basis"], "XY");
    EXPECT_EQ(j["counts"]["11"], 5);
    EXPECT_EQ(report::counts_from_json(j), c);
}

TEST(Report, SweepCsvShape) {
    auto records = run_sweep({0.0, 1.0});
    std::string csv = report::sweep_csv(records);
    std::istringstream in(csv);
    std::string header, row0, row1, extra;
    std::getline(in, header);
    std::getline(in, row0);
    std::getline(in, row1);
    EXPECT_FALSE(std::getline(in, extra));
    EXPECT_EQ(header, report::kSweepCsvHeader);
    expect_endpoint(row0, 0, 0.5);
    expect_endpoint(row1, 1, 0);
    auto j = report::sweep_json(records);
    EXPECT_EQ(j.size(), 2u);
    EXPECT_NEAR(j[0]["trace_distance_exact"].get<double>(), 0.5, 1e-12);
    EXPECT_TRUE(j[0].contains("fidelity_bound"));
}

TEST(Report, TomographyFields) {
    auto r = run_perfect(RandomizerTag::Eq2, default_input_state(), tomo::kExact, 0);
    auto j = report::tomography_json(r.transfer);
    for (const char* k : {"raw_min_eigenvalue", "fidelity", "trace_distance", "matrix_re", "matrix_im"}) {
        EXPECT_TRUE(j.contains(k)) << k;
    }
    EXPECT_EQ(j["matrix_re"].size(), 2u);
}

TEST_F(TempDir, AtomicWriteReplacesWholeFile) {
    fs::path p = dir_ / "out.txt";
    report::write_atomic(p, "first");
    report::write_atomic(p, "second");
    EXPECT_EQ(slurp(p), "second");
    EXPECT_EQ(std::distance(fs::directory_iterator(dir_), fs::directory_iterator{}), 1);
    EXPECT_THROW(report::write_atomic(dir_ / "missing" / "x.txt", "x"), std::runtime_error);
}

TEST_F(TempDir, PerfectExactAndSeededRuns) {
    auto r = cli({"perfect", "--shots", "exact"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["bell_fidelity"].get<double>(), 1, 1e-10);
    EXPECT_NEAR(j["transfer_fidelity"].get<double>(), 1, 1e-10);

    fs::path a = dir_ / "a.json", b = dir_ / "b.json";
    ASSERT_EQ(cli({"perfect", "--shots", "8192", "--seed", "42", "--out", a.string()}).code, 0);
    ASSERT_EQ(cli({"perfect", "--shots", "8192", "--seed", "42", "--out", b.string()}).code, 0);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_EQ(nlohmann::json::parse(slurp(a))["bell_counts"].size(), 9u);
}

TEST_F(TempDir, VariantsAgreeInExactMode) {
    auto one = nlohmann::json::parse(cli({"perfect", "--variant", "eq1"}).out);
    auto two = nlohmann::json::parse(cli({"perfect", "--variant", "eq2"}).out);
    EXPECT_NEAR(one["transfer_fidelity"].get<double>(), two["transfer_fidelity"].get<double>(), 1e-12);
    EXPECT_NEAR(one["bell_fidelity"].get<double>(), two["bell_fidelity"].get<double>(), 1e-12);
}

TEST_F(TempDir, ImperfectCsvEndpoints) {
    auto r = cli({"imperfect", "--p", "0", "--p", "1", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string header, row0, row1;
    std::getline(in, header);
    std::getline(in, row0);
    std::getline(in, row1);
    expect_endpoint(row0, 0, 0.5);
    expect_endpoint(row1, 1, 0);
    auto grid = cli({"imperfect"});
    EXPECT_EQ(nlohmann::json::parse(grid.out).size(), 11u);
}

TEST_F(TempDir, ConfigErrorsExitTwoAndWriteNothing) {
    fs::path out = dir_ / "never.json";
    const std::vector<std::vector<std::string>> bad{
        {"perfect", "--variant", "eq9", "--out", out.string()},
        {"perfect", "--shots", "0", "--out", out.string()},
        {"perfect", "--shots", "many", "--out", out.string()},
        {"imperfect", "--p", "1.5", "--out", out.string()},
        {"imperfect", "--grid", "none", "--out", out.string()},
        {"perfect", "--format", "csv", "--out", out.string()},
        {"bogus"},
        {}};
    for (const auto& args : bad) {
        auto r = cli(args);
        EXPECT_EQ(r.code, cli::kExitConfig) << (args.empty() ? "" : args[0]);
        EXPECT_FALSE(r.err.empty());
        EXPECT_FALSE(fs::exists(out));
    }
}

TEST_F(TempDir, SimulateFiles) {
    fs::path c = dir_ / "h.txt";
    report::write_atomic(c, "qubits 1\nh 0\n");
    auto r = cli({"simulate", c.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["amplitudes_re"][0].get<double>(), 0.70711, 1e-5);
    EXPECT_NEAR(j["amplitudes_re"][1].get<double>(), 0.70711, 1e-5);

    fs::path prep = dir_ / "prep.txt";
    report::write_atomic(prep, "# psi prep\nqubits 1\nh 0\nt 0\nh 0\ns 0\n");
    j = nlohmann::json::parse(cli({"simulate", prep.string()}).out);
    Complex a0{j["amplitudes_re"][0].get<double>(), j["amplitudes_im"][0].get<double>()};
    Complex a1{j["amplitudes_re"][1].get<double>(), j["amplitudes_im"][1].get<double>()};
    EXPECT_NEAR(std::abs(a0), std::cos(std::numbers::pi / 8), 1e-12);
    EXPECT_NEAR(std::abs(a1), std::sin(std::numbers::pi / 8), 1e-12);
    EXPECT_NEAR(std::arg(a1 / a0), 0, 1e-12);

    fs::path broken = dir_ / "broken.txt";
    fs::path out = dir_ / "state.json";
    report::write_atomic(broken, "qubits 1\nfrob 0\n");
    auto e = cli({"simulate", broken.string(), "--out", out.string()});
    EXPECT_EQ(e.code, cli::kExitConfig);
    EXPECT_NE(e.err.find(":2:1:"), std::string::npos) << e.err;
    EXPECT_FALSE(fs::exists(out));
    EXPECT_EQ(cli({"simulate", (dir_ / "absent.txt").string()}).code, cli::kExitConfig);
}

TEST_F(TempDir, ZxCommand) {
    fs::path a = dir_ / "zx1.json", b = dir_ / "zx2.json";
    ASSERT_EQ(cli({"zx", "--out", a.string()}).code, 0);
    ASSERT_EQ(cli({"zx", "--out", b.string()}).code, 0);
    EXPECT_EQ(slurp(a), slurp(b));
    auto j = nlohmann::json::parse(slurp(a));
    int max_stage = 0;
    for (const auto& s : j["derivation"]["trace"]) {
        max_stage = std::max(max_stage, s["stage"].get<int>());
        EXPECT_GT(std::hypot(s["scalar_re"].get<double>(), s["scalar_im"].get<double>()), 1e-12);
    }
    EXPECT_EQ(max_stage, 7);
    auto trace = report::trace_from_json(j["derivation"]["trace"]);
    auto before = report::diagram_from_json(j["derivation"]["before"]);
    EXPECT_EQ(zx::replay(before, trace), report::diagram_from_json(j["derivation"]["after"]));
}

}  // namespace
}  // namespace nohide
