// Copyright 2026 The qcgeom Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qcg/cli.hpp"
#include "qcg/io.hpp"

namespace qcg {
namespace {

using nlohmann::json;

struct Result {
    int code = 0;
    std::string out;
    std::string err;
    json parsed() const { return json::parse(out); }
};

Result run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    Result r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("qcg_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string path(const std::string &name) const { return (dir_ / name).string(); }
    std::string write(const std::string &name, const std::string &text) const {
        std::ofstream(path(name)) << text;
        return path(name);
    }
    static std::string slurp(const std::string &file) {
        std::ifstream in(file);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    std::filesystem::path dir_;
};

TEST_F(CliTest, CertifyIdentityQubit) {
    const Result r = run({"certify", "--basis", "pauli", "--d", "1", "--v", "1,1,1,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = r.parsed();
    EXPECT_EQ(j["verdict"], "cp");
    EXPECT_EQ(j["method"], "analytic-pauli");
    EXPECT_EQ(j["eigenvalues"], json({2.0, 0.0, 0.0, 0.0}));
    const CpReport back = report_from_json(r.out);
    EXPECT_TRUE(back.cp());
}

TEST_F(CliTest, NotCpIsStillSuccess) {
    const Result r = run({"certify", "--basis", "pauli", "--d", "1", "--v", "1,-1,-1,-1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.parsed()["verdict"], "not-cp");
    EXPECT_EQ(r.parsed()["minEigenvalue"], -1.0);
}

TEST_F(CliTest, CertifyComplexHwInput) {
    // hw(3): v_{0,1} = conj(v_{0,2}); everything else zero.
    const Result r = run({"certify", "--basis", "hw", "--n", "3", "--v",
                          "1,0.2+0.1j,0.2-0.1j,0,0,0,0,0,0", "--cross-validate"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.parsed()["method"], "analytic-hw");
    EXPECT_LE(r.parsed()["crossCheckDeviation"].get<double>(), 1e-9);
    const Result bad = run({"certify", "--basis", "hw", "--n", "3", "--v",
                            "1,0.2+0.1j,0.2+0.1j,0,0,0,0,0,0"});
    EXPECT_EQ(bad.code, 1);
}

TEST_F(CliTest, GellMannHybridReport) {
    const Result r = run({"certify", "--basis", "gellmann", "--n", "3", "--v",
                          "1,0.1,0.2,0.3,0,0,0,0,0", "--emit-spectrum"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = r.parsed();
    EXPECT_EQ(j["method"], "gellmann-hybrid");
    EXPECT_TRUE(j.contains("signCriterion"));
    EXPECT_EQ(j["choiSpectrum"].size(), 9U);
}

TEST_F(CliTest, ToleranceFromEnvironmentAndFlag) {
    ::setenv("QCG_TOL", "0.5", 1);
    const Result env = run({"certify", "--basis", "pauli", "--d", "1", "--v", "1,-0.5,-0.5,-0.5"});
    ::unsetenv("QCG_TOL");
    ASSERT_EQ(env.code, 0) << env.err;
    EXPECT_EQ(env.parsed()["tolerance"], 0.5);
    EXPECT_EQ(env.parsed()["verdict"], "cp");
    const Result flag = run(
        {"certify", "--basis", "pauli", "--d", "1", "--v", "1,-0.5,-0.5,-0.5", "--tol", "1e-6"});
    EXPECT_EQ(flag.parsed()["verdict"], "not-cp");
    EXPECT_EQ(run({"certify", "--basis", "pauli", "--d", "1", "--v", "1,0,0,0", "--tol", "-1"}).code,
              2);
    ::setenv("QCG_TOL", "zero", 1);
    EXPECT_EQ(run({"certify", "--basis", "pauli", "--d", "1", "--v", "1,0,0,0"}).code, 2);
    ::unsetenv("QCG_TOL");
}

TEST_F(CliTest, UsageAndInputErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"certify", "--bogus"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"certify", "--basis", "pauli", "--d", "1", "--v", "1,1,1"}).code, 2);
    EXPECT_EQ(run({"certify", "--basis", "pauli", "--d", "1", "--v", "1,x,1,1"}).code, 2);
    EXPECT_EQ(run({"certify", "--basis", "gellmann", "--v", "1"}).code, 2);
    EXPECT_EQ(run({"certify", "--channel", path("missing.json")}).code, 2);
    EXPECT_EQ(run({"certify", "--basis", "pauli", "--d", "1", "--v", "0.5,0,0,0"}).code, 1);
    EXPECT_EQ(run({"basis", "gen", "--basis", "gellmann", "--n", "1"}).code, 1);
    const Result help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("simplex-check"), std::string::npos);
}

TEST_F(CliTest, BasisGenRoundTripsAndValidates) {
    const std::string out = path("hw3.json");
    ASSERT_EQ(run({"basis", "gen", "--basis", "hw", "--n", "3", "--out", out}).code, 0);
    const BasisPtr b = basis_from_json(slurp(out));
    EXPECT_EQ(b->kind(), BasisKind::HeisenbergWeyl);
    const Result v = run({"basis", "validate", "--basis", out});
    ASSERT_EQ(v.code, 0) << v.err;
    EXPECT_TRUE(v.parsed()["ok"].get<bool>());
    EXPECT_EQ(v.parsed()["pairs"]["complexPlanes"], 4);
}

TEST_F(CliTest, BasisValidateReportsFailures) {
    const std::string file = write(
        "dup.json",
        R"({"kind":"custom","n":2,"elements":[[[1,0],[0,0],[0,0],[1,0]],[[1,0],[0,0],[0,0],[1,0]],[[0,0],[1,0],[1,0],[0,0]],[[1,0],[0,0],[0,0],[-1,0]]]})");
    const Result r = run({"basis", "validate", "--basis", file});
    EXPECT_EQ(r.code, 1);
    const json j = r.parsed();
    EXPECT_FALSE(j["ok"].get<bool>());
    for (const auto &c : j["checks"]) {
        if (c["name"] == "orthogonal" || c["name"] == "trace-free") {
            EXPECT_FALSE(c["passed"].get<bool>());
        }
    }
}

TEST_F(CliTest, ChoiFromChannelFile) {
    const std::string file = write(
        "ch.json", R"({"basis":{"kind":"pauli","d":1},"v":[[1,0],[0.5,0],[0.5,0],[0.5,0]]})");
    const Result r = run({"choi", "--channel", file, "--emit-spectrum"});
    ASSERT_EQ(r.code, 0) << r.err;
    const ChoiMatrix j = choi_from_json(r.out);
    EXPECT_EQ(j.j.dim(), 4U);
    EXPECT_NEAR(r.parsed()["trace"][0].get<double>(), 2.0, 1e-12);
    EXPECT_NEAR(r.parsed()["eigenvalues"].back().get<double>(), 0.25, 1e-12);
}

TEST_F(CliTest, CertifyTranslation) {
    const Result r = run({"certify-t", "--basis", "pauli", "--d", "1", "--v", "1,0,0,0", "--t",
                          "0,0,0,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.parsed()["verdict"], "cp");
    EXPECT_EQ(r.parsed()["method"], "numeric");
    EXPECT_EQ(run({"certify-t", "--basis", "pauli", "--d", "1", "--v", "1,0,0,0"}).code, 2);
    EXPECT_EQ(run({"certify", "--basis", "pauli", "--d", "1", "--v", "1,0,0,0", "--t", "0,0,0,1"})
                  .code,
              1);
    const std::string vfile = write("v.json", "[1, 0, 0, 0]");
    EXPECT_EQ(run({"certify-t", "--basis", "pauli", "--d", "1", "--v", vfile, "--t", "0,0,0,0.5"})
                  .code,
              0);
}

TEST_F(CliTest, SimplexCheck) {
    const Result g = run({"simplex-check", "--basis", "gellmann", "--n", "3"});
    ASSERT_EQ(g.code, 0);
    EXPECT_FALSE(g.parsed()["isSimplex"].get<bool>());
    EXPECT_EQ(g.parsed()["failingPair"]["labels"], json({"X_{01}", "X_{02}"}));
    const Result h = run({"simplex-check", "--basis", "hw", "--n", "4"});
    EXPECT_TRUE(h.parsed()["isSimplex"].get<bool>());
    EXPECT_TRUE(h.parsed()["failingPair"].is_null());
    EXPECT_EQ(h.parsed()["phaseTable"].size(), 16U);
}

TEST_F(CliTest, Extremals) {
    const Result r = run({"extremals", "--basis", "pauli", "--d", "1"});
    ASSERT_EQ(r.code, 0);
    const json j = r.parsed();
    ASSERT_EQ(j["vertices"].size(), 4U);
    EXPECT_EQ(j["vertices"][1]["coordinates"], json({1.0, -1.0, -1.0}));
    EXPECT_EQ(run({"extremals", "--basis", "gellmann", "--n", "3"}).code, 1);
}

TEST_F(CliTest, SampleIsDeterministic) {
    const std::vector<std::string> base{"sample", "--basis", "pauli", "--d",  "1",
                                        "--samples", "3000", "--seed", "5"};
    auto one = base;
    one.insert(one.end(), {"--csv", path("a.csv"), "--workers", "1"});
    auto four = base;
    four.insert(four.end(), {"--csv", path("b.csv"), "--workers", "4"});
    const Result a = run(one);
    const Result b = run(four);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
    EXPECT_EQ(slurp(path("a.csv")).substr(0, 17), "index,v1,v2,v3,cp");
    const json s = a.parsed();
    EXPECT_EQ(s["samples"], 3000);
    EXPECT_EQ(s["seed"], 5);
    EXPECT_TRUE(s.contains("fraction"));
    EXPECT_TRUE(s.contains("stderr"));
}

TEST_F(CliTest, FigureData) {
    const Result p = run({"figure-data", "--basis", "pauli", "--d", "1"});
    ASSERT_EQ(p.code, 0) << p.err;
    const json j = p.parsed();
    EXPECT_EQ(j["vertices"].size(), 4U);
    EXPECT_EQ(j["edges"].size(), 6U);
    ASSERT_EQ(j["facets"].size(), 4U);
    // Each vertex lies on three facets and strictly inside the fourth.
    for (const auto &vertex : j["vertices"]) {
        int on = 0;
        for (const auto &f : j["facets"]) {
            double dot = 0.0;
            for (std::size_t i = 0; i < 3; ++i) {
                dot += f["normal"][i].get<double>() * vertex[i].get<double>();
            }
            const double slack = f["offset"].get<double>() - dot;
            EXPECT_GE(slack, -1e-12);
            on += std::abs(slack) < 1e-12 ? 1 : 0;
        }
        EXPECT_EQ(on, 3);
    }

    const Result h2 = run({"figure-data", "--basis", "hw", "--n", "2"});
    ASSERT_EQ(h2.code, 0);
    for (const auto &vertex : h2.parsed()["vertices"]) {
        for (const auto &c : vertex) {
            EXPECT_NEAR(std::abs(c.get<double>()), 1.0, 1e-12);
        }
    }
    const Result h3 = run({"figure-data", "--basis", "hw", "--n", "3"});
    ASSERT_EQ(h3.code, 0);
    EXPECT_EQ(h3.parsed()["vertices"].size(), 9U);
    EXPECT_EQ(h3.parsed()["vertices"][0].size(), 8U);
    EXPECT_FALSE(h3.parsed().contains("facets"));

    const Result g = run({"figure-data", "--basis", "gellmann", "--n", "3"});
    EXPECT_EQ(g.code, 1);
    EXPECT_NE(g.err.find("sample"), std::string::npos);
}

TEST_F(CliTest, OutputFileAndDeterminism) {
    const std::string a = path("a.json");
    const std::string b = path("b.json");
    ASSERT_EQ(run({"extremals", "--basis", "hw", "--n", "3", "--out", a}).code, 0);
    ASSERT_EQ(run({"extremals", "--basis", "hw", "--n", "3", "--out", b}).code, 0);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_EQ(run({"extremals", "--basis", "hw", "--n", "3", "--out", path("no/such/dir.json")})
                  .code,
              2);
}

} // namespace
} // namespace qcg
