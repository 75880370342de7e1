// Copyright 2026 The PulseForge Authors
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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "gtest/gtest.h"

namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pulseforge_cli_" + std::string(::testing::UnitTest::GetInstance()
                                                ->current_test_info()
                                                ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args) const {
    const std::string cmd = "cd '" + dir_.string() + "' && '" PULSEFORGE_CLI "' " + args +
                            " > stdout.txt 2> stderr.txt";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(dir_ / name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
  }

  static std::string sample(const std::string& name) {
    return std::string(PULSEFORGE_SAMPLES) + "/" + name;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ReplicateWritesFourRowReport) {
  const int code = run("replicate --output rep.json");
  const auto j = nlohmann::json::parse(read("rep.json"));
  const auto& rows = j.at("report").at("rows");
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& row : rows) {
    for (const char* key : {"group", "row", "convention", "fitness_phase_invariant",
                            "fitness_frobenius", "pass"})
      EXPECT_TRUE(row.contains(key)) << key;
  }
  // Exit status tracks the report: 0 only when every row passes.
  EXPECT_EQ(code, j.at("report").at("pass").get<bool>() ? 0 : 1);
}

TEST_F(CliTest, SearchIsByteIdenticalAcrossRunsAndFromManifest) {
  const std::string args =
      "search --target cnot --qubits 2 --length 3 --pop 60 --gens 400 --mut-rate 0.02 "
      "--cross-rate 0.9 --tol 1e-3 --seed 7";
  ASSERT_EQ(run(args + " --output a.json"), 0);
  ASSERT_EQ(run(args + " --output b.json"), 0);
  EXPECT_EQ(read("a.json"), read("b.json"));
  EXPECT_EQ(read("a.log"), read("b.log"));
  ASSERT_EQ(run("search --from-manifest a.json --output c.json"), 0);
  EXPECT_EQ(read("a.json"), read("c.json"));
  EXPECT_EQ(read("a.log"), read("c.log"));

  const auto j = nlohmann::json::parse(read("a.json"));
  EXPECT_EQ(j.at("config").at("seed"), 7);
  EXPECT_EQ(j.at("config").at("population_size"), 60);
  EXPECT_TRUE(j.at("outcome").at("converged").get<bool>());
  EXPECT_EQ(j.at("target").at("descriptor"), "cnot");
  EXPECT_FALSE(j.contains("timestamps"));
  EXPECT_NE(read("a.log").find("seed=7"), std::string::npos);
}

TEST_F(CliTest, SearchBudgetExhaustedExitsTwo) {
  EXPECT_EQ(run("search --target shor15 --length 2 --pop 10 --gens 3 --tol 0 --seed 1"), 2);
  const auto j = nlohmann::json::parse(read("search_result.json"));
  EXPECT_FALSE(j.at("outcome").at("converged").get<bool>());
  EXPECT_EQ(j.at("outcome").at("generations_used"), 3);
}

TEST_F(CliTest, SearchAgainstFileTargetAndSweep) {
  EXPECT_EQ(run("search --target file:" + sample("cnot_target.json") +
                " --length 3 --pop 60 --gens 400 --seed 3 --convention sweep --record-time"),
            0);
  const auto j = nlohmann::json::parse(read("search_result.json"));
  EXPECT_EQ(j.at("config").at("convention"), "sweep");
  EXPECT_TRUE(j.contains("timestamps"));
}

TEST_F(CliTest, VerifyEmptySequenceFails) {
  EXPECT_EQ(run("verify --target cnot --sequence " + sample("empty.seq")), 1);
  const auto j = nlohmann::json::parse(read("verify_report.json"));
  EXPECT_NEAR(j.at("outcome").at("fitness_phase_invariant").get<double>(), 0.5, 1e-12);
  EXPECT_FALSE(j.at("outcome").at("pass").get<bool>());
}

TEST_F(CliTest, VerifyFoundSequencePassesAndRerunsFromManifest) {
  ASSERT_EQ(run("verify --target cnot --sequence " + sample("cnot_found.seq") +
                " --tol 1e-3 --convention 2 --output v1.json"),
            0);
  ASSERT_EQ(run("verify --from-manifest v1.json --output v2.json"), 0);
  EXPECT_EQ(read("v1.json"), read("v2.json"));
}

TEST_F(CliTest, VerifyReferenceRowAgainstRelabeledCnot) {
  write("cnot_ba.json", R"({"name": "cnot_ba", "qubits": 2, "matrix":
    [[[1,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]],
     [[0,0],[0,0],[1,0],[0,0]], [[0,0],[1,0],[0,0],[0,0]]]})");
  EXPECT_EQ(run("verify --target file:cnot_ba.json --sequence " + sample("cnot_row1.seq")), 0);
  EXPECT_EQ(run("verify --target cnot --sequence " + sample("cnot_row1.seq")), 1);
}

TEST_F(CliTest, ExitCodesForBadInput) {
  EXPECT_EQ(run("search --no-such-flag"), 64);
  EXPECT_EQ(run("frobnicate"), 64);
  EXPECT_EQ(run("search"), 64);
  EXPECT_EQ(run("verify --target cnot"), 64);
  EXPECT_EQ(run("search --target cnot --convention banana"), 64);
  EXPECT_EQ(run("verify --target cnot --sequence missing.seq"), 66);
  EXPECT_EQ(run("search --target file:missing.json"), 66);
  write("bad.seq", "R xQ 90\n");
  EXPECT_EQ(run("verify --target cnot --sequence bad.seq"), 66);
  write("bad.json", "{");
  EXPECT_EQ(run("search --target file:bad.json"), 66);
  EXPECT_EQ(run("search --target cnot --pop 7"), 65);
  EXPECT_EQ(run("search --target cnot --mut-rate 2"), 65);
  EXPECT_EQ(run("search --target cnot --qubits 3"), 65);
  EXPECT_EQ(run("search --target cnot --convention 9"), 65);
  write("nonunitary.json", R"({"name":"z","qubits":1,"matrix":[[[1,0],[0,0]],[[0,0],[0,0]]]})");
  EXPECT_EQ(run("search --target file:nonunitary.json"), 65);
  EXPECT_NE(read("stderr.txt").find("not unitary"), std::string::npos);
}
