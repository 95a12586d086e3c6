// Copyright 2026 The gtele Authors
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

#include "gtele/cli.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include "json.hpp"

using namespace gtele;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    CliRun r = run(args);
    EXPECT_EQ(r.code, cli::kExitOk) << r.err;
    return nlohmann::json::parse(r.out);
}

std::string write_file(const std::string &name, const std::string &contents) {
    std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << contents;
    return path;
}

}  // namespace

TEST(cli_basis, bell_states) {
    CliRun r = run({"basis", "--n", "1"});
    ASSERT_EQ(r.code, cli::kExitOk);
    ASSERT_NE(r.out.find("s3"), std::string::npos);
    ASSERT_EQ(r.out.find("s4"), std::string::npos);
    ASSERT_EQ(run_json({"basis", "--n", "1"})["states"].size(), 4);
}

TEST(cli_basis, sixteen_states_starting_with_g1) {
    auto doc = run_json({"basis", "--n", "2"});
    ASSERT_EQ(doc["states"].size(), 16);
    ASSERT_EQ(doc["states"][0]["s_index"], 0);
    ASSERT_EQ(doc["states"][0]["g_label"], 1);
    ASSERT_EQ(run({"basis", "--n", "2"}).out.rfind("s0 = g1\n", 0), 0);
}

TEST(cli_basis, refuses_out_of_range) {
    CliRun r = run({"basis", "--n", "5"});
    ASSERT_EQ(r.code, cli::kExitUsage);
    ASSERT_FALSE(r.err.empty());
    ASSERT_EQ(run({"basis", "--n", "0"}).code, cli::kExitUsage);
    ASSERT_EQ(run({"basis", "--bogus"}).code, cli::kExitUsage);
    ASSERT_EQ(run({"basis", "--format", "xml"}).code, cli::kExitUsage);
    ASSERT_EQ(run({}).code, cli::kExitUsage);
    ASSERT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
}

TEST(cli_teleport, random_state_is_faithful) {
    CliRun r = run({"teleport", "--n", "2", "--random-state", "--seed", "7"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    ASSERT_NE(r.out.find("fidelity: 1\n"), std::string::npos);
    auto doc = run_json({"teleport", "--n", "2", "--random-state", "--seed", "7"});
    ASSERT_GE(doc["fidelity"].get<double>(), 1 - 1e-10);
    ASSERT_EQ(doc["outcome_bits"].get<std::string>().size(), 4);
    ASSERT_EQ(doc["seed"], 7);
}

TEST(cli_teleport, output_is_byte_identical_across_runs) {
    for (const std::vector<std::string> &args : std::vector<std::vector<std::string>>{
             {"teleport", "--n", "3", "--random-state", "--seed", "11", "--channel", "5"},
             {"teleport", "--n", "2", "--random-state", "--seed", "7", "--format", "json"},
             {"et", "--n", "2", "--random-state", "--state-seed", "4"},
         }) {
        CliRun a = run(args);
        CliRun b = run(args);
        ASSERT_EQ(a.code, cli::kExitOk);
        ASSERT_EQ(a.out, b.out);
    }
}

TEST(cli_teleport, one_qubit_table_row) {
    // Channel |Psi->, outcome |Phi+>: Bob holds -b|0> + a|1> before correcting with Z X.
    std::string path = write_file("phi.json", R"({"qubits": 1, "amplitudes": [[0.6, 0], [0, 0.8]]})");
    auto doc = run_json({"teleport", "--n", "1", "--channel", "3", "--force-outcome", "0", "--state-file", path});
    auto pre = doc["bob_pre"]["amplitudes"];
    ASSERT_NEAR(pre[0][0].get<double>(), 0, 1e-12);
    ASSERT_NEAR(pre[0][1].get<double>(), -0.8, 1e-12);
    ASSERT_NEAR(pre[1][0].get<double>(), 0.6, 1e-12);
    ASSERT_NEAR(pre[1][1].get<double>(), 0, 1e-12);
    ASSERT_EQ(doc["correction"]["ops"], "ZX");
    ASSERT_EQ(doc["forced"], true);
    ASSERT_GE(doc["fidelity"].get<double>(), 1 - 1e-10);
}

TEST(cli_teleport, state_file_handling) {
    std::string loose = write_file("loose.json", R"({"qubits": 1, "amplitudes": [[0.6000001, 0], [0, 0.8]]})");
    auto doc = run_json({"teleport", "--state-file", loose, "--seed", "1"});
    ASSERT_EQ(doc["n"], 1);
    double a = doc["input"]["amplitudes"][0][0].get<double>();
    double b = doc["input"]["amplitudes"][1][1].get<double>();
    ASSERT_NEAR(a * a + b * b, 1, 1e-15);

    std::string far = write_file("far.json", R"({"qubits": 1, "amplitudes": [[1, 0], [1, 0]]})");
    ASSERT_EQ(run({"teleport", "--state-file", far}).code, cli::kExitUsage);
    std::string bad = write_file("bad.json", R"({"qubits": 2, "amplitudes": [[1, 0]]})");
    ASSERT_EQ(run({"teleport", "--state-file", bad}).code, cli::kExitUsage);
    std::string junk = write_file("junk.json", "{{");
    ASSERT_EQ(run({"teleport", "--state-file", junk}).code, cli::kExitUsage);
    ASSERT_EQ(run({"teleport", "--state-file", ::testing::TempDir() + "missing.json"}).code, cli::kExitUsage);
    std::string one = write_file("one.json", R"({"qubits": 1, "amplitudes": [[1, 0], [0, 0]]})");
    ASSERT_EQ(run({"teleport", "--n", "2", "--state-file", one}).code, cli::kExitUsage);
}

TEST(cli_teleport, usage_errors) {
    ASSERT_EQ(run({"teleport", "--n", "2", "--random-state", "--force-outcome", "16"}).code, cli::kExitUsage);
    ASSERT_EQ(run({"teleport", "--n", "2", "--random-state", "--seed", "1", "--force-outcome", "0"}).code,
              cli::kExitUsage);
    ASSERT_EQ(run({"teleport", "--n", "2", "--random-state", "--channel", "16"}).code, cli::kExitUsage);
    ASSERT_EQ(run({"teleport", "--n", "7", "--random-state"}).code, cli::kExitUsage);
    ASSERT_EQ(run({"teleport", "--n", "2"}).code, cli::kExitUsage);
}

TEST(cli_teleport, random_state_follows_seed_unless_given) {
    auto a = run_json({"teleport", "--n", "2", "--random-state", "--seed", "3"});
    auto b = run_json({"teleport", "--n", "2", "--random-state", "--seed", "3", "--state-seed", "3"});
    auto c = run_json({"teleport", "--n", "2", "--random-state", "--seed", "3", "--state-seed", "4"});
    ASSERT_EQ(a["input"], b["input"]);
    ASSERT_NE(a["input"], c["input"]);
}

TEST(cli_et, worked_values) {
    auto ghz = run_json({"et", "--named", "ghz+", "--n", "2"});
    ASSERT_NEAR(ghz["e_t"].get<double>(), 0.5, 1e-12);
    ASSERT_EQ(ghz["L"], 8);
    ASSERT_NEAR(run_json({"et", "--named", "w", "--n", "2"})["e_t"].get<double>(), 0, 1e-12);
    ASSERT_NEAR(run_json({"et", "--named", "g1", "--n", "2"})["e_t"].get<double>(), 1, 1e-12);
    ASSERT_NEAR(run_json({"et", "--named", "w", "--n", "2", "--side", "last"})["e_t"].get<double>(), 0, 1e-12);

    CliRun text = run({"et", "--named", "ghz+", "--n", "2"});
    ASSERT_NE(text.out.find("L: 8\nE_T: 0.5\n"), std::string::npos);
}

TEST(cli_et, errors) {
    std::string odd = write_file("odd.json", R"({"qubits": 1, "amplitudes": [[1, 0], [0, 0]]})");
    ASSERT_EQ(run({"et", "--state-file", odd}).code, cli::kExitUsage);
    ASSERT_EQ(run({"et", "--named", "nope", "--n", "2"}).code, cli::kExitUsage);
    ASSERT_EQ(run({"et", "--named", "w", "--n", "2", "--side", "middle"}).code, cli::kExitUsage);
    ASSERT_EQ(run({"et", "--random-state", "--n", "5"}).code, cli::kExitUsage);
}

TEST(cli_concurrence, worked_values) {
    auto g1 = run_json({"concurrence", "--named", "g1", "--n", "2"});
    ASSERT_NEAR(g1["concurrence"].get<double>(), 1, 1e-12);
    ASSERT_NEAR(g1["concurrence_f"].get<double>(), 1, 1e-12);
    ASSERT_NEAR(g1["concurrence_magic"].get<double>(), 1, 1e-12);
    ASSERT_LT(g1["max_discrepancy"].get<double>(), 1e-10);

    std::string zero = write_file(
        "zero.json",
        R"({"qubits": 4, "amplitudes": [[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],)"
        R"([0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]]})");
    ASSERT_NEAR(run_json({"concurrence", "--state-file", zero})["concurrence"].get<double>(), 0, 1e-12);

    for (const char *seed : {"1", "2", "3"}) {
        auto product = run_json({"concurrence", "--random-product", "--n", "2", "--state-seed", seed});
        ASSERT_LE(product["concurrence"].get<double>(), 1e-10);
    }

    auto six = run_json({"concurrence", "--random-state", "--n", "3", "--state-seed", "9"});
    ASSERT_EQ(six["qubits"], 6);
    ASSERT_FALSE(six.contains("concurrence_f"));
    ASSERT_EQ(run({"concurrence", "--named", "g1", "--n", "2"}).out.rfind("qubits: 4\nconcurrence: 1\n", 0), 0);
}

TEST(cli_concurrence, odd_qubit_count_is_refused) {
    std::string odd = write_file("odd3.json", R"({"qubits": 1, "amplitudes": [[0, 0], [1, 0]]})");
    CliRun r = run({"concurrence", "--state-file", odd});
    ASSERT_EQ(r.code, cli::kExitUsage);
    ASSERT_FALSE(r.err.empty());
}

TEST(cli_selftest, passes) {
    CliRun r = run({"selftest"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.out;
    ASSERT_EQ(r.out.find("FAIL"), std::string::npos);
    auto doc = run_json({"selftest"});
    ASSERT_TRUE(doc.is_object());
}
