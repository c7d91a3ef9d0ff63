// Copyright 2026 The oaqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace oaqec {
namespace {

std::string data(const std::string& name) { return std::string(OAQEC_TEST_DATA_DIR) + "/" + name; }

struct Invocation {
  int status = -1;
  std::string out;
  std::string err;
  Json report() const { return Json::parse(out); }
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "oaqec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Invocation r;
  r.status = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

TEST(Cli, ValidateTracePreserving) {
  const Invocation r = invoke({"validate", "--channel", data("spontaneous_emission.json")});
  EXPECT_EQ(r.status, 0);
  const Json j = r.report();
  EXPECT_EQ(j["command"], "validate");
  EXPECT_TRUE(j["result"]["trace_preserving"].get<bool>());
  EXPECT_NEAR(j["result"]["unital_defect"].get<double>(), 1.0, 1e-12);
  for (const char* key : {"inputs", "tol", "seed", "residuals", "elapsed_ms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Cli, ValidateNotTracePreserving) {
  const Invocation r = invoke({"validate", "--channel", data("half_identity2.json")});
  EXPECT_EQ(r.status, 1);
  EXPECT_FALSE(r.report()["result"]["trace_preserving"].get<bool>());
}

TEST(Cli, Conserved) {
  const Invocation yes = invoke({"conserved", "--channel", data("spontaneous_emission.json"),
                          "--projector", data("ground_projector.json"), "--algebra",
                          data("ground_algebra.json")});
  EXPECT_EQ(yes.status, 0);
  EXPECT_TRUE(yes.report()["result"]["verdict"].get<bool>());
  const Invocation no = invoke({"conserved", "--channel", data("spontaneous_emission.json"),
                         "--algebra", data("qubit_algebra.json")});
  EXPECT_EQ(no.status, 1);
  EXPECT_FALSE(no.report()["result"]["verdict"].get<bool>());
}

TEST(Cli, Correctable) {
  const Invocation r = invoke({"correctable", "--channel", data("bit_flip.json"), "--projector",
                        data("bit_flip_projector.json"), "--algebra",
                        data("bit_flip_algebra.json")});
  EXPECT_EQ(r.status, 0);
  const Json j = r.report();
  EXPECT_TRUE(j["result"]["verdict"].get<bool>());
  EXPECT_LE(j["residuals"]["definition"].get<double>(), 1e-8);
}

TEST(Cli, Largest) {
  const Invocation c = invoke({"largest", "--channel", data("identity2.json"), "--mode", "correctable"});
  EXPECT_EQ(c.status, 0);
  EXPECT_EQ(c.report()["result"]["algebra_dim"], 4);
  const Invocation s = invoke({"largest", "--channel", data("spontaneous_emission.json")});
  EXPECT_EQ(s.status, 0);
  EXPECT_EQ(s.report()["result"]["algebra_dim"], 1);
  EXPECT_EQ(invoke({"largest", "--channel", data("identity2.json"), "--mode", "other"}).status, 2);
}

TEST(Cli, Structure) {
  const Invocation r = invoke({"structure", "--algebra", data("stabilizer_generators.json")});
  EXPECT_EQ(r.status, 0);
  const Json j = r.report();
  EXPECT_EQ(j["result"]["algebra_dim"], 4);
  EXPECT_EQ(j["result"]["center_dim"], 4);
}

TEST(Cli, RecoverAndLift) {
  const std::vector<std::string> code{"--channel", data("bit_flip.json"), "--projector",
                                      data("bit_flip_projector.json"), "--algebra",
                                      data("bit_flip_algebra.json")};
  std::vector<std::string> rec{"recover"};
  rec.insert(rec.end(), code.begin(), code.end());
  const Invocation r = invoke(rec);
  EXPECT_EQ(r.status, 0);
  EXPECT_LE(r.report()["residuals"]["heisenberg"].get<double>(), 1e-8);

  std::vector<std::string> lift{"lift"};
  lift.insert(lift.end(), code.begin(), code.end());
  lift.insert(lift.end(), {"--recovery", data("bit_flip_recovery.json")});
  const Invocation l = invoke(lift);
  EXPECT_EQ(l.status, 0);
  EXPECT_LE(l.report()["residuals"]["all_states"].get<double>(), 1e-8);
}

TEST(Cli, RecoverUncorrectableFails) {
  const Invocation r = invoke({"recover", "--channel", data("spontaneous_emission.json"), "--algebra",
                        data("qubit_algebra.json")});
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(r.report()["result"].contains("error"));
}

TEST(Cli, Infoflow) {
  const Invocation r = invoke({"infoflow", "--unitary", data("cnot.json")});
  EXPECT_EQ(r.status, 0);
  const Json j = r.report();
  EXPECT_TRUE(j["result"]["nontrivial_duplicated_observable"].get<bool>());
  const Invocation bad = invoke({"infoflow", "--unitary", data("not_unitary.json")});
  EXPECT_EQ(bad.status, 2);
  const Invocation state = invoke({"infoflow", "--unitary", data("cnot.json"), "--apparatus-state",
                            data("apparatus_zero.json")});
  EXPECT_EQ(state.status, 0);
}

TEST(Cli, Demos) {
  for (const char* name : {"spontaneous-emission", "qutrit-se", "stabilizer-z1z2", "pauli-g",
                           "bitflip3", "hybrid-address", "cnot-infoflow"}) {
    const Invocation r = invoke({"demo", name, "--no-timing"});
    EXPECT_EQ(r.status, 0) << name << ": " << r.err;
  }
  EXPECT_EQ(invoke({"demo", "nope"}).status, 2);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(invoke({}).status, 2);
  EXPECT_EQ(invoke({"validate"}).status, 2);
  EXPECT_EQ(invoke({"validate", "--channel", data("missing.json")}).status, 2);
  const Invocation malformed = invoke({"validate", "--channel", data("malformed.json")});
  EXPECT_EQ(malformed.status, 2);
  EXPECT_NE(malformed.err.find("line"), std::string::npos);
  const Invocation ragged = invoke({"validate", "--channel", data("ragged.json")});
  EXPECT_EQ(ragged.status, 2);
  EXPECT_TRUE(ragged.out.empty());
  EXPECT_EQ(invoke({"validate", "--channel", data("missing_field.json")}).status, 2);
  EXPECT_EQ(invoke({"--tol", "0.5", "validate", "--channel", data("identity2.json")}).status, 2);
  EXPECT_EQ(invoke({"--tol", "0", "validate", "--channel", data("identity2.json")}).status, 2);
  EXPECT_EQ(invoke({"conserved", "--channel", data("spontaneous_emission.json"), "--projector",
                    data("ground_projector.json"), "--algebra", data("qubit_algebra.json")})
                .status,
            2);
}

TEST(Cli, ByteIdenticalWithoutTiming) {
  const std::vector<std::string> args{"infoflow", "--unitary", data("cnot.json"), "--seed", "3",
                                      "--no-timing"};
  const Invocation a = invoke(args);
  const Invocation b = invoke(args);
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.report()["elapsed_ms"].get<double>(), 0.0);
}

TEST(Cli, WritesOutputFile) {
  const std::string path = ::testing::TempDir() + "oaqec_cli_report.json";
  const Invocation r = invoke({"-o", path, "validate", "--channel", data("identity2.json")});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(Json::parse(read_json_file(path).dump())["command"], "validate");
  std::remove(path.c_str());
}

TEST(Cli, Help) {
  const Invocation r = invoke({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("largest"), std::string::npos);
}

}  // namespace
}  // namespace oaqec
