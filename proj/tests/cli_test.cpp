// Copyright 2026 The omlprob Authors
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
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

struct Run {
  std::string out;
  int code = -1;
};

Run run(const std::string& args) {
  const std::string cmd = "cd '" OMLPROB_FIXTURE_DIR "' && " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

const std::string kCli = "'" OMLPROB_CLI "'";

Run cli(const std::string& args) { return run(kCli + " " + args); }

void expect_json_lines(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    EXPECT_TRUE(nlohmann::json::accept(line)) << line;
    ++count;
  }
  EXPECT_GT(count, 0u);
}

TEST(Cli, OrthomodularCheckOnGeneratedLattice) {
  const auto r = run(kCli + " gen mo 2 | " + kCli + " check --law om");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("holds"), std::string::npos);
}

TEST(Cli, BooleanVertices) {
  const auto r = run(kCli + " gen boolean 2 | " + kCli + " states vertices -");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("# vertices 2", 0), 0u) << r.out;
}

TEST(Cli, ViolationWitness) {
  const auto r = cli("check o6.oml --law om --format json-lines");
  EXPECT_EQ(r.code, 1);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_FALSE(doc["holds"].get<bool>());
  EXPECT_FALSE(doc["witness"].empty());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("gen mo").code, 2);
  EXPECT_EQ(cli("parse loop3.gre").code, 2);
  EXPECT_EQ(cli("parse no-such-file.oml").code, 2);
  EXPECT_EQ(cli("gen boolean 25").code, 3);
  EXPECT_EQ(cli("states feasible stateless.oml").code, 1);
  EXPECT_EQ(cli("states feasible mo2.oml").code, 0);
  EXPECT_EQ(cli("blocks o6.oml").code, 1);
  EXPECT_EQ(cli("cox residual sumsq --n 65").code, 1);
  EXPECT_EQ(cli("cox residual sum --n 65").code, 0);
  EXPECT_EQ(cli("cox extract sumsq --n 65").code, 1);
}

TEST(Cli, PipedRoundTripIsIdentity) {
  for (const std::string gen : {"gen mo 3", "gen boolean 3"}) {
    const auto direct = cli(gen);
    const auto piped = run(kCli + " " + gen + " | " + kCli + " serialize | " + kCli + " parse");
    EXPECT_EQ(piped.code, 0);
    EXPECT_EQ(piped.out, direct.out) << gen;
  }
  const auto gre = cli("serialize pentagon.gre");
  EXPECT_EQ(gre.code, 0);
  const auto again = run(kCli + " serialize pentagon.gre | " + kCli + " serialize -");
  EXPECT_EQ(again.out, gre.out);
}

TEST(Cli, DeterministicOutput) {
  for (const std::string args :
       {"states random mo3.oml --seed 9", "hilbert demo closure --seed 3", "hilbert demo qutrit --seed 1",
        "states vertices boolean3.oml --format json-lines", "defect super mo2.oml"}) {
    const auto a = cli(args);
    const auto b = cli(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_FALSE(a.out.empty()) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
  EXPECT_NE(cli("states random mo3.oml --seed 9").out, cli("states random mo3.oml --seed 10").out);
}

TEST(Cli, JsonLinesParse) {
  for (const std::string args :
       {"check mo2.oml --law all", "blocks pentagon.gre", "states vertices mo2.oml", "states feasible stateless.oml",
        "defect tp mo2.oml mo2_total_probability.state a1 a2", "hilbert demo qubit --seed 2",
        "cox residual sum5.grid", "cox extract sumprod --n 129", "cox transport sum --n 129 --map square"}) {
    expect_json_lines(cli(args + " --format json-lines").out);
  }
}

TEST(Cli, VerticesJsonReconstructsStates) {
  const auto r = cli("states vertices mo2.oml --format json-lines");
  std::istringstream in(r.out);
  std::string line;
  std::size_t vertices = 0;
  while (std::getline(in, line)) {
    const auto doc = nlohmann::json::parse(line);
    if (!doc.contains("values")) continue;
    ++vertices;
    const auto& v = doc["values"];
    ASSERT_EQ(v.size(), 6u);
    EXPECT_EQ(v[0], "0/1");
    EXPECT_EQ(v[5], "1/1");
  }
  EXPECT_EQ(vertices, 4u);
}

TEST(Cli, CoxWriteProducesReadableGrid) {
  const auto written = cli("cox transport sum --n 33 --map double --write -");
  ASSERT_EQ(written.code, 0);
  EXPECT_EQ(written.out.rfind("grid 33", 0), 0u) << written.out;
  EXPECT_EQ(run(kCli + " cox transport sum --n 33 --map double --write - | " + kCli + " cox residual -").code, 0);
}

}  // namespace
