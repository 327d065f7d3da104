// Copyright 2026 The Orthograph Authors
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

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "orthograph/cli.hpp"

namespace orthograph {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_command(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kPath = "vertices a b c d\nedges a-b b-c c-d\n";
const char* kS3 = "vertices a b d\nedges a-b\n";

TEST(Cli, LatticeJson) {
  const CliRun r = run({"lattice", "--format", "json"}, kPath);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["size"], 9);
  EXPECT_EQ(j["height"], 4);
  EXPECT_EQ(r.out, run({"lattice", "--format", "json"}, kPath).out);
}

TEST(Cli, ExtendJson) {
  const CliRun r = run({"extend", "--link", "b,d", "--format", "json"}, kS3);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["h_L"], 2);
  EXPECT_EQ(j["h_Ltilde"], 3);
  EXPECT_EQ(j["h_Lbar"], 4);
  EXPECT_EQ(j["gamma_iso"], false);
}

TEST(Cli, CompressDot) {
  const CliRun r = run({"compress", "--dot"}, "vertices a b c\nedges a-b b-c a-c\n");
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.find("doublecircle"), std::string::npos);
  EXPECT_NE(r.out.find("label=\"3\""), std::string::npos);
  EXPECT_NE(r.out.find("c0 -- c0"), std::string::npos);
}

TEST(Cli, InflateAndDeflate) {
  const CliRun inflate = run({"inflate", "--kind", "abelian", "--witness", "b"}, kPath);
  ASSERT_EQ(inflate.code, kExitOk) << inflate.err;
  EXPECT_NE(inflate.out.find("vertices a b c d t"), std::string::npos);
  const CliRun deflate = run({"deflate", "--kind", "abelian", "--vertex", "t"}, inflate.out);
  ASSERT_EQ(deflate.code, kExitOk) << deflate.err;
  EXPECT_NE(deflate.out.find("vertices a b c d"), std::string::npos);
  const CliRun none = run({"deflate", "--kind", "abelian", "--vertex", "a", "--format", "json"},
                       kPath);
  EXPECT_EQ(nlohmann::json::parse(none.out)["deflatable"], false);
}

TEST(Cli, AutAndCheck) {
  const CliRun aut = run({"aut", "--format", "json", "--assert-order", "24"}, "C~\n");
  ASSERT_EQ(aut.code, kExitOk) << aut.err;
  EXPECT_EQ(nlohmann::json::parse(aut.out)["aut_order"], 24);
  const CliRun check = run({"check", "--format", "json"}, kPath);
  EXPECT_EQ(check.code, kExitOk) << check.err;
  EXPECT_EQ(nlohmann::json::parse(check.out)["ok"], true);
  const CliRun sweep = run({"check", "--exhaustive-n", "3", "--format", "json"}, kPath);
  EXPECT_EQ(sweep.code, kExitOk) << sweep.err;
}

TEST(Cli, ReadsFiles) {
  const std::string path = ::testing::TempDir() + "orthograph_cli_p4.txt";
  std::ofstream(path) << kPath;
  const CliRun r = run({"lattice", "--in", path, "--assert-height", "4"}, "");
  EXPECT_EQ(r.code, kExitOk) << r.err;
  std::remove(path.c_str());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"lattice", "--assert-height", "3"}, kPath).code, kExitAssertion);
  EXPECT_EQ(run({"extend", "--link", "b,d", "--assert-gamma-iso", "true"}, kS3).code,
            kExitAssertion);
  EXPECT_EQ(run({"lattice"}, "vertices a a\nedges\n").code, kExitUsage);
  EXPECT_EQ(run({"bogus"}, kPath).code, kExitUsage);
  EXPECT_EQ(run({}, kPath).code, kExitUsage);
  EXPECT_EQ(run({"extend"}, kPath).code, kExitUsage);
  EXPECT_EQ(run({"extend", "--link", "z"}, kPath).code, kExitUsage);
  EXPECT_EQ(run({"lattice", "--format", "xml"}, kPath).code, kExitUsage);
  EXPECT_EQ(run({"lattice", "--in", "/nonexistent/graph"}, "").code, kExitUsage);
  const CliRun parse = run({"lattice"}, "vertices a b\nedges a-c\n");
  EXPECT_NE(parse.err.find("line 2"), std::string::npos);
}

}  // namespace
}  // namespace orthograph
