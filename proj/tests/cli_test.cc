// Copyright 2026 The Verity Authors.
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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

namespace {

const std::string kFixtures = VERITY_FIXTURE_DIR;
const std::string kInput = "Type(x)=Restaurant & Food(x)=Italian & Price(x)=Low";

struct CliRun {
  int status = -1;
  std::string out;
  std::string err;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'') {
      q += "'\\''";
    } else {
      q += c;
    }
  }
  return q + "'";
}

CliRun run(const std::vector<std::string>& args, const std::string& env = "") {
  auto err_path = std::filesystem::temp_directory_path() /
                  ("verity_cli_err_" + std::to_string(::getpid()));
  std::string cmd = env + " " + quote(VERITY_CLI);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>" + quote(err_path.string());
  CliRun r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) {
    r.out.append(buf.data(), n);
  }
  int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream err(err_path);
  std::stringstream ss;
  ss << err.rdbuf();
  r.err = ss.str();
  std::filesystem::remove(err_path);
  return r;
}

std::string restaurant() { return kFixtures + "/restaurant.schema"; }

TEST(CliClassify, TooWeak) {
  CliRun r = run({"--schema", restaurant(), "classify", kInput,
               "Type(x)=Restaurant & Food(x)=Italian"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1a-too-weak\n");
}

TEST(CliClassify, LegacyLabels) {
  CliRun r = run({"--schema", restaurant(), "classify", "--legacy", kInput,
               "Type(x)=Restaurant & Food(x)=Norwegian & Price(x)=Low"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "3b-conflicting\ndusek: hallucination+omission\nji: intrinsic\n");
}

TEST(CliClassify, VerboseFacts) {
  CliRun r = run({"--schema", restaurant(), "--verbose", "--oracle", "classify",
               kInput, "Type(x)=Restaurant & Style(x)=Vegetarian"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "3a-independent\n"
            "input consistent: true\n"
            "input |= output: false\n"
            "output |= input: false\n"
            "|= output: false\n"
            "|= !output: false\n"
            "input |= !output: false\n"
            "dusek: hallucination+omission\n"
            "ji: extrinsic\n");
}

TEST(CliClassify, InconsistentInputLegacy) {
  CliRun r = run({"--schema", restaurant(), "--legacy", "classify", "false",
               "true"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "inconsistent-input\ndusek: n/a\nji: n/a\n");
}

TEST(CliClassify, MalformedFormula) {
  CliRun r = run({"--schema", restaurant(), "classify", kInput, "Food(x)=="});
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("SyntaxError"), std::string::npos) << r.err;
}

TEST(CliClassify, MissingSchema) {
  EXPECT_EQ(run({"classify", "true", "true"}).status, 2);
  EXPECT_EQ(run({"--schema", kFixtures + "/nope.schema", "classify", "true",
                 "true"}).status,
            2);
}

TEST(CliClassify, ResourceLimit) {
  CliRun r = run({"--schema", restaurant(), "--limit", "5", "classify", kInput,
               kInput});
  EXPECT_EQ(r.status, 3);
  CliRun env = run({"--schema", restaurant(), "classify", kInput, kInput},
                "VERITY_LIMIT=5");
  EXPECT_EQ(env.status, 3);
  // The flag wins over the environment.
  CliRun both = run({"--schema", restaurant(), "--limit", "1000", "classify",
                  kInput, kInput},
                 "VERITY_LIMIT=5");
  EXPECT_EQ(both.status, 0);
  EXPECT_EQ(run({"--schema", restaurant(), "classify", kInput, kInput},
                "VERITY_LIMIT=lots").status,
            2);
}

TEST(CliCheck, Relations) {
  std::string temp = kFixtures + "/temperature.schema";
  EXPECT_EQ(run({"--schema", temp, "check", "entails", "Temperature(d)>22",
                 "Temperature(d)>21"}).out,
            "true\n");
  CliRun counter = run({"--schema", temp, "--verbose", "check", "entails",
                     "Temperature(d)>21", "Temperature(d)>22"});
  EXPECT_EQ(counter.out, "false\ncountermodel: Temperature(d)=21.5\n");
  CliRun sat = run({"--schema", temp, "-v", "--oracle", "check", "sat",
                 "Temperature(d) > 22 & Temperature(d) < 25"});
  EXPECT_EQ(sat.out, "true\nwitness: Temperature(d)=23.5\n");
  EXPECT_EQ(run({"--schema", restaurant(), "check", "taut",
                 "Food(x)=Italian | !(Food(x)=Italian)"}).out,
            "true\n");
  EXPECT_EQ(run({"--schema", restaurant(), "check", "contra",
                 "Style(x)=Vegetarian & Style(x)=Steakhouse"}).out,
            "true\n");
  EXPECT_EQ(run({"--schema", restaurant(), "check", "sat", "true", "true"})
                .status,
            2);
  EXPECT_EQ(run({"--schema", restaurant(), "check", "implies", "true"}).status,
            2);
}

TEST(CliReport, TextTable) {
  CliRun r = run({"--schema", restaurant(), "report", kFixtures + "/ex1_4.jsonl"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "category                  count  frequency\n"
            "0-well-matched                0     0.0000\n"
            "1a-too-weak                   1     0.2500\n"
            "1b-tautologous                0     0.0000\n"
            "2a-too-strong                 1     0.2500\n"
            "2b-self-contradictory         0     0.0000\n"
            "3a-independent                1     0.2500\n"
            "3b-conflicting                1     0.2500\n"
            "inconsistent-input            0     0.0000\n"
            "total                         4     1.0000\n"
            "resource-limited              0           \n"
            "parse-failures                0           \n"
            "gold-matched                  4     1.0000\n");
}

TEST(CliReport, BadLineStillReports) {
  CliRun r = run({"--schema", restaurant(), "--format", "json", "report",
               kFixtures + "/ex1_4_bad_line.jsonl"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"parse_failures\": 1"), std::string::npos) << r.out;
  EXPECT_NE(r.err.find("ex1_4_bad_line.jsonl:3:"), std::string::npos) << r.err;
}

TEST(CliReport, ParallelMatchesSerial) {
  CliRun serial = run({"--schema", restaurant(), "report", "--format", "csv",
                    kFixtures + "/ex1_4.jsonl"});
  CliRun parallel = run({"--schema", restaurant(), "report", "--format", "csv",
                      "--jobs", "3", "--oracle", kFixtures + "/ex1_4.jsonl"});
  EXPECT_EQ(serial.status, 0);
  EXPECT_EQ(serial.out, parallel.out);
}

TEST(CliReport, Errors) {
  EXPECT_EQ(run({"--schema", restaurant(), "report",
                 kFixtures + "/missing.jsonl"}).status,
            2);
  EXPECT_EQ(run({"--schema", restaurant(), "--format", "xml", "report",
                 kFixtures + "/ex1_4.jsonl"}).status,
            4);
}

TEST(CliBdi, Fixtures) {
  CliRun hurricane = run({"--oracle", "bdi", kFixtures + "/hurricane.json"});
  EXPECT_EQ(hurricane.status, 0);
  EXPECT_EQ(hurricane.out, "withholding: Hurricane(today)=Yes\n");
  EXPECT_EQ(run({"bdi", kFixtures + "/full_disclosure.json"}).out,
            "no findings\n");
  CliRun employment = run({"--oracle", "bdi", kFixtures + "/employment.json"});
  EXPECT_EQ(employment.out,
            "half-truth: Position(s)=Permanent => Solvency(c)=Healthy\n");
}

TEST(CliBdi, InvalidScenario) {
  auto path = std::filesystem::temp_directory_path() / "verity_bad_scenario.json";
  {
    std::ofstream out(path);
    out << R"json({"schema": ")json" << kFixtures
        << R"json(/employment.schema", "communicated": "true",
        "hearer_beliefs": "Position(s)=Permanent & Position(s)=Temporary",
        "world": {"Position(s)": "Permanent"}})json";
  }
  CliRun r = run({"bdi", path.string()});
  std::filesystem::remove(path);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("inconsistent"), std::string::npos) << r.err;
  EXPECT_EQ(run({"bdi", kFixtures + "/none.json"}).status, 2);
}

TEST(Cli, Usage) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args = {"--schema", restaurant(), "--format",
                                   "json", "report", kFixtures + "/ex1_4.jsonl"};
  EXPECT_EQ(run(args).out, run(args).out);
}

}  // namespace
