// Copyright 2026 The wreathkit Authors
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

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "wreathkit/cli.hpp"

namespace wreathkit {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(WREATHKIT_TEST_DATA) + "/" + name; }

TEST(Cli, TowerSizes) {
  const auto pa = run({"tower", "pa", "C2,C2,C2", "--level", "3", "--json"});
  ASSERT_EQ(pa.code, kExitOk) << pa.err;
  const auto j = nlohmann::json::parse(pa.out);
  EXPECT_EQ(j["degree"], "16");
  EXPECT_EQ(j["order"], "128");

  const auto ia = nlohmann::json::parse(run({"tower", "ia", "C3,C2", "--json"}).out);
  EXPECT_EQ(ia["degree"], "6");
  EXPECT_EQ(ia["order"], "18");

  const auto big = nlohmann::json::parse(run({"tower", "pa", "C2", "--level", "5", "--json"}).out);
  EXPECT_EQ(big["degree"], "2^65536");
  EXPECT_EQ(big["order"], "2^65559");

  const auto flat = run({"tower", "pa", "C2,C3", "--flatten"});
  EXPECT_EQ(flat.code, kExitOk);
  EXPECT_NE(flat.out.find("(matches)"), std::string::npos);
}

TEST(Cli, EmbedKinds) {
  const auto cor = run({"embed", "cor35", "--seq", "C2,C2,C2", "--level", "2", "--json"});
  ASSERT_EQ(cor.code, kExitOk) << cor.err;
  const auto j = nlohmann::json::parse(cor.out);
  EXPECT_EQ(j["pass"], true);

  const auto thm = run({"embed", "thmC", "--spec", std::string(WREATHKIT_TEST_DATA) + "/const-C2.json", "--json"});
  ASSERT_EQ(thm.code, kExitOk) << thm.err;
  EXPECT_EQ(nlohmann::json::parse(thm.out)["details"]["m"], (nlohmann::json{2, 3}));

  EXPECT_EQ(run({"embed", "lem41", "--H1", "C2", "--G1", "S3", "--H2", "C2", "--G2", "S3"}).code, kExitOk);
  EXPECT_EQ(run({"embed", "lem42", "--H", "C2", "--G", "S3", "--K", "C3"}).code, kExitOk);
  EXPECT_EQ(run({"embed", "prop43", "--seq", "C2,C3", "--m", "2", "--level", "1"}).code, kExitOk);
}

TEST(Cli, Prop34GammaAndDegree) {
  const std::vector<std::string> base{"embed", "prop34", "--S", "C2", "--H", "C2", "--G", "perm(4):(0 1)(2 3)"};
  auto good = base;
  good.insert(good.end(), {"--gamma", "0 2;1 3", "--r", "2"});
  const auto ok = run(good);
  EXPECT_EQ(ok.code, kExitOk) << ok.err;

  auto literal = base;
  literal.insert(literal.end(), {"--gamma", "0 1;2 3", "--r", "2"});
  const auto bad = run(literal);
  EXPECT_EQ(bad.code, kExitError);
  EXPECT_NE(bad.err.find("not a P-embedding"), std::string::npos);

  auto small = base;
  small.insert(small.end(), {"--gamma", "0 2;1 3", "--r", "1"});
  EXPECT_EQ(run(small).code, kExitError);
}

TEST(Cli, VerifyRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "wreathkit-cli-roundtrip.json";
  const auto built = run({"embed", "prop34", "--S", "C2", "--H", "C2", "--G", "perm(4):(0 1)(2 3)", "--gamma", "0 2;1 3",
                          "--out", path.string()});
  ASSERT_EQ(built.code, kExitOk) << built.err;
  const auto v = run({"verify", path.string()});
  EXPECT_EQ(v.code, kExitOk) << v.err;
  std::filesystem::remove(path);
  EXPECT_EQ(run({"verify", "/nonexistent/file.json"}).code, kExitError);
}

TEST(Cli, CoHopfExitCodes) {
  EXPECT_EQ(run({"cohopf", data("const-A5.json")}).code, kExitOk);
  EXPECT_EQ(run({"cohopf", data("distinct-psl2.json")}).code, kExitOk);
  EXPECT_EQ(run({"cohopf", data("a6-then-psl2.json")}).code, kExitUnknown);
  const auto s4 = run({"cohopf", data("const-S4.json"), "--json"});
  EXPECT_EQ(s4.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(s4.out)["outcome"], "non-co-Hopfian");
}

TEST(Cli, Kaloujnine) {
  EXPECT_EQ(run({"kaloujnine", data("series-s3.json")}).code, kExitOk);
  EXPECT_EQ(run({"kaloujnine", data("series-c4.json"), "--policy", "max"}).code, kExitOk);
  EXPECT_EQ(run({"kaloujnine", data("series-s3.json"), "--pipeline"}).code, kExitOk);
  EXPECT_EQ(run({"kaloujnine", data("series-s3.json"), "--literal"}).code, kExitOk);
  EXPECT_EQ(run({"kaloujnine", data("series-a4-bad.json")}).code, kExitError);
}

TEST(Cli, MiscCommands) {
  const auto u = run({"universal-seq", "--reps", "A5,A6,C2", "--length", "6"});
  EXPECT_EQ(u.code, kExitOk);
  EXPECT_NE(u.out.find("A5"), std::string::npos);
  EXPECT_EQ(run({"catalog"}).code, kExitOk);
  EXPECT_EQ(run({"frobnicate"}).code, kExitError);
  EXPECT_EQ(run({"tower", "xx", "C2"}).code, kExitError);
  EXPECT_EQ(run({"tower", "pa", "Q8"}).code, kExitError);
}

}  // namespace
}  // namespace wreathkit
