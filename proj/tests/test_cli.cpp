#include <gtest/gtest.h>

#include <sstream>

#include "epglab/cli.hpp"

using namespace epglab;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "epglab");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, LambdaQ8Auto) {
  const CliRun r = run({"lambda", "Q8", "--method", "auto", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["lambda"], 9);
  EXPECT_EQ(j["method"], "Theorem");
  ASSERT_TRUE(j["labeling"].is_array());
  ASSERT_TRUE(j["cover"].is_array());
  // re-verify the witness from the JSON alone
  const FiniteGroup q8 = build_group("Q8");
  const Graph e = enhanced_power_graph(q8);
  Labeling f{j["labeling"].get<std::vector<int>>()};
  EXPECT_TRUE(verify_labeling(e, f));
  PathCovering c{j["cover"].get<std::vector<std::vector<int>>>()};
  EXPECT_TRUE(verify_path_covering(complement(e), c));
  EXPECT_EQ(f.span(), 9);
}

TEST(Cli, GroupInfo) {
  const CliRun r = run({"group", "info", "Z3 x Z3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["order"], 9);
  EXPECT_EQ(j["exponent"], 3);
  EXPECT_EQ(j["maximal_cyclic"], 4);
  EXPECT_EQ(j["C"]["3"], 4);
  EXPECT_EQ(j["dom_size"], 1);
  const CliRun t = run({"group", "info", "Z3 x Z3"});
  EXPECT_NE(t.out.find("C_3=4"), std::string::npos);
  EXPECT_NE(t.out.find("Dom size  1"), std::string::npos);
}

TEST(Cli, VerifyAll) {
  const CliRun r = run({"verify", "all", "--max-order", "16"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  const CliRun j = run({"verify", "pclass", "--max-order", "16", "--format", "json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_TRUE(Json::parse(j.out)["passed"].get<bool>());
}

TEST(Cli, VerifyGeorgesUsesSeed) {
  const CliRun a = run({"verify", "georges", "--seed", "5", "--format", "json"});
  const CliRun b = run({"verify", "georges", "--seed", "5", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out)["seed"], 5);
}

TEST(Cli, Deterministic) {
  for (const char* spec : {"D12", "Q16", "Z3 x Z3 x Z2", "Perm[(1 2 3);(1 2)(3 4)]"}) {
    const CliRun a = run({"lambda", spec, "--format", "json"});
    const CliRun b = run({"lambda", spec, "--format", "json"});
    EXPECT_EQ(a.code, 0) << spec << a.err;
    EXPECT_EQ(a.out, b.out) << spec;
  }
}

TEST(Cli, Methods) {
  EXPECT_EQ(Json::parse(run({"lambda", "Z2 x Z2", "--method", "exact"}).out)["lambda"], 4);
  EXPECT_EQ(Json::parse(run({"lambda", "Z2 x Z2", "--method", "oracle"}).out)["lambda"], 4);
  EXPECT_EQ(Json::parse(run({"lambda", "Z2 x Z2", "--method", "pathcover"}).out)["lambda"], 4);
  EXPECT_EQ(Json::parse(run({"lambda", "Z5", "--method", "theorem"}).out)["lambda"], 8);
  const CliRun d6 = run({"lambda", "D6"});
  EXPECT_EQ(d6.code, 0);
  EXPECT_EQ(Json::parse(d6.out)["method"], "PathCover");
  const CliRun text = run({"lambda", "D8", "--format", "text"});
  EXPECT_NE(text.out.find("lambda  8"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"lambda", "X9"}).code, kExitInput);
  EXPECT_EQ(run({"lambda", "D6", "--method", "theorem"}).code, kExitInput);
  EXPECT_EQ(run({"lambda", "Q8", "--method", "nope"}).code, kExitInput);
  EXPECT_EQ(run({"lambda", "Q16", "--method", "oracle"}).code, kExitLimit);
  EXPECT_EQ(run({"lambda", "Z5 x Z5", "--method", "pathcover"}).code, kExitLimit);
  EXPECT_EQ(run({}).code, kExitInput);
  EXPECT_EQ(run({"graph", "Z4", "--format", "png"}).code, kExitInput);
  const CliRun bounds = run({"lambda", "Z3 x Z3 x Z2 x Z2 x Z2", "--method", "exact"});
  EXPECT_EQ(bounds.code, kExitLimit);
  EXPECT_TRUE(Json::parse(bounds.out)["lambda"].is_null());
  EXPECT_FALSE(run({"lambda", "X9"}).err.empty());
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, GraphExport) {
  const CliRun j = run({"graph", "Z2 x Z2", "--format", "json"});
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(Json::parse(j.out)["edges"].size(), 3u);
  const CliRun c = run({"graph", "Z2 x Z2", "--complement", "--format", "json"});
  EXPECT_EQ(Json::parse(c.out)["edges"].size(), 3u);
  const CliRun p = run({"graph", "Z6", "--power", "--format", "json"});
  EXPECT_EQ(Json::parse(p.out)["edges"].size(), 13u);
  const CliRun d = run({"graph", "Q8"});
  EXPECT_EQ(d.out.rfind("graph ", 0), 0u);
}

TEST(Cli, TableFile) {
  const std::string path = std::string("@") + EPGLAB_SOURCE_DIR + "/samples/s3.table";
  const CliRun r = run({"group", "info", path, "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["order"], 6);
  EXPECT_EQ(Json::parse(run({"lambda", path}).out)["lambda"], 6);
  EXPECT_EQ(run({"lambda", "@/no/such/file"}).code, kExitInput);
}
