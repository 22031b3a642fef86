#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fejer/cli.hpp"
#include "fejer/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fejer");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = fejer::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("fejer_cli_test_" + name);
}

const std::vector<std::string> kBoundSquare = {"bound", "--f", "x^2", "--fprime", "2*x", "--g", "1",
                                               "--a", "0", "--b", "1", "--kernel", "power:1"};
const std::vector<std::string> kVerifyUnit = {"verify-lemma", "--g", "1", "--a", "0", "--b", "1"};
const std::vector<std::string> kQuadAdaptive = {"quad", "--f", "exp(x)", "--g", "1", "--a", "0", "--b", "2",
                                                "--kernel", "power:1", "--tol", "0.05", "--adaptive"};

}  // namespace

TEST(Cli, BoundExample) {
  const auto r = run(kBoundSquare);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = fejer::Json::parse(r.out);
  EXPECT_NEAR(j["measured"].get<double>(), 1.0 / 6.0, 1e-9);
  EXPECT_EQ(j["bound"].get<double>(), 0.25);
  EXPECT_TRUE(j["satisfied"].get<bool>());
}

TEST(Cli, VerifyLemmaExample) {
  const auto r = run(kVerifyUnit);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = fejer::Json::parse(r.out);
  EXPECT_TRUE(j["all_satisfied"].get<bool>());
  EXPECT_EQ(j["checks"].size(), 7u);
  EXPECT_TRUE(j["skipped"].empty());
}

TEST(Cli, QuadAdaptiveExample) {
  const auto r = run(kQuadAdaptive);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = fejer::Json::parse(r.out);
  EXPECT_LE(j["result"]["error_bound"].get<double>(), 0.05);
  EXPECT_TRUE(j["adaptive"]["converged"].get<bool>());
  EXPECT_EQ(j["partition"].size(), j["intervals"].get<std::size_t>() + 1);
}

TEST(Cli, GoldenFilesAndDeterminism) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"bound_square", kBoundSquare}, {"verify_lemma_unit", kVerifyUnit}, {"quad_adaptive_exp", kQuadAdaptive}};
  for (const auto& [name, args] : cases) {
    const auto first = run(args);
    const auto second = run(args);
    EXPECT_EQ(first.out, second.out) << name;
    EXPECT_EQ(first.out, slurp(std::filesystem::path(FEJER_GOLDEN_DIR) / (name + ".json"))) << name;
  }
}

TEST(Cli, ViolationExitsOne) {
  // |f'| = sqrt(x) is not convex, but the /8 bound still holds here; force a violation with a
  // wrong Lipschitz constant instead.
  auto args = kBoundSquare;
  args.insert(args.end(), {"--variant", "lipschitz", "--K", "0.5"});
  const auto r = run(args);
  EXPECT_EQ(r.code, 1);
  const auto j = fejer::Json::parse(r.out);
  EXPECT_FALSE(j[0]["satisfied"].get<bool>());
  EXPECT_FALSE(j[0]["warnings"].empty());
}

TEST(Cli, InputErrorsNameTheField) {
  struct Case {
    std::vector<std::string> args;
    std::string field;
  };
  const std::vector<Case> cases = {
      {{"bound", "--f", "x^", "--a", "0", "--b", "1"}, "f:"},
      {{"bound", "--f", "x^2", "--g", "foo(x)", "--a", "0", "--b", "1"}, "g:"},
      {{"bound", "--f", "x^2", "--a", "0"}, "b:"},
      {{"bound", "--f", "x^2", "--a", "zero", "--b", "1"}, "a:"},
      {{"bound", "--f", "x^2", "--a", "1", "--b", "0"}, "b:"},
      {{"bound", "--f", "x^2", "--a", "0", "--b", "1", "--kernel", "power:-1"}, "kernel:"},
      {{"bound", "--f", "x^2", "--g", "x", "--a", "0", "--b", "1"}, "g:"},
      {{"bound", "--f", "x^2", "--a", "0", "--b", "1", "--variant", "nope"}, "variant:"},
      {{"bound", "--f", "x^2", "--a", "0", "--b", "1", "--variant", "s-convex", "--s", "2"}, "s:"},
      {{"bound", "--f", "x^2", "--a", "0", "--b", "1", "--abs-tol", "-1"}, "tolerances:"},
      {{"bound", "--f", "x^2", "--a", "0", "--b", "1", "--output", "xml"}, "output:"},
      {{"means", "--a", "1", "--b", "2", "--n", "0.5"}, "n:"},
      {{"moment", "--g", "2", "--a", "1", "--b", "2"}, "g:"},
      {{"quad", "--f", "x", "--a", "0", "--b", "1", "--partition", "0,0.7,0.5,1"}, "partition:"},
      {{"quad", "--f", "x", "--a", "0", "--b", "1", "--adaptive"}, "tol:"},
      {{"check-hconvex", "--phi", "x-1", "--a", "0", "--b", "1"}, "phi:"},
  };
  for (const auto& c : cases) {
    const auto r = run(c.args);
    EXPECT_EQ(r.code, 2) << c.args[0] << " " << r.err;
    EXPECT_NE(r.err.find("error: " + c.field), std::string::npos) << r.err;
  }
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"bound", "--unknown-flag", "1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ConfigFileWithFlagOverride) {
  const auto path = scratch("config.json");
  std::ofstream(path) << R"({"command": "bound", "problem": {"f": "x^2", "fprime": "2*x", "g": "1", "a": 0, "b": 1},
                            "kernel": {"kind": "power", "k": 1}, "tolerances": {"abs_tol": 1e-11}})";
  const auto from_file = run({"bound", "--config", path.string()});
  ASSERT_EQ(from_file.code, 0) << from_file.err;
  EXPECT_EQ(from_file.out, run(kBoundSquare).out);
  const auto overridden = run({"bound", "--config", path.string(), "--b", "2"});
  ASSERT_EQ(overridden.code, 0) << overridden.err;
  EXPECT_NEAR(fejer::Json::parse(overridden.out)["bound"].get<double>(), 2.0 * 2.0 * (0 + 4) / 8.0, 1e-12);
  EXPECT_EQ(run({"quad", "--config", path.string()}).code, 2);
  std::ofstream(path) << "{not json";
  EXPECT_EQ(run({"bound", "--config", path.string()}).code, 2);
  EXPECT_EQ(run({"bound", "--config", scratch("missing.json").string()}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, EnvironmentToleranceAndFlagPrecedence) {
  ::setenv("FEJER_TOL", "-3", 1);
  EXPECT_EQ(run(kBoundSquare).code, 2);
  auto args = kBoundSquare;
  args.insert(args.end(), {"--abs-tol", "1e-12"});
  EXPECT_EQ(run(args).code, 0);
  ::setenv("FEJER_TOL", "1e-9", 1);
  EXPECT_EQ(run(kBoundSquare).code, 0);
  ::unsetenv("FEJER_TOL");
}

TEST(Cli, OutputFormatsAndFile) {
  auto csv = kBoundSquare;
  csv.insert(csv.end(), {"--output", "csv"});
  EXPECT_EQ(run(csv).out, "label,measured,bound,slack,satisfied\nh_convex[power:1],0.166666666666667,0.25,"
                          "0.0833333333333334,true\n");
  auto text = kBoundSquare;
  text.insert(text.end(), {"--output", "text"});
  EXPECT_NE(run(text).out.find("[holds]"), std::string::npos);

  const auto path = scratch("report.json");
  auto to_file = kBoundSquare;
  to_file.insert(to_file.end(), {"--out", path.string()});
  const auto r = run(to_file);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(path), run(kBoundSquare).out);
  std::filesystem::remove(path);
}

TEST(Cli, MPlot) {
  const auto path = scratch("mplot.csv");
  const auto r = run({"verify-lemma", "--g", "1", "--a", "0", "--b", "1", "--mplot", path.string(),
                      "--mplot-grid", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(path), "t,M\n0,1\n0.5,0\n1,-1\n");
  std::filesystem::remove(path);
}

TEST(Cli, VerifyLemmaSkipsForAsymmetricWeight) {
  const auto r = run({"verify-lemma", "--g", "x", "--a", "0", "--b", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = fejer::Json::parse(r.out);
  EXPECT_FALSE(j["skipped"].empty());
  EXPECT_EQ(j["checks"].size(), 1u);
}

TEST(Cli, OtherCommands) {
  const auto means = run({"means", "--a", "1", "--b", "2", "--n", "3"});
  ASSERT_EQ(means.code, 0) << means.err;
  EXPECT_NEAR(fejer::Json::parse(means.out)["report"]["bound"].get<double>(), 1.875, 1e-12);

  const auto moment = run({"moment", "--g", "6*(x-1)*(2-x)", "--a", "1", "--b", "2", "--fprime", "1"});
  ASSERT_EQ(moment.code, 0) << moment.err;
  EXPECT_NEAR(fejer::Json::parse(moment.out)["report"]["bound"].get<double>(), 0.5, 1e-12);

  const auto lambda = run({"moment", "--g", "1", "--a", "1", "--b", "2", "--lambda", "2"});
  ASSERT_EQ(lambda.code, 0) << lambda.err;
  const auto lj = fejer::Json::parse(lambda.out);
  EXPECT_NEAR(lj["report"]["bound"].get<double>(), 0.75, 1e-12);
  EXPECT_NEAR(lj["display_bound"].get<double>(), 1.5, 1e-12);

  EXPECT_EQ(run({"check-hconvex", "--phi", "x^2", "--a", "0", "--b", "1"}).code, 0);
  const auto fail = run({"check-hconvex", "--phi", "sqrt(x)", "--a", "0", "--b", "1", "--output", "csv"});
  EXPECT_EQ(fail.code, 1);
  EXPECT_EQ(fail.out.rfind("x,y,lambda,lhs,rhs\n", 0), 0u);

  const auto quad = run({"quad", "--f", "exp(x)", "--a", "0", "--b", "2", "--n", "4"});
  ASSERT_EQ(quad.code, 0) << quad.err;
  EXPECT_NEAR(fejer::Json::parse(quad.out)["result"]["error_bound"].get<double>(), 0.815201263685160, 1e-9);
  const auto explicit_partition = run({"quad", "--f", "x^2", "--a", "0", "--b", "1", "--partition", "0,0.5,1"});
  EXPECT_NEAR(fejer::Json::parse(explicit_partition.out)["result"]["value"].get<double>(), 0.375, 1e-15);

  auto all = kBoundSquare;
  all.insert(all.end(), {"--variant", "all", "--s", "1", "--m", "0", "--M", "2", "--K", "2"});
  const auto every = run(all);
  EXPECT_EQ(every.code, 0) << every.err;
  EXPECT_GE(fejer::Json::parse(every.out).size(), 10u);
}

TEST(Cli, Battery) {
  const auto r = run({"battery"});
  EXPECT_EQ(r.code, 0);
  const auto j = fejer::Json::parse(r.out);
  EXPECT_GE(j["cases"].size(), 25u);
  EXPECT_TRUE(j["all_passed"].get<bool>());
  const auto faulty = run({"battery", "--inject-fault", "corollary.convex_recapture"});
  EXPECT_EQ(faulty.code, 1);
  const auto fj = fejer::Json::parse(faulty.out);
  EXPECT_EQ(fj["failures"].get<int>(), 1);
  for (const auto& c : fj["cases"])
    EXPECT_EQ(c["passed"].get<bool>(), c["name"] != "corollary.convex_recapture");
}
