#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "qpdt/cli.hpp"
#include "qpdt/signal_io.hpp"
#include "qpdt/transform.hpp"

namespace {

using qpdt::Complex;
using qpdt::MultiplicityIndex;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = qpdt::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("qpdt_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(Cli, DunklPresetOfGaussianIsGaussian) {
  const auto r = run({"transform", "--preset", "dunkl", "--mu", "0", "--fn", "gaussian:1.0", "--wmin", "-4", "--wmax",
                      "4", "--wpoints", "129", "--output", path("out.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto s = qpdt::read_signal(path("out.csv"), MultiplicityIndex{0.0});
  ASSERT_EQ(s.size(), 129u);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double w = s.grid()[i];
    EXPECT_LT(std::abs(s.values()[i] - std::exp(-w * w / 2)), 1e-6);
  }
}

TEST_F(Cli, TransformIsBitIdenticalToLibrary) {
  const auto r = run({"transform", "--a", "0.3", "--b", "-1.2", "--c", "0.1", "--d", "0.4", "--e", "-0.2", "--mu",
                      "0.75", "--fn", "hermite-gaussian:2", "--wpoints", "33", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto cli = qpdt::parse_json(r.out, MultiplicityIndex{0.0});
  const auto p = qpdt::QpdtParams::make(0.3, -1.2, 0.1, 0.4, -0.2, 0.75);
  const auto lib = qpdt::forward(p, qpdt::TestFunction::hermite_gaussian(2), qpdt::uniform_grid(-8, 8, 33),
                                 qpdt::IntegrationConfig{});
  EXPECT_EQ(cli.grid(), lib.grid());
  EXPECT_EQ(cli.values(), lib.values());
  EXPECT_EQ(cli.mu(), MultiplicityIndex{0.75});
}

TEST_F(Cli, InvalidParametersExitTwo) {
  EXPECT_EQ(run({"transform", "--b", "0", "--fn", "gaussian"}).code, 2);
  EXPECT_EQ(run({"transform", "--mu", "-0.7", "--fn", "gaussian"}).code, 2);
  EXPECT_EQ(run({"transform", "--preset", "fractional-dunkl", "--theta", "0", "--fn", "gaussian"}).code, 2);
  EXPECT_EQ(run({"transform", "--fn", "gaussian", "--input", "x.csv"}).code, 2);
  EXPECT_EQ(run({"transform"}).code, 2);
  EXPECT_EQ(run({"transform", "--fn", "nosuch"}).code, 2);
  EXPECT_EQ(run({"transform", "--fn", "gaussian", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"transform", "--fn", "gaussian", "--preset", "dunkl", "--b", "2"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST_F(Cli, IoFailuresExitThree) {
  EXPECT_EQ(run({"transform", "--input", path("missing.csv")}).code, 3);
  std::ofstream(path("bad.csv")) << "v,re,im\n0,1\n";
  EXPECT_EQ(run({"transform", "--input", path("bad.csv")}).code, 3);
  EXPECT_EQ(run({"transform", "--fn", "gaussian", "--wpoints", "3", "--output", path("no/dir/out.csv")}).code, 3);
}

TEST_F(Cli, NumericalFailuresExitFour) {
  // Tabulated input that does not cover [-L, L] cannot be inverted.
  std::ofstream(path("short.csv")) << "v,re,im\n-1,1,0\n0,1,0\n1,1,0\n";
  EXPECT_EQ(run({"transform", "--inverse", "--input", path("short.csv")}).code, 4);
  // Node budget exceeded.
  EXPECT_EQ(run({"transform", "--fn", "gaussian", "--panels", "200000", "--order", "20"}).code, 4);
}

TEST_F(Cli, InverseOfForwardRecoversSignal) {
  ASSERT_EQ(run({"transform", "--a", "0.2", "--b", "1.5", "--c", "-0.3", "--mu", "1", "--fn", "gaussian", "--wmin",
                 "-14", "--wmax", "14", "--wpoints", "2801", "--output", path("F.csv")})
                .code,
            0);
  const auto r = run({"transform", "--inverse", "--a", "0.2", "--b", "1.5", "--c", "-0.3", "--mu", "1", "--input",
                      path("F.csv"), "--wmin", "-2", "--wmax", "2", "--wpoints", "9"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto back = qpdt::parse_csv(r.out, MultiplicityIndex{1.0});
  for (std::size_t i = 0; i < back.size(); ++i) {
    const double v = back.grid()[i];
    EXPECT_LT(std::abs(back.values()[i] - std::exp(-v * v / 2)), 1e-6);
  }
}

TEST_F(Cli, TranslateAtZeroReproducesInput) {
  std::ofstream(path("in.csv")) << "v,re,im\n-2,0.1,0.5\n-0.3,1e-300,-2\n0,3.14159,0\n1.7,-0.25,0.125\n";
  const auto r = run({"translate", "--mu", "0.5", "--at", "0", "--input", path("in.csv"), "--output",
                      path("out.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto in = qpdt::read_signal(path("in.csv"), MultiplicityIndex{0.5});
  const auto out = qpdt::read_signal(path("out.json"), MultiplicityIndex{0.0});
  EXPECT_EQ(in.grid(), out.grid());
  EXPECT_EQ(in.values(), out.values());
}

TEST_F(Cli, TranslateAndConvolveNeedMuAboveCritical) {
  EXPECT_EQ(run({"translate", "--mu", "-0.5", "--at", "1", "--fn", "gaussian"}).code, 2);
  EXPECT_EQ(run({"convolve", "--mu", "-0.5", "--fn", "gaussian", "--gfn", "gaussian"}).code, 2);
  EXPECT_EQ(run({"translate", "--mu", "0.5", "--fn", "gaussian"}).code, 2);
}

TEST_F(Cli, ConvolveWithZeroIsZero) {
  const auto r = run({"convolve", "--mu", "0.5", "--a", "0.3", "--fn", "gaussian", "--gfn", "zero", "--wpoints", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto s = qpdt::parse_csv(r.out, MultiplicityIndex{0.5});
  for (const Complex& z : s.values()) {
    EXPECT_EQ(z, Complex{});
  }
}

TEST_F(Cli, PresetJson) {
  auto r = run({"preset", "--name", "dunkl"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["a"], 0.0);
  EXPECT_EQ(j["b"], 1.0);
  EXPECT_EQ(j["c"], 0.0);
  EXPECT_EQ(j["d"], 0.0);
  EXPECT_EQ(j["e"], 0.0);
  EXPECT_TRUE(j.contains("postfactor"));

  r = run({"preset", "--name", "fractional-dunkl", "--theta", "1.5707963267948966"});
  ASSERT_EQ(r.code, 0);
  j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["a"].get<double>(), 0.0, 1e-15);
  EXPECT_NEAR(j["c"].get<double>(), 0.0, 1e-15);
  EXPECT_NEAR(j["b"].get<double>(), 1.0, 1e-15);

  r = run({"preset", "--name", "qpft", "--args", "0.1,2,0.3,0.4,0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["b"], 0.5);

  EXPECT_EQ(run({"preset", "--name", "fresnel", "--tau", "0"}).code, 2);
  EXPECT_EQ(run({"preset", "--name", "fresnel"}).code, 2);
  EXPECT_EQ(run({"preset", "--name", "unknown"}).code, 2);
}

TEST_F(Cli, VerifyWritesReport) {
  const auto r = run({"verify", "--suite", "kernel-bounds", "--seed", "7", "--report", path("r.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(path("r.json"));
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["aggregate"], "pass");
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(run({"verify", "--suite", "nosuch"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "translation", "--report", path("no/dir/r.json")}).code, 3);
}

TEST_F(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

}  // namespace
