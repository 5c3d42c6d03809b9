#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "gen.hpp"
#include "qpdt/errors.hpp"
#include "qpdt/signal_io.hpp"

namespace {

using qpdt::Complex;
using qpdt::MultiplicityIndex;
using qpdt::SampledSignal;

SampledSignal random_signal(std::uint64_t seed, int n) {
  qpdt::testing::Gen gen(seed);
  std::vector<double> grid{gen.uniform(-10, 0)};
  std::vector<Complex> values;
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      grid.push_back(grid.back() + gen.uniform(1e-3, 0.5));
    }
    values.emplace_back(gen.uniform(-1, 1) * std::pow(10.0, gen.integer(-300, 300)), gen.uniform(-1, 1));
  }
  return {grid, values, MultiplicityIndex{gen.uniform(-0.5, 3)}};
}

bool bit_equal(double x, double y) { return std::memcmp(&x, &y, sizeof x) == 0; }

void expect_identical(const SampledSignal& a, const SampledSignal& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(bit_equal(a.grid()[i], b.grid()[i]));
    EXPECT_TRUE(bit_equal(a.values()[i].real(), b.values()[i].real()));
    EXPECT_TRUE(bit_equal(a.values()[i].imag(), b.values()[i].imag()));
  }
}

TEST(Shortest, RoundTrips) {
  qpdt::testing::Gen gen(51);
  for (int i = 0; i < 10000; ++i) {
    const double x = gen.uniform(-1, 1) * std::pow(10.0, gen.integer(-310, 308));
    EXPECT_EQ(std::strtod(qpdt::shortest(x).c_str(), nullptr), x);
  }
  EXPECT_EQ(qpdt::shortest(0.1), "0.1");
  EXPECT_EQ(qpdt::shortest(-4.0), "-4");
}

TEST(Csv, RoundTripIsBitExact) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto s = random_signal(seed, 60);
    const std::string text = qpdt::to_csv(s);
    EXPECT_EQ(text.substr(0, 8), "v,re,im\n");
    expect_identical(s, qpdt::parse_csv(text, s.mu()));
  }
}

TEST(Json, RoundTripIsBitExactAndKeepsMu) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto s = random_signal(seed, 40);
    const auto back = qpdt::parse_json(qpdt::to_json_text(s), MultiplicityIndex{0.0});
    expect_identical(s, back);
    EXPECT_EQ(back.mu(), s.mu());
  }
}

TEST(Json, Layout) {
  const SampledSignal s({-1.0, 2.0}, {Complex{1, 2}, Complex{3, 4}}, MultiplicityIndex{0.5});
  const auto j = qpdt::to_json(s);
  EXPECT_EQ(j["meta"]["mu"], 0.5);
  EXPECT_EQ(j["meta"]["domain"], nlohmann::json({-1.0, 2.0}));
  EXPECT_EQ(j["samples"][1], nlohmann::json({2.0, 3.0, 4.0}));
}

TEST(Csv, Malformed) {
  const MultiplicityIndex mu{0.0};
  EXPECT_THROW(qpdt::parse_csv("", mu), qpdt::IoError);
  EXPECT_THROW(qpdt::parse_csv("x,y,z\n1,2,3\n", mu), qpdt::IoError);
  EXPECT_THROW(qpdt::parse_csv("v,re,im\n1,2\n", mu), qpdt::IoError);
  EXPECT_THROW(qpdt::parse_csv("v,re,im\n1,2,3,4\n", mu), qpdt::IoError);
  EXPECT_THROW(qpdt::parse_csv("v,re,im\n1,abc,3\n", mu), qpdt::IoError);
  EXPECT_THROW(qpdt::parse_csv("v,re,im\n1,0,0\n0,0,0\n", mu), qpdt::IoError);
  EXPECT_THROW(qpdt::parse_csv("v,re,im\n0,nan,0\n", mu), qpdt::IoError);
  EXPECT_NO_THROW(qpdt::parse_csv("v,re,im\r\n0,1,0\r\n1, 2 ,0\r\n\r\n", mu));
}

TEST(Json, Malformed) {
  const MultiplicityIndex mu{0.0};
  EXPECT_THROW(qpdt::parse_json("{", mu), qpdt::IoError);
  EXPECT_THROW(qpdt::parse_json("{}", mu), qpdt::IoError);
  EXPECT_THROW(qpdt::parse_json(R"({"samples":[[0,1]]})", mu), qpdt::IoError);
  EXPECT_THROW(qpdt::parse_json(R"({"meta":{"mu":-2},"samples":[[0,1,0]]})", mu), qpdt::IoError);
}

TEST(Files, ReadWriteAndMissing) {
  const auto dir = std::filesystem::temp_directory_path() / "qpdt_signal_io_test";
  std::filesystem::create_directories(dir);
  const auto s = random_signal(7, 30);
  qpdt::write_signal(dir / "s.csv", s, qpdt::SignalFormat::kCsv);
  qpdt::write_signal(dir / "s.json", s, qpdt::SignalFormat::kJson);
  expect_identical(s, qpdt::read_signal(dir / "s.csv", s.mu()));
  expect_identical(s, qpdt::read_signal(dir / "s.json", MultiplicityIndex{0.0}));
  EXPECT_THROW(qpdt::read_signal(dir / "missing.csv", s.mu()), qpdt::IoError);
  EXPECT_THROW(qpdt::write_signal(dir / "no" / "such" / "dir.csv", s, qpdt::SignalFormat::kCsv), qpdt::IoError);
  std::filesystem::remove_all(dir);
}

TEST(Format, Names) {
  EXPECT_EQ(qpdt::parse_format("json"), qpdt::SignalFormat::kJson);
  EXPECT_EQ(qpdt::format_for("a/b.json"), qpdt::SignalFormat::kJson);
  EXPECT_EQ(qpdt::format_for("a/b.txt"), qpdt::SignalFormat::kCsv);
  EXPECT_THROW(qpdt::parse_format("xml"), qpdt::DomainError);
}

}  // namespace
