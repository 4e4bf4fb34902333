#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "zolo/bounds.hpp"
#include "zolo/cli.hpp"

using namespace zolo;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "zolo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string config(const char* name) { return std::string(ZOLO_CONFIG_DIR) + "/" + name + ".json"; }

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("zolo_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

// Data rows of a CSV body, comment lines and the column line dropped.
std::vector<std::vector<double>> rows(const std::string& csv) {
  std::vector<std::vector<double>> out;
  std::istringstream is(csv);
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<double> r;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) r.push_back(std::stod(cell));
    out.push_back(r);
  }
  return out;
}

std::string body(const std::string& csv) {
  std::string out;
  std::istringstream is(csv);
  std::string line;
  while (std::getline(is, line))
    if (line.empty() || line[0] != '#') out += line + "\n";
  return out;
}

}  // namespace

TEST(Cli, ParseRange) {
  EXPECT_EQ(cli::parse_range("3").lo, 3);
  EXPECT_EQ(cli::parse_range("3").hi, 3);
  EXPECT_EQ(cli::parse_range("2..9").hi, 9);
  EXPECT_THROW(cli::parse_range("9..2"), InvalidInput);
  EXPECT_THROW(cli::parse_range("-1"), InvalidInput);
  EXPECT_THROW(cli::parse_range("x"), InvalidInput);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"bound", "--config", config("two_disks"), "--n", "1..3"}).code, 0);
  EXPECT_EQ(run({"bound"}).code, 1);
  EXPECT_EQ(run({"nonsense"}).code, 1);
  EXPECT_EQ(run({"bound", "--config", "/nonexistent.json"}).code, 1);
  const auto missing = run({"map", "--config", write_temp("missing.json", R"({"E": {"type": "disk", "center": [1, 0]}})")});
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("E.radius"), std::string::npos);
  EXPECT_EQ(run({"map", "--config", write_temp("bad.json", "{\"E\": ")}).code, 1);
  const auto hard = write_temp("hard.json", R"({"E": {"type": "rectangle", "re": [0.3, 1.3], "im": [-1.3, 1.3]},
    "F": {"type": "negate", "of": "E"}, "solver": {"max_degree": 16}})");
  EXPECT_EQ(run({"map", "--config", hard, "--tol", "1e-14"}).code, 2);
}

TEST(Cli, BoundDegreeZero) {
  const auto r = run({"bound", "--config", config("fig3"), "--n", "0..0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = rows(r.out);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0][0], 0);
  EXPECT_EQ(t[0][2], 1);  // upper
  EXPECT_NE(r.out.find("# residual: "), std::string::npos);
}

TEST(Cli, BoundOnDisksMatchesHPowers) {
  const auto r = run({"bound", "--config", config("two_disks"), "--n", "1..6", "--empirical"});
  ASSERT_EQ(r.code, 0) << r.err;
  const double h = 5.996501399405;
  const auto t = rows(r.out);
  ASSERT_EQ(t.size(), 6u);
  for (const auto& row : t) {
    EXPECT_NEAR(row[1] * std::pow(h, row[0]), 1, 1e-9);
    EXPECT_NEAR(row.back() * std::pow(h, row[0]), 1, 1e-6);
  }
}

TEST(Cli, ConvexLargeDegreeRatioIsNine) {
  const auto r = run({"bound", "--config", config("fig1_alpha_3"), "--n", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = rows(r.out);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_NEAR(t[0][2] / t[0][1] / 9, 1, 0.01);
}

TEST(Cli, MapJsonForDisksAndFirstFigure) {
  const auto r = run({"map", "--config", config("two_disks")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_NEAR(j["h"].get<double>(), 5.996501399405, 1e-6);
  EXPECT_EQ(j["type"], "mobius");
  EXPECT_EQ(j["meta"]["command"], "map");
  const auto f = json::parse(run({"map", "--config", config("fig1_alpha_3")}).out);
  EXPECT_NEAR(f["h"].get<double>() / 103.3, 1, 0.02);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"adi", "--config", config("two_disks"), "--shifts", "fejer", "--k", "4",
                                      "--m", "30", "--p", "30", "--seed", "11"};
  const auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(body(run({"svbounds", "--config", config("fig2_cauchy"), "--kind", "cauchy", "--m", "20", "--p", "20"}).out),
            body(run({"svbounds", "--config", config("fig2_cauchy"), "--kind", "cauchy", "--m", "20", "--p", "20"}).out));
}

TEST(Cli, AdiStartsAtRelativeErrorOne) {
  const auto r = run({"adi", "--config", config("two_disks"), "--shifts", "leja", "--k", "3", "--m", "20", "--p", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = rows(r.out);
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t[0][1], 1);
  for (const auto& row : t) EXPECT_LE(row[1], row[2] + 1e-10);
}

TEST(Cli, CauchySingularValuesRespectBounds) {
  const auto r = run({"svbounds", "--config", config("fig2_cauchy"), "--kind", "cauchy", "--m", "100", "--p", "100",
                      "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = rows(r.out);
  ASSERT_EQ(t.size(), 100u);
  for (int j = 0; j <= 17; ++j) EXPECT_LE(t[j][1], t[j][2]) << j;
}

TEST(Cli, VandermondeSingularValuesRespectBounds) {
  const auto r = run({"svbounds", "--config", config("fig2_vandermonde"), "--kind", "vandermonde", "--m", "100",
                      "--p", "80", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_NEAR(j["meta"]["h"].get<double>(), 2.34935043016053, 1e-12);
  const auto& rs = j["rows"];
  ASSERT_EQ(rs.size(), 80u);
  for (int i = 0; i <= 17; ++i) EXPECT_LE(rs[i][1].get<double>(), rs[i][2].get<double>() * (1 + 1e-12)) << i;
  EXPECT_EQ(run({"svbounds", "--config", config("fig2_cauchy"), "--kind", "vandermonde"}).code, 1);
}

TEST(Cli, FaberShiftsOnThirdFigure) {
  const auto r = run({"shifts", "--config", config("fig3"), "--kind", "faber", "--k", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["kappa"].size(), 8u);
  EXPECT_EQ(j["tau"].size(), 8u);
  EXPECT_LE(j["certificate"].get<double>(), zolotarev_upper({j["meta"]["h"].get<double>(), 1, 1, true, Variant::A1}, 8).upper);
}

TEST(Cli, FaberLatticeAndOutputFile) {
  const auto path = (std::filesystem::temp_directory_path() / "zolo_test_lattice.csv").string();
  const auto r = run({"faber", "--config", config("two_disks"), "--n", "2", "--grid", "6", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream is(path);
  const std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  EXPECT_EQ(rows(text).size(), 36u);
  EXPECT_NE(text.find("re,im,abs_rn,arg_rn"), std::string::npos);
}
