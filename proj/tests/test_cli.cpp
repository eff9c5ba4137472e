#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "quermass/cli_app.hpp"
#include "quermass/gallery.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = quermass::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "cli_test_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("eigen subcommand") {
  const auto r = run_cli({"eigen", "--d", "3", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0\t0\t-") != std::string::npos);
  CHECK(r.out.find("1\t2\t0") != std::string::npos);
  CHECK(r.out.find("2\t6\t4") != std::string::npos);
  CHECK(r.out.find("3\t12\t10") != std::string::npos);

  const auto r2 = run_cli({"eigen", "--d", "2", "--n", "2", "--format", "csv"});
  CHECK(r2.code == 0);
  CHECK(r2.out == "n,lambda,gamma\n0,0,\n1,1,0\n2,4,3\n");

  const auto bad = run_cli({"eigen", "--d", "1"});
  CHECK(bad.code == 2);
  CHECK(!bad.err.empty());
}

TEST_CASE("coeffs subcommand") {
  const auto r = run_cli({"coeffs", "--d", "3", "--l", "1", "--m", "2", "--format", "json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("coeffs") == json::array({"12", "-8", "1"}));
  CHECK(j.at("coeff1") == "4");
  CHECK(j.at("coeff2") == "8");

  const auto r2 = run_cli({"coeffs", "--d", "4", "--l", "1", "--m", "1", "--format", "json"});
  CHECK(r2.code == 0);
  const json j2 = json::parse(r2.out);
  CHECK(j2.at("coeffs") == json::array({"-3", "1"}));
  CHECK_FALSE(j2.contains("coeff1"));

  const auto bad = run_cli({"coeffs", "--d", "3", "--l", "3", "--m", "2"});
  CHECK(bad.code == 2);
}

TEST_CASE("check subcommand on a ball: everything is equality") {
  const auto spec = write_temp("ball.json", R"({"kind":"ball","d":3,"params":{"radius":1.0}})");
  const auto r = run_cli({"check", "--spec", spec, "--theorems", "all", "--format", "json"});
  CHECK(r.code == 0);
  const json reports = json::parse(r.out);
  CHECK(reports.size() >= 5);
  for (const auto& rep : reports) {
    CHECK(rep.at("holds").get<bool>());
    CHECK(rep.at("equality").get<bool>());
  }
  std::remove(spec.c_str());
}

TEST_CASE("check subcommand emits CSV rows") {
  const auto spec = write_temp(
      "pert.json",
      R"({"kind":"harmonic_perturbation","d":3,"params":{"radius":1.0,"terms":[{"degree":2,"slot":0,"amplitude":0.05}]}})");
  const auto r = run_cli({"check", "--spec", spec, "--theorems", "deficit_bound", "--format",
                          "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("name,lhs,rhs,deficit,holds,equality,convexity_flag", 0) == 0);
  CHECK(r.out.find("deficit_upper_bound,") != std::string::npos);
  CHECK(r.out.find("certified") != std::string::npos);
  std::remove(spec.c_str());
}

TEST_CASE("check subcommand on a pair runs the mixed theorems") {
  const auto spec = write_temp("pair.json", R"({
    "K": {"kind":"ball","d":3,"params":{"radius":2.0}},
    "L": {"kind":"ball","d":3,"params":{"radius":1.0}}
  })");
  const auto r = run_cli({"check", "--spec", spec, "--format", "json"});
  CHECK(r.code == 0);
  const json reports = json::parse(r.out);
  REQUIRE(reports.size() == 2);
  bool saw_mixed = false, saw_af = false;
  for (const auto& rep : reports) {
    if (rep.at("name") == "mixed_reverse") saw_mixed = true;
    if (rep.at("name") == "aleksandrov_fenchel") saw_af = true;
    CHECK(rep.at("holds").get<bool>());
  }
  CHECK(saw_mixed);
  CHECK(saw_af);
  std::remove(spec.c_str());
}

TEST_CASE("check subcommand exit codes") {
  const auto missing = run_cli({"check", "--spec", "does_not_exist.json"});
  CHECK(missing.code == 2);

  const auto badjson = write_temp("bad.json", "{not json");
  CHECK(run_cli({"check", "--spec", badjson}).code == 2);
  std::remove(badjson.c_str());

  // non-convex body with --require-convex true is a validation error
  const auto bumpy = write_temp(
      "bumpy.json",
      R"({"kind":"harmonic_perturbation","d":2,"params":{"radius":1.0,"terms":[{"degree":2,"slot":0,"amplitude":0.9}]}})");
  CHECK(run_cli({"check", "--spec", bumpy, "--require-convex", "true"}).code == 2);
  CHECK(run_cli({"check", "--spec", bumpy, "--theorems", "minkowski"}).code == 0);
  std::remove(bumpy.c_str());
}

TEST_CASE("sweep subcommand") {
  const auto spec = write_temp(
      "family.json",
      R"({"kind":"harmonic_perturbation","d":3,"params":{"radius":1.0,"terms":[{"degree":2,"slot":0,"amplitude":0.0}]}})");

  SUBCASE("amplitude sweep of the strengthened deficit stays at zero") {
    const auto r = run_cli({"sweep", "--spec", spec, "--param", "/params/terms/0/amplitude",
                            "--values", "0.01,0.02,0.03", "--theorems", "minkowski"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line.rfind("param,name,", 0) == 0);
    int rows = 0;
    while (std::getline(lines, line)) {
      ++rows;
      // deficit column sits after param,name,lhs,rhs
      std::stringstream ss(line);
      std::string field;
      for (int i = 0; i < 5; ++i) std::getline(ss, field, ',');
      CHECK(std::abs(std::stod(field)) < 1e-10);
    }
    CHECK(rows == 3);
  }
  SUBCASE("radius sweep of balls scales reported terms by t^2") {
    const auto ball = write_temp("ballfam.json", R"({"kind":"ball","d":3,"params":{"radius":1.0}})");
    const auto r = run_cli({"sweep", "--spec", ball, "--param", "/params/radius", "--start", "1",
                            "--stop", "2", "--num", "2", "--theorems", "classical"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, row1, row2;
    std::getline(lines, header);
    std::getline(lines, row1);
    std::getline(lines, row2);
    auto field = [](const std::string& line, int idx) {
      std::stringstream ss(line);
      std::string f;
      for (int i = 0; i <= idx; ++i) std::getline(ss, f, ',');
      return std::stod(f);
    };
    CHECK(field(row2, 2) == doctest::Approx(4.0 * field(row1, 2)));  // lhs scales by t^2
    std::remove(ball.c_str());
  }
  SUBCASE("single-point grid uses the start value") {
    const auto r = run_cli({"sweep", "--spec", spec, "--param", "/params/radius", "--start", "1.5",
                            "--stop", "9", "--num", "1", "--theorems", "classical"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\n1.5,") != std::string::npos);
  }
  SUBCASE("empty grid emits only the header") {
    const auto r = run_cli({"sweep", "--spec", spec, "--param", "/params/radius", "--num", "0",
                            "--theorems", "classical"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("param,name,", 0) == 0);
    CHECK(r.out.find('\n') == r.out.size() - 1);  // single line
  }
  std::remove(spec.c_str());
}

TEST_CASE("check output is deterministic") {
  const auto spec = write_temp(
      "det.json",
      R"({"kind":"harmonic_perturbation","d":3,"params":{"radius":1.0,"terms":[{"degree":3,"slot":2,"amplitude":0.04}]}})");
  const auto a = run_cli({"check", "--spec", spec, "--format", "csv"});
  const auto b = run_cli({"check", "--spec", spec, "--format", "csv"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::remove(spec.c_str());
}

TEST_CASE("a failing inequality exits with code 1") {
  // orthogonal pure degree-2 "spectra" violate the Aleksandrov-Fenchel bound;
  // they are not convex bodies, and the report says so
  const auto spec = write_temp("afpair.json", R"({
    "K": {"kind":"custom_spectrum","d":3,"params":{"blocks":[[0],[0,0,0],[0.3,0,0,0,0]]}},
    "L": {"kind":"custom_spectrum","d":3,"params":{"blocks":[[0],[0,0,0],[0,0.3,0,0,0]]}}
  })");
  const auto r = run_cli({"check", "--spec", spec, "--theorems", "af", "--format", "json"});
  CHECK(r.code == 1);
  const json reports = json::parse(r.out);
  REQUIRE(reports.size() == 1);
  CHECK_FALSE(reports[0].at("holds").get<bool>());
  CHECK(reports[0].at("convexity_flag") == "failed");
  std::remove(spec.c_str());
}

TEST_CASE("spec json round trip through the gallery schema") {
  const std::string text =
      R"({"kind":"minkowski_sum","d":3,"params":{"summands":[{"kind":"ball","d":3,"params":{"radius":0.5}},{"kind":"translated_ball","d":3,"params":{"radius":1.0,"center":[0.1,0.0,-0.05]}}]}})";
  const json j = json::parse(text);
  const auto spec = quermass::gallery::spec_from_json(j);
  CHECK(quermass::gallery::spec_to_json(spec) == j);
}

TEST_CASE("unknown subcommand or flags fail with usage errors") {
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"eigen", "--bogus", "1"}).code == 2);
  CHECK(run_cli({"check", "--spec", "x.json", "--theorems", "minkowsky"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  const auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("eigen") != std::string::npos);
  CHECK(r.out.find("sweep") != std::string::npos);
}
