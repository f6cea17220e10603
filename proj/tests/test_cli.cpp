#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cli.hpp"

using namespace slg;
using doctest::Approx;
namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Fresh scratch directory per test case.
struct Scratch {
  fs::path dir;
  explicit Scratch(const std::string& name) : dir(fs::temp_directory_path() / ("slg_cli_" + name)) {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string operator/(const std::string& file) const { return (dir / file).string(); }
};

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "slg");
  args.push_back("--threads");
  args.push_back("2");
  return cli::run(args);
}

}  // namespace

TEST_CASE("parse_angle: multiples of pi and radians") {
  CHECK(cli::parse_angle("pi") == Approx(pi).epsilon(1e-15));
  CHECK(cli::parse_angle("0.5pi") == Approx(pi / 2).epsilon(1e-15));
  CHECK(cli::parse_angle("pi/3") == Approx(pi / 3).epsilon(1e-15));
  CHECK(cli::parse_angle("2pi/3") == Approx(2 * pi / 3).epsilon(1e-15));
  CHECK(cli::parse_angle("1.25") == 1.25);
  for (const char* bad : {"", "pie", "pi/0", "x", "1.5pi/"}) CHECK_THROWS_AS(cli::parse_angle(bad), std::invalid_argument);
}

TEST_CASE("parse_contour: names, JSON and rejected input") {
  CHECK(std::holds_alternative<UnitSquare>(cli::parse_contour("square", "")));
  const ContourSpec r = cli::parse_contour("rhombus", "pi/4");
  REQUIRE(std::holds_alternative<Rhombus>(r));
  CHECK(std::get<Rhombus>(r).alpha == Approx(pi / 4));
  CHECK(std::holds_alternative<OneCornerLobe>(cli::parse_contour("one_corner", "0.3pi")));
  CHECK(std::holds_alternative<TwoCornerLens>(cli::parse_contour("lens", "1.5pi")));
  const ContourSpec j = cli::parse_contour(R"({"kind": "lobe", "theta": "0.7pi"})", "");
  REQUIRE(std::holds_alternative<OneCornerLobe>(j));
  CHECK(std::get<OneCornerLobe>(j).theta == Approx(0.7 * pi));

  CHECK_THROWS_AS(cli::parse_contour("rhombus", ""), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_contour("rhombus", "0"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_contour("triangle", "pi/3"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_contour("{\"kind\": 3}", ""), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_contour("{not json", ""), std::invalid_argument);
}

TEST_CASE("git_blob_sha1 matches git hash-object") {
  CHECK(cli::git_blob_sha1("hello\n") == "ce013625030ba8dba906f756967f9e9ca394464a");
  CHECK(cli::git_blob_sha1("") == "e69de29bb2d1d6434b8b29ae775ad8c2e48c5391");
}

TEST_CASE("bad arguments exit with 2") {
  const Scratch tmp("bad");
  CHECK(cli::run({"slg"}) == cli::kBadArguments);
  CHECK(cli::run({"slg", "frobnicate"}) == cli::kBadArguments);
  CHECK(run({"solve", "--n", "-4", "-o", tmp / "a.csv"}) == cli::kBadArguments);
  CHECK(run({"solve", "--contour", "rhombus", "--angle", "0", "-o", tmp / "a.csv"}) == cli::kBadArguments);
  CHECK(run({"scan", "--geometry", "three_corner", "-o", tmp / "a.csv"}) == cli::kBadArguments);
  CHECK(run({"localop", "--phases", "other", "-o", tmp / "a.csv"}) == cli::kBadArguments);
  CHECK_FALSE(fs::exists(tmp / "a.csv"));
}

TEST_CASE("a sweep whose every point fails exits with 1") {
  const Scratch tmp("fail");
  CHECK(run({"scan", "--n", "2", "--d", "2", "--min", "0.5pi", "--max", "0.6pi", "--step", "0.05pi", "-o",
             tmp / "s.csv"}) == cli::kNumericalFailure);
}

TEST_CASE("solve writes the density and a manifest hashing it") {
  const Scratch tmp("solve");
  REQUIRE(run({"solve", "--contour", "square", "--n", "32", "--d", "0", "--rhs", "f1", "-o", tmp / "d.csv"}) ==
          cli::kOk);
  const std::string csv = slurp(tmp / "d.csv");
  CHECK(csv.rfind("s,re_omega,im_omega,abs_omega\n", 0) == 0);
  const auto manifest = nlohmann::json::parse(slurp(tmp / "d.manifest.json"));
  CHECK(manifest["command"] == "solve");
  CHECK(manifest["config"]["n"] == 32);
  CHECK(manifest["config"]["m"] == 40);
  CHECK(manifest["config"]["r"] == 24);
  REQUIRE(manifest["outputs"].size() == 1);
  CHECK(manifest["outputs"][0]["git_blob_sha1"] == cli::git_blob_sha1(csv));
  CHECK(manifest["result"]["cond"].get<double>() > 1.0);
  CHECK(manifest.contains("timings"));
}

TEST_CASE("same arguments give byte-identical CSVs") {
  const Scratch tmp("repeat");
  for (std::string name : {"a", "b"}) {
    REQUIRE(run({"scan", "--geometry", "two_corner", "--d", "1", "--n", "32", "--min", "0.5pi", "--max", "1.5pi",
                 "--step", "0.25pi", "-o", tmp / (name + "_scan.csv")}) == cli::kOk);
    REQUIRE(run({"localop", "--theta", "0.5pi,1.5pi", "--beta", "0,pi/4", "--N", "16", "-o",
                 tmp / (name + "_local.csv")}) == cli::kOk);
    REQUIRE(run({"reconstruct", "--contour", "square", "--n", "32", "--step", "0.1", "-o",
                 tmp / (name + "_field.csv")}) == cli::kOk);
  }
  for (std::string kind : {"_scan.csv", "_local.csv", "_field.csv"}) {
    CAPTURE(kind);
    CHECK(slurp(tmp / ("a" + kind)) == slurp(tmp / ("b" + kind)));
    CHECK_FALSE(slurp(tmp / ("a" + kind)).empty());
  }
  CHECK(slurp(tmp / "a_scan.csv").rfind("geometry,d,n,theta_over_pi,cond,wall_time_s\n", 0) == 0);
  CHECK(slurp(tmp / "a_local.csv").rfind("theta,beta,d,N_trunc,cond\n", 0) == 0);
  CHECK(slurp(tmp / "a_field.csv").rfind("x,y,u\n", 0) == 0);
}

TEST_CASE("table1 writes one row per cell") {
  const Scratch tmp("table");
  REQUIRE(run({"table1", "--column", "f1", "--alphas", "pi/2,pi/3", "--n", "32,64", "-o", tmp / "t.csv"}) ==
          cli::kOk);
  std::istringstream csv(slurp(tmp / "t.csv"));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "column,alpha_over_pi,n,rel_error");
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    CHECK(line.rfind("f1,", 0) == 0);
  }
  CHECK(rows == 4);
}
