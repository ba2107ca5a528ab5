// Drives the built CLI binary end to end: report schemas, determinism,
// and the exit-code contract.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "lff/io.hpp"
#include "lff/wavelets.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run(const std::string& args, const std::string& stdout_path = "/dev/null") {
  const std::string cmd = std::string(LFF_CLI_PATH) + " " + args + " > " + stdout_path + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("gen writes a loadable generator file") {
  REQUIRE(run("gen --family haar --q 3 --out cli_haar3.lfgen.json") == 0);
  const auto gens = lff::load_generators("cli_haar3.lfgen.json");
  const auto want = lff::haar_generators(lff::make_field_q(3));
  REQUIRE(gens.size() == want.size());
  for (std::size_t i = 0; i < gens.size(); ++i) CHECK(gens[i].values() == want[i].values());
  std::remove("cli_haar3.lfgen.json");
}

TEST_CASE("bounds report for the q=5 haar system") {
  REQUIRE(run("bounds --system affine --generators haar --q 5 --support 1 --resolution 2",
              "cli_b5.json") == 0);
  const auto j = lff::Json::parse(slurp("cli_b5.json"));
  CHECK(j["system"] == "affine");
  CHECK(j["q"] == 5);
  CHECK(std::abs(j["lambda_min"].get<double>() - 1.0) <= 1e-9);
  CHECK(std::abs(j["lambda_max"].get<double>() - 1.0) <= 1e-9);
  CHECK(j["spectrum"].size() == 124);
  std::remove("cli_b5.json");
}

TEST_CASE("bounds accepts a generator file and prime-power fields") {
  REQUIRE(run("gen --family haar --p 2 --c 2 --out cli_haar4.lfgen.json") == 0);
  REQUIRE(run("bounds --system quasiAffine --generators cli_haar4.lfgen.json --p 2 --c 2 "
              "--support 1 --resolution 2",
              "cli_b4.json") == 0);
  const auto j = lff::Json::parse(slurp("cli_b4.json"));
  CHECK(std::abs(j["lambda_max"].get<double>() - 1.0) <= 1e-9);
  std::remove("cli_haar4.lfgen.json");
  std::remove("cli_b4.json");
}

TEST_CASE("coaffine-decay emits the geometric table") {
  REQUIRE(run("coaffine-decay --q 2 --m-max 4", "cli_decay.csv") == 0);
  const std::string csv = slurp("cli_decay.csv");
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  CHECK(line == "m,avg_time_side,avg_fourier_side,predicted");
  double expect = 1.0;
  int m = 1;
  while (std::getline(is, line)) {
    std::istringstream row(line);
    std::string tok;
    std::getline(row, tok, ',');
    CHECK(std::stoi(tok) == m);
    std::getline(row, tok, ',');
    CHECK(std::abs(std::stod(tok) - expect) <= 1e-9);
    std::getline(row, tok, ',');
    CHECK(std::abs(std::stod(tok) - expect) <= 1e-9);
    expect /= 2.0;
    ++m;
  }
  CHECK(m == 5);
  std::remove("cli_decay.csv");
}

TEST_CASE("reports are byte-identical across runs apart from elapsed_ms") {
  REQUIRE(run("compare --q 2 --support 1 --resolution 2 --seed 9 --samples 3",
              "cli_c1.json") == 0);
  REQUIRE(run("compare --q 2 --support 1 --resolution 2 --seed 9 --samples 3",
              "cli_c2.json") == 0);
  auto j1 = lff::Json::parse(slurp("cli_c1.json"));
  auto j2 = lff::Json::parse(slurp("cli_c2.json"));
  for (auto* j : {&j1, &j2}) {
    (*j)["affine"].erase("elapsed_ms");
    (*j)["quasiAffine"].erase("elapsed_ms");
  }
  CHECK(j1.dump() == j2.dump());
  std::remove("cli_c1.json");
  std::remove("cli_c2.json");
}

TEST_CASE("thread cap does not change results") {
  const std::string base = std::string(LFF_CLI_PATH) +
                           " bounds --q 3 --support 1 --resolution 2 --system quasiAffine";
  REQUIRE(WEXITSTATUS(std::system(
              ("LFF_THREADS=1 " + base + " > cli_t1.json 2>/dev/null").c_str())) == 0);
  REQUIRE(WEXITSTATUS(std::system(
              ("LFF_THREADS=4 " + base + " > cli_t4.json 2>/dev/null").c_str())) == 0);
  auto j1 = lff::Json::parse(slurp("cli_t1.json"));
  auto j4 = lff::Json::parse(slurp("cli_t4.json"));
  j1.erase("elapsed_ms");
  j4.erase("elapsed_ms");
  CHECK(j1.dump() == j4.dump());
  std::remove("cli_t1.json");
  std::remove("cli_t4.json");
}

TEST_CASE("check suites pass and the exit contract holds") {
  CHECK(run("check --suite haar-tight --q 2", "cli_check.txt") == 0);
  const std::string log = slurp("cli_check.txt");
  CHECK(log.find("[PASS]") != std::string::npos);
  CHECK(log.find("[FAIL]") == std::string::npos);
  CHECK(run("check --suite duality") == 0);
  std::remove("cli_check.txt");
}

TEST_CASE("usage errors exit 2, validation failures exit 1") {
  CHECK(run("frobnicate") == 2);
  CHECK(run("bounds --no-such-flag 1") == 2);
  CHECK(run("check --suite nonsense") == 2);
  CHECK(run("bounds --q 6") == 2);  // q must be prime; prime powers need --p/--c

  {
    std::ofstream bad("cli_bad.lfgen.json");
    bad << R"({"field":{"p":2,"c":1,"modulus":[0,1]},"generators":[]})";
  }
  CHECK(run("bounds --generators cli_bad.lfgen.json --q 2", "cli_err.json") == 1);
  const auto rec = lff::Json::parse(slurp("cli_err.json"));
  CHECK(rec.contains("error"));
  std::remove("cli_bad.lfgen.json");
  std::remove("cli_err.json");
}

TEST_CASE("no partial output file is left behind on failure") {
  std::remove("cli_none.json");
  {
    std::ofstream bad("cli_bad2.lfgen.json");
    bad << R"({"field":{"p":2,"c":1,"modulus":[0,1]},"generators":[]})";
  }
  CHECK(run("bounds --q 2 --generators cli_bad2.lfgen.json --out cli_none.json") == 1);
  std::ifstream probe("cli_none.json");
  CHECK(!probe.good());
  std::remove("cli_bad2.lfgen.json");
}

TEST_CASE("weight tables load from files") {
  {
    std::ofstream w("cli_w.json");
    w << R"({"default":[1,0],"entries":[{"l":1,"j":0,"c":[2,0]}]})";
  }
  REQUIRE(run("coaffine-decay --q 2 --m-max 2 --weights cli_w.json", "cli_wd.csv") == 0);
  const std::string csv = slurp("cli_wd.csv");
  // the m-th shell average is driven by scale j = m-1, so the doubled
  // (l=1, j=0) weight quadruples the m=1 row and leaves m=2 alone
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  const double expect[2] = {4.0, 0.5};
  for (int m = 1; m <= 2; ++m) {
    std::getline(is, line);
    std::istringstream row(line);
    std::string tok;
    std::getline(row, tok, ',');
    CHECK(std::stoi(tok) == m);
    for (int col = 0; col < 2; ++col) {
      std::getline(row, tok, ',');
      CHECK(std::abs(std::stod(tok) - expect[m - 1]) <= 1e-9);
    }
  }
  std::remove("cli_w.json");
  std::remove("cli_wd.csv");
}
