#include "cli.hpp"
#include "eurbound/bounds.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

using namespace eur;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("number formatting and grids") {
  CHECK(cli::format_number(-0.0) == "0");
  CHECK(cli::format_number(std::nan("")) == "nan");
  CHECK(cli::format_number(1.0 / 3.0) == "0.333333333");
  CHECK(cli::parse_grid("0:1:0.25") == std::vector<double>{0, 0.25, 0.5, 0.75, 1});
  CHECK(cli::parse_grid("0.5,2") == std::vector<double>{0.5, 2});
  CHECK(cli::parse_grid("3") == std::vector<double>{3});
  CHECK(cli::parse_grid("0:0.3:0.1").size() == 4);
  CHECK_THROWS(cli::parse_grid("1:0:0.1"));
  CHECK_THROWS(cli::parse_grid("a,b"));
}

TEST_CASE("bound") {
  const Run r = run({"bound", "--ea", "shannon", "--eb", "shannon", "--c", "0.85"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.rfind("value=0.532768927 branch=minimized theta=", 0) == 0);
  CHECK(run({"bound", "--ea", "shannon", "--eb", "shannon", "--c", "1"}).out.rfind("value=0 ", 0) ==
        0);
  CHECK(run({"bound", "--ea", "renyi:0", "--eb", "renyi:0", "--c", "0.6"}).out.rfind(
            "value=1.09861229 ", 0) == 0);
  const Run corner = run({"bound", "--ea", "shannon", "--eb", "shannon", "--triplet", "0.9,0.9,0.8"});
  CHECK(corner.out == "value=0.972445929 branch=corner theta=nan\n");
  // Printed value equals the library value at the printed precision.
  const double lib = proposition_bound(EntropySpec::renyi(2.0), EntropySpec::tsallis(0.5),
                                       OverlapTriplet::nondegenerate(0.6))
                         .value;
  CHECK(run({"bound", "--ea", "renyi:2", "--eb", "tsallis:0.5", "--c", "0.6"})
            .out.rfind("value=" + cli::format_number(lib) + " ", 0) == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"bound", "--ea", "gini", "--eb", "shannon", "--c", "0.5"}).code == cli::kExitUsage);
  CHECK(run({"bound", "--ea", "shannon", "--eb", "shannon"}).code == cli::kExitUsage);
  CHECK(run({"bound", "--ea", "shannon", "--eb", "shannon", "--c", "1.5"}).code == cli::kExitUsage);
  CHECK(run({"bound", "--ea", "shannon", "--eb", "shannon", "--triplet", "0.9,0.9,0.85"}).code ==
        cli::kExitUsage);
  CHECK(run({"sweep", "--ref", "mu", "--region", "above"}).code == cli::kExitUsage);
  CHECK(run({"sweep", "--ref", "nope"}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"check", "--suite", "nope"}).code == cli::kExitUsage);
  CHECK(run({"perm", "--s", "0:2:0.5"}).code == cli::kExitUsage);
}

TEST_CASE("sweep against Maassen-Uffink below the conjugacy curve") {
  const Run r = run({"sweep", "--ref", "mu", "--c", "0.5", "--alpha", "0:3:0.25", "--beta", "0:3:0.25"});
  REQUIRE(r.code == cli::kExitOk);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() > 10);
  CHECK(rows[0] == std::vector<std::string>{"alpha", "beta", "B", "Bref", "reldiff"});
  for (std::size_t k = 1; k < rows.size(); ++k) CHECK(std::stod(rows[k][4]) <= 1e-9);
  const Run one = run({"sweep", "--ref", "mu", "--c", "1", "--alpha", "0.5", "--beta", "0.5"});
  CHECK(csv(one.out)[1][4] == "nan");
}

TEST_CASE("perm and haar output") {
  const Run p = run({"perm", "--s", "0:0.5:0.25"});
  REQUIRE(p.code == cli::kExitOk);
  const auto rows = csv(p.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1][0] == "0");
  CHECK(rows[1][1] == "1");
  CHECK(rows[1][2] == "0");
  CHECK(rows[3][1] == "0.666666667");
  const Run a = run({"haar", "--alpha", "2", "--samples", "50", "--seed", "3"});
  const Run b = run({"haar", "--alpha", "2", "--samples", "50", "--seed", "3"});
  const Run c = run({"haar", "--alpha", "2", "--samples", "50", "--seed", "4"});
  CHECK(a.code == cli::kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(csv(a.out).size() == 51);
}

TEST_CASE("oracle and check") {
  const Run o = run({"oracle", "--kind", "fixed-max", "--e", "shannon", "--p", "0.4", "--n", "3",
                     "--budget", "2048"});
  CHECK(o.code == cli::kExitOk);
  CHECK(o.out.find("reference=1.05492017") != std::string::npos);
  const Run c = run({"check", "--suite", "appendix", "--suite", "schur"});
  CHECK(c.code == cli::kExitOk);
  CHECK(c.out.find("PASS appendix") != std::string::npos);
  CHECK(c.out.find("PASS schur") != std::string::npos);
}

}  // TEST_SUITE
