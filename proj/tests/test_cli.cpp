#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

static int run(const std::string& args) {
  std::string cmd = std::string(KPZDIST_BIN) + " " + args;
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

static std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

static std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

TEST_CASE("gue table: row count, header, right edge") {
  REQUIRE(run("table --dist gue --grid -6:6:1 --out /tmp/cli_gue.csv") == 0);
  auto ls = lines(slurp("/tmp/cli_gue.csv"));
  REQUIRE(ls.size() == 14);
  CHECK(ls[0] == "s,F,quality");
  // last row: s=6, F within 1e-7 of 1
  double s, f;
  char q[32];
  REQUIRE(std::sscanf(ls.back().c_str(), "%lf,%lf,%31s", &s, &f, q) == 3);
  CHECK(s == 6.0);
  CHECK(std::fabs(f - 1.0) < 1e-7);
  CHECK(std::string(q) == "ok");
}

TEST_CASE("byte-identical reruns") {
  REQUIRE(run("table --dist goe --grid -4:4:0.5 --out /tmp/cli_a.csv") == 0);
  REQUIRE(run("table --dist goe --grid -4:4:0.5 --out /tmp/cli_b.csv") == 0);
  CHECK(slurp("/tmp/cli_a.csv") == slurp("/tmp/cli_b.csv"));
  CHECK(!slurp("/tmp/cli_a.csv").empty());
}

TEST_CASE("br table monotone, columns as documented") {
  REQUIRE(run("table --dist br --tau 0 --grid -6:6:0.5 --out /tmp/cli_br.csv") ==
          0);
  auto ls = lines(slurp("/tmp/cli_br.csv"));
  REQUIRE(ls.size() == 26);
  CHECK(ls[0] == "tau,r,F_tau,antideriv,y,quality");
  double prev = -1;
  for (size_t i = 1; i < ls.size(); i++) {
    double tau, r, f;
    REQUIRE(std::sscanf(ls[i].c_str(), "%lf,%lf,%lf", &tau, &r, &f) == 3);
    CHECK(f >= prev);
    prev = f;
  }
}

TEST_CASE("out-of-domain rows flagged, exit stays 0") {
  REQUIRE(run("table --dist gue --grid -14:-12:1 --out /tmp/cli_dom.csv") == 0);
  auto ls = lines(slurp("/tmp/cli_dom.csv"));
  REQUIRE(ls.size() >= 2);
  CHECK(ls[1].find("out-of-domain") != std::string::npos);
}

TEST_CASE("json format") {
  REQUIRE(run("table --dist gue --grid -1:1:1 --format json --out "
              "/tmp/cli_j.json") == 0);
  std::string j = slurp("/tmp/cli_j.json");
  CHECK(j.find("\"s\":") != std::string::npos);
  CHECK(j.find("\"quality\":\"ok\"") != std::string::npos);
}

TEST_CASE("verify symbolic passes and emits the report schema") {
  REQUIRE(run("verify symbolic --out /tmp/cli_sym.json") == 0);
  std::string j = slurp("/tmp/cli_sym.json");
  CHECK(j.find("\"suite\": \"symbolic\"") != std::string::npos);
  CHECK(j.find("\"pass\": true") != std::string::npos);
  CHECK(j.find("\"tolerance\"") != std::string::npos);
}

TEST_CASE("corrupted b makes the identity suite fail") {
  CHECK(run("verify identities --out /tmp/cli_idok.json") == 0);
  CHECK(run("verify identities --corrupt-b --out /tmp/cli_idbad.json") == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("verify no-such-suite 2>/dev/null") == 2);
  CHECK(run("table --dist gue --grid 6:-6:1 2>/dev/null") == 2);
  CHECK(run("table --dist nope --grid -1:1:1 2>/dev/null") == 2);
  CHECK(run("table --dist gue --grid -1:1:1 --out /nonexistent-dir/x.csv "
            "2>/dev/null") == 2);
  CHECK(run("2>/dev/null") == 2);
}

TEST_CASE("crosscheck default grid passes") {
  REQUIRE(run("crosscheck --grid -2:2:2 --out /tmp/cli_cross.json") == 0);
  std::string j = slurp("/tmp/cli_cross.json");
  CHECK(j.find("fgue-two-routes") != std::string::npos);
  CHECK(j.find("y-vs-g") != std::string::npos);
  CHECK(j.find("\"pass\": true") != std::string::npos);
}
