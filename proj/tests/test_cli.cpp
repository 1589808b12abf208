#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <geogal/report.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

// End-to-end CLI checks: exit-code contract, JSON determinism across thread
// counts, and lossless report round-trips.  The binary path arrives through
// the GEOGAL_BIN environment variable set by CMake.

namespace {

std::string bin() {
  const char* p = std::getenv("GEOGAL_BIN");
  REQUIRE(p != nullptr);
  return p;
}

int run(const std::string& args, const std::string& out_path = "/tmp/geogal_cli_out.txt") {
  std::string cmd = bin() + " " + args + " > " + out_path + " 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exit-code contract") {
  CHECK(run("analyze --f \"1/(x^2-y^2)\" --threads 2") == 0);       // NonIntegrable
  CHECK(run("analyze --f \"x^2+y^2\"") == 2);                        // inconclusive
  CHECK(run("analyze --f \"x+y\"") == 1);                            // symmetry violated
  CHECK(run("analyze --f \"x +\"") == 1);                            // parse error
  CHECK(run("kovacic --r \"0\"") == 2);                              // PossiblyCaseI
  CHECK(run("kovacic --r \"1/y^3\"") == 2);                          // NotFuchsian
  CHECK(run("kovacic --r \"cos(y)\"") == 1);                         // not rational
  CHECK(run("analyze --f \"cos(2*x)*exp(-2*y^2)\"") == 1);           // rational pipeline only
  CHECK(run("family --n 0") == 1);                                   // input error
  CHECK(run("pde-test --f \"x^2+y^2\"") == 0);
  CHECK(run("pde-test --f \"1/(x^2-y^2)\"") == 0);                   // fail is still a result
}

TEST_CASE("family command reports the assignment-count table") {
  REQUIRE(run("family --n 1 --threads 2 --json /tmp/geogal_fam1.json") == 0);
  auto j = nlohmann::json::parse(slurp("/tmp/geogal_fam1.json"));
  CHECK(j["verdict"] == "NonIntegrable");
  auto counts = j["counts_ordered"].dump();
  CHECK(counts == "[[0,21],[1,21],[2,1],[3,1],[4,1]]");
}

TEST_CASE("dihedral control through the CLI finds P") {
  CHECK(run("kovacic --r \"-3/(16*y^2)-3/(16*(y-1)^2)+1/(8*y*(y-1))\" --json /tmp/geogal_dh.json") == 2);
  auto j = nlohmann::json::parse(slurp("/tmp/geogal_dh.json"));
  CHECK(j["verdict"] == "CaseII");
  CHECK(j["found_p"] == "1");
}

TEST_CASE("pde-test output states verdict, mode, residual") {
  run("pde-test --f \"1/(x^2-y^2)\" --json /tmp/geogal_pde.json");
  auto j = nlohmann::json::parse(slurp("/tmp/geogal_pde.json"));
  CHECK(j["pde_verdict"] == "fail");
  CHECK(j["pde_mode"] == "exact");
  CHECK(j["pde_residual"] == "-4/(y^3)");
  run("pde-test --f \"cos(2*x)*exp(-2*y^2)\" --json /tmp/geogal_pde2.json");
  auto j2 = nlohmann::json::parse(slurp("/tmp/geogal_pde2.json"));
  CHECK(j2["pde_verdict"] == "plausibly pass");
  CHECK(j2["pde_mode"] == "numeric");
}

TEST_CASE("reports are byte-identical across thread counts (timing excluded)") {
  REQUIRE(run("analyze --f \"1/(x^2-y^2)\" --threads 1 --json /tmp/geogal_t1.json") == 0);
  REQUIRE(run("analyze --f \"1/(x^2-y^2)\" --threads 2 --json /tmp/geogal_t2.json") == 0);
  auto j1 = nlohmann::json::parse(slurp("/tmp/geogal_t1.json"));
  auto j2 = nlohmann::json::parse(slurp("/tmp/geogal_t2.json"));
  j1["runtime_seconds"] = 0;
  j2["runtime_seconds"] = 0;
  CHECK(j1.dump() == j2.dump());
}

TEST_CASE("kovacic on the raw r reproduces the analyze ledger") {
  REQUIRE(run("kovacic --r \"-18*(2+3*y^6)/(y^2*(y^6+4)^2)\" --json /tmp/geogal_kv.json") == 0);
  auto ja = nlohmann::json::parse(slurp("/tmp/geogal_t1.json"));
  auto jk = nlohmann::json::parse(slurp("/tmp/geogal_kv.json"));
  CHECK(ja["ledger"].dump() == jk["ledger"].dump());
  CHECK(ja["verdict"] == jk["verdict"]);
  CHECK(ja["singular_points"].dump() == jk["singular_points"].dump());
}

TEST_CASE("report JSON round-trips losslessly") {
  auto j = nlohmann::json::parse(slurp("/tmp/geogal_t1.json"));
  gg::Report rep = j.get<gg::Report>();
  nlohmann::json back = rep;
  CHECK(back.dump() == j.dump());
  CHECK(rep.schema == 1);
  CHECK(rep.verdict == "NonIntegrable");
}

TEST_CASE("geodesic CSV export") {
  REQUIRE(run("geodesic --F \"x*y*z\" --c 1 --start 1,1,1 --dir random --length 1 --step 1e-3 "
              "--csv /tmp/geogal_geo.csv") == 0);
  std::string csv = slurp("/tmp/geogal_geo.csv");
  CHECK(csv.rfind("s,x,y,z,vx,vy,vz,F_drift,speed_drift\n", 0) == 0);
  // deterministic under a fixed seed
  REQUIRE(run("geodesic --F \"x*y*z\" --c 1 --start 1,1,1 --dir random --seed 7 --length 1 "
              "--step 1e-3 --csv /tmp/geogal_geo_a.csv") == 0);
  REQUIRE(run("geodesic --F \"x*y*z\" --c 1 --start 1,1,1 --dir random --seed 7 --length 1 "
              "--step 1e-3 --csv /tmp/geogal_geo_b.csv") == 0);
  CHECK(slurp("/tmp/geogal_geo_a.csv") == slurp("/tmp/geogal_geo_b.csv"));
}
