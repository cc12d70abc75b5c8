// End-to-end tests of the command-line front end (runs the built binary).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "oddkh/pd.hpp"
#include "oddkh/simplify.hpp"

using namespace oddkh;

struct RunResult {
  int exit_code;
  std::string out;
};

static RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(ODDKH_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

static const std::string kTable = std::string("--table ") + ODDKH_TABLE_FILE;
static const char* kTrefoil = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";

TEST_CASE("compute a knot from the table") {
  auto r = run("compute --knot 8_19 --reduced --coeffs Q " + kTable);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("q^6 + q^10 t^2 + q^16 t^5") != std::string::npos);
}

TEST_CASE("compute from a PD code") {
  auto r = run("compute --coeffs Q --pd \"PD[X[1,1,2,2]]\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("q^-1 + q") != std::string::npos);

  // implicit closure of once-used labels: still the unknot
  auto r2 = run("compute --pd \"PD[X[1,4,2,3]]\"");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("(m=0,s=-1): Z; (m=0,s=1): Z") != std::string::npos);
}

TEST_CASE("json output round-trips") {
  auto r = run("compute --knot 4_1 --reduced --coeffs Z --format json " + kTable);
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["name"] == "4_1");
  CHECK(j[0]["poincare"] == "q^-4 t^-2 + q^-2 t^-1 + 1 + q^2 t + q^4 t^2");
  CHECK(j[0]["groups"].size() == 5);
}

TEST_CASE("input errors exit 2") {
  CHECK(run("compute --pd \"PD[junk\"").exit_code == 2);
  CHECK(run("compute --knot no_such_knot " + kTable).exit_code == 2);
  CHECK(run("compute --knot 3_1 --table /no/such/file.json").exit_code == 2);
  CHECK(run("compute").exit_code == 2);  // no input given
}

TEST_CASE("crossing cap exits 3 and mentions memory when raised") {
  auto r = run("compute --knot 8_19 --max-crossings 5 " + kTable);
  CHECK(r.exit_code == 3);
  auto r2 = run("compute --knot 3_1 --max-crossings 16 " + kTable);
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("MB") != std::string::npos);  // memory estimate printed
}

TEST_CASE("table path from the environment") {
  auto r = run("compute --knot 3_1 --reduced --coeffs Q",
               std::string("ODDKH_TABLE=") + ODDKH_TABLE_FILE);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("q^2 + q^6 t^2 + q^8 t^3") != std::string::npos);
}

TEST_CASE("verify passes on small knots") {
  auto r = run("verify --knot 3_1 --knot 4_1 --knot 8_19 " + kTable);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0 failures") != std::string::npos);
}

TEST_CASE("verify thinness of alternating knots") {
  auto r = run("verify --check thin --alternating-only --max-crossings 7 " + kTable);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("14 diagrams checked") != std::string::npos);  // 1+1+2+3+7
}

TEST_CASE("compare reports the rank pair for 8_19") {
  auto r = run("compare --knot 8_19 " + kTable);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("8_19: 3/5") != std::string::npos);
  auto alt = run("compare --knot 4_1 " + kTable);
  CHECK(alt.out.find("both thin") != std::string::npos);
}

TEST_CASE("invariance across diagrams of one link") {
  PDCode stabilized = r1_stabilize(parse_pd(kTrefoil), 0, true);
  auto r = run(std::string("invariance --pd \"") + kTrefoil + "\" --pd \"" +
               to_string(stabilized) + "\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("ok") != std::string::npos);

  auto bad = run(std::string("invariance --pd \"") + kTrefoil +
                 "\" --pd \"PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]\"");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);

  CHECK(run(std::string("invariance --pd \"") + kTrefoil + "\"").exit_code == 2);
}

TEST_CASE("dump subcommands") {
  auto cube = run(std::string("dump-cube --pd \"") + kTrefoil + "\"");
  CHECK(cube.exit_code == 0);
  CHECK(cube.out.find("8 vertices") != std::string::npos);
  CHECK(cube.out.find("type") != std::string::npos);

  auto cx = run(std::string("dump-complex --reduced --pd \"") + kTrefoil + "\"");
  CHECK(cx.exit_code == 0);
  CHECK(cx.out.find("generators") != std::string::npos);

  auto cj = run(std::string("dump-cube --format json --pd \"") + kTrefoil + "\"");
  auto j = nlohmann::json::parse(cj.out);
  CHECK(j["edges"].size() == 12);
  CHECK(j["faces"].size() == 6);
}
