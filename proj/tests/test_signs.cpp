#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oddkh/signs.hpp"

using namespace oddkh;

static const char* kRightTrefoil = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
static const char* kFig8 = "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]";

TEST_CASE("tree solver produces a valid assignment") {
  for (const char* txt : {kRightTrefoil, kFig8}) {
    CAPTURE(txt);
    Cube cube = build_cube(orient(parse_pd(txt)));
    for (AssignmentType t : {AssignmentType::X, AssignmentType::Y}) {
      auto phi = target_cochain(cube, t);
      EdgeAssignment eps = solve_assignment(cube, phi, t);
      CHECK_FALSE(verify_assignment(cube, eps, phi).has_value());
    }
  }
}

TEST_CASE("corrupted signs are detected") {
  Cube cube = build_cube(orient(parse_pd(kRightTrefoil)));
  auto phi = target_cochain(cube, AssignmentType::X);
  EdgeAssignment eps = solve_assignment(cube, phi, AssignmentType::X);
  // flip one real edge sign
  auto& e = cube.edges.front();
  eps.sign[(size_t)e.from * eps.n + e.crossing] *= -1;
  CHECK(verify_assignment(cube, eps, phi).has_value());
}

TEST_CASE("gauge transforms preserve validity and are recoverable") {
  Cube cube = build_cube(orient(parse_pd(kFig8)));
  auto phi = target_cochain(cube, AssignmentType::X);
  EdgeAssignment eps = solve_assignment(cube, phi, AssignmentType::X);

  std::mt19937 rng(7);
  std::vector<int8_t> eta(cube.nvertices());
  for (auto& v : eta) v = rng() & 1 ? 1 : -1;
  EdgeAssignment eps2 = gauge_transform(cube, eps, eta);
  CHECK_FALSE(verify_assignment(cube, eps2, phi).has_value());

  auto found = find_gauge(cube, eps, eps2);
  REQUIRE(found.has_value());
  EdgeAssignment back = gauge_transform(cube, eps, *found);
  for (auto& e : cube.edges) CHECK(back.at(e.from, e.crossing) == eps2.at(e.from, e.crossing));
}

static const char* kT34 =
    "PD[X[4,2,5,1],X[8,4,9,3],X[9,15,10,14],X[5,13,6,12],X[13,7,14,6],X[11,1,12,16],"
    "X[15,11,16,10],X[2,8,3,7]]";

TEST_CASE("different face products are not gauge equivalent") {
  Cube cube = build_cube(orient(parse_pd(kT34)));
  auto phiX = target_cochain(cube, AssignmentType::X);
  auto phiY = target_cochain(cube, AssignmentType::Y);
  REQUIRE(phiX != phiY);  // this diagram has sided faces
  EdgeAssignment ex = solve_assignment(cube, phiX, AssignmentType::X);
  EdgeAssignment ey = solve_assignment(cube, phiY, AssignmentType::Y);
  CHECK_FALSE(find_gauge(cube, ex, ey).has_value());
}

TEST_CASE("elimination solver agrees with the tree solver up to gauge") {
  for (const char* txt : {kRightTrefoil, kFig8}) {
    CAPTURE(txt);
    Cube cube = build_cube(orient(parse_pd(txt)));
    auto phi = target_cochain(cube, AssignmentType::X);
    EdgeAssignment tree = solve_assignment(cube, phi, AssignmentType::X);
    auto elim = solve_assignment_gf2(cube, phi, AssignmentType::X);
    REQUIRE(elim.has_value());
    CHECK_FALSE(verify_assignment(cube, *elim, phi).has_value());
    CHECK(find_gauge(cube, tree, *elim).has_value());
  }
}

TEST_CASE("a non-cocycle target is rejected by both solvers") {
  Cube cube = build_cube(orient(parse_pd(kRightTrefoil)));
  auto phi = target_cochain(cube, AssignmentType::X);
  phi[0] ^= 1;  // breaks the parity condition on the 3-cube
  CHECK_THROWS(solve_assignment(cube, phi, AssignmentType::X));
  CHECK_FALSE(solve_assignment_gf2(cube, phi, AssignmentType::X).has_value());
}
