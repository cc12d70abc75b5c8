#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddkh/verify.hpp"

using namespace oddkh;

static const char* kRightTrefoil = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
static const char* kFig8 = "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]";

TEST_CASE("trefoil even homology with torsion") {
  Pipeline p = Pipeline::run(parse_pd(kRightTrefoil));
  BigradedGroup h = smith_homology(p.even);
  CHECK(poincare(h) == Laurent2{{{1, 0}, 1}, {{3, 0}, 1}, {{5, 2}, 1}, {{9, 3}, 1}});
  REQUIRE(h.count({3, 7}) == 1);
  CHECK(h.at({3, 7}).free_rank == 0);
  CHECK(h.at({3, 7}).torsion == std::vector<long long>{2});
  CHECK(total_rank(h) == 4);
}

TEST_CASE("mirror trefoil even ranks") {
  Pipeline p = Pipeline::run(mirror(parse_pd(kRightTrefoil)));
  BigradedGroup h = smith_homology(p.even);
  CHECK(poincare(h) == Laurent2{{{-9, -3}, 1}, {{-5, -2}, 1}, {{-3, 0}, 1}, {{-1, 0}, 1}});
}

TEST_CASE("figure eight even homology") {
  Pipeline p = Pipeline::run(parse_pd(kFig8));
  BigradedGroup h = smith_homology(p.even);
  CHECK(total_rank(h) == 6);
  std::vector<long long> torsion;
  for (auto& [ms, g] : h) torsion.insert(torsion.end(), g.torsion.begin(), g.torsion.end());
  CHECK(torsion == std::vector<long long>{2, 2});
}

TEST_CASE("reduced even homology") {
  Pipeline p = Pipeline::run(parse_pd(kRightTrefoil));
  CHECK(poincare(smith_homology(p.even_red)) == Laurent2{{{2, 0}, 1}, {{6, 2}, 1}, {{8, 3}, 1}});

  Pipeline u = Pipeline::run(parse_pd("PD[X[1,1,2,2]]"));
  CHECK(poincare(smith_homology(u.even_red)) == Laurent2{{{0, 0}, 1}});
}

TEST_CASE("even complex squares to zero and matches its own Euler characteristic") {
  for (const char* txt : {kRightTrefoil, kFig8}) {
    CAPTURE(txt);
    Pipeline p = Pipeline::run(parse_pd(txt));
    CHECK_FALSE(check_d_squared(p.even).has_value());
    CHECK(euler_characteristic(smith_homology(p.even)) == jones_state_sum(p.d));
  }
}

TEST_CASE("odd and even agree over GF(2)") {
  for (const char* txt : {kRightTrefoil, kFig8, "PD[X[1,2,2,1]]"}) {
    CAPTURE(txt);
    Pipeline p = Pipeline::run(parse_pd(txt));
    CHECK(field_homology(p.odd, 2) == field_homology(p.even, 2));
    CHECK(field_homology(p.odd_red, 2) == field_homology(p.even_red, 2));
  }
}

TEST_CASE("odd and even differ over Z already for the trefoil") {
  Pipeline p = Pipeline::run(parse_pd(kRightTrefoil));
  CHECK(smith_homology(p.odd) != smith_homology(p.even));
  CHECK(total_rank(smith_homology(p.odd)) == 6);
  CHECK(total_rank(smith_homology(p.even)) == 4);
}
