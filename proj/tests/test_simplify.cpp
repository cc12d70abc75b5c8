#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddkh/homology.hpp"
#include "oddkh/simplify.hpp"
#include "oddkh/table.hpp"
#include "oddkh/verify.hpp"

using namespace oddkh;

static const char* kRightTrefoil = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
static const char* kFig8 = "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]";

static Laurent1 jones(const PDCode& pd) { return jones_state_sum(orient(pd)); }

// First RII push that is geometrically possible (many corner pairs are not).
static std::optional<PDCode> try_r2(const PDCode& pd) {
  auto faces = trace_faces(pd);
  for (int f = 0; f < (int)faces.size(); f++)
    for (int a = 0; a < (int)faces[f].corners.size(); a++)
      for (int b = 0; b < (int)faces[f].corners.size(); b++) {
        if (a == b) continue;
        try {
          return r2_stabilize(pd, f, a, b);
        } catch (const PDError&) {
        }
      }
  return std::nullopt;
}

TEST_CASE("face tracing") {
  for (const char* txt : {kRightTrefoil, kFig8}) {
    CAPTURE(txt);
    PDCode pd = parse_pd(txt);
    auto faces = trace_faces(pd);
    CHECK((int)faces.size() == pd.n() + 2);
    size_t corners = 0;
    for (auto& f : faces) corners += f.corners.size();
    CHECK(corners == 4u * pd.n());
  }
}

TEST_CASE("RI stabilization and reduction") {
  PDCode pd = parse_pd(kRightTrefoil);
  for (int arc = 0; arc < pd.num_arcs; arc++)
    for (bool positive : {false, true}) {
      CAPTURE(arc);
      CAPTURE(positive);
      PDCode big = r1_stabilize(pd, arc, positive);
      CHECK(big.n() == pd.n() + 1);
      CHECK(jones(big) == jones(pd));
      auto back = reduce_r1(big);
      REQUIRE(back.has_value());
      CHECK(back->n() == pd.n());
      CHECK(jones(*back) == jones(pd));
    }
  CHECK_FALSE(reduce_r1(pd).has_value());  // the trefoil has no kink
}

TEST_CASE("RII stabilization and reduction") {
  for (const char* txt : {kRightTrefoil, kFig8}) {
    CAPTURE(txt);
    PDCode pd = parse_pd(txt);
    CHECK_FALSE(reduce_r2(pd).has_value());
    auto big = try_r2(pd);
    REQUIRE(big.has_value());
    CHECK(big->n() == pd.n() + 2);
    CHECK(jones(*big) == jones(pd));
    auto back = reduce_r2(*big);
    REQUIRE(back.has_value());
    CHECK(back->n() == pd.n());
    CHECK(jones(*back) == jones(pd));
  }
}

TEST_CASE("RIII slides preserve the diagram data") {
  // alternating diagrams admit no slides; some stabilized ones do
  int found = 0;
  for (const char* txt : {kRightTrefoil, kFig8}) {
    PDCode pd = parse_pd(txt);
    auto faces = trace_faces(pd);
    for (int f = 0; f < (int)faces.size() && found < 8; f++)
      for (size_t a = 0; a < faces[f].corners.size() && found < 8; a++)
        for (size_t b = 0; b < faces[f].corners.size() && found < 8; b++) {
          if (a == b) continue;
          PDCode big;
          try {
            big = r2_stabilize(pd, f, (int)a, (int)b);
          } catch (const PDError&) {
            continue;
          }
          for (const PDCode& m : r3_moves(big)) {
            found++;
            CHECK(m.n() == big.n());
            CHECK(jones(m) == jones(big));
            CHECK(signature(m) == signature(big));
          }
        }
  }
  CHECK(found > 0);
}

TEST_CASE("moves preserve homology") {
  PDCode pd = parse_pd(kRightTrefoil);
  auto big = try_r2(r1_stabilize(pd, 2, false));
  REQUIRE(big.has_value());
  REQUIRE(big->n() == 6);
  auto slides = r3_moves(*big);
  std::vector<PDCode> all = {pd, *big};
  if (!slides.empty()) all.push_back(slides.front());
  CHECK(verify_invariance(all).empty());
}

TEST_CASE("simplify recovers small diagrams") {
  PDCode pd = parse_pd(kFig8);
  auto mid = try_r2(r1_stabilize(pd, 1, true));
  REQUIRE(mid.has_value());
  auto big = try_r2(*mid);
  REQUIRE(big.has_value());
  REQUIRE(big->n() == 9);
  PDCode small = simplify(*big, 4, 7);
  CHECK(small.n() == 4);
  CHECK(jones(small) == jones(pd));
}

TEST_CASE("signature") {
  PDCode trefoil = parse_pd(kRightTrefoil);
  CHECK(signature(trefoil) == 2);
  CHECK(signature(mirror(trefoil)) == -2);
  CHECK(signature(parse_pd(kFig8)) == 0);
  // stable under stabilization
  CHECK(signature(r1_stabilize(trefoil, 0, true)) == 2);
  CHECK(signature(r1_stabilize(trefoil, 0, false)) == 2);
}

TEST_CASE("signature agrees with the bundled table") {
  auto t = load_table(ODDKH_TABLE_FILE);
  int checked = 0;
  for (auto& r : t) {
    if (r.pd.n() > 8) continue;
    CAPTURE(r.name);
    CHECK(signature(r.pd) == *r.signature);
    CHECK(signature(mirror(r.pd)) == -*r.signature);
    checked++;
  }
  CHECK(checked > 20);
}
