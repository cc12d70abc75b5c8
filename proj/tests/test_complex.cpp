#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddkh/verify.hpp"

using namespace oddkh;

static const char* kRightTrefoil = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
static const char* kFig8 = "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]";

namespace {

// Rebuild the mapping cone of the connecting map and compare with the parent
// complex: generators ordered c0 block first, then c1.
ChainComplexZ reassemble(const SkeinDecomposition& sd) {
  ChainComplexZ out;
  out.n_plus = sd.c0.n_plus;
  out.n_minus = sd.c0.n_minus;
  auto dim0 = [&](Bidegree k) { return sd.c0.dim(k.first, k.second); };
  for (auto& [k, g] : sd.c0.gens) out.gens[k] = g;
  for (auto& [k, g] : sd.c1.gens) {
    auto& blk = out.gens[k];
    blk.insert(blk.end(), g.begin(), g.end());
  }
  for (auto& [k, mat] : sd.c0.diff)
    for (auto& t : mat) out.diff[k].push_back(t);
  for (auto& [k, mat] : sd.c1.diff) {
    int rowoff = dim0({k.first + 1, k.second}), coloff = dim0(k);
    for (auto& t : mat) out.diff[k].push_back({t.row + rowoff, t.col + coloff, t.val});
  }
  for (auto& [k, mat] : sd.connecting) {
    int rowoff = dim0({k.first + 1, k.second});
    for (auto& t : mat) out.diff[k].push_back({t.row + rowoff, t.col, t.val});
  }
  return out;
}

}  // namespace

TEST_CASE("kink complex block structure") {
  Pipeline p = Pipeline::run(parse_pd("PD[X[1,2,2,1]]"));  // positive kink
  CHECK(p.odd.total_dim() == 6);
  // positive kink: m in {0, 1}
  long long d0 = 0, d1 = 0;
  for (auto& [k, g] : p.odd.gens) {
    CHECK((k.first == 0 || k.first == 1));
    (k.first == 0 ? d0 : d1) += (long long)g.size();
  }
  CHECK(d0 == 4);
  CHECK(d1 == 2);
  CHECK(p.odd_red.total_dim() == 3);
}

TEST_CASE("differential raises m by one and preserves s") {
  Pipeline p = Pipeline::run(parse_pd(kFig8));
  for (auto& [k, mat] : p.odd.diff) {
    auto tgt = p.odd.gens.find({k.first + 1, k.second});
    auto src = p.odd.gens.find(k);
    REQUIRE(src != p.odd.gens.end());
    for (auto& t : mat) {
      CHECK(t.col < (int)src->second.size());
      REQUIRE(tgt != p.odd.gens.end());
      CHECK(t.row < (int)tgt->second.size());
      CHECK(t.val != 0);
    }
  }
}

TEST_CASE("corrupting one entry breaks d squared") {
  Pipeline p = Pipeline::run(parse_pd(kRightTrefoil));
  REQUIRE_FALSE(check_d_squared(p.odd).has_value());
  bool broke = false;
  for (auto& [k, mat] : p.odd.diff) {
    if (k.first != 0 || mat.empty()) continue;
    ChainComplexZ c = p.odd;
    c.diff[k][0].val *= 3;
    if (check_d_squared(c).has_value()) broke = true;
  }
  CHECK(broke);
}

TEST_CASE("skein decomposition rebuilds the parent complex") {
  for (const char* txt : {kRightTrefoil, kFig8}) {
    CAPTURE(txt);
    Pipeline p = Pipeline::run(parse_pd(txt));
    for (int x = 0; x < p.d.n(); x++) {
      CAPTURE(x);
      SkeinDecomposition sd = skein_decompose(p.cube, p.eps, x);
      CHECK(sd.c0.total_dim() + sd.c1.total_dim() == p.odd.total_dim());
      CHECK_FALSE(check_d_squared(sd.c0).has_value());
      CHECK_FALSE(check_d_squared(sd.c1).has_value());
      ChainComplexZ cone = reassemble(sd);
      CHECK_FALSE(check_d_squared(cone).has_value());
      CHECK(smith_homology(cone) == smith_homology(p.odd));
    }
  }
}

TEST_CASE("long exact sequence rank bound") {
  Pipeline p = Pipeline::run(parse_pd(kFig8));
  BigradedGroup h = smith_homology(p.odd);
  for (int x = 0; x < p.d.n(); x++) {
    SkeinDecomposition sd = skein_decompose(p.cube, p.eps, x);
    long long r0 = total_rank(smith_homology(sd.c0));
    long long r1 = total_rank(smith_homology(sd.c1));
    CHECK(total_rank(h) <= r0 + r1);
    CHECK((r0 + r1 - total_rank(h)) % 2 == 0);
  }
}

TEST_CASE("smoothing a trefoil crossing") {
  PDCode pd = parse_pd(kRightTrefoil);
  // the oriented (0) smoothing of one positive crossing leaves a Hopf link
  PDCode d0 = smooth_crossing(pd, 0, 0);
  CHECK(d0.n() == 2);
  CHECK(orient(d0).num_components == 2);
  CHECK(verify_diagram(d0).empty());
  // the disoriented (1) smoothing merges the strands into an unknot
  PDCode d1 = smooth_crossing(pd, 0, 1);
  CHECK(d1.n() == 2);
  CHECK(orient(d1).num_components == 1);
  CHECK(jones_state_sum(orient(d1)) == Laurent1{{-1, 1}, {1, 1}});
  // smoothing everything leaves free loops only
  PDCode all0 = smooth_crossing(smooth_crossing(d0, 0, 0), 0, 0);
  CHECK(all0.n() == 0);
  CHECK(all0.free_loops == 2);
}
