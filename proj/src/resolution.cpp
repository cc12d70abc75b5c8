#include "oddkh/resolution.hpp"

namespace oddkh {

namespace {

struct Occ {
  // occ[a] = the two (crossing, slot) endpoints of arc a
  std::vector<std::array<std::pair<int, int>, 2>> at;
  explicit Occ(const PDCode& pd) {
    at.resize(pd.num_arcs);
    std::vector<int> cnt(pd.num_arcs, 0);
    for (int c = 0; c < pd.n(); c++)
      for (int s = 0; s < 4; s++) {
        int a = pd.crossings[c].arc[s];
        at[a][cnt[a]++] = {c, s};
      }
  }
};

// Strand pairs of a resolved crossing, in listed order (the surgery-arc
// endpoint lies left of a traversal in listed order).
inline std::array<std::array<int, 2>, 2> pairs_of(int state) {
  if (state == 0) return {{{1, 2}, {3, 0}}};
  return {{{0, 1}, {2, 3}}};
}

}  // namespace

Resolution resolve(const OrientedDiagram& d, Vertex I) {
  const PDCode& pd = d.pd;
  Resolution r;
  r.vertex = I;
  r.arc_circle.assign(pd.num_arcs, -1);
  r.corner_circle.assign(pd.n(), {-1, -1});

  Occ occ(pd);
  for (int a0 = 0; a0 < pd.num_arcs; a0++) {
    if (r.arc_circle[a0] != -1) continue;
    int circle = r.ncircles++;
    r.circle_markers.emplace_back();
    int a = a0, io = 1;  // flow along a into its second endpoint
    do {
      r.arc_circle[a] = circle;
      auto [c, s] = occ.at[a][io];
      auto pp = pairs_of((I >> c) & 1);
      int p = (pp[0][0] == s || pp[0][1] == s) ? 0 : 1;
      bool forward = pp[p][0] == s;
      int t = forward ? pp[p][1] : pp[p][0];
      r.circle_markers[circle].push_back({c, (uint8_t)p, forward});
      r.corner_circle[c][p] = circle;
      int b = pd.crossings[c].arc[t];
      int jo = occ.at[b][0] == std::make_pair(c, t) ? 0 : 1;
      a = b;
      io = 1 - jo;
    } while (!(a == a0 && io == 1));
  }
  r.ncircles += pd.free_loops;  // crossing-less loops, ordered last
  r.circle_markers.resize(r.ncircles);
  return r;
}

std::vector<Resolution> all_resolutions(const OrientedDiagram& d, int max_crossings) {
  int n = d.n();
  if (n > max_crossings)
    throw PDError("crossing count " + std::to_string(n) + " exceeds cap " +
                  std::to_string(max_crossings));
  std::vector<Resolution> out;
  out.reserve(size_t(1) << n);
  for (Vertex I = 0; I < (Vertex(1) << n); I++) out.push_back(resolve(d, I));
  return out;
}

}  // namespace oddkh
