#include "oddkh/simplify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

namespace oddkh {

namespace {

using boost::multiprecision::cpp_int;

// partner[c][s] = the other endpoint (crossing, slot) of arc[c][s].
std::vector<std::array<std::pair<int, int>, 4>> dart_partners(const PDCode& pd) {
  std::map<int, std::vector<std::pair<int, int>>> occ;
  for (int c = 0; c < pd.n(); c++)
    for (int s = 0; s < 4; s++) occ[pd.crossings[c].arc[s]].push_back({c, s});
  std::vector<std::array<std::pair<int, int>, 4>> partner(pd.n());
  for (auto& [label, os] : occ) {
    if (os.size() != 2) throw PDError("arc label does not occur exactly twice");
    partner[os[0].first][os[0].second] = os[1];
    partner[os[1].first][os[1].second] = os[0];
  }
  return partner;
}

// Relabeling with merges; counts strands that close up into free loops.
struct Rebuilder {
  std::map<int, int> parent;
  int find(int a) {
    auto it = parent.emplace(a, a).first;
    return it->second == a ? a : it->second = find(it->second);
  }
  void merge(int a, int b) { parent[find(a)] = find(b); }

  // Crossings `dead` are dropped; any merge class with no surviving occurrence
  // becomes a free loop.
  PDCode build(const PDCode& pd, const std::vector<int>& dead) {
    std::vector<std::array<int, 4>> tuples;
    std::vector<bool> drop(pd.n(), false);
    for (int c : dead) drop[c] = true;
    std::vector<bool> alive(pd.num_arcs + 1, false);
    for (int c = 0; c < pd.n(); c++) {
      if (drop[c]) continue;
      std::array<int, 4> t;
      for (int s = 0; s < 4; s++) {
        t[s] = find(pd.crossings[c].arc[s]) + 1;
        alive[t[s] - 1] = true;
      }
      tuples.push_back(t);
    }
    int loops = pd.free_loops;
    std::vector<int> roots;
    for (auto& [a, p] : parent)
      if (find(a) == a) roots.push_back(a);
    for (int r : roots)
      if (!alive[r]) loops++;
    return pd_from_tuples(tuples, loops);
  }
};

}  // namespace

std::vector<Face> trace_faces(const PDCode& pd) {
  auto partner = dart_partners(pd);
  std::vector<std::array<bool, 4>> seen(pd.n(), {false, false, false, false});
  std::vector<Face> faces;
  for (int c0 = 0; c0 < pd.n(); c0++)
    for (int s0 = 0; s0 < 4; s0++) {
      if (seen[c0][s0]) continue;
      Face f;
      int c = c0, s = s0;
      while (!seen[c][s]) {
        seen[c][s] = true;
        f.corners.push_back({c, s});
        auto [c2, s2] = partner[c][s];
        c = c2;
        s = (s2 + 3) % 4;
      }
      faces.push_back(std::move(f));
    }
  return faces;
}

std::optional<PDCode> reduce_r1(const PDCode& pd) {
  for (int c = 0; c < pd.n(); c++)
    for (int s = 0; s < 4; s++) {
      auto& t = pd.crossings[c].arc;
      if (t[s] != t[(s + 1) % 4]) continue;
      Rebuilder rb;
      rb.merge(t[(s + 2) % 4], t[(s + 3) % 4]);
      return rb.build(pd, {c});
    }
  return std::nullopt;
}

std::optional<PDCode> reduce_r2(const PDCode& pd) {
  for (auto& f : trace_faces(pd)) {
    if (f.corners.size() != 2) continue;
    auto [c1, s1] = f.corners[0];
    auto [c2, s2] = f.corners[1];
    if (c1 == c2 || (s1 + s2) % 2 == 0) continue;  // same parity: not pulled apart
    auto& t1 = pd.crossings[c1].arc;
    auto& t2 = pd.crossings[c2].arc;
    Rebuilder rb;
    // strand through (c1,s1)-(c2,s2+1) and its external continuations
    rb.merge(t1[(s1 + 2) % 4], t1[s1]);
    rb.merge(t1[s1], t2[(s2 + 3) % 4]);
    // strand through (c2,s2)-(c1,s1+1)
    rb.merge(t2[(s2 + 2) % 4], t2[s2]);
    rb.merge(t2[s2], t1[(s1 + 3) % 4]);
    return rb.build(pd, {c1, c2});
  }
  return std::nullopt;
}

std::vector<PDCode> r3_moves(const PDCode& pd) {
  std::vector<PDCode> out;
  for (auto& f : trace_faces(pd)) {
    if (f.corners.size() != 3) continue;
    auto [c1, s1] = f.corners[0];
    auto [c2, s2] = f.corners[1];
    auto [c3, s3] = f.corners[2];
    if (c1 == c2 || c1 == c3 || c2 == c3) continue;
    // The slide exists unless each strand is over one neighbor and under the
    // other (the cyclic pattern).  With sides A1 = c1->c2, A2 = c2->c3,
    // A3 = c3->c1, the dart parities give: o1 = (strand A1 over strand A3),
    // o2 = (A1 over A2), o3 = (A3 over A2).
    int o1 = s1 & 1, o2 = (s2 + 1) & 1, o3 = s3 & 1;
    if ((o1 && !o2 && o3) || (!o1 && o2 && !o3)) continue;
    auto& t1 = pd.crossings[c1].arc;
    auto& t2 = pd.crossings[c2].arc;
    auto& t3 = pd.crossings[c3].arc;
    int A1 = t1[s1], A2 = t2[s2], A3 = t3[s3];
    int p1 = t1[(s1 + 2) % 4], p2 = t2[(s2 + 3) % 4];
    int q1 = t2[(s2 + 2) % 4], q2 = t3[(s3 + 3) % 4];
    int r1 = t3[(s3 + 2) % 4], r2 = t1[(s1 + 3) % 4];
    std::vector<std::array<int, 4>> tuples;
    for (int c = 0; c < pd.n(); c++) {
      std::array<int, 4> t = pd.crossings[c].arc;
      if (c == c1) {
        t[s1] = p2; t[(s1 + 1) % 4] = r1; t[(s1 + 2) % 4] = A1; t[(s1 + 3) % 4] = A3;
      } else if (c == c2) {
        t[s2] = q2; t[(s2 + 1) % 4] = p1; t[(s2 + 2) % 4] = A2; t[(s2 + 3) % 4] = A1;
      } else if (c == c3) {
        t[s3] = r2; t[(s3 + 1) % 4] = q1; t[(s3 + 2) % 4] = A3; t[(s3 + 3) % 4] = A2;
      }
      for (auto& a : t) a++;
      tuples.push_back(t);
    }
    try {
      PDCode moved = pd_from_tuples(tuples, pd.free_loops);
      check_planar(moved);
      out.push_back(std::move(moved));
    } catch (const PDError&) {
      // degenerate configuration; skip
    }
  }
  return out;
}

PDCode r1_stabilize(const PDCode& pd, int arc, bool positive) {
  int fresh = pd.num_arcs;
  int p = fresh + 1, q = fresh + 2, l = fresh + 3;  // 1-based for pd_from_tuples
  std::vector<std::array<int, 4>> tuples;
  int replaced = 0;
  for (auto& x : pd.crossings) {
    std::array<int, 4> t = x.arc;
    for (auto& a : t) {
      if (a == arc) a = replaced++ ? q : p;
      else a++;
    }
    tuples.push_back(t);
  }
  if (replaced != 2) throw PDError("no such arc");
  if (positive) tuples.push_back({p, l, l, q});
  else tuples.push_back({l, l, p, q});
  return pd_from_tuples(tuples, pd.free_loops);
}

PDCode r2_stabilize(const PDCode& pd, int f, int ia, int ib) {
  auto faces = trace_faces(pd);
  auto [c1, s1] = faces.at(f).corners.at(ia);
  auto [c2, s2] = faces.at(f).corners.at(ib);
  int a = pd.crossings[c1].arc[s1], b = pd.crossings[c2].arc[s2];
  if (a == b) throw PDError("need two distinct boundary arcs");
  auto partner = dart_partners(pd);
  auto [pc1, ps1] = partner[c1][s1];
  auto [pc2, ps2] = partner[c2][s2];
  int base = pd.num_arcs;
  int a1 = base + 1, a2 = base + 2, b1 = base + 3, b2 = base + 4, t = base + 5, x = base + 6;
  // Four insertions to try: which segment of strand a (the a1 side or the a2
  // side) crosses b next to b1, and the common handedness of the new bigon.
  for (int variant = 0; variant < 4; variant++) {
    std::vector<std::array<int, 4>> tuples;
    for (int c = 0; c < pd.n(); c++) {
      std::array<int, 4> tt = pd.crossings[c].arc;
      for (auto& v : tt) v++;
      if (c == c1) tt[s1] = a1;
      if (c == pc1) tt[ps1] = a2;
      if (c == c2) tt[s2] = b1;
      if (c == pc2) tt[ps2] = b2;
      tuples.push_back(tt);
    }
    int u = variant & 1 ? a2 : a1, v = variant & 1 ? a1 : a2;
    if (variant & 2) {
      tuples.push_back({b1, u, x, t});
      tuples.push_back({x, v, b2, t});
    } else {
      tuples.push_back({b1, t, x, u});
      tuples.push_back({x, t, b2, v});
    }
    try {
      PDCode poked = pd_from_tuples(tuples, pd.free_loops);
      check_planar(poked);
      return poked;
    } catch (const PDError&) {
      if (variant == 3) throw;
    }
  }
  throw PDError("unreachable");
}

PDCode simplify(const PDCode& pd, int target, uint64_t seed) {
  auto reduce = [](PDCode p) {
    for (;;) {
      if (auto q = reduce_r1(p)) p = std::move(*q);
      else if (auto q2 = reduce_r2(p)) p = std::move(*q2);
      else return p;
    }
  };
  std::mt19937_64 rng(seed);
  PDCode cur = reduce(pd), best = cur;
  int since_improve = 0;
  for (int step = 0; step < 6000 && best.n() > target; step++) {
    std::vector<PDCode> moves = r3_moves(cur);
    bool poked = false;
    if (moves.empty() || (since_improve > 0 && since_improve % 80 == 0)) {
      // escape a local minimum by poking one face arc over another
      auto faces = trace_faces(cur);
      for (int tries = 0; tries < 30 && !poked; tries++) {
        int f = (int)(rng() % faces.size());
        auto& cs = faces[f].corners;
        if (cs.size() < 2) continue;
        int i = (int)(rng() % cs.size()), j = (int)(rng() % cs.size());
        if (i == j) continue;
        try {
          cur = r2_stabilize(cur, f, i, j);
          poked = true;
        } catch (const PDError&) {
        }
      }
      if (!poked && moves.empty()) break;
    }
    if (!poked) cur = moves[rng() % moves.size()];
    cur = reduce(cur);
    if (cur.n() < best.n()) {
      best = cur;
      since_improve = 0;
    } else {
      since_improve++;
    }
    if (cur.n() > best.n() + 6) cur = best;
  }
  return best;
}

namespace {

// Signature of a small symmetric integer matrix via congruence elimination.
int sym_signature(std::vector<std::vector<cpp_int>> m) {
  int n = (int)m.size(), sig = 0;
  std::vector<bool> done(n, false);
  auto rowcol_op = [&](int j, const cpp_int& a, int i, const cpp_int& b) {
    // (row j) <- a*(row j) + b*(row i), then the same on columns.
    for (int k = 0; k < n; k++) m[j][k] = a * m[j][k] + b * m[i][k];
    for (int k = 0; k < n; k++) m[k][j] = a * m[k][j] + b * m[k][i];
  };
  for (;;) {
    int piv = -1;
    for (int i = 0; i < n; i++)
      if (!done[i] && m[i][i] != 0) { piv = i; break; }
    if (piv >= 0) {
      sig += m[piv][piv] > 0 ? 1 : -1;
      for (int j = 0; j < n; j++)
        if (!done[j] && j != piv && m[j][piv] != 0) rowcol_op(j, m[piv][piv], piv, -m[j][piv]);
      done[piv] = true;
      continue;
    }
    int i2 = -1, j2 = -1;
    for (int i = 0; i < n && i2 < 0; i++)
      for (int j = i + 1; j < n && i2 < 0; j++)
        if (!done[i] && !done[j] && m[i][j] != 0) { i2 = i; j2 = j; }
    if (i2 < 0) return sig;  // remaining block is zero
    // hyperbolic pair: contributes +1 -1
    cpp_int a = m[i2][j2];
    for (int k = 0; k < n; k++) {
      if (done[k] || k == i2 || k == j2) continue;
      if (m[k][j2] != 0) rowcol_op(k, a, i2, -m[k][j2]);
      if (m[k][i2] != 0) rowcol_op(k, m[i2][j2], j2, -m[k][i2]);
    }
    done[i2] = done[j2] = true;
  }
}

}  // namespace

int signature(const PDCode& pd) {
  if (pd.n() == 0) return 0;
  OrientedDiagram d = orient(pd);
  auto faces = trace_faces(pd);
  std::vector<std::array<int, 4>> fid(pd.n());
  for (int fi = 0; fi < (int)faces.size(); fi++)
    for (auto [c, s] : faces[fi].corners) fid[c][s] = fi;

  // Checkerboard coloring: at every crossing the quadrants at corners 0,2 get
  // one color and 1,3 the other.
  std::vector<int> color(faces.size(), -1);
  std::vector<int> stack;
  auto paint = [&](int f, int col) {
    if (color[f] == -1) {
      color[f] = col;
      stack.push_back(f);
    } else if (color[f] != col) {
      throw PDError("diagram has no checkerboard coloring");
    }
  };
  for (int fseed = 0; fseed < (int)faces.size(); fseed++) {
    if (color[fseed] != -1) continue;
    paint(fseed, 0);
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (auto [c, s] : faces[f].corners)
        for (int s2 = 0; s2 < 4; s2++) paint(fid[c][s2], (s2 + s) % 2 ? 1 - color[f] : color[f]);
    }
  }

  // Goeritz form on the white (color 0) regions, one deleted.
  std::vector<int> windex(faces.size(), -1);
  int nw = 0;
  for (int f = 0; f < (int)faces.size(); f++)
    if (color[f] == 0) windex[f] = nw++;
  std::vector<std::vector<cpp_int>> g(nw, std::vector<cpp_int>(nw, 0));
  int mu = 0;
  for (int c = 0; c < pd.n(); c++) {
    bool white13 = color[fid[c][1]] == 0;
    int eta = white13 ? 1 : -1;
    // The oriented smoothing opens the quadrants at corners 1,3 exactly at
    // positive crossings; the correction counts crossings where it opens the
    // white pair.
    if ((d.sign[c] > 0) == white13) mu += eta;
    int u = white13 ? windex[fid[c][1]] : windex[fid[c][0]];
    int v = white13 ? windex[fid[c][3]] : windex[fid[c][2]];
    if (u != v) {
      g[u][v] -= eta;
      g[v][u] -= eta;
    }
  }
  for (int i = 0; i < nw; i++) {
    cpp_int s = 0;
    for (int j = 0; j < nw; j++)
      if (j != i) s += g[i][j];
    g[i][i] = -s;
  }
  for (auto& row : g) row.pop_back();
  g.pop_back();
  // The sign is fixed so that the right-handed trefoil comes out +2
  // (positive diagrams get positive signature).
  return mu - sym_signature(std::move(g));
}

}  // namespace oddkh
