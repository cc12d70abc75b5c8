#include "oddkh/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oddkh {

namespace {

inline int even_sign(Vertex I, int x) {
  return __builtin_popcount(I & ((Vertex(1) << x) - 1)) & 1 ? -1 : +1;
}

struct Assembled {
  ChainComplexZ cx;
  // pos[I][mask] = index of the generator within its (m, s) block, -1 if dropped
  std::vector<std::vector<int>> pos;
};

// One assembly routine drives every flavor: `even` picks the TQFT, `eps` the
// odd signs (null for even), `keep` the generator filter, `vkeep` the vertex
// filter (skein halves), `s_shift` the reduced grading normalization.
Assembled assemble_impl(const Cube& cube, bool even, const EdgeAssignment* eps, int s_shift,
                        const std::function<bool(Vertex, const Resolution&, Mono)>& keep,
                        const std::function<bool(Vertex)>& vkeep) {
  const OrientedDiagram& d = *cube.diagram;
  Assembled out;
  ChainComplexZ& cx = out.cx;
  cx.n_plus = d.n_plus;
  cx.n_minus = d.n_minus;
  out.pos.resize(cube.nvertices());

  auto grading = [&](Vertex I, int circles, Mono mask) -> Bidegree {
    int w = __builtin_popcount(I);
    int r = __builtin_popcount(mask);
    return {w - d.n_minus, circles - 2 * r + d.n_plus - 2 * d.n_minus + w + s_shift};
  };

  for (Vertex I = 0; I < (Vertex)cube.nvertices(); I++) {
    if (vkeep && !vkeep(I)) continue;
    const Resolution& r = cube.res[I];
    auto& p = out.pos[I];
    p.assign(size_t(1) << r.ncircles, -1);
    for (Mono mask = 0; mask < (Mono(1) << r.ncircles); mask++) {
      if (keep && !keep(I, r, mask)) continue;
      auto& blk = cx.gens[grading(I, r.ncircles, mask)];
      p[mask] = (int)blk.size();
      blk.push_back({I, mask});
    }
  }

  for (Vertex I = 0; I < (Vertex)cube.nvertices(); I++) {
    if (vkeep && !vkeep(I)) continue;
    const Resolution& rI = cube.res[I];
    for (int x = 0; x < cube.n; x++) {
      if (I >> x & 1) continue;
      Vertex J = I | (Vertex(1) << x);
      if (vkeep && !vkeep(J)) continue;
      EdgeAction act = edge_action(d, rI, cube.res[J], x);
      int sgn = even ? even_sign(I, x) : eps->at(I, x);
      for (Mono mask = 0; mask < (Mono(1) << rI.ncircles); mask++) {
        int col = out.pos[I][mask];
        if (col < 0) continue;
        Bidegree key = grading(I, rI.ncircles, mask);
        Element v{{mask, 1}};
        Element img = even ? even_edge_map(v, act) : edge_map(v, act);
        for (auto& [tm, c] : img) {
          int row = out.pos[J][tm];
          if (row < 0) throw std::logic_error("differential leaves the subcomplex");
          cx.diff[key].push_back({row, col, sgn * c});
        }
      }
    }
  }
  return out;
}

}  // namespace

ChainComplexZ assemble(const Cube& cube, const EdgeAssignment& eps) {
  return assemble_impl(cube, false, &eps, 0, nullptr, nullptr).cx;
}

ChainComplexZ assemble_even(const Cube& cube) {
  return assemble_impl(cube, true, nullptr, 0, nullptr, nullptr).cx;
}

ChainComplexZ reduce_basepoint(const Cube& cube, const EdgeAssignment& eps, int arc) {
  if (arc < 0 || arc >= cube.diagram->pd.num_arcs) throw PDError("invalid basepoint arc");
  auto keep = [arc](Vertex, const Resolution& r, Mono m) {
    return (m >> r.arc_circle[arc] & 1) != 0;
  };
  return assemble_impl(cube, false, &eps, +1, keep, nullptr).cx;
}

ChainComplexZ reduce_even(const Cube& cube, int arc) {
  if (arc < 0 || arc >= cube.diagram->pd.num_arcs) throw PDError("invalid basepoint arc");
  auto keep = [arc](Vertex, const Resolution& r, Mono m) {
    return (m >> r.arc_circle[arc] & 1) != 0;
  };
  return assemble_impl(cube, true, nullptr, +1, keep, nullptr).cx;
}

ChainComplexZ reduce_kernel(const Cube& cube, const EdgeAssignment& eps) {
  const OrientedDiagram& d = *cube.diagram;
  ChainComplexZ cx;
  cx.n_plus = d.n_plus;
  cx.n_minus = d.n_minus;
  // Generators f_S = wedge_{i in S} (a_i - a_0) for S avoiding circle 0;
  // the expansion of f_S has leading monomial S with coefficient +1, so
  // coefficients in the kernel basis are read off the a_0-free monomials.
  std::vector<std::vector<int>> pos(cube.nvertices());
  auto grading = [&](Vertex I, int circles, Mono mask) -> Bidegree {
    int w = __builtin_popcount(I);
    int r = __builtin_popcount(mask);
    return {w - d.n_minus, circles - 2 * r + d.n_plus - 2 * d.n_minus + w - 1};
  };
  for (Vertex I = 0; I < (Vertex)cube.nvertices(); I++) {
    const Resolution& r = cube.res[I];
    pos[I].assign(size_t(1) << r.ncircles, -1);
    for (Mono mask = 0; mask < (Mono(1) << r.ncircles); mask++) {
      if (mask & 1) continue;  // S must avoid circle 0
      auto& blk = cx.gens[grading(I, r.ncircles, mask)];
      pos[I][mask] = (int)blk.size();
      blk.push_back({I, mask});
    }
  }
  auto expand = [](Mono S) {
    // f_S as an exterior element: product over i in S of (a_i - a_0)
    Element e{{0, 1}};
    for (Mono rest = S; rest; rest &= rest - 1) {
      int g = __builtin_ctz(rest);
      Element nxt;
      for (auto& [m, c] : e) {
        Mono m1 = m, m0 = m;
        int s1 = c, s0 = -c;
        if (wedge_insert(m1, g, s1)) add_term(nxt, m1, s1);
        if (wedge_insert(m0, 0, s0)) add_term(nxt, m0, s0);
      }
      e = std::move(nxt);
    }
    return e;
  };
  for (Vertex I = 0; I < (Vertex)cube.nvertices(); I++) {
    const Resolution& rI = cube.res[I];
    for (int x = 0; x < cube.n; x++) {
      if (I >> x & 1) continue;
      Vertex J = I | (Vertex(1) << x);
      EdgeAction act = edge_action(d, rI, cube.res[J], x);
      int sgn = eps.at(I, x);
      for (Mono S = 0; S < (Mono(1) << rI.ncircles); S++) {
        if (S & 1) continue;
        Bidegree key = grading(I, rI.ncircles, S);
        Element img = edge_map(expand(S), act);
        for (auto& [tm, c] : img) {
          if (tm & 1) continue;  // read off the a_0-free part
          int row = pos[J][tm];
          if (row < 0) throw std::logic_error("kernel reduction index failure");
          cx.diff[key].push_back({row, pos[I][S], sgn * c});
        }
      }
    }
  }
  return cx;
}

std::optional<std::string> check_d_squared(const ChainComplexZ& c) {
  for (auto& [key, mat] : c.diff) {
    auto [m, s] = key;
    auto next = c.diff.find({m + 1, s});
    if (next == c.diff.end()) continue;
    // rows of `mat` are columns of `next->second`
    int mid_dim = 0;
    for (auto& t : next->second) mid_dim = std::max(mid_dim, t.col + 1);
    for (auto& t : mat) mid_dim = std::max(mid_dim, t.row + 1);
    std::vector<std::vector<std::pair<int, long long>>> by_col(mid_dim);
    for (auto& t : next->second) by_col[t.col].push_back({t.row, t.val});
    std::map<std::pair<int, int>, long long> acc;
    for (auto& t : mat)
      for (auto& [r2, v2] : by_col[t.row]) acc[{r2, t.col}] += v2 * t.val;
    for (auto& [rc, v] : acc)
      if (v != 0) {
        std::ostringstream os;
        os << "d^2 != 0 at (m=" << m << ", s=" << s << ") entry (" << rc.first << ","
           << rc.second << ") = " << v;
        return os.str();
      }
  }
  return std::nullopt;
}

SkeinDecomposition skein_decompose(const Cube& cube, const EdgeAssignment& eps, int crossing) {
  SkeinDecomposition sd;
  auto v0 = [crossing](Vertex I) { return !(I >> crossing & 1); };
  auto v1 = [crossing](Vertex I) { return (I >> crossing & 1) != 0; };
  Assembled a0 = assemble_impl(cube, false, &eps, 0, nullptr, v0);
  Assembled a1 = assemble_impl(cube, false, &eps, 0, nullptr, v1);
  sd.c0 = std::move(a0.cx);
  sd.c1 = std::move(a1.cx);
  const OrientedDiagram& d = *cube.diagram;
  for (Vertex I = 0; I < (Vertex)cube.nvertices(); I++) {
    if (I >> crossing & 1) continue;
    Vertex J = I | (Vertex(1) << crossing);
    const Resolution& rI = cube.res[I];
    EdgeAction act = edge_action(d, rI, cube.res[J], crossing);
    int sgn = eps.at(I, crossing);
    for (Mono mask = 0; mask < (Mono(1) << rI.ncircles); mask++) {
      int col = a0.pos[I][mask];
      if (col < 0) continue;
      int w = __builtin_popcount(I);
      Bidegree key = {w - d.n_minus,
                      rI.ncircles - 2 * __builtin_popcount(mask) + d.n_plus - 2 * d.n_minus + w};
      for (auto& [tm, c] : edge_map(Element{{mask, 1}}, act))
        sd.connecting[key].push_back({a1.pos[J][tm], col, sgn * c});
    }
  }
  return sd;
}

PDCode smooth_crossing(const PDCode& pd, int x, int state) {
  std::vector<int> parent(pd.num_arcs);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  int loops = pd.free_loops;
  auto join = [&](int u, int v) {
    u = find(u);
    v = find(v);
    if (u == v) loops++;
    else parent[u] = v;
  };
  auto& arc = pd.crossings[x].arc;
  if (state == 0) { join(arc[1], arc[2]); join(arc[3], arc[0]); }
  else { join(arc[0], arc[1]); join(arc[2], arc[3]); }
  std::vector<std::array<int, 4>> tuples;
  for (int c = 0; c < pd.n(); c++) {
    if (c == x) continue;
    std::array<int, 4> t;
    for (int s = 0; s < 4; s++) t[s] = find(pd.crossings[c].arc[s]) + 1;
    tuples.push_back(t);
  }
  return pd_from_tuples(tuples, loops);
}

}  // namespace oddkh
