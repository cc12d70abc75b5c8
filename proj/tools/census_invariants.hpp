#pragma once
// Classical invariants used only while building the bundled knot table:
// the Alexander polynomial and counts of knot-group homomorphisms into a
// small symmetric group.  Together with the Jones polynomial and the
// signature these separate every knot the tabulator has to tell apart.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oddkh/pd.hpp"

namespace census {

using bigint = boost::multiprecision::cpp_int;

// Strand = maximal over-passage-spanning run of arcs (the Wirtinger
// generators).  Returns per-arc strand ids and the strand count.
inline std::pair<std::vector<int>, int> wirtinger_strands(const oddkh::PDCode& pd) {
  int n = pd.n(), na = 2 * n;
  std::vector<int> uf(na);
  for (int a = 0; a < na; a++) uf[a] = a;
  std::function<int(int)> find = [&](int a) { return uf[a] == a ? a : uf[a] = find(uf[a]); };
  for (int c = 0; c < n; c++) uf[find(pd.crossings[c].arc[1])] = find(pd.crossings[c].arc[3]);
  std::vector<int> sid(na, -1);
  int ns = 0;
  for (int a = 0; a < na; a++)
    if (find(a) == a) sid[a] = ns++;
  for (int a = 0; a < na; a++) sid[a] = sid[find(a)];
  return {sid, ns};
}

// The under-strand enters at slot 0 or 2; recover which from the sign rule
// (the sign is positive exactly when the over-strand enters one slot
// counterclockwise from the under entry).
inline int under_in_slot(const oddkh::OrientedDiagram& d, int c) {
  return (d.sign[c] > 0) == d.over_in_b[c] ? 0 : 2;
}

// Determinant of the Alexander matrix (one Wirtinger relation per crossing,
// one generator column dropped) at an integer t, by fraction-free
// elimination.  Equals +-t^k Alexander(t).
inline bigint alexander_det(const oddkh::OrientedDiagram& d, const bigint& t) {
  const oddkh::PDCode& pd = d.pd;
  int n = pd.n();
  auto [sid, ns] = wirtinger_strands(pd);
  std::vector<std::vector<bigint>> m(n, std::vector<bigint>(ns, 0));
  for (int c = 0; c < n; c++) {
    int u = under_in_slot(d, c);
    int in = sid[pd.crossings[c].arc[u]];
    int out = sid[pd.crossings[c].arc[u ^ 2]];
    int over = sid[pd.crossings[c].arc[1]];
    bigint ti = d.sign[c] > 0 ? t : 1, to = d.sign[c] > 0 ? 1 : t;
    m[c][out] += to;
    m[c][in] -= ti;
    m[c][over] -= to - ti;
  }
  int k = n - 1;
  if (k <= 0) return 1;
  std::vector<std::vector<bigint>> a(k, std::vector<bigint>(k));
  for (int i = 0; i < k; i++)
    for (int j = 0; j < k; j++) a[i][j] = m[i][j];
  bigint prev = 1;
  for (int p = 0; p < k; p++) {
    int piv = -1;
    for (int i = p; i < k; i++)
      if (a[i][p] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != p) std::swap(a[piv], a[p]);
    for (int i = p + 1; i < k; i++)
      for (int j = p + 1; j < k; j++) a[i][j] = (a[p][p] * a[i][j] - a[i][p] * a[p][j]) / prev;
    prev = a[p][p];
  }
  return a[k - 1][k - 1];
}

// Alexander polynomial coefficients, normalized to lowest degree 0 with
// positive lowest coefficient.  One evaluation at a large T recovers the
// coefficients as balanced base-T digits (they are far smaller than T/2).
inline std::vector<long long> alexander_poly(const oddkh::OrientedDiagram& d) {
  static const bigint T("1000000000");
  bigint v = alexander_det(d, T);
  std::vector<long long> coef;
  while (v != 0) {
    bigint r = v % T;
    if (r > T / 2) r -= T;
    if (r < -T / 2) r += T;
    coef.push_back((long long)r);
    v = (v - r) / T;
  }
  while (!coef.empty() && coef.front() == 0) coef.erase(coef.begin());
  if (!coef.empty() && coef.front() < 0)
    for (auto& c : coef) c = -c;
  return coef;
}

// ---------------------------------------------------------------------------
// Finite permutation groups and homomorphism counting.

struct Group {
  int order = 0;
  int deg = 0;
  std::vector<std::array<uint8_t, 8>> elems;
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;

  void close() {
    std::map<std::array<uint8_t, 8>, int> idx;
    for (int i = 0; i < (int)elems.size(); i++) idx[elems[i]] = i;
    for (bool grew = true; grew;) {
      grew = false;
      for (size_t i = 0; i < elems.size(); i++)
        for (size_t j = 0; j < elems.size(); j++) {
          std::array<uint8_t, 8> p{};
          for (int x = 0; x < 8; x++) p[x] = x < deg ? elems[i][elems[j][x]] : x;
          if (!idx.count(p)) {
            idx[p] = elems.size();
            elems.push_back(p);
            grew = true;
          }
        }
    }
    order = (int)elems.size();
    mul.assign(order, std::vector<int>(order));
    inv.assign(order, 0);
    for (int i = 0; i < order; i++)
      for (int j = 0; j < order; j++) {
        std::array<uint8_t, 8> p{};
        for (int x = 0; x < 8; x++) p[x] = x < deg ? elems[i][elems[j][x]] : x;
        mul[i][j] = idx[p];
      }
    for (int i = 0; i < order; i++)
      for (int j = 0; j < order; j++)
        if (mul[i][j] == 0) inv[i] = j;
  }
};

// Full symmetric group on k <= 8 points, generated by a transposition and a
// k-cycle.
inline Group symmetric_group(int k) {
  Group g;
  g.deg = k;
  std::array<uint8_t, 8> id{};
  for (int i = 0; i < 8; i++) id[i] = (uint8_t)i;
  g.elems.push_back(id);
  auto t = id;
  std::swap(t[0], t[1]);
  g.elems.push_back(t);
  auto c = id;
  for (int i = 0; i < k; i++) c[i] = (uint8_t)((i + 1) % k);
  g.elems.push_back(c);
  g.close();
  return g;
}

// Number of homomorphisms from the knot group (Wirtinger presentation) into
// G.  All meridian images are conjugate, so the count splits over conjugacy
// classes; within a class the first strand is pinned to a representative and
// the result scaled by the class size.  Backtracking with forced propagation
// of the relations out = over^s * in * over^-s.
inline long long hom_count(const oddkh::OrientedDiagram& d, const Group& G) {
  const oddkh::PDCode& pd = d.pd;
  int n = pd.n();
  auto [sid, ns] = wirtinger_strands(pd);
  struct Rel {
    int in, out, over, sign;
  };
  std::vector<Rel> rels(n);
  for (int c = 0; c < n; c++) {
    int u = under_in_slot(d, c);
    rels[c] = {sid[pd.crossings[c].arc[u]], sid[pd.crossings[c].arc[u ^ 2]],
               sid[pd.crossings[c].arc[1]], d.sign[c]};
  }
  std::vector<int> cls(G.order, -1);
  std::vector<std::vector<int>> classes;
  for (int g = 0; g < G.order; g++) {
    if (cls[g] >= 0) continue;
    int id = (int)classes.size();
    classes.push_back({});
    for (int h = 0; h < G.order; h++) {
      int x = G.mul[G.mul[h][g]][G.inv[h]];
      if (cls[x] < 0) {
        cls[x] = id;
        classes[id].push_back(x);
      }
    }
  }
  auto conj = [&](int g, int x, int s) {
    int a = s > 0 ? g : G.inv[g], b = s > 0 ? G.inv[g] : g;
    return G.mul[G.mul[a][x]][b];
  };
  long long total = 0;
  for (auto& C : classes) {
    std::vector<int> val(ns, -1);
    long long cnt = 0;
    std::function<void()> dfs = [&]() {
      std::vector<int> set_here;
      bool bad = false;
      for (bool grew = true; grew && !bad;) {
        grew = false;
        for (auto& r : rels) {
          if (val[r.over] < 0) continue;
          if (val[r.in] >= 0) {
            int o = conj(val[r.over], val[r.in], r.sign);
            if (val[r.out] < 0) {
              val[r.out] = o;
              set_here.push_back(r.out);
              grew = true;
            } else if (val[r.out] != o) {
              bad = true;
              break;
            }
          } else if (val[r.out] >= 0) {
            val[r.in] = conj(val[r.over], val[r.out], -r.sign);
            set_here.push_back(r.in);
            grew = true;
          }
        }
      }
      if (!bad) {
        int s = -1;
        for (int i = 0; i < ns; i++)
          if (val[i] < 0) {
            s = i;
            break;
          }
        if (s < 0)
          cnt++;
        else
          for (int g : C) {
            val[s] = g;
            dfs();
            val[s] = -1;
          }
      }
      for (int i : set_here) val[i] = -1;
    };
    val[0] = C[0];
    dfs();
    total += (long long)C.size() * cnt;
  }
  return total;
}

}  // namespace census
