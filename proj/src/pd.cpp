#include "oddkh/pd.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace oddkh {

namespace {

// Occurrences of each arc label as (crossing, slot).
using OccMap = std::map<int, std::vector<std::pair<int, int>>>;

OccMap occurrences(const std::vector<Crossing>& xs) {
  OccMap occ;
  for (int c = 0; c < (int)xs.size(); c++)
    for (int s = 0; s < 4; s++) occ[xs[c].arc[s]].push_back({c, s});
  return occ;
}

}  // namespace

PDCode pd_from_tuples(const std::vector<std::array<int, 4>>& tuples, int free_loops) {
  PDCode pd;
  pd.free_loops = free_loops;
  for (auto& t : tuples) pd.crossings.push_back({t});

  auto occ = occurrences(pd.crossings);
  for (auto& [label, os] : occ) {
    if (label <= 0) throw PDError("arc labels must be positive");
    if (os.size() > 2)
      throw PDError("arc " + std::to_string(label) + " appears " +
                    std::to_string(os.size()) + " times");
  }
  // Labels appearing once describe arcs whose other endpoint was left implicit;
  // close the link by pairing them up in cyclic ascending order.  Both phases
  // of consecutive pairing are tried, since only one of them (which one
  // depends on where the labelling started) closes up planarly.
  std::vector<int> singles;
  for (auto& [label, os] : occ)
    if (os.size() == 1) singles.push_back(label);
  if (singles.size() % 2) throw PDError("open strand: odd number of half-arcs");
  if (!singles.empty()) {
    auto closed_with = [&](size_t phase) {
      std::map<int, int> relabel;
      for (size_t i = 0; i < singles.size(); i += 2) {
        int a = singles[(i + phase) % singles.size()];
        int b = singles[(i + phase + 1) % singles.size()];
        relabel[std::max(a, b)] = std::min(a, b);
      }
      PDCode q = pd;
      for (auto& x : q.crossings)
        for (auto& a : x.arc)
          if (auto it = relabel.find(a); it != relabel.end()) a = it->second;
      return q;
    };
    PDCode c0 = closed_with(0), c1 = closed_with(1);
    pd.crossings =
        rotation_faces(c1) > rotation_faces(c0) ? c1.crossings : c0.crossings;
    occ = occurrences(pd.crossings);
  }

  // Canonical contiguous renumbering, order-preserving.
  std::map<int, int> canon;
  for (auto& [label, os] : occ) canon.emplace(label, (int)canon.size());
  for (auto& x : pd.crossings)
    for (auto& a : x.arc) a = canon[a];
  pd.num_arcs = (int)canon.size();
  return pd;
}

PDCode parse_pd(const std::string& text) {
  size_t i = 0, n = text.size();
  auto skip = [&] { while (i < n && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i; };
  auto expect = [&](const char* tok) {
    skip();
    size_t len = std::string(tok).size();
    if (text.compare(i, len, tok) != 0) throw PDError("expected '" + std::string(tok) + "' in PD text");
    i += len;
  };
  expect("PD");
  expect("[");
  std::vector<std::array<int, 4>> tuples;
  int loops = 0;
  skip();
  if (i < n && text[i] == ']') {
    ++i;
    return pd_from_tuples({}, 1);  // PD[] is the 0-crossing unknot
  }
  while (true) {
    skip();
    if (text.compare(i, 1, "U") == 0) {
      ++i;
      while (i < n && isdigit((unsigned char)text[i])) ++i;  // tolerate U1, U2, ...
      loops++;
    } else {
      expect("X");
      expect("[");
      std::array<int, 4> t;
      for (int k = 0; k < 4; k++) {
        skip();
        if (i >= n || !isdigit((unsigned char)text[i])) throw PDError("expected arc label");
        int v = 0;
        while (i < n && isdigit((unsigned char)text[i])) v = v * 10 + (text[i++] - '0');
        t[k] = v;
        if (k < 3) expect(",");
      }
      expect("]");
      tuples.push_back(t);
    }
    skip();
    if (i < n && text[i] == ',') { ++i; continue; }
    expect("]");
    break;
  }
  return pd_from_tuples(tuples, loops);
}

int rotation_faces(const PDCode& pd) {
  auto occ = occurrences(pd.crossings);
  std::vector<std::vector<bool>> seen(pd.n(), std::vector<bool>(4, false));
  int faces = 0;
  for (int c0 = 0; c0 < pd.n(); c0++)
    for (int s0 = 0; s0 < 4; s0++) {
      if (seen[c0][s0]) continue;
      faces++;
      // Face permutation of the rotation system: cross the arc, then step one
      // slot clockwise.
      int c = c0, s = s0;
      while (!seen[c][s]) {
        seen[c][s] = true;
        auto& os = occ[pd.crossings[c].arc[s]];
        auto [c2, s2] = os.size() == 1 || os[0] == std::make_pair(c, s) ? os.back() : os[0];
        if (os.size() == 1) s2 = s;  // self-paired would be invalid; caught below
        c = c2;
        s = (s2 + 3) % 4;
      }
    }
  return faces;
}

void check_planar(const PDCode& pd) {
  if (pd.n() == 0) return;
  // Connected components of the crossing graph.
  std::vector<int> parent(pd.n());
  for (int i = 0; i < pd.n(); i++) parent[i] = i;
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  auto occ = occurrences(pd.crossings);
  for (auto& [label, os] : occ)
    if (os.size() == 2) parent[find(os[0].first)] = find(os[1].first);
  int comps = 0;
  for (int i = 0; i < pd.n(); i++)
    if (find(i) == i) comps++;
  int chi = pd.n() - pd.num_arcs + rotation_faces(pd);
  if (chi != 2 * comps)
    throw PDError("diagram is not planar (Euler characteristic " + std::to_string(chi) +
                  ", expected " + std::to_string(2 * comps) + ")");
}

PDCode mirror(const PDCode& pd) {
  PDCode m = pd;
  for (auto& x : m.crossings) x.arc = {x.arc[0], x.arc[3], x.arc[2], x.arc[1]};
  return m;
}

std::string to_string(const PDCode& pd) {
  std::ostringstream os;
  os << "PD[";
  bool first = true;
  for (auto& x : pd.crossings) {
    if (!first) os << ",";
    first = false;
    os << "X[" << x.arc[0] + 1 << "," << x.arc[1] + 1 << "," << x.arc[2] + 1 << ","
       << x.arc[3] + 1 << "]";
  }
  for (int i = 0; i < pd.free_loops; i++) {
    if (!first) os << ",";
    first = false;
    os << "U";
  }
  os << "]";
  return os.str();
}

OrientedDiagram orient(const PDCode& pd, const std::vector<Arrow>& arrows) {
  check_planar(pd);
  OrientedDiagram d;
  d.pd = pd;
  int n = pd.n();
  if (!arrows.empty() && (int)arrows.size() != n) throw PDError("arrow count mismatch");
  d.arrow = arrows.empty() ? std::vector<Arrow>(n, Arrow::standard) : arrows;
  d.sign.assign(n, 0);
  d.over_in_b.assign(n, false);
  d.arc_component.assign(pd.num_arcs, -1);

  auto occ = occurrences(pd.crossings);
  // arc_in[a] = the occurrence index (0/1) at which arc a flows IN; -1 unknown.
  std::vector<int> arc_in(pd.num_arcs, -1);

  // Walk each component with a provisional direction. Strand continuity pairs
  // slots 0 <-> 2 (under) and 1 <-> 3 (over); either direction is possible, so
  // afterwards flip the component to honor the tuple convention (under-strand
  // incoming at slot 0) at as many crossings as possible -- all of them, for a
  // diagram written in that convention.
  int comp = 0;
  for (int a0 = 0; a0 < pd.num_arcs; a0++) {
    if (arc_in[a0] != -1) continue;
    std::vector<int> members;
    int honored = 0, violated = 0;
    int a = a0, io = 1;
    do {
      arc_in[a] = io;
      d.arc_component[a] = comp;
      members.push_back(a);
      auto [c, s] = occ[a][io];
      if (s == 0) honored++;
      if (s == 2) violated++;
      int out_slot = s ^ 2;
      int next = pd.crossings[c].arc[out_slot];
      // The occurrence of `next` that is not (c, out_slot) is where it flows
      // in; a kink may use the same crossing twice.
      auto& os = occ[next];
      int nio = (os.size() > 1 && os[0] == std::make_pair(c, out_slot)) ? 1 : 0;
      a = next;
      io = nio;
    } while (arc_in[a] == -1);
    if (violated > honored)
      for (int m : members) arc_in[m] ^= 1;
    comp++;
  }
  d.num_components = comp + pd.free_loops;

  for (int c = 0; c < n; c++) {
    // The under-strand occupies slots 0/2 and the over-strand slots 1/3; find
    // the slot where each flows in.  (The under-strand may enter at slot 2
    // when a component of a surgered diagram runs against the labelling.)
    auto flows_in_at = [&](int slot) {
      int a = pd.crossings[c].arc[slot];
      return occ[a][arc_in[a]] == std::make_pair(c, slot);
    };
    int u = flows_in_at(0) ? 0 : 2;
    bool over_in_next = flows_in_at((u + 1) & 3);
    d.over_in_b[c] = flows_in_at(1);
    d.sign[c] = over_in_next ? +1 : -1;
    (over_in_next ? d.n_plus : d.n_minus)++;
  }
  return d;
}

}  // namespace oddkh
