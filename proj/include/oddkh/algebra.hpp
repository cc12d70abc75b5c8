#pragma once
// The two TQFTs. Odd: exterior algebra on circle generators; merge is the
// projection V -> V/(a1-a2), split sends w to (a1-a2)^~w with the order of
// (a1,a2) fixed by the surgery arrow, birth is inclusion, death contracts with
// the dual generator. Even: the rank-2 Frobenius algebra (1, x).

#include <cstdint>
#include <map>
#include <vector>

#include "oddkh/resolution.hpp"

namespace oddkh {

// Monomial = subset of circle indices (bit i = generator a_i), kept in
// ascending order; coefficient map drops zeros.
using Mono = uint32_t;
using Element = std::map<Mono, long long>;  // exterior: wedge of set bits
// Even elements use the same container; bit i set = circle i labeled x.

inline void add_term(Element& e, Mono m, long long c) {
  if (!c) return;
  auto it = e.find(m);
  if (it == e.end()) e.emplace(m, c);
  else if ((it->second += c) == 0) e.erase(it);
}

// Appends generator g on the right of the (sorted) monomial and bubbles it
// into place: sign = parity of the set bits above g. Returns false on a
// repeated generator (the wedge vanishes).
inline bool wedge_insert(Mono& m, int g, int& sign) {
  if (m >> g & 1) return false;
  if (__builtin_popcount(m >> (g + 1)) & 1) sign = -sign;
  m |= Mono(1) << g;
  return true;
}

// Left-wedge a_g ^ m: sign = parity of set bits below g.
inline bool wedge_left(Mono& m, int g, int& sign) {
  if (m >> g & 1) return false;
  if (__builtin_popcount(m & ((Mono(1) << g) - 1)) & 1) sign = -sign;
  m |= Mono(1) << g;
  return true;
}

// Ring map induced by a generator relabeling (used for merges and for carrying
// bystander circles across an edge).
Element relabel_map(const Element& v, const std::vector<int>& target);

// Split of circle `src` into (a1, a2), arrow pointing a1 -> a2; `target`
// relabels every other circle, with target[src] ignored.
Element split_apply(const Element& v, const std::vector<int>& target, int src, int a1, int a2);

Element birth_map(const Element& v, const std::vector<int>& target);
Element death_map(const Element& v, const std::vector<int>& target, int dying);

// Data of a cube edge as it acts on elements: from vertex I (bit x clear) to
// I | 1<<x. For a merge, circles c1,c2 of the source fuse; for a split, circle
// src becomes (a1, a2) ordered by the arrow.
struct EdgeAction {
  bool is_split;
  std::vector<int> target;  // source circle -> target circle (split: src entry unused)
  int src = -1, a1 = -1, a2 = -1;  // split data
};

EdgeAction edge_action(const OrientedDiagram& d, const Resolution& from, const Resolution& to,
                       int crossing);

inline Element edge_map(const Element& v, const EdgeAction& act) {
  return act.is_split ? split_apply(v, act.target, act.src, act.a1, act.a2)
                      : relabel_map(v, act.target);
}

// Even TQFT on the same edge: multiplication on merges (bit = label x),
// comultiplication Delta(1) = 1 x + x 1, Delta(x) = x x on splits.
Element even_edge_map(const Element& v, const EdgeAction& act);

}  // namespace oddkh
