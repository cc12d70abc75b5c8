#include "oddkh/algebra.hpp"

#include <stdexcept>

namespace oddkh {

Element relabel_map(const Element& v, const std::vector<int>& target) {
  Element out;
  for (auto& [m, c] : v) {
    Mono im = 0;
    int sign = 1;
    bool ok = true;
    for (Mono rest = m; rest; rest &= rest - 1) {
      int g = __builtin_ctz(rest);
      if (!wedge_insert(im, target[g], sign)) { ok = false; break; }
    }
    if (ok) add_term(out, im, sign * c);
  }
  return out;
}

Element split_apply(const Element& v, const std::vector<int>& target, int src, int a1, int a2) {
  Element out;
  for (auto& [m, c] : v) {
    // Lift: src -> a1; then wedge (a1 - a2) on the left.
    Mono im = 0;
    int sign = 1;
    bool ok = true;
    for (Mono rest = m; rest; rest &= rest - 1) {
      int g = __builtin_ctz(rest);
      if (!wedge_insert(im, g == src ? a1 : target[g], sign)) { ok = false; break; }
    }
    if (!ok) continue;
    Mono m1 = im, m2 = im;
    int s1 = sign, s2 = -sign;
    if (wedge_left(m1, a1, s1)) add_term(out, m1, s1 * c);
    if (wedge_left(m2, a2, s2)) add_term(out, m2, s2 * c);
  }
  return out;
}

Element birth_map(const Element& v, const std::vector<int>& target) {
  return relabel_map(v, target);
}

Element death_map(const Element& v, const std::vector<int>& target, int dying) {
  Element out;
  for (auto& [m, c] : v) {
    if (!(m >> dying & 1)) continue;
    // Contraction with the dual: sign = parity of the generators before `dying`.
    int sign = __builtin_popcount(m & ((Mono(1) << dying) - 1)) & 1 ? -1 : 1;
    Mono rest = m & ~(Mono(1) << dying);
    Mono im = 0;
    bool ok = true;
    for (Mono r = rest; r; r &= r - 1)
      if (!wedge_insert(im, target[__builtin_ctz(r)], sign)) { ok = false; break; }
    if (ok) add_term(out, im, sign * c);
  }
  return out;
}

EdgeAction edge_action(const OrientedDiagram& d, const Resolution& from, const Resolution& to,
                       int crossing) {
  EdgeAction act;
  act.target.assign(from.ncircles, -1);
  // Circles correspond through the arcs they carry; free loops (no arcs) sit in
  // the same trailing positions at every vertex.
  for (int a = 0; a < (int)from.arc_circle.size(); a++)
    act.target[from.arc_circle[a]] = to.arc_circle[a];
  for (int i = (int)from.arc_circle.empty() ? 0 : 0; i < from.ncircles; i++)
    if (act.target[i] == -1) act.target[i] = i - from.ncircles + to.ncircles;
  act.is_split = to.ncircles == from.ncircles + 1;
  if (act.is_split) {
    // The source circle at the surgery arc splits; rotating the standard arrow
    // a quarter turn with the surgery points it from the target's pair-1
    // strand's circle to the pair-0 one.
    act.src = from.corner_circle[crossing][0];
    act.a1 = to.corner_circle[crossing][1];
    act.a2 = to.corner_circle[crossing][0];
    if (d.arrow[crossing] == Arrow::reversed) std::swap(act.a1, act.a2);
  } else if (to.ncircles != from.ncircles - 1) {
    throw std::logic_error("edge does not change circle count by one");
  }
  return act;
}

Element even_edge_map(const Element& v, const EdgeAction& act) {
  Element out;
  for (auto& [m, c] : v) {
    if (!act.is_split) {
      // Multiplication: two x labels landing on one circle kill the term.
      Mono im = 0;
      bool ok = true;
      for (Mono rest = m; rest; rest &= rest - 1) {
        int t = act.target[__builtin_ctz(rest)];
        if (im >> t & 1) { ok = false; break; }
        im |= Mono(1) << t;
      }
      if (ok) add_term(out, im, c);
    } else {
      Mono base = 0;
      for (Mono rest = m & ~(Mono(1) << act.src); rest; rest &= rest - 1)
        base |= Mono(1) << act.target[__builtin_ctz(rest)];
      Mono b1 = Mono(1) << act.a1, b2 = Mono(1) << act.a2;
      if (m >> act.src & 1) {
        add_term(out, base | b1 | b2, c);  // Delta(x) = x (x) x
      } else {
        add_term(out, base | b1, c);  // Delta(1) = 1 (x) x + x (x) 1
        add_term(out, base | b2, c);
      }
    }
  }
  return out;
}

}  // namespace oddkh
