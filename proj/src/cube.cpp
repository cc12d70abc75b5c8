#include "oddkh/cube.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace oddkh {

namespace {

// Positions (indices into the circle's marker list) of the two endpoints of
// the surgery arc of `crossing`, tail first (pair 0, or pair 1 if the arrow is
// reversed), plus the common side bit (left = forward).
struct ArcEnds {
  int tail = -1, head = -1;
  bool left = false;
};

ArcEnds arc_ends_on(const Resolution& r, int circle, int crossing, Arrow arrow) {
  ArcEnds e;
  auto& ms = r.circle_markers[circle];
  int p_tail = arrow == Arrow::standard ? 0 : 1;
  bool fwd_tail = false, fwd_head = false;
  for (int i = 0; i < (int)ms.size(); i++) {
    if (ms[i].crossing != crossing) continue;
    if (ms[i].pair == p_tail) { e.tail = i; fwd_tail = ms[i].forward; }
    else { e.head = i; fwd_head = ms[i].forward; }
  }
  if (e.tail < 0 || e.head < 0) throw std::logic_error("surgery arc not on one circle");
  if (fwd_tail != fwd_head) throw std::logic_error("surgery arc endpoints on opposite sides");
  e.left = fwd_tail;
  return e;
}

}  // namespace

FaceType classify_face(const OrientedDiagram& d, const std::vector<Resolution>& res, Vertex I,
                       int x1, int x2) {
  const Resolution& r00 = res[I];
  const Resolution& r10 = res[I | (Vertex(1) << x1)];
  const Resolution& r01 = res[I | (Vertex(1) << x2)];
  const Resolution& r11 = res[I | (Vertex(1) << x1) | (Vertex(1) << x2)];

  EdgeAction a1 = edge_action(d, r00, r10, x1);
  EdgeAction a12 = edge_action(d, r10, r11, x2);
  EdgeAction a2 = edge_action(d, r00, r01, x2);
  EdgeAction a21 = edge_action(d, r01, r11, x1);

  // Compare the composites on the subalgebra of the circles the two arcs
  // touch (everything else is a bystander and only contributes common signs).
  int touched[4] = {r00.corner_circle[x1][0], r00.corner_circle[x1][1],
                    r00.corner_circle[x2][0], r00.corner_circle[x2][1]};
  Mono tmask = 0;
  for (int c : touched) tmask |= Mono(1) << c;
  std::vector<int> gens;
  for (Mono rest = tmask; rest; rest &= rest - 1) gens.push_back(__builtin_ctz(rest));

  bool all_zero = true, commute = true, anticommute = true;
  for (Mono sub = 0; sub < (Mono(1) << gens.size()); sub++) {
    Mono m = 0;
    for (size_t i = 0; i < gens.size(); i++)
      if (sub >> i & 1) m |= Mono(1) << gens[i];
    Element v{{m, 1}};
    Element img12 = edge_map(edge_map(v, a1), a12);
    Element img21 = edge_map(edge_map(v, a2), a21);
    if (!img12.empty() || !img21.empty()) all_zero = false;
    Element diff = img12, sum = img12;
    for (auto& [mm, c] : img21) {
      add_term(diff, mm, -c);
      add_term(sum, mm, c);
    }
    if (!diff.empty()) commute = false;
    if (!sum.empty()) anticommute = false;
  }
  if (all_zero) {
    // X or Y: both arcs on one circle, interleaved, on opposite sides.
    int K = r00.corner_circle[x1][0];
    if (r00.corner_circle[x1][1] != K || r00.corner_circle[x2][0] != K ||
        r00.corner_circle[x2][1] != K)
      throw std::logic_error("zero composites off the one-circle configuration");
    ArcEnds e1 = arc_ends_on(r00, K, x1, d.arrow[x1]);
    ArcEnds e2 = arc_ends_on(r00, K, x2, d.arrow[x2]);
    if (e1.left == e2.left) throw std::logic_error("interleaved arcs on one side");
    const ArcEnds& lam = e1.left ? e1 : e2;
    const ArcEnds& rho = e1.left ? e2 : e1;
    // Walk forward (in trace order) from lambda's tail to the next of the
    // four endpoints; type X iff it is the other arc's tail.
    int pos[4] = {lam.tail, lam.head, rho.tail, rho.head};
    int best = -1, best_dist = 1 << 30, len = (int)r00.circle_markers[K].size();
    for (int k = 1; k < 4; k++) {
      int dist = (pos[k] - lam.tail + len) % len;
      if (dist == 0) throw std::logic_error("coincident arc endpoints");
      if (dist < best_dist) { best_dist = dist; best = k; }
    }
    // Interleaving check: rho's endpoints must separate lambda's.
    auto between = [&](int a, int b, int q) {  // q strictly between a and b cyclically
      return (q - a + len) % len > 0 && (q - a + len) % len < (b - a + len) % len;
    };
    if (between(lam.tail, lam.head, rho.tail) == between(lam.tail, lam.head, rho.head))
      throw std::logic_error("zero composites without interleaving");
    return best == 2 ? FaceType::X : FaceType::Y;
  }
  if (anticommute && !commute) return FaceType::A;
  if (commute && !anticommute) return FaceType::C;
  throw std::logic_error("face composites neither commute nor anticommute");
}

Cube build_cube(const OrientedDiagram& d, int max_crossings) {
  Cube cube;
  cube.n = d.n();
  cube.diagram = &d;
  cube.res = all_resolutions(d, max_crossings);
  for (Vertex I = 0; I < (Vertex)cube.res.size(); I++) {
    for (int x = 0; x < cube.n; x++) {
      if (I >> x & 1) continue;
      Vertex J = I | (Vertex(1) << x);
      cube.edges.push_back({I, J, x, cube.res[J].ncircles > cube.res[I].ncircles});
    }
    for (int x1 = 0; x1 < cube.n; x1++) {
      if (I >> x1 & 1) continue;
      for (int x2 = x1 + 1; x2 < cube.n; x2++) {
        if (I >> x2 & 1) continue;
        cube.faces.push_back({I, x1, x2, classify_face(d, cube.res, I, x1, x2)});
      }
    }
  }
  return cube;
}

std::optional<std::string> verify_cube_parity(const Cube& cube) {
  int n = cube.n;
  // type table: faces are generated in (corner00, x1, x2) lex order
  std::vector<uint8_t> type(cube.nvertices() * n * n, 255);
  for (auto& f : cube.faces)
    type[(size_t)f.corner00 * n * n + f.x1 * n + f.x2] = (uint8_t)f.type;
  auto t = [&](Vertex I, int x1, int x2) { return type[(size_t)I * n * n + x1 * n + x2]; };

  for (Vertex I = 0; I < (Vertex)cube.nvertices(); I++)
    for (int x = 0; x < n; x++) {
      if (I >> x & 1) continue;
      for (int y = x + 1; y < n; y++) {
        if (I >> y & 1) continue;
        for (int z = y + 1; z < n; z++) {
          if (I >> z & 1) continue;
          uint8_t ts[6] = {t(I, x, y), t(I, x, z), t(I, y, z),
                           t(I | (Vertex(1) << z), x, y), t(I | (Vertex(1) << y), x, z),
                           t(I | (Vertex(1) << x), y, z)};
          int cnt[4] = {0, 0, 0, 0};
          for (uint8_t v : ts) cnt[v]++;
          if ((cnt[0] + cnt[2]) % 2 || (cnt[0] + cnt[3]) % 2) {
            std::ostringstream os;
            os << "3-subcube at vertex " << I << " crossings (" << x << "," << y << "," << z
               << ") has face types ";
            for (uint8_t v : ts) os << face_char((FaceType)v);
            return os.str();
          }
        }
      }
    }
  return std::nullopt;
}

}  // namespace oddkh
