#include "oddkh/signs.hpp"

#include <sstream>
#include <stdexcept>

namespace oddkh {

std::vector<uint8_t> target_cochain(const Cube& cube, AssignmentType t) {
  std::vector<uint8_t> phi(cube.faces.size());
  for (size_t i = 0; i < cube.faces.size(); i++) {
    FaceType ft = cube.faces[i].type;
    // The signed differential must anticommute around every face: faces whose
    // unsigned composites already anticommute (A) need evenly many -1 signs,
    // commuting faces (C) oddly many; zero (X / Y) faces follow the
    // assignment's type.
    bool even = t == AssignmentType::X ? (ft == FaceType::A || ft == FaceType::X)
                                       : (ft == FaceType::A || ft == FaceType::Y);
    phi[i] = even ? 0 : 1;
  }
  return phi;
}

namespace {

inline int face_phi(const Cube& cube, const std::vector<uint8_t>& phi, Vertex I, int x1, int x2) {
  // cube.faces is lex-sorted by (corner00, x1, x2); binary search.
  size_t lo = 0, hi = cube.faces.size();
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    auto& f = cube.faces[mid];
    if (std::tuple(f.corner00, f.x1, f.x2) < std::tuple(I, x1, x2)) lo = mid + 1;
    else hi = mid;
  }
  auto& f = cube.faces[lo];
  if (f.corner00 != I || f.x1 != x1 || f.x2 != x2) throw std::logic_error("face lookup failed");
  return phi[lo] ? -1 : +1;
}

}  // namespace

EdgeAssignment solve_assignment(const Cube& cube, const std::vector<uint8_t>& phi,
                                AssignmentType t) {
  int n = cube.n;
  EdgeAssignment eps;
  eps.type = t;
  eps.n = n;
  eps.sign.assign(cube.nvertices() * n, 0);
  // Tree edges (crossing below every set bit of the lower endpoint) get +1;
  // edge (I -> I|x) with b = lowest set bit of I, b < x, is forced by the face
  // at I\b on crossings (b, x), whose other three edges are already known.
  for (Vertex I = 0; I < (Vertex)cube.nvertices(); I++)
    for (int x = 0; x < n; x++)
      if (!(I >> x & 1) && (I == 0 || __builtin_ctz(I) > x))
        eps.sign[(size_t)I * n + x] = +1;
  for (Vertex I = 0; I < (Vertex)cube.nvertices(); I++) {
    for (int x = 0; x < n; x++) {
      if ((I >> x & 1) || I == 0 || __builtin_ctz(I) > x) continue;
      int b = __builtin_ctz(I);
      Vertex base = I & ~(Vertex(1) << b);
      int prod = face_phi(cube, phi, base, b, x);
      prod *= eps.at(base, b);                       // base -> I (tree)
      prod *= eps.at(base, x);                       // base -> base|x (known)
      prod *= eps.at(base | (Vertex(1) << x), b);    // base|x -> I|x (tree)
      eps.sign[(size_t)I * n + x] = (int8_t)prod;
    }
  }
  if (auto bad = verify_assignment(cube, eps, phi))
    throw std::logic_error("cochain is not a coboundary: " + *bad);
  return eps;
}

std::optional<std::string> verify_assignment(const Cube& cube, const EdgeAssignment& eps,
                                             const std::vector<uint8_t>& phi) {
  for (size_t i = 0; i < cube.faces.size(); i++) {
    auto& f = cube.faces[i];
    Vertex I = f.corner00;
    Vertex I1 = I | (Vertex(1) << f.x1), I2 = I | (Vertex(1) << f.x2);
    int prod = eps.at(I, f.x1) * eps.at(I1, f.x2) * eps.at(I, f.x2) * eps.at(I2, f.x1);
    if (prod != (phi[i] ? -1 : +1)) {
      std::ostringstream os;
      os << "face at vertex " << I << " crossings (" << f.x1 << "," << f.x2 << ") type "
         << face_char(f.type) << ": edge product " << prod;
      return os.str();
    }
  }
  return std::nullopt;
}

EdgeAssignment gauge_transform(const Cube& cube, const EdgeAssignment& eps,
                               const std::vector<int8_t>& eta) {
  EdgeAssignment out = eps;
  for (auto& e : cube.edges)
    out.sign[(size_t)e.from * eps.n + e.crossing] =
        (int8_t)(eta[e.from] * eta[e.to] * eps.at(e.from, e.crossing));
  return out;
}

std::optional<std::vector<int8_t>> find_gauge(const Cube& cube, const EdgeAssignment& a,
                                              const EdgeAssignment& b) {
  std::vector<int8_t> eta(cube.nvertices(), 0);
  eta[0] = 1;
  // Lowest-set-bit tree, vertices in increasing order.
  for (Vertex I = 1; I < (Vertex)cube.nvertices(); I++) {
    int bit = __builtin_ctz(I);
    Vertex p = I & ~(Vertex(1) << bit);
    eta[I] = (int8_t)(eta[p] * a.at(p, bit) * b.at(p, bit));
  }
  for (auto& e : cube.edges)
    if (eta[e.from] * eta[e.to] * a.at(e.from, e.crossing) != b.at(e.from, e.crossing))
      return std::nullopt;
  return eta;
}

std::optional<EdgeAssignment> solve_assignment_gf2(const Cube& cube,
                                                   const std::vector<uint8_t>& phi,
                                                   AssignmentType t) {
  // Rows: faces; columns: edges (in cube.edges order); augmented with phi.
  size_t ne = cube.edges.size();
  std::vector<int> col_of(cube.nvertices() * cube.n, -1);
  for (size_t j = 0; j < ne; j++)
    col_of[(size_t)cube.edges[j].from * cube.n + cube.edges[j].crossing] = (int)j;
  size_t words = (ne + 1 + 63) / 64;
  std::vector<std::vector<uint64_t>> rows(cube.faces.size(), std::vector<uint64_t>(words, 0));
  auto set_bit = [&](std::vector<uint64_t>& r, size_t j) { r[j / 64] ^= uint64_t(1) << (j % 64); };
  for (size_t i = 0; i < cube.faces.size(); i++) {
    auto& f = cube.faces[i];
    Vertex I = f.corner00;
    Vertex I1 = I | (Vertex(1) << f.x1), I2 = I | (Vertex(1) << f.x2);
    set_bit(rows[i], col_of[(size_t)I * cube.n + f.x1]);
    set_bit(rows[i], col_of[(size_t)I1 * cube.n + f.x2]);
    set_bit(rows[i], col_of[(size_t)I * cube.n + f.x2]);
    set_bit(rows[i], col_of[(size_t)I2 * cube.n + f.x1]);
    if (phi[i]) set_bit(rows[i], ne);
  }
  std::vector<int> pivot_col(cube.faces.size(), -1);
  size_t rank = 0;
  for (size_t col = 0; col < ne && rank < rows.size(); col++) {
    size_t sel = rank;
    while (sel < rows.size() && !(rows[sel][col / 64] >> (col % 64) & 1)) sel++;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (size_t i = 0; i < rows.size(); i++)
      if (i != rank && (rows[i][col / 64] >> (col % 64) & 1))
        for (size_t w = 0; w < words; w++) rows[i][w] ^= rows[rank][w];
    pivot_col[rank++] = (int)col;
  }
  for (size_t i = rank; i < rows.size(); i++)
    if (rows[i][ne / 64] >> (ne % 64) & 1) return std::nullopt;  // inconsistent
  std::vector<uint8_t> x(ne, 0);
  for (size_t i = 0; i < rank; i++)
    x[pivot_col[i]] = (uint8_t)(rows[i][ne / 64] >> (ne % 64) & 1);
  EdgeAssignment eps;
  eps.type = t;
  eps.n = cube.n;
  eps.sign.assign(cube.nvertices() * cube.n, 0);
  for (size_t j = 0; j < ne; j++)
    eps.sign[(size_t)cube.edges[j].from * cube.n + cube.edges[j].crossing] = x[j] ? -1 : +1;
  return eps;
}

}  // namespace oddkh
