#include "oddkh/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace oddkh {

namespace {

// Per-s column: dims by m and the reduction of each differential block.
struct SCol {
  std::map<int, int> dim;
  std::map<int, SnfResult> red;  // keyed by source m
};

std::map<int, SCol> reduce_blocks(const ChainComplexZ& c) {
  std::map<int, SCol> cols;
  for (auto& [key, g] : c.gens) cols[key.second].dim[key.first] = (int)g.size();
  for (auto& [key, mat] : c.diff) {
    auto [m, s] = key;
    SCol& col = cols[s];
    int rows = col.dim.count(m + 1) ? col.dim[m + 1] : 0;
    int colsn = col.dim.count(m) ? col.dim[m] : 0;
    col.red[m] = smith_reduce(rows, colsn, mat);
  }
  return cols;
}

}  // namespace

BigradedGroup smith_homology(const ChainComplexZ& c) {
  BigradedGroup out;
  for (auto& [s, col] : reduce_blocks(c)) {
    for (auto& [m, dim] : col.dim) {
      GroupAt g;
      int r_out = col.red.count(m) ? col.red.at(m).rank : 0;
      int r_in = col.red.count(m - 1) ? col.red.at(m - 1).rank : 0;
      g.free_rank = dim - r_out - r_in;
      if (col.red.count(m - 1)) g.torsion = col.red.at(m - 1).factors;
      if (!g.trivial()) out[{m, s}] = g;
    }
  }
  return out;
}

Laurent2 field_homology(const ChainComplexZ& c, int p) {
  Laurent2 out;
  if (p == 0) {
    for (auto& [ms, g] : smith_homology(c)) add_term(out, ms.second, ms.first, g.free_rank);
    return out;
  }
  std::map<int, std::map<int, int>> dim;   // s -> m -> dim
  std::map<int, std::map<int, int>> rank;  // s -> m -> rank of d from m
  for (auto& [key, g] : c.gens) dim[key.second][key.first] = (int)g.size();
  for (auto& [key, mat] : c.diff) {
    auto [m, s] = key;
    int rows = dim[s].count(m + 1) ? dim[s][m + 1] : 0;
    rank[s][m] = rank_mod_p(rows, dim[s][m], mat, p);
  }
  for (auto& [s, dm] : dim)
    for (auto& [m, d] : dm) {
      int r_out = rank[s].count(m) ? rank[s][m] : 0;
      int r_in = rank[s].count(m - 1) ? rank[s][m - 1] : 0;
      add_term(out, s, m, d - r_out - r_in);
    }
  return out;
}

Laurent2 poincare(const BigradedGroup& g) {
  Laurent2 out;
  for (auto& [ms, grp] : g) add_term(out, ms.second, ms.first, grp.free_rank);
  return out;
}

Laurent1 euler_characteristic(const BigradedGroup& g) {
  Laurent1 out;
  for (auto& [ms, grp] : g)
    add_term(out, ms.second, (ms.first % 2 ? -1 : 1) * (long long)grp.free_rank);
  return out;
}

Laurent1 jones_state_sum(const OrientedDiagram& d, int max_crossings) {
  int n = d.n();
  if (n > max_crossings) throw PDError("crossing count exceeds cap");
  int maxc = 0;
  std::vector<int> circles(size_t(1) << n);
  for (Vertex I = 0; I < (Vertex(1) << n); I++) {
    circles[I] = resolve(d, I).ncircles;
    maxc = std::max(maxc, circles[I]);
  }
  std::vector<Laurent1> ring_pow(maxc + 1);
  ring_pow[0] = {{0, 1}};
  Laurent1 ring{{-1, 1}, {1, 1}};
  for (int i = 1; i <= maxc; i++) ring_pow[i] = mul(ring_pow[i - 1], ring);
  Laurent1 sum;
  for (Vertex I = 0; I < (Vertex(1) << n); I++) {
    int w = __builtin_popcount(I);
    for (auto& [e, c] : ring_pow[circles[I]]) add_term(sum, e + w, (w % 2 ? -c : c));
  }
  // global normalization (-1)^{n-} q^{n+ - 2 n-}
  Laurent1 out;
  for (auto& [e, c] : sum)
    add_term(out, e + d.n_plus - 2 * d.n_minus, d.n_minus % 2 ? -c : c);
  return out;
}

ThinnessReport thinness(const BigradedGroup& g, int sigma) {
  ThinnessReport rep;
  for (auto& [ms, grp] : g)
    if (ms.second - 2 * ms.first != sigma) {
      rep.thin = false;
      rep.off_diagonal.push_back(ms);
    }
  return rep;
}

std::vector<int> support_diagonals(const BigradedGroup& g) {
  std::set<int> ds;
  for (auto& [ms, grp] : g) ds.insert(ms.second - 2 * ms.first);
  return {ds.begin(), ds.end()};
}

long long total_rank(const BigradedGroup& g) {
  long long t = 0;
  for (auto& [ms, grp] : g) t += grp.free_rank;
  return t;
}

std::string to_string(const BigradedGroup& g) {
  std::ostringstream os;
  bool first = true;
  for (auto& [ms, grp] : g) {
    if (!first) os << "; ";
    first = false;
    os << "(m=" << ms.first << ",s=" << ms.second << "): ";
    bool plus = false;
    if (grp.free_rank) {
      os << "Z";
      if (grp.free_rank > 1) os << "^" << grp.free_rank;
      plus = true;
    }
    for (auto t : grp.torsion) {
      if (plus) os << " + ";
      os << "Z/" << t;
      plus = true;
    }
    if (!plus) os << "0";
  }
  return first ? "0" : os.str();
}

}  // namespace oddkh
