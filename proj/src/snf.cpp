#include "oddkh/snf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace oddkh {

namespace {

using boost::multiprecision::cpp_int;

struct Overflow {};

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline cpp_int checked_mul(const cpp_int& a, const cpp_int& b) { return a * b; }
inline cpp_int checked_sub(const cpp_int& a, const cpp_int& b) { return a - b; }

template <typename I>
struct Sparse {
  std::vector<std::map<int, I>> row;
  std::vector<std::set<int>> col_rows;

  Sparse(int rows, int cols, const std::vector<Triplet>& entries) {
    row.resize(rows);
    col_rows.resize(cols);
    for (auto& t : entries) {
      auto [it, fresh] = row[t.row].emplace(t.col, I(t.val));
      if (!fresh && (it->second += I(t.val)) == 0) row[t.row].erase(it);
    }
    for (int r = 0; r < rows; r++)
      for (auto& [c, v] : row[r]) col_rows[c].insert(r);
  }

  // Eliminates column c using pivot row r (entry must be +-1); removes row r.
  void eliminate_unit(int r, int c) {
    I piv = row[r][c];
    auto rows_with = col_rows[c];
    for (int r2 : rows_with) {
      if (r2 == r) continue;
      I factor = row[r2][c] * piv;  // piv^2 = 1, so this is entry/piv
      for (auto& [cc, vv] : row[r]) {
        auto it = row[r2].find(cc);
        if (it == row[r2].end()) {
          row[r2].emplace(cc, checked_mul(-factor, vv));
          col_rows[cc].insert(r2);
        } else if ((it->second = checked_sub(it->second, checked_mul(factor, vv))) == 0) {
          row[r2].erase(it);
          col_rows[cc].erase(r2);
        }
      }
    }
    for (auto& [cc, vv] : row[r]) col_rows[cc].erase(r);
    row[r].clear();
  }
};

// Textbook Smith normal form of a small dense matrix; returns diagonal entries.
std::vector<cpp_int> dense_snf(std::vector<std::vector<cpp_int>> a) {
  std::vector<cpp_int> diag;
  size_t m = a.size();
  if (m == 0) return diag;
  size_t n = a[0].size();
  size_t top = 0;
  while (top < m && top < n) {
    // find minimal nonzero |entry| in the lower-right block
    size_t pr = top, pc = top;
    cpp_int best = 0;
    for (size_t i = top; i < m; i++)
      for (size_t j = top; j < n; j++) {
        cpp_int v = abs(a[i][j]);
        if (v != 0 && (best == 0 || v < best)) { best = v; pr = i; pc = j; }
      }
    if (best == 0) break;
    std::swap(a[top], a[pr]);
    for (size_t i = 0; i < m; i++) std::swap(a[i][top], a[i][pc]);
    bool clean = true;
    for (size_t i = top + 1; i < m; i++) {
      if (a[i][top] == 0) continue;
      cpp_int q = a[i][top] / a[top][top];
      for (size_t j = top; j < n; j++) a[i][j] -= q * a[top][j];
      if (a[i][top] != 0) clean = false;
    }
    for (size_t j = top + 1; j < n; j++) {
      if (a[top][j] == 0) continue;
      cpp_int q = a[top][j] / a[top][top];
      for (size_t i = top; i < m; i++) a[i][j] -= q * a[i][top];
      if (a[top][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; repeat this step
    // divisibility: fold in any non-multiple below-right
    bool fixed = false;
    for (size_t i = top + 1; i < m && !fixed; i++)
      for (size_t j = top + 1; j < n && !fixed; j++)
        if (a[i][j] % a[top][top] != 0) {
          for (size_t jj = top; jj < n; jj++) a[top][jj] += a[i][jj];
          fixed = true;
        }
    if (fixed) continue;
    diag.push_back(abs(a[top][top]));
    top++;
  }
  return diag;
}

template <typename I>
SnfResult smith_impl(int rows, int cols, const std::vector<Triplet>& entries) {
  Sparse<I> s(rows, cols, entries);
  SnfResult res;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int c = 0; c < cols; c++) {
      if (s.col_rows[c].empty()) continue;
      int best_r = -1;
      size_t best_sz = SIZE_MAX;
      for (int r : s.col_rows[c]) {
        I v = s.row[r][c];
        if ((v == 1 || v == -1) && s.row[r].size() < best_sz) { best_sz = s.row[r].size(); best_r = r; }
      }
      if (best_r < 0) continue;
      s.eliminate_unit(best_r, c);
      res.rank++;
      progress = true;
    }
  }
  // Leftover block: no unit entries anywhere. Dense SNF over cpp_int.
  std::map<int, int> rmap, cmap;
  for (int r = 0; r < rows; r++)
    if (!s.row[r].empty()) rmap.emplace(r, (int)rmap.size());
  for (int c = 0; c < cols; c++)
    if (!s.col_rows[c].empty()) cmap.emplace(c, (int)cmap.size());
  if (!rmap.empty()) {
    std::vector<std::vector<cpp_int>> dense(rmap.size(), std::vector<cpp_int>(cmap.size(), 0));
    for (auto& [r, ri] : rmap)
      for (auto& [c, v] : s.row[r]) dense[ri][cmap[c]] = cpp_int(v);
    for (auto& d : dense_snf(std::move(dense))) {
      res.rank++;
      if (d > 1) {
        if (d > cpp_int(std::numeric_limits<long long>::max()))
          throw std::overflow_error("invariant factor exceeds int64");
        res.factors.push_back((long long)d);
      }
    }
  }
  std::sort(res.factors.begin(), res.factors.end());
  return res;
}

}  // namespace

SnfResult smith_reduce(int rows, int cols, const std::vector<Triplet>& entries) {
  try {
    return smith_impl<long long>(rows, cols, entries);
  } catch (const Overflow&) {
    return smith_impl<cpp_int>(rows, cols, entries);
  }
}

int rank_mod_p(int rows, int cols, const std::vector<Triplet>& entries, int p) {
  std::vector<std::map<int, int>> row(rows);
  std::vector<std::set<int>> col_rows(cols);
  for (auto& t : entries) {
    int v = (int)(((t.val % p) + p) % p);
    auto [it, fresh] = row[t.row].emplace(t.col, v);
    if (!fresh) it->second = (it->second + v) % p;
  }
  for (int r = 0; r < rows; r++)
    for (auto it = row[r].begin(); it != row[r].end();) {
      if (it->second == 0) it = row[r].erase(it);
      else col_rows[it->first].insert(r), ++it;
    }
  // modular inverse by Fermat (p prime, tiny)
  auto inv = [&](int a) {
    int r = 1, b = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = (int)((long long)r * b % p);
      b = (int)((long long)b * b % p);
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  for (int c = 0; c < cols; c++) {
    if (col_rows[c].empty()) continue;
    int pr = -1;
    size_t best = SIZE_MAX;
    for (int r : col_rows[c])
      if (row[r].size() < best) { best = row[r].size(); pr = r; }
    int pinv = inv(row[pr][c]);
    auto rows_with = col_rows[c];
    for (int r2 : rows_with) {
      if (r2 == pr) continue;
      long long f = (long long)row[r2][c] * pinv % p;
      for (auto& [cc, vv] : row[pr]) {
        int sub = (int)(f * vv % p);
        if (sub == 0) continue;
        auto it = row[r2].find(cc);
        if (it == row[r2].end()) {
          row[r2].emplace(cc, p - sub);
          col_rows[cc].insert(r2);
        } else if ((it->second = ((it->second - sub) % p + p) % p) == 0) {
          row[r2].erase(it);
          col_rows[cc].erase(r2);
        }
      }
    }
    for (auto& [cc, vv] : row[pr]) col_rows[cc].erase(pr);
    row[pr].clear();
    rank++;
  }
  return rank;
}

}  // namespace oddkh
