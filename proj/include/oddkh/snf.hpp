#pragma once
// Sparse integer elimination: rank and invariant factors of differentials.
// Unit (+-1) pivots first -- unimodular, growth-free -- then a textbook Smith
// normal form on the small leftover block. int64 with overflow checks,
// falling back to arbitrary precision if entries blow up.

#include <cstdint>
#include <vector>

namespace oddkh {

struct Triplet {
  int row, col;
  long long val;
};

struct SnfResult {
  int rank = 0;                          // rank over Q
  std::vector<long long> factors;       // invariant factors > 1, divisibility order
};

SnfResult smith_reduce(int rows, int cols, const std::vector<Triplet>& entries);

// Rank over GF(p), p prime.
int rank_mod_p(int rows, int cols, const std::vector<Triplet>& entries, int p);

}  // namespace oddkh
