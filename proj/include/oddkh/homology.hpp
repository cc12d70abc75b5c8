#pragma once
// Bigraded homology of the assembled complexes, Poincare polynomials, Euler
// characteristics, the Jones state-sum oracle, and sigma-thinness.

#include <map>
#include <vector>

#include "oddkh/complex.hpp"
#include "oddkh/poly.hpp"

namespace oddkh {

struct GroupAt {
  int free_rank = 0;
  std::vector<long long> torsion;  // invariant factors > 1, divisibility order

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const GroupAt&) const = default;
};

using BigradedGroup = std::map<Bidegree, GroupAt>;  // keyed by (m, s), trivial entries absent

BigradedGroup smith_homology(const ChainComplexZ& c);

// p = 0 means Q. Coefficients of q^s t^m are dimensions over the field.
Laurent2 field_homology(const ChainComplexZ& c, int p);

Laurent2 poincare(const BigradedGroup& g);  // free ranks over Q

Laurent1 euler_characteristic(const BigradedGroup& g);

// Independent state-sum oracle for the unnormalized Jones polynomial in the
// conventions of the gradings above: equals the graded Euler characteristic
// of the unreduced complex exactly.
Laurent1 jones_state_sum(const OrientedDiagram& d, int max_crossings = 31);

struct ThinnessReport {
  bool thin = true;
  std::vector<Bidegree> off_diagonal;
};

// g must be a reduced homology group; checks support on s - 2m = sigma.
ThinnessReport thinness(const BigradedGroup& g, int sigma);

// Diagonals s - 2m carrying support (for reporting when sigma is unknown).
std::vector<int> support_diagonals(const BigradedGroup& g);

long long total_rank(const BigradedGroup& g);

std::string to_string(const BigradedGroup& g);  // human-readable group listing

}  // namespace oddkh
