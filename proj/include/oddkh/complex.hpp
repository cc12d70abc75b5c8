#pragma once
// Bigraded chain complexes over Z from the cube: odd and even flavors,
// unreduced and reduced, plus the skein (mapping cone) decomposition.
// Gradings: m = |I| - n_minus (the differential raises m by one),
// s = (#circles - 2r) + n_plus - 2 n_minus + |I|.

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "oddkh/cube.hpp"
#include "oddkh/signs.hpp"
#include "oddkh/snf.hpp"

namespace oddkh {

struct Gen {
  Vertex vertex;
  Mono mask;
};

using Bidegree = std::pair<int, int>;  // (m, s)

struct ChainComplexZ {
  int n_plus = 0, n_minus = 0;
  std::map<Bidegree, std::vector<Gen>> gens;
  // diff[(m, s)]: sparse matrix from (m, s) generators to (m+1, s) generators
  std::map<Bidegree, std::vector<Triplet>> diff;

  int dim(int m, int s) const {
    auto it = gens.find({m, s});
    return it == gens.end() ? 0 : (int)it->second.size();
  }
  long long total_dim() const {
    long long t = 0;
    for (auto& [k, g] : gens) t += (long long)g.size();
    return t;
  }
};

ChainComplexZ assemble(const Cube& cube, const EdgeAssignment& eps);
ChainComplexZ assemble_even(const Cube& cube);

// Subcomplex of monomials containing the circle through `arc` (odd flavor) /
// labelings with that circle marked x (even flavor); reported s shifted by +1
// so the unknot sits at (0, 0).
ChainComplexZ reduce_basepoint(const Cube& cube, const EdgeAssignment& eps, int arc);
ChainComplexZ reduce_even(const Cube& cube, int arc);

// Reduced complex in the difference-generator basis of the augmentation
// kernel subalgebra; reported s shifted by -1.
ChainComplexZ reduce_kernel(const Cube& cube, const EdgeAssignment& eps);

std::optional<std::string> check_d_squared(const ChainComplexZ& c);

struct SkeinDecomposition {
  ChainComplexZ c1;  // subcomplex: vertices with I(x) = 1 (parent gradings kept)
  ChainComplexZ c0;  // quotient: vertices with I(x) = 0
  // connecting chain map c0 -> c1, per (m, s) of the c0 block, landing in (m+1, s)
  std::map<Bidegree, std::vector<Triplet>> connecting;
};

SkeinDecomposition skein_decompose(const Cube& cube, const EdgeAssignment& eps, int crossing);

// Replaces crossing `x` of a PD by its `state` smoothing (possibly creating
// free loops); used by the skein tests and the diagram simplifier.
PDCode smooth_crossing(const PDCode& pd, int x, int state);

}  // namespace oddkh
