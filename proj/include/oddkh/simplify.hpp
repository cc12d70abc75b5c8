#pragma once
// Diagram moves (Reidemeister reductions, slides, stabilizations), a
// randomized crossing-count simplifier, and the checkerboard-surface
// signature.  All operations act on PD codes and return renumbered copies.

#include <cstdint>
#include <optional>
#include <vector>

#include "oddkh/pd.hpp"

namespace oddkh {

// One face of the 4-valent map: corners (crossing, slot), where corner (c, s)
// is the quadrant of c between slots s and s+1 (mod 4).
struct Face {
  std::vector<std::pair<int, int>> corners;
};

std::vector<Face> trace_faces(const PDCode& pd);

// Remove one kink / one pulled-apart bigon; nullopt when no such move exists.
std::optional<PDCode> reduce_r1(const PDCode& pd);
std::optional<PDCode> reduce_r2(const PDCode& pd);

// All triangle slides available on the diagram (crossing count unchanged).
std::vector<PDCode> r3_moves(const PDCode& pd);

// Add a kink on the given arc (+1 crossing).
PDCode r1_stabilize(const PDCode& pd, int arc, bool positive);

// Push boundary arc `a` of face `f` over boundary arc `b` (+2 crossings);
// a and b are indices into trace_faces(pd)[f].corners.
PDCode r2_stabilize(const PDCode& pd, int f, int a, int b);

// Greedy RI/RII reduction, escaping local minima with triangle slides and
// occasional stabilizations.  Stops once `target` crossings are reached (or
// the walk budget runs out) and returns the best diagram found.
PDCode simplify(const PDCode& pd, int target, uint64_t seed = 1);

// Signature of the link from the Goeritz form of a checkerboard surface,
// normalized so that the right-handed trefoil has signature +2.
int signature(const PDCode& pd);

}  // namespace oddkh
