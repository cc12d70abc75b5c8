#pragma once
// Edge assignments: solve the coboundary equation (product of the four edge
// signs around every face = prescribed value) over GF(2), encoded 1 <-> -1.

#include <optional>
#include <string>
#include <vector>

#include "oddkh/cube.hpp"

namespace oddkh {

enum class AssignmentType : uint8_t { X, Y };

// phi over GF(2): bit 1 encodes -1. Indexed in cube.faces order.
std::vector<uint8_t> target_cochain(const Cube& cube, AssignmentType t);

struct EdgeAssignment {
  AssignmentType type;
  int n = 0;
  std::vector<int8_t> sign;  // dense: index I * n + crossing (bit clear in I)

  int8_t at(Vertex I, int crossing) const { return sign[(size_t)I * n + crossing]; }
};

// Spanning-tree propagation: +1 on the lowest-set-bit tree, every other edge
// forced face by face in increasing vertex order; verified afterwards.
EdgeAssignment solve_assignment(const Cube& cube, const std::vector<uint8_t>& phi,
                                AssignmentType t);

// First violated face, if any.
std::optional<std::string> verify_assignment(const Cube& cube, const EdgeAssignment& eps,
                                             const std::vector<uint8_t>& phi);

// eps'(e) = eta(from) * eta(to) * eps(e); eta indexed by vertex.
EdgeAssignment gauge_transform(const Cube& cube, const EdgeAssignment& eps,
                               const std::vector<int8_t>& eta);

// The gauge relating two assignments with the same face products, found by
// propagation over the 1-skeleton; nullopt if they are not gauge-equivalent.
std::optional<std::vector<int8_t>> find_gauge(const Cube& cube, const EdgeAssignment& a,
                                              const EdgeAssignment& b);

// Dense GF(2) elimination fallback over the (faces x edges) incidence system;
// used as an independent check of the propagation solver.
std::optional<EdgeAssignment> solve_assignment_gf2(const Cube& cube,
                                                   const std::vector<uint8_t>& phi,
                                                   AssignmentType t);

}  // namespace oddkh
