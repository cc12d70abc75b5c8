#pragma once
// Hypercube combinatorics and the A/C/X/Y classification of square faces.

#include <optional>
#include <string>
#include <vector>

#include "oddkh/algebra.hpp"
#include "oddkh/resolution.hpp"

namespace oddkh {

enum class FaceType : uint8_t { A, C, X, Y };

inline char face_char(FaceType t) { return "ACXY"[(int)t]; }

struct CubeEdge {
  Vertex from, to;
  int crossing;
  bool is_split;
};

struct CubeFace {
  Vertex corner00;
  int x1, x2;  // the two crossings, x1 < x2
  FaceType type;
};

struct Cube {
  int n = 0;
  const OrientedDiagram* diagram = nullptr;
  std::vector<Resolution> res;   // indexed by vertex
  std::vector<CubeEdge> edges;   // ordered by (from, crossing)
  std::vector<CubeFace> faces;   // ordered by (corner00, x1, x2)

  size_t nvertices() const { return res.size(); }
  // Dense edge index: edge_index[I * n + crossing] for bit `crossing` clear in I.
  int edge_index(Vertex I, int crossing) const { return (int)(I * n + crossing); }
  // (valid only for actual edges; the dense table wastes the set-bit slots)
};

// Builds vertices, edges and classified faces; verifies that both composites
// vanish exactly on the X/Y faces.
Cube build_cube(const OrientedDiagram& d, int max_crossings = 14);

FaceType classify_face(const OrientedDiagram& d, const std::vector<Resolution>& res, Vertex I,
                       int x1, int x2);

// Checks that every 3-subcube has evenly many A+X faces and evenly many A+Y
// faces; returns a description of the first violation, if any.
std::optional<std::string> verify_cube_parity(const Cube& cube);

}  // namespace oddkh
