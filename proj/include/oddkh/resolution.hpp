#pragma once
// Resolutions: the embedded 1-manifold at each vertex of the cube, with the
// planar marker data needed for face classification.

#include <cstdint>
#include <vector>

#include "oddkh/pd.hpp"

namespace oddkh {

using Vertex = uint32_t;  // bit c = resolution choice at crossing c

// One passage of a circle through a resolved crossing. Each crossing
// contributes two strands ("pairs"): in the 0-smoothing pair 0 joins slots
// (b,c) and pair 1 joins (d,a); in the 1-smoothing pair 0 joins (a,b) and
// pair 1 joins (c,d). `forward` records whether the circle traverses the pair
// in the listed order (a->b etc.); the surgery-arc endpoint sits on the left
// of a forward traversal.
struct Marker {
  int crossing;
  uint8_t pair;     // 0 or 1
  bool forward;
};

struct Resolution {
  Vertex vertex = 0;
  int ncircles = 0;
  std::vector<int> arc_circle;                    // arc -> circle index
  std::vector<std::array<int, 2>> corner_circle;  // [crossing][pair] -> circle
  std::vector<std::vector<Marker>> circle_markers;  // per circle, in trace order
};

// Circles ordered by ascending minimal incident arc label; free loops last.
Resolution resolve(const OrientedDiagram& d, Vertex I);

// All 2^n resolutions, indexed by vertex bits. Throws PDError if n exceeds the cap.
std::vector<Resolution> all_resolutions(const OrientedDiagram& d, int max_crossings = 14);

}  // namespace oddkh
