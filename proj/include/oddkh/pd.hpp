#pragma once
// Planar-diagram codes: parsing, validation, strand orientation, crossing signs.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddkh {

struct PDError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One crossing: four arc labels, counterclockwise, slot 0 = incoming under-strand.
// The under-strand runs slot 0 -> slot 2; the over-strand occupies slots 1 and 3.
struct Crossing {
  std::array<int, 4> arc;
};

struct PDCode {
  std::vector<Crossing> crossings;
  int num_arcs = 0;    // arcs are 0..num_arcs-1 after canonical renumbering
  int free_loops = 0;  // crossing-less unknotted circles

  int n() const { return (int)crossings.size(); }
};

// `PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]`; `PD[]` is the 0-crossing unknot and
// `U` entries add crossing-less loops. Labels appearing once are paired up
// consecutively to close the link.
PDCode parse_pd(const std::string& text);

// JSON form: [[a,b,c,d],...]
PDCode pd_from_tuples(const std::vector<std::array<int, 4>>& tuples, int free_loops = 0);

enum class Arrow : uint8_t { standard, reversed };

struct OrientedDiagram {
  PDCode pd;
  std::vector<int> sign;        // per crossing, +1 or -1
  std::vector<bool> over_in_b;  // over-strand enters at slot 1 (b -> d) iff true
  std::vector<Arrow> arrow;     // per-crossing surgery-arc orientation choice
  std::vector<int> arc_component;
  int num_components = 0;  // includes free loops
  int n_plus = 0, n_minus = 0;

  int n() const { return pd.n(); }
  int writhe() const { return n_plus - n_minus; }
};

// Number of faces of the 4-valent map defined by the crossings (counterclockwise
// slot order as rotation system); free loops are not counted.
int rotation_faces(const PDCode& pd);

// Throws PDError unless the rotation system is realizable in the plane
// (V - E + F = 2 per connected component).
void check_planar(const PDCode& pd);

// Validates planarity, traces strand orientations (under-strands force them;
// all-over components get a deterministic arbitrary orientation) and computes
// crossing signs.
OrientedDiagram orient(const PDCode& pd, const std::vector<Arrow>& arrows = {});

// Reflects the diagram: each tuple X[a,b,c,d] -> X[a,d,c,b].
PDCode mirror(const PDCode& pd);

std::string to_string(const PDCode& pd);

}  // namespace oddkh
