#pragma once
// End-to-end verification suites driven by the CLI and the test binaries.

#include <string>
#include <vector>

#include "oddkh/homology.hpp"
#include "oddkh/table.hpp"

namespace oddkh {

// Everything computed for one diagram, shared between checks and reports.
struct Pipeline {
  OrientedDiagram d;
  Cube cube;            // cube.diagram always points at this->d
  EdgeAssignment eps;   // type X
  ChainComplexZ odd, odd_red, even, even_red;

  Pipeline() = default;
  Pipeline(const Pipeline& o) { *this = o; }
  Pipeline(Pipeline&& o) noexcept { *this = std::move(o); }
  Pipeline& operator=(const Pipeline& o) {
    d = o.d;
    cube = o.cube;
    eps = o.eps;
    odd = o.odd;
    odd_red = o.odd_red;
    even = o.even;
    even_red = o.even_red;
    if (cube.diagram) cube.diagram = &d;
    return *this;
  }
  Pipeline& operator=(Pipeline&& o) noexcept {
    d = std::move(o.d);
    cube = std::move(o.cube);
    eps = std::move(o.eps);
    odd = std::move(o.odd);
    odd_red = std::move(o.odd_red);
    even = std::move(o.even);
    even_red = std::move(o.even_red);
    if (cube.diagram) cube.diagram = &d;
    return *this;
  }

  static Pipeline run(const PDCode& pd, int max_crossings = 14, int basepoint = 0,
                      const std::vector<Arrow>& arrows = {});
};

struct VerifyOptions {
  bool parity = true;        // 3-subcube face-type parity
  bool d_squared = true;     // both flavors
  bool euler_jones = true;   // chi = state sum, exactly
  bool mod2 = true;          // odd vs even GF(2) dimensions
  bool splitting = true;     // unreduced = reduced(s-1) + reduced(s+1), with torsion
  bool gauge = true;         // type X vs Y solutions and gauge equivalence
  bool kernel_flavor = false;  // kernel-subalgebra reduction matches basepoint one
  int max_crossings = 14;
};

// Returns human-readable failure descriptions (empty = all checks passed).
std::vector<std::string> verify_diagram(const PDCode& pd, const VerifyOptions& opts = {});

// Homology equality across several diagrams of one link (odd unreduced + reduced).
std::vector<std::string> verify_invariance(const std::vector<PDCode>& pds, int max_crossings = 14);

}  // namespace oddkh
