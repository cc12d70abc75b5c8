#include "oddkh/verify.hpp"

#include <algorithm>
#include <sstream>

namespace oddkh {

Pipeline Pipeline::run(const PDCode& pd, int max_crossings, int basepoint,
                       const std::vector<Arrow>& arrows) {
  Pipeline p;
  p.d = orient(pd, arrows);
  p.cube = build_cube(p.d, max_crossings);
  p.eps = solve_assignment(p.cube, target_cochain(p.cube, AssignmentType::X), AssignmentType::X);
  p.odd = assemble(p.cube, p.eps);
  p.even = assemble_even(p.cube);
  if (pd.num_arcs > 0) {
    p.odd_red = reduce_basepoint(p.cube, p.eps, basepoint);
    p.even_red = reduce_even(p.cube, basepoint);
  } else {
    // crossing-less unknot: reduce on the free loop = rank 1 at (0,0)
    p.odd_red.gens[{0, 0}] = {{0, 1}};
    p.even_red.gens[{0, 0}] = {{0, 1}};
  }
  return p;
}

namespace {

// Invariant factors -> sorted prime powers, so direct sums can be compared by
// concatenation (the invariant-factor list of a sum is not the merged list).
void to_primary(std::vector<long long>& torsion) {
  std::vector<long long> primary;
  for (long long t : torsion)
    for (long long p = 2; t > 1; p++)
      if (t % p == 0) {
        long long pk = 1;
        while (t % p == 0) {
          pk *= p;
          t /= p;
        }
        primary.push_back(pk);
      }
  std::sort(primary.begin(), primary.end());
  torsion = std::move(primary);
}

void check_splitting(const ChainComplexZ& unred, const ChainComplexZ& red,
                     std::vector<std::string>& fails, const char* flavor) {
  BigradedGroup u = smith_homology(unred);
  BigradedGroup r = smith_homology(red);
  for (auto& [ms, g] : u) to_primary(g.torsion);
  // expected unreduced at (m,s): direct sum of reduced at (m,s-1) and (m,s+1)
  BigradedGroup expect;
  for (auto& [ms, g] : r) {
    for (int dq : {-1, +1}) {
      GroupAt& e = expect[{ms.first, ms.second + dq}];
      e.free_rank += g.free_rank;
      e.torsion.insert(e.torsion.end(), g.torsion.begin(), g.torsion.end());
    }
  }
  for (auto& [ms, g] : expect) to_primary(g.torsion);
  for (auto it = expect.begin(); it != expect.end();)
    it = it->second.trivial() ? expect.erase(it) : std::next(it);
  if (u != expect) {
    std::ostringstream os;
    os << flavor << " splitting mismatch: unreduced " << to_string(u) << " vs 2x reduced "
       << to_string(expect);
    fails.push_back(os.str());
  }
}

}  // namespace

std::vector<std::string> verify_diagram(const PDCode& pd, const VerifyOptions& opts) {
  std::vector<std::string> fails;
  Pipeline p = Pipeline::run(pd, opts.max_crossings);

  if (opts.parity)
    if (auto bad = verify_cube_parity(p.cube)) fails.push_back("cube parity: " + *bad);

  if (opts.gauge) {
    auto phiY = target_cochain(p.cube, AssignmentType::Y);
    EdgeAssignment epsY = solve_assignment(p.cube, phiY, AssignmentType::Y);
    auto phiX = target_cochain(p.cube, AssignmentType::X);
    if (auto alt = solve_assignment_gf2(p.cube, phiX, AssignmentType::X)) {
      if (auto bad = verify_assignment(p.cube, *alt, phiX))
        fails.push_back("GF(2) solver produced invalid assignment: " + *bad);
      else if (!find_gauge(p.cube, p.eps, *alt))
        fails.push_back("tree and GF(2) type-X assignments are not gauge-equivalent");
    } else {
      fails.push_back("GF(2) elimination found type-X cochain unsolvable");
    }
    // type Y yields the same homology
    ChainComplexZ oddY = assemble(p.cube, epsY);
    if (smith_homology(oddY) != smith_homology(p.odd))
      fails.push_back("type X and type Y assignments give different homology");
  }

  if (opts.d_squared) {
    if (auto bad = check_d_squared(p.odd)) fails.push_back("odd " + *bad);
    if (auto bad = check_d_squared(p.even)) fails.push_back("even " + *bad);
    if (pd.num_arcs > 0) {
      if (auto bad = check_d_squared(p.odd_red)) fails.push_back("odd reduced " + *bad);
      if (auto bad = check_d_squared(p.even_red)) fails.push_back("even reduced " + *bad);
    }
  }

  if (opts.euler_jones) {
    Laurent1 chi = euler_characteristic(smith_homology(p.odd));
    Laurent1 jones = jones_state_sum(p.d);
    if (chi != jones)
      fails.push_back("Euler characteristic " + to_string(chi) + " != Jones state sum " +
                      to_string(jones));
  }

  if (opts.mod2) {
    if (field_homology(p.odd, 2) != field_homology(p.even, 2))
      fails.push_back("odd and even GF(2) homology dimensions differ");
  }

  if (opts.splitting && pd.num_arcs > 0) {
    check_splitting(p.odd, p.odd_red, fails, "odd");
  }

  if (opts.kernel_flavor && pd.num_arcs > 0) {
    ChainComplexZ k = reduce_kernel(p.cube, p.eps);
    if (auto bad = check_d_squared(k)) fails.push_back("kernel reduced " + *bad);
    // The kernel flavor is basepoint-free; compare against the wedge flavor.
    if (smith_homology(k) != smith_homology(p.odd_red))
      fails.push_back("kernel-subalgebra and basepoint-wedge homologies differ");
  }

  return fails;
}

std::vector<std::string> verify_invariance(const std::vector<PDCode>& pds, int max_crossings) {
  std::vector<std::string> fails;
  if (pds.size() < 2) {
    fails.push_back("need at least two diagrams");
    return fails;
  }
  BigradedGroup u0, r0;
  for (size_t i = 0; i < pds.size(); i++) {
    Pipeline p = Pipeline::run(pds[i], max_crossings);
    BigradedGroup u = smith_homology(p.odd), r = smith_homology(p.odd_red);
    if (i == 0) {
      u0 = u;
      r0 = r;
    } else {
      if (u != u0)
        fails.push_back("diagram " + std::to_string(i) + " unreduced homology differs: " +
                        to_string(u) + " vs " + to_string(u0));
      if (r != r0)
        fails.push_back("diagram " + std::to_string(i) + " reduced homology differs: " +
                        to_string(r) + " vs " + to_string(r0));
    }
  }
  return fails;
}

}  // namespace oddkh
