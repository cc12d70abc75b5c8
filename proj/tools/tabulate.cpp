// Builds the bundled knot table (data/knots.json).
//
//  * Alternating knots with 3..10 crossings are enumerated from scratch
//    (chord-diagram pairings -> planar alternating diagrams), deduplicated by
//    the invariant key (Jones polynomial, signature, Alexander polynomial,
//    number of knot-group homomorphisms into S5) up to mirroring, and the
//    census sizes are certified against the known tallies 1,1,2,3,7,18,41,123.
//    Jones + signature alone merge ten pairs of distinct 10-crossing knots,
//    and Jones + signature + Alexander still merge two; the S5 count is the
//    cheapest classical invariant that separates everything.
//
//  * Non-alternating knots come from grid presentations (data/grids.json),
//    converted to diagrams and simplified down to their crossing number; the
//    chirality of the eight benchmark knots is aligned with the reference
//    reduced Poincare polynomials baked into the acceptance suite.
//
//  * The grid source has four defects, worked around here and certified on
//    every run: the 10_136 and 10_137 entries encode 2-component links, the
//    10_159 entry encodes the same knot as the 10_160 entry, and the 10_134
//    entry resists simplification below 11 crossings.  The three missing
//    knots and a 10-crossing diagram for 10_134 are recovered by enumerating
//    every over/under assignment on every 10-crossing shadow and removing
//    the keys of all known knots (alternating, grid-presented, composites of
//    smaller primes, unknot): exactly three keys remain.  They are assigned
//    names from their homology fingerprints -- 10_136 is the unique one with
//    reduced odd/even Q-ranks (15, 17); 10_137 is sigma-thin with sigma = 0
//    and determinant 25.  The third (sigma-thin, determinant 39) is 10_159,
//    by determinant order against the published tables (10_160 has
//    determinant 21); this last naming choice is not pinned by anything in
//    this repository and is recorded in the emitted provenance.
//
// Usage: tabulate [grids.json] [out.json]

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <json.hpp>

#include "oddkh/homology.hpp"
#include "oddkh/simplify.hpp"
#include "oddkh/verify.hpp"
#include "census_invariants.hpp"

using namespace oddkh;
using nlohmann::json;

// ---------------------------------------------------------------------------
// Jones helpers

// Exact division by q + 1/q (the unknot factor).
static Laurent1 divide_unknot(const Laurent1& p) {
  Laurent1 v, rem = p;
  for (int guard = 0; !rem.empty(); guard++) {
    if (guard > 1000) throw std::runtime_error("jones not divisible by q + 1/q");
    auto [e, c] = *rem.begin();
    add_term(v, e + 1, c);
    add_term(rem, e, -c);
    add_term(rem, e + 2, -c);
  }
  return v;
}

// The normalized polynomial evaluated where the determinant lives.
static long long determinant(const Laurent1& jones) {
  long long det = 0;
  for (auto& [e, c] : divide_unknot(jones)) {
    if (e % 2 != 0) throw std::runtime_error("odd exponent in normalized jones");
    det += (e / 2) % 2 ? -c : c;
  }
  return det < 0 ? -det : det;
}

static long long alex_at_minus1(const std::vector<long long>& alex) {
  long long v = 0;
  bool neg = false;
  for (long long c : alex) {
    v += neg ? -c : c;
    neg = !neg;
  }
  return v < 0 ? -v : v;
}

// ---------------------------------------------------------------------------
// Invariant keys (mirror-canonical)

static std::string alex_string(const std::vector<long long>& alex) {
  std::string s = "[";
  for (long long c : alex) s += std::to_string(c) + ",";
  return s + "]";
}

// Jones + signature + Alexander; the Alexander polynomial is mirror-invariant.
static std::string invariant_key(const Laurent1& jones, int sig,
                                 const std::vector<long long>& alex) {
  std::string ax = "|" + alex_string(alex);
  std::string a = to_string(jones) + "|" + std::to_string(sig) + ax;
  std::string b = to_string(mirror_q(jones)) + "|" + std::to_string(-sig) + ax;
  return std::min(a, b);
}

static std::string invariant_key(const OrientedDiagram& d) {
  return invariant_key(jones_state_sum(d), signature(d.pd), census::alexander_poly(d));
}

// ---------------------------------------------------------------------------
// Alternating knot enumeration.
//
// A reduced alternating diagram with n crossings is encoded by an involution f
// on 0..2n-1 pairing each even passage with an odd one (even passages over,
// odd under).  We enumerate pairings up to rotation/reflection, keep the
// connected ones, and search the 2^n per-crossing rotations for a planar
// embedding; the embedding directly yields the PD tuples.

namespace {

struct Chords {
  int n;
  std::vector<int> f;  // involution on 0..2n-1
};

bool canonical(const Chords& ch) {
  int n = ch.n, m = 2 * n;
  auto& f = ch.f;
  for (int s = 0; s < m; s++)
    for (int d = -1; d <= 1; d += 2) {
      if (s == 0 && d == 1) continue;
      for (int i = 0; i < n; i++) {
        int pos = ((s + d * 2 * i) % m + m) % m;
        int val = ((d * (f[pos] - s)) % m + m) % m;
        if (val < f[2 * i]) return false;
        if (val > f[2 * i]) break;
      }
    }
  return true;
}

// chord k = (2k, f[2k]); interlacement adjacency as bitmasks
std::vector<uint32_t> interlacement(const Chords& ch) {
  int n = ch.n;
  std::vector<uint32_t> adj(n, 0);
  for (int i = 0; i < n; i++) {
    int a1 = 2 * i, b1 = ch.f[2 * i];
    if (a1 > b1) std::swap(a1, b1);
    for (int j = i + 1; j < n; j++) {
      int a2 = 2 * j, b2 = ch.f[2 * j];
      if (a2 > b2) std::swap(a2, b2);
      bool in1 = a1 < a2 && a2 < b1, in2 = a1 < b2 && b2 < b1;
      if (in1 != in2) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
    }
  }
  return adj;
}

bool connected(const std::vector<uint32_t>& adj) {
  int n = (int)adj.size();
  uint32_t seen = 1, frontier = 1;
  while (frontier) {
    uint32_t next = 0;
    for (int i = 0; i < n; i++)
      if (frontier & (1u << i)) next |= adj[i];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n >= 32 ? ~0u : (1u << n) - 1);
}

// Necessary parity conditions; every survivor still goes through the
// embedding search, so a too-weak filter only costs time and a too-strong one
// would be caught by the census certification.
bool realizable_filter(const std::vector<uint32_t>& adj) {
  int n = (int)adj.size();
  for (int i = 0; i < n; i++)
    if (__builtin_popcount(adj[i]) % 2) return false;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++)
      if (!(adj[i] & (1u << j)) && __builtin_popcount(adj[i] & adj[j]) % 2) return false;
  return true;
}

bool embed(const Chords& ch, PDCode& out) {
  int n = ch.n, m = 2 * n;
  std::vector<std::array<int, 4>> tuples(n);
  for (uint32_t bits = 0; bits < (1u << n); bits++) {
    for (int k = 0; k < n; k++) {
      int a = ch.f[2 * k];  // odd: under passage
      int b = 2 * k;        // even: over passage
      int s0 = (a + m - 1) % m + 1, s2 = a + 1;
      int e0 = (b + m - 1) % m + 1, e1 = b + 1;
      bool sw = bits & (1u << k);
      tuples[k] = {s0, sw ? e1 : e0, s2, sw ? e0 : e1};
    }
    PDCode pd = pd_from_tuples(tuples);
    if (rotation_faces(pd) == n + 2) {
      out = std::move(pd);
      return true;
    }
  }
  return false;
}

const census::Group& s5() {
  static census::Group g = census::symmetric_group(5);
  return g;
}

struct AltRep {
  PDCode pd;
  int sig;
  long long det;
  Laurent1 jones;
  std::vector<long long> alex;
  std::string key;  // without the hom count; used for exclusion later
};

// Visits every embeddable shadow once, in canonical order.
template <typename F>
void for_each_shadow(int n, F&& fn) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; i++) perm[i] = 2 * i + 1;
  Chords ch{n, std::vector<int>(2 * n)};
  do {
    for (int i = 0; i < n; i++) {
      ch.f[2 * i] = perm[i];
      ch.f[perm[i]] = 2 * i;
    }
    if (!canonical(ch)) continue;
    auto adj = interlacement(ch);
    if (!connected(adj)) continue;  // nugatory or composite
    if (!realizable_filter(adj)) continue;
    PDCode pd;
    if (embed(ch, pd)) fn(std::move(pd));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<AltRep> enumerate_alternating(int n) {
  std::map<std::string, AltRep> reps;
  for_each_shadow(n, [&](PDCode pd) {
    OrientedDiagram d = orient(pd);
    Laurent1 j = jones_state_sum(d);
    int sg = signature(pd);
    auto ax = census::alexander_poly(d);
    std::string base = invariant_key(j, sg, ax);
    std::string key = base + "|" + std::to_string(census::hom_count(d, s5()));
    if (!reps.count(key))
      reps.emplace(key,
                   AltRep{std::move(pd), sg, determinant(j), std::move(j), std::move(ax), base});
  });
  std::vector<AltRep> out;
  for (auto& [k, r] : reps) out.push_back(std::move(r));
  // deterministic census order
  std::sort(out.begin(), out.end(), [](const AltRep& a, const AltRep& b) {
    return std::tie(a.det, a.jones, a.sig) < std::tie(b.det, b.jones, b.sig);
  });
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Grid presentations -> diagrams

static PDCode grid_to_pd(std::vector<int> white, std::vector<int> black) {
  // drop rows whose two markers coincide (degenerate row + column pair)
  for (bool again = true; again;) {
    again = false;
    for (size_t r = 0; r < white.size() && !again; r++)
      if (white[r] == black[r]) {
        int c = white[r];
        white.erase(white.begin() + r);
        black.erase(black.begin() + r);
        for (auto& v : white)
          if (v > c) v--;
        for (auto& v : black)
          if (v > c) v--;
        again = true;
      }
  }
  int N = (int)white.size();
  std::vector<int> wrow(N), brow(N);
  for (int r = 0; r < N; r++) {
    wrow[white[r]] = r;
    brow[black[r]] = r;
  }
  // crossings: vertical strands (one per column) pass over horizontal ones
  std::map<std::pair<int, int>, int> xid;  // (row, col) -> crossing
  for (int r = 0; r < N; r++) {
    int c1 = std::min(white[r], black[r]), c2 = std::max(white[r], black[r]);
    for (int c = c1 + 1; c < c2; c++) {
      int rlo = std::min(wrow[c], brow[c]), rhi = std::max(wrow[c], brow[c]);
      if (rlo < r && r < rhi) xid[{r, c}] = (int)xid.size();
    }
  }
  int nx = (int)xid.size();
  std::vector<std::array<int, 4>> tuples(nx);
  std::vector<std::array<bool, 4>> filled(nx, {false, false, false, false});

  struct Ev {
    int x;       // crossing
    bool under;  // horizontal passage
    int dir;     // +1 = increasing coordinate (col for under, row for over)
  };
  int free_loops = 0, next_arc = 0;
  std::vector<int> under_dir(nx, 0);
  std::set<std::pair<int, int>> visited;  // markers (row, col) seen as horizontal start
  for (int r0 = 0; r0 < N; r0++) {
    if (visited.count({r0, white[r0]})) continue;
    // trace the component starting along row r0 from the white marker
    std::vector<Ev> evs;
    int r = r0, c = white[r0];
    do {
      visited.insert({r, c});
      int c2 = c == white[r] ? black[r] : white[r];
      int dir = c2 > c ? 1 : -1;
      for (int cc = c + dir; cc != c2; cc += dir)
        if (auto it = xid.find({r, cc}); it != xid.end()) evs.push_back({it->second, true, dir});
      visited.insert({r, c2});
      c = c2;
      int r2 = r == wrow[c] ? brow[c] : wrow[c];
      int rdir = r2 > r ? 1 : -1;
      for (int rr = r + rdir; rr != r2; rr += rdir)
        if (auto it = xid.find({rr, c}); it != xid.end()) evs.push_back({it->second, false, rdir});
      r = r2;
    } while (!(r == r0 && c == white[r0]));
    if (evs.empty()) {
      free_loops++;
      continue;
    }
    int base = next_arc, ne = (int)evs.size();
    next_arc += ne;
    for (int i = 0; i < ne; i++) {
      int arc_in = base + (i + ne - 1) % ne + 1, arc_out = base + i + 1;
      auto [x, under, dir] = evs[i];
      auto place = [&](int slot, int arc) {
        tuples[x][slot] = arc;
        filled[x][slot] = true;
      };
      if (under) {
        place(0, arc_in);
        place(2, arc_out);
        under_dir[x] = dir;
      } else {
        // counterclockwise slots assuming the under passage heads east
        // (swapped below once the under direction is known)
        int south = dir > 0 ? arc_in : arc_out;
        int north = dir > 0 ? arc_out : arc_in;
        place(1, south);
        place(3, north);
      }
    }
  }
  // fix over-slot order for crossings whose under passage runs westwards
  for (int x = 0; x < nx; x++)
    if (under_dir[x] < 0) std::swap(tuples[x][1], tuples[x][3]);
  for (int x = 0; x < nx; x++)
    for (int s = 0; s < 4; s++)
      if (!filled[x][s] || under_dir[x] == 0)
        throw std::runtime_error("grid trace missed a crossing slot");
  return pd_from_tuples(tuples, free_loops);
}

// ---------------------------------------------------------------------------

// Reference reduced Poincare polynomials fixing the chirality of the eight
// benchmark knots (the acceptance suite checks the same values).
static const std::map<std::string, std::string> kBenchmark = {
    {"8_19", "q^6 + q^10 t^2 + q^16 t^5"},
    {"10_124", "q^8 + q^12 t^2 + q^20 t^7"},
    {"10_139", "q^8 + q^12 t^2 + q^16 t^5 + q^18 t^6 + q^20 t^7 + q^22 t^8 + q^24 t^9"},
    {"10_145",
     "q^-20 t^-9 + q^-18 t^-8 + q^-16 t^-7 + q^-14 t^-6 + q^-8 t^-3 + q^-8 t^-2 + q^-4"},
    {"10_152",
     "q^-26 t^-10 + 2 q^-24 t^-9 + 2 q^-22 t^-8 + 3 q^-20 t^-7 + 2 q^-18 t^-6 + 2 q^-16 t^-5 + "
     "q^-14 t^-4 + q^-12 t^-2 + q^-8"},
    {"10_153",
     "q^-10 t^-5 + q^-8 t^-4 + q^-6 t^-3 + q^-4 t^-2 + 1 + q^2 t^2 + q^4 t^3 + q^6 t^4 + "
     "q^8 t^5"},
    {"10_154",
     "q^6 + q^10 t^2 + q^10 t^3 + 2 q^12 t^4 + 2 q^14 t^5 + 2 q^16 t^6 + 3 q^18 t^7 + "
     "2 q^20 t^8 + 2 q^22 t^9 + q^24 t^10"},
    {"10_161",
     "q^-22 t^-9 + q^-20 t^-8 + q^-18 t^-7 + q^-16 t^-6 + q^-14 t^-5 + q^-12 t^-4 + "
     "q^-10 t^-3 + q^-10 t^-2 + q^-6"},
};

// Grid entries that do not encode the named knot (certified on every run).
static const std::set<std::string> kDefectiveGrids = {"10_136", "10_137", "10_159"};

static json pd_to_json(const PDCode& pd) {
  json pdj = json::array();
  for (auto& x : pd.crossings)
    pdj.push_back({x.arc[0] + 1, x.arc[1] + 1, x.arc[2] + 1, x.arc[3] + 1});
  return pdj;
}

static Laurent2 q_dims(const ChainComplexZ& c) { return field_homology(c, 0); }

static bool is_thin(const Laurent2& dims, int sigma) {
  for (auto& [k, v] : dims)
    if (v != 0 && k.first - 2 * k.second != sigma) return false;
  return true;
}

static long long rank_sum(const Laurent2& dims) {
  long long r = 0;
  for (auto& [k, v] : dims) r += v;
  return r;
}

int main(int argc, char** argv) {
  std::string grids_path = argc > 1 ? argv[1] : "data/grids.json";
  std::string out_path = argc > 2 ? argv[2] : "data/knots.json";
  json out = json::array();
  bool ok = true;

  // ---- alternating census
  static const int kCensus[11] = {0, 0, 0, 1, 1, 2, 3, 7, 18, 41, 123};
  std::set<std::string> known_keys;  // Jones|sigma|Alexander of every known knot
  struct Factor {
    int n;
    Laurent1 jones;
    int sig;
    std::vector<long long> alex;
  };
  std::vector<Factor> factors;  // alternating primes <= 7 crossings, both chiralities
  for (int n = 3; n <= 10; n++) {
    auto reps = enumerate_alternating(n);
    std::cout << "alternating " << n << "-crossing knots: " << reps.size() << " (expected "
              << kCensus[n] << ")" << std::endl;
    if ((int)reps.size() != kCensus[n]) {
      std::cout << "CENSUS MISMATCH" << std::endl;
      ok = false;
    }
    // Rolfsen names below 8 crossings follow the determinant order; bigger
    // alternating knots get census names.
    for (size_t i = 0; i < reps.size(); i++) {
      std::string name = (n <= 7 ? "" : "alt_") + std::to_string(n) + "_" + std::to_string(i + 1);
      json rec;
      rec["name"] = name;
      rec["pd"] = pd_to_json(reps[i].pd);
      rec["signature"] = reps[i].sig;
      rec["alternating"] = true;
      rec["source"] = "enumerated reduced alternating diagram; census-certified";
      out.push_back(rec);
      known_keys.insert(reps[i].key);
      if (n <= 7) {
        factors.push_back({n, reps[i].jones, reps[i].sig, reps[i].alex});
        factors.push_back({n, mirror_q(reps[i].jones), -reps[i].sig, reps[i].alex});
      }
    }
    if (n <= 7)
      for (size_t i = 0; i + 1 < reps.size(); i++)
        if (reps[i].det == reps[i + 1].det) {
          std::cout << "determinant tie at " << n << " crossings; naming ambiguous" << std::endl;
          ok = false;
        }
  }
  {
    Laurent1 unknot_jones;
    add_term(unknot_jones, 1, 1);
    add_term(unknot_jones, -1, 1);
    known_keys.insert(invariant_key(unknot_jones, 0, {1}));
  }
  // connected sums with <= 10 crossings (factors are alternating primes <= 7)
  {
    auto add_sum = [&](const Factor& a, const Factor& b) {
      Factor s{a.n + b.n, divide_unknot(mul(a.jones, b.jones)), a.sig + b.sig,
               std::vector<long long>(a.alex.size() + b.alex.size() - 1, 0)};
      for (size_t i = 0; i < a.alex.size(); i++)
        for (size_t j = 0; j < b.alex.size(); j++) s.alex[i + j] += a.alex[i] * b.alex[j];
      known_keys.insert(invariant_key(s.jones, s.sig, s.alex));
      return s;
    };
    for (size_t i = 0; i < factors.size(); i++)
      for (size_t j = i; j < factors.size(); j++) {
        if (factors[i].n + factors[j].n > 10) continue;
        Factor s = add_sum(factors[i], factors[j]);
        for (size_t k = j; k < factors.size(); k++)
          if (s.n + factors[k].n <= 10) add_sum(s, factors[k]);
      }
  }

  // ---- non-alternating knots from grids
  std::ifstream gin(grids_path);
  if (!gin) {
    std::cout << "cannot open " << grids_path << std::endl;
    return 1;
  }
  json grids;
  gin >> grids;
  std::map<std::string, json> nonalt;        // name -> record (emitted sorted)
  std::map<std::string, std::string> gkeys;  // name -> invariant key (all grids)
  std::map<std::string, PDCode> stuck;       // grids that resist full simplification
  for (auto& [name, g] : grids.items()) {
    int target = std::stoi(name.substr(0, name.find('_')));
    PDCode pd = grid_to_pd(g.at("white").get<std::vector<int>>(),
                           g.at("black").get<std::vector<int>>());
    check_planar(pd);
    if (name == "10_136" || name == "10_137") {
      // known-defective: these encode 2-component links
      if (orient(pd).num_components == 2) continue;
      std::cout << "grid " << name << " no longer encodes a 2-component link; "
                << "the defect workarounds need review" << std::endl;
      ok = false;
      continue;
    }
    PDCode best = pd;
    for (uint64_t seed = 1; seed <= 100 && best.n() > target; seed++) {
      PDCode s = simplify(seed % 2 ? pd : best, target, seed);
      if (s.n() < best.n()) best = s;
    }
    std::cout << name << ": grid diagram " << pd.n() << " -> " << best.n() << " crossings"
              << std::endl;
    gkeys[name] = invariant_key(orient(best));
    if (best.n() > target) {
      // stubborn grids (10_134, 10_153): a minimal diagram is substituted
      // from the exhaustive 10-crossing enumeration below
      if (target == 10) {
        stuck.emplace(name, best);
      } else {
        std::cout << "FAILED to reach " << target << " crossings" << std::endl;
        ok = false;
      }
      continue;
    }
    if (name == "10_159") continue;  // known-defective: duplicates 10_160 (checked below)
    if (auto it = kBenchmark.find(name); it != kBenchmark.end()) {
      Laurent2 want = parse_laurent2(it->second);
      auto reduced_poly = [](const PDCode& p) { return q_dims(Pipeline::run(p).odd_red); };
      if (reduced_poly(best) != want) {
        PDCode m = mirror(best);
        if (reduced_poly(m) == want) {
          best = m;
          std::cout << "  (mirrored to match the benchmark chirality)" << std::endl;
        } else {
          std::cout << "BENCHMARK POLYNOMIAL MISMATCH for " << name << std::endl;
          ok = false;
        }
      }
    }
    json rec;
    rec["name"] = name;
    rec["pd"] = pd_to_json(best);
    rec["signature"] = signature(best);
    rec["alternating"] = false;
    rec["source"] = "grid presentation, simplified to minimal crossing number";
    nonalt[name] = rec;
    known_keys.insert(gkeys[name]);
  }
  if (gkeys.count("10_159") && gkeys.count("10_160")) {
    if (gkeys["10_159"] != gkeys["10_160"]) {
      std::cout << "grids 10_159 and 10_160 no longer agree; the defect "
                << "workarounds need review" << std::endl;
      ok = false;
    }
  } else {
    std::cout << "missing 10_159/10_160 grids" << std::endl;
    ok = false;
  }
  if (!ok) {
    std::cout << "NOT writing " << out_path << " (certification failed)" << std::endl;
    return 1;
  }

  // ---- exhaustive 10-crossing enumeration: every over/under assignment on
  // every shadow, bucketed by invariant key.  Immediately reducible diagrams
  // are skipped; minimal diagrams never are, so no 10-crossing knot is lost.
  std::map<std::string, PDCode> buckets;
  {
    int nshadows = 0;
    long long kept = 0;
    for_each_shadow(10, [&](PDCode pd) {
      nshadows++;
      for (uint32_t bits = 1; bits + 1 < (1u << 10); bits++) {
        PDCode q = pd;
        for (int c = 0; c < 10; c++)
          if (bits & (1u << c)) {
            auto a = q.crossings[c].arc;
            q.crossings[c].arc = {a[1], a[2], a[3], a[0]};
          }
        if (reduce_r1(q) || reduce_r2(q)) continue;
        kept++;
        buckets.emplace(invariant_key(orient(q)), std::move(q));
      }
    });
    std::cout << "10-crossing enumeration: " << nshadows << " shadows, " << kept
              << " irreducible diagrams, " << buckets.size() << " invariant keys" << std::endl;
  }

  // ---- minimal diagrams for the stubborn grids, certified against the
  // (bigger) grid diagrams by signature, Jones and field homology
  for (auto& [name, gridpd] : stuck) {
    auto it = buckets.find(gkeys[name]);
    if (it == buckets.end()) {
      std::cout << "no enumerated diagram matches the " << name << " grid key" << std::endl;
      ok = false;
      continue;
    }
    PDCode cand = it->second;
    if (jones_state_sum(orient(cand)) != jones_state_sum(orient(gridpd))) cand = mirror(cand);
    Pipeline a = Pipeline::run(cand), b = Pipeline::run(gridpd);
    bool same = jones_state_sum(orient(cand)) == jones_state_sum(orient(gridpd)) &&
                signature(cand) == signature(gridpd);
    for (int p : {0, 2, 3})
      same = same && field_homology(a.odd, p) == field_homology(b.odd, p) &&
             field_homology(a.odd_red, p) == field_homology(b.odd_red, p);
    if (!same) {
      std::cout << name << ": enumeration candidate disagrees with the grid diagram"
                << std::endl;
      ok = false;
      continue;
    }
    if (auto bm = kBenchmark.find(name); bm != kBenchmark.end()) {
      Laurent2 want = parse_laurent2(bm->second);
      if (q_dims(Pipeline::run(cand).odd_red) != want) {
        cand = mirror(cand);
        if (q_dims(Pipeline::run(cand).odd_red) != want) {
          std::cout << "BENCHMARK POLYNOMIAL MISMATCH for " << name << std::endl;
          ok = false;
          continue;
        }
        std::cout << "  (" << name << " mirrored to match the benchmark chirality)" << std::endl;
      }
    }
    std::cout << name << ": enumerated 10-crossing diagram certified against the "
              << gridpd.n() << "-crossing grid diagram" << std::endl;
    json rec;
    rec["name"] = name;
    rec["pd"] = pd_to_json(cand);
    rec["signature"] = signature(cand);
    rec["alternating"] = false;
    rec["source"] =
        "enumerated 10-crossing diagram; homology-certified against the grid presentation";
    nonalt[name] = rec;
    known_keys.insert(gkeys[name]);
  }

  // ---- the three knots with defective grids, from the leftover keys
  {
    std::vector<std::pair<std::string, PDCode>> leftovers;
    for (auto& [k, pd] : buckets)
      if (!known_keys.count(k)) leftovers.emplace_back(k, pd);
    std::cout << "leftover keys after removing known knots and composites: " << leftovers.size()
              << " (expected 3)" << std::endl;
    if (leftovers.size() != 3) {
      ok = false;
    } else {
      int found = 0;
      for (auto& [k, pd] : leftovers) {
        Pipeline r = Pipeline::run(pd);
        Laurent2 odd = q_dims(r.odd_red), even = q_dims(r.even_red);
        int sg = signature(pd);
        long long ro = rank_sum(odd), re = rank_sum(even);
        auto ax = census::alexander_poly(orient(pd));
        long long det = alex_at_minus1(ax);
        bool thin = is_thin(odd, sg) && is_thin(even, sg);
        std::cout << "  leftover: sigma=" << sg << " det=" << det << " ranks=(" << ro << ","
                  << re << ") thin=" << thin << std::endl;
        std::string name, source;
        if (ro == 15 && re == 17 && is_thin(odd, sg) && !is_thin(even, sg)) {
          // the unique non-listed knot with reduced odd/even Q-ranks (15, 17)
          name = "10_136";
          source = "reconstructed (defective grid source); identified by the "
                   "reduced odd/even Q-rank pair (15, 17)";
        } else if (thin && sg == 0 && det == 25) {
          name = "10_137";
          source = "reconstructed (defective grid source); identified as the "
                   "sigma-thin leftover with sigma 0 and determinant 25";
        } else if (thin && std::abs(sg) == 2 && det == 39) {
          name = "10_159";
          source = "reconstructed (defective grid source, which duplicates 10_160); "
                   "named by determinant order against the published tables "
                   "(determinants 39 vs 21) -- not pinned by in-repo data";
        }
        if (name.empty() || nonalt.count(name)) {
          std::cout << "  UNRECOGNIZED leftover fingerprint" << std::endl;
          ok = false;
          continue;
        }
        found++;
        json rec;
        rec["name"] = name;
        rec["pd"] = pd_to_json(pd);
        rec["signature"] = sg;
        rec["alternating"] = false;
        rec["source"] = source;
        nonalt[name] = rec;
      }
      if (found != 3) ok = false;
    }
  }

  for (auto& [name, rec] : nonalt) out.push_back(rec);
  int expect = 0;
  for (int n = 3; n <= 10; n++) expect += kCensus[n];
  expect += 3 + 8 + 42;  // non-alternating knots with 8, 9, 10 crossings
  if ((int)out.size() != expect) {
    std::cout << "record count " << out.size() << " != expected " << expect << std::endl;
    ok = false;
  }

  if (!ok) {
    std::cout << "NOT writing " << out_path << " (certification failed)" << std::endl;
    return 1;
  }
  std::ofstream os(out_path);
  os << out.dump(1) << "\n";
  std::cout << "wrote " << out.size() << " records to " << out_path << std::endl;
  return 0;
}
