// oddkh: odd Khovanov homology of links from planar diagrams.
//
// Subcommands: compute, verify, compare, invariance, dump-cube, dump-complex.
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 resource cap.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddkh/homology.hpp"
#include "oddkh/simplify.hpp"
#include "oddkh/verify.hpp"

using namespace oddkh;
using nlohmann::json;

#ifndef ODDKH_TABLE_FILE
#define ODDKH_TABLE_FILE "data/knots.json"
#endif

namespace {

constexpr int kExitVerify = 1, kExitInput = 2, kExitCap = 3;

struct Options {
  std::vector<std::string> knots;
  std::vector<std::string> pds;
  bool all = false;
  std::string table_path;
  std::string flavor = "odd";  // odd | even | both
  bool reduced = false;
  std::string coeffs = "Z";  // Z | Q | F2 | F3
  std::string assignment = "X";
  int basepoint = 0;
  int max_crossings = 14;
  std::string format = "text";  // text | json
};

void add_common(CLI::App* cmd, Options& o, bool with_inputs = true) {
  if (with_inputs) {
    cmd->add_option("--knot", o.knots, "Knot name(s) from the table");
    cmd->add_option("--pd", o.pds, "PD code(s), e.g. PD[X[1,4,2,3]]");
    cmd->add_flag("--all", o.all, "Every knot in the table");
  }
  cmd->add_option("--table", o.table_path, "Knot table file (default: $ODDKH_TABLE)");
  cmd->add_option("--max-crossings", o.max_crossings,
                  "Crossing cap bounding the 2^n cube (default 14)");
  cmd->add_option("--format", o.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

void add_compute_opts(CLI::App* cmd, Options& o) {
  cmd->add_option("--flavor", o.flavor, "odd, even, or both")
      ->check(CLI::IsMember({"odd", "even", "both"}));
  cmd->add_flag("--reduced", o.reduced, "Reduced homology (basepoint subcomplex)");
  cmd->add_option("--coeffs", o.coeffs, "Coefficients: Z, Q, F2, or F3")
      ->check(CLI::IsMember({"Z", "Q", "F2", "F3"}));
  cmd->add_option("--assignment", o.assignment, "Edge-assignment type (odd flavor)")
      ->check(CLI::IsMember({"X", "Y"}));
  cmd->add_option("--basepoint", o.basepoint, "Basepoint arc for the reduced complex");
}

struct Input {
  std::string name;  // display name
  PDCode pd;
  std::optional<int> signature;
  std::optional<bool> alternating;
};

std::vector<KnotRecord> load(const Options& o) {
  std::string path =
      o.table_path.empty() ? default_table_path(ODDKH_TABLE_FILE) : o.table_path;
  return load_table(path);
}

// Resolves --knot/--pd/--all into concrete diagrams; table loaded lazily.
std::vector<Input> gather(const Options& o, bool require = true) {
  std::vector<Input> in;
  if (o.all || !o.knots.empty()) {
    auto table = load(o);
    if (o.all)
      for (auto& r : table) in.push_back({r.name, r.pd, r.signature, r.alternating});
    for (auto& name : o.knots) {
      const KnotRecord* r = find_knot(table, name);
      if (!r) throw PDError("unknown knot: " + name);
      in.push_back({r->name, r->pd, r->signature, r->alternating});
    }
  }
  for (auto& text : o.pds) in.push_back({text, parse_pd(text), {}, {}});
  if (require && in.empty()) throw PDError("no input: use --knot, --pd, or --all");
  return in;
}

void check_cap(const PDCode& pd, const Options& o) {
  if (o.max_crossings > 14) {
    // 2^n cube vertices; roughly 2^(n/2) circles' worth of exterior-algebra
    // generators per vertex and one sparse matrix entry per generator-edge
    double gens = std::pow(2.0, o.max_crossings) * std::pow(2.0, o.max_crossings / 2.0);
    std::cerr << "warning: crossing cap " << o.max_crossings << " -> about "
              << std::llround(gens * 48 / 1e6) << " MB for a diagram at the cap" << std::endl;
  }
  if (pd.n() > o.max_crossings)
    throw std::overflow_error("diagram has " + std::to_string(pd.n()) +
                              " crossings, above the cap " + std::to_string(o.max_crossings) +
                              " (raise --max-crossings)");
}

ChainComplexZ make_complex(const Cube& cube, const std::string& flavor, const Options& o) {
  if (flavor == "even") return o.reduced ? reduce_even(cube, o.basepoint) : assemble_even(cube);
  AssignmentType t = o.assignment == "Y" ? AssignmentType::Y : AssignmentType::X;
  EdgeAssignment eps = solve_assignment(cube, target_cochain(cube, t), t);
  return o.reduced ? reduce_basepoint(cube, eps, o.basepoint) : assemble(cube, eps);
}

json groups_json(const BigradedGroup& g) {
  json j = json::array();
  for (auto& [ms, grp] : g)
    j.push_back({{"m", ms.first}, {"s", ms.second}, {"free", grp.free_rank},
                 {"torsion", grp.torsion}});
  return j;
}

json dims_json(const Laurent2& dims) {
  json j = json::array();
  for (auto& [k, c] : dims)
    if (c) j.push_back({{"s", k.first}, {"m", k.second}, {"dim", c}});
  return j;
}

int cmd_compute(const Options& o) {
  json out = json::array();
  for (auto& in : gather(o)) {
    check_cap(in.pd, o);
    Cube cube = build_cube(orient(in.pd), o.max_crossings);
    std::vector<std::string> flavors =
        o.flavor == "both" ? std::vector<std::string>{"odd", "even"}
                           : std::vector<std::string>{o.flavor};
    for (auto& fl : flavors) {
      ChainComplexZ c = make_complex(cube, fl, o);
      json rec{{"name", in.name}, {"flavor", fl}, {"reduced", o.reduced}, {"coeffs", o.coeffs}};
      std::string text;
      if (o.coeffs == "Z") {
        BigradedGroup g = smith_homology(c);
        rec["groups"] = groups_json(g);
        rec["poincare"] = to_string(poincare(g));
        text = to_string(g);
      } else {
        int p = o.coeffs == "Q" ? 0 : o.coeffs == "F2" ? 2 : 3;
        Laurent2 dims = field_homology(c, p);
        rec["dims"] = dims_json(dims);
        rec["poincare"] = to_string(dims);
        text = to_string(dims);
      }
      if (o.format == "json")
        out.push_back(rec);
      else if (o.knots.size() + o.pds.size() == 1 && !o.all && flavors.size() == 1)
        std::cout << text << std::endl;
      else
        std::cout << in.name << " [" << fl << (o.reduced ? ", reduced" : "") << ", "
                  << o.coeffs << "]: " << text << std::endl;
    }
  }
  if (o.format == "json") std::cout << out.dump(1) << std::endl;
  return 0;
}

int cmd_verify(const Options& o, const std::vector<std::string>& checks, bool alternating_only) {
  auto want = [&](const std::string& c) {
    return checks.empty() ||
           std::find(checks.begin(), checks.end(), "all") != checks.end() ||
           std::find(checks.begin(), checks.end(), c) != checks.end();
  };
  VerifyOptions vo;
  vo.parity = want("parity");
  vo.d_squared = want("dsq");
  vo.euler_jones = want("euler");
  vo.mod2 = want("mod2");
  vo.splitting = want("splitting");
  vo.gauge = want("gauge");
  vo.max_crossings = o.max_crossings;
  bool check_thin = std::find(checks.begin(), checks.end(), "thin") != checks.end();
  if (check_thin) vo = VerifyOptions{false, false, false, false, false, false, false, 14};
  vo.max_crossings = o.max_crossings;

  Options oo = o;
  if (oo.knots.empty() && oo.pds.empty()) oo.all = true;
  int checked = 0, failures = 0;
  json report = json::array();
  for (auto& in : gather(oo)) {
    if (in.pd.n() > o.max_crossings) continue;
    if (alternating_only && !(in.alternating && *in.alternating)) continue;
    checked++;
    std::vector<std::string> errs = check_thin ? std::vector<std::string>{}
                                               : verify_diagram(in.pd, vo);
    if (check_thin) {
      Pipeline r = Pipeline::run(in.pd, o.max_crossings);
      int sigma = in.signature ? *in.signature : signature(in.pd);
      auto rep = thinness(smith_homology(r.odd_red), sigma);
      if (!rep.thin) {
        std::ostringstream os;
        os << "not sigma-thin: off-diagonal support at (m,s)=(" << rep.off_diagonal[0].first
           << "," << rep.off_diagonal[0].second << ")";
        errs.push_back(os.str());
      }
    }
    for (auto& e : errs) {
      failures++;
      if (o.format == "json")
        report.push_back({{"name", in.name}, {"error", e}});
      else
        std::cout << "FAIL " << in.name << ": " << e << std::endl;
    }
  }
  if (o.format == "json")
    std::cout << json{{"checked", checked}, {"failures", failures}, {"report", report}}.dump(1)
              << std::endl;
  else
    std::cout << (failures ? "FAILED" : "ok") << ": " << checked << " diagrams checked, "
              << failures << " failures" << std::endl;
  return failures ? kExitVerify : 0;
}

int cmd_compare(const Options& o) {
  Options oo = o;
  if (oo.knots.empty() && oo.pds.empty()) oo.all = true;
  json out = json::array();
  for (auto& in : gather(oo)) {
    if (in.pd.n() > o.max_crossings) continue;
    Pipeline r = Pipeline::run(in.pd, o.max_crossings);
    BigradedGroup even = smith_homology(r.even_red), odd = smith_homology(r.odd_red);
    long long re = total_rank(even), ro = total_rank(odd);
    int sigma = in.signature ? *in.signature : signature(in.pd);
    bool both_thin = thinness(even, sigma).thin && thinness(odd, sigma).thin;
    bool same_poly = poincare(even) == poincare(odd);
    if (o.format == "json")
      out.push_back({{"name", in.name}, {"odd_rank", ro}, {"even_rank", re},
                     {"both_thin", both_thin}, {"equal_over_Q", same_poly}});
    else
      std::cout << in.name << ": " << ro << "/" << re
                << (both_thin ? "  (both thin)" : same_poly ? "" : "  (divergent)")
                << std::endl;
  }
  if (o.format == "json") std::cout << out.dump(1) << std::endl;
  return 0;
}

int cmd_invariance(const Options& o) {
  std::vector<PDCode> pds;
  for (auto& in : gather(o)) {
    check_cap(in.pd, o);
    pds.push_back(in.pd);
  }
  if (pds.size() < 2) throw PDError("invariance needs at least two diagrams");
  auto errs = verify_invariance(pds, o.max_crossings);
  for (auto& e : errs) std::cout << "FAIL: " << e << std::endl;
  if (errs.empty()) std::cout << "ok: " << pds.size() << " diagrams agree" << std::endl;
  return errs.empty() ? 0 : kExitVerify;
}

int cmd_dump_cube(const Options& o) {
  for (auto& in : gather(o)) {
    check_cap(in.pd, o);
    Cube cube = build_cube(orient(in.pd), o.max_crossings);
    if (o.format == "json") {
      json j{{"name", in.name}, {"n", cube.n}};
      j["circles"] = json::array();
      for (auto& r : cube.res) j["circles"].push_back(r.ncircles);
      j["edges"] = json::array();
      for (auto& e : cube.edges)
        j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"crossing", e.crossing},
                              {"split", e.is_split}});
      j["faces"] = json::array();
      for (auto& f : cube.faces)
        j["faces"].push_back({{"corner", f.corner00}, {"x1", f.x1}, {"x2", f.x2},
                              {"type", std::string(1, face_char(f.type))}});
      std::cout << j.dump(1) << std::endl;
      continue;
    }
    std::cout << in.name << ": " << cube.nvertices() << " vertices, " << cube.edges.size()
              << " edges, " << cube.faces.size() << " faces" << std::endl;
    for (auto& r : cube.res) std::cout << "  vertex " << r.vertex << ": " << r.ncircles
                                       << " circle(s)" << std::endl;
    for (auto& e : cube.edges)
      std::cout << "  edge " << e.from << " -> " << e.to << " (crossing " << e.crossing << ", "
                << (e.is_split ? "split" : "merge") << ")" << std::endl;
    for (auto& f : cube.faces)
      std::cout << "  face at " << f.corner00 << " crossings (" << f.x1 << "," << f.x2
                << "): type " << face_char(f.type) << std::endl;
  }
  return 0;
}

int cmd_dump_complex(const Options& o) {
  for (auto& in : gather(o)) {
    check_cap(in.pd, o);
    Cube cube = build_cube(orient(in.pd), o.max_crossings);
    std::string fl = o.flavor == "both" ? "odd" : o.flavor;
    ChainComplexZ c = make_complex(cube, fl, o);
    if (o.format == "json") {
      json j{{"name", in.name}, {"flavor", fl}, {"reduced", o.reduced}};
      j["generators"] = json::array();
      for (auto& [ms, gens] : c.gens) {
        json block{{"m", ms.first}, {"s", ms.second}, {"gens", json::array()}};
        for (auto& g : gens)
          block["gens"].push_back({{"vertex", g.vertex}, {"mask", g.mask}});
        j["generators"].push_back(block);
      }
      j["differentials"] = json::array();
      for (auto& [ms, trips] : c.diff) {
        json block{{"m", ms.first}, {"s", ms.second}, {"entries", json::array()}};
        for (auto& t : trips)
          block["entries"].push_back({{"row", t.row}, {"col", t.col}, {"val", t.val}});
        j["differentials"].push_back(block);
      }
      std::cout << j.dump(1) << std::endl;
      continue;
    }
    std::cout << in.name << " [" << fl << (o.reduced ? ", reduced" : "") << "]: "
              << c.total_dim() << " generators" << std::endl;
    for (auto& [ms, gens] : c.gens) {
      std::cout << "  (m=" << ms.first << ", s=" << ms.second << "): dim " << gens.size();
      auto it = c.diff.find(ms);
      if (it != c.diff.end() && !it->second.empty()) {
        std::cout << "; d:";
        for (auto& t : it->second)
          std::cout << " [" << t.row << "," << t.col << "]=" << t.val;
      }
      std::cout << std::endl;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"odd Khovanov homology of links from planar diagrams"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::string> checks;
  bool alternating_only = false;

  CLI::App* compute = app.add_subcommand("compute", "Homology groups / Poincare polynomials");
  add_common(compute, o);
  add_compute_opts(compute, o);

  CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
  add_common(verify, o);
  verify->add_option("--check", checks,
                     "parity, dsq, euler, mod2, splitting, gauge, thin, all (default all)");
  verify->add_flag("--alternating-only", alternating_only, "Only alternating table entries");

  CLI::App* compare = app.add_subcommand("compare", "Reduced even/odd Q-rank table");
  add_common(compare, o);

  CLI::App* invariance =
      app.add_subcommand("invariance", "Equality of homology across diagrams of one link");
  add_common(invariance, o);

  CLI::App* dump_cube = app.add_subcommand("dump-cube", "Resolutions, edges, classified faces");
  add_common(dump_cube, o);

  CLI::App* dump_complex = app.add_subcommand("dump-complex", "Generators and differentials");
  add_common(dump_complex, o);
  add_compute_opts(dump_complex, o);

  CLI11_PARSE(app, argc, argv);
  try {
    if (compute->parsed()) return cmd_compute(o);
    if (verify->parsed()) return cmd_verify(o, checks, alternating_only);
    if (compare->parsed()) return cmd_compare(o);
    if (invariance->parsed()) return cmd_invariance(o);
    if (dump_cube->parsed()) return cmd_dump_cube(o);
    if (dump_complex->parsed()) return cmd_dump_complex(o);
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitInput;
  }
  return kExitInput;
}
