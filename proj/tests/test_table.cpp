#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <map>
#include <set>

#include "oddkh/table.hpp"

using namespace oddkh;

static std::vector<KnotRecord> table() { return load_table(ODDKH_TABLE_FILE); }

// "3_1" / "alt_10_17" / "10_124" -> crossing number
static int crossings_from_name(const std::string& name) {
  std::string s = name.rfind("alt_", 0) == 0 ? name.substr(4) : name;
  return std::stoi(s.substr(0, s.find('_')));
}

TEST_CASE("table loads and is well-formed") {
  auto t = table();
  CHECK(t.size() == 249);
  std::set<std::string> names;
  for (auto& r : t) {
    CAPTURE(r.name);
    CHECK(names.insert(r.name).second);  // unique
    CHECK(r.signature.has_value());
    CHECK(r.alternating.has_value());
    CHECK(r.pd.n() == crossings_from_name(r.name));
    CHECK_NOTHROW(check_planar(r.pd));
    CHECK(orient(r.pd).num_components == 1);  // knots only
  }
}

TEST_CASE("census sizes per crossing number") {
  std::map<int, int> alt, nonalt;
  for (auto& r : table()) (*r.alternating ? alt : nonalt)[r.pd.n()]++;
  CHECK(alt == std::map<int, int>{{3, 1}, {4, 1}, {5, 2}, {6, 3}, {7, 7}, {8, 18}, {9, 41},
                                  {10, 123}});
  CHECK(nonalt == std::map<int, int>{{8, 3}, {9, 8}, {10, 42}});
}

TEST_CASE("find_knot") {
  auto t = table();
  const KnotRecord* r = find_knot(t, "3_1");
  REQUIRE(r != nullptr);
  CHECK(r->pd.n() == 3);
  CHECK(std::abs(*r->signature) == 2);
  CHECK(*r->alternating);
  CHECK(find_knot(t, "no_such_knot") == nullptr);

  const KnotRecord* f8 = find_knot(t, "4_1");
  REQUIRE(f8 != nullptr);
  CHECK(*f8->signature == 0);

  const KnotRecord* t34 = find_knot(t, "8_19");
  REQUIRE(t34 != nullptr);
  CHECK_FALSE(*t34->alternating);
  CHECK(std::abs(*t34->signature) == 6);
}

TEST_CASE("default_table_path honors the environment") {
  unsetenv("ODDKH_TABLE");
  CHECK(default_table_path("/fallback/knots.json") == "/fallback/knots.json");
  setenv("ODDKH_TABLE", "/env/override.json", 1);
  CHECK(default_table_path("/fallback/knots.json") == "/env/override.json");
  unsetenv("ODDKH_TABLE");
}

TEST_CASE("missing file is an error") {
  CHECK_THROWS_AS(load_table("/no/such/file.json"), PDError);
}
