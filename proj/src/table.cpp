#include "oddkh/table.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

namespace oddkh {

std::vector<KnotRecord> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PDError("cannot open knot table: " + path);
  nlohmann::json j;
  in >> j;
  std::vector<KnotRecord> out;
  for (auto& rec : j) {
    KnotRecord k;
    k.name = rec.at("name").get<std::string>();
    std::vector<std::array<int, 4>> tuples;
    for (auto& t : rec.at("pd")) tuples.push_back({t.at(0), t.at(1), t.at(2), t.at(3)});
    k.pd = pd_from_tuples(tuples, rec.value("loops", 0));
    if (rec.contains("signature")) k.signature = rec["signature"].get<int>();
    if (rec.contains("jones")) k.jones = rec["jones"].get<std::string>();
    if (rec.contains("alternating")) k.alternating = rec["alternating"].get<bool>();
    out.push_back(std::move(k));
  }
  return out;
}

const KnotRecord* find_knot(const std::vector<KnotRecord>& table, const std::string& name) {
  for (auto& k : table)
    if (k.name == name) return &k;
  return nullptr;
}

std::string default_table_path(const std::string& fallback) {
  const char* env = std::getenv("ODDKH_TABLE");
  return env && *env ? env : fallback;
}

}  // namespace oddkh
