#pragma once
// Bundled knot table: JSON array of {"name", "pd", "signature"?, "jones"?,
// "alternating"?} records.

#include <optional>
#include <string>
#include <vector>

#include "oddkh/pd.hpp"

namespace oddkh {

struct KnotRecord {
  std::string name;
  PDCode pd;
  std::optional<int> signature;
  std::optional<std::string> jones;
  std::optional<bool> alternating;
};

std::vector<KnotRecord> load_table(const std::string& path);

const KnotRecord* find_knot(const std::vector<KnotRecord>& table, const std::string& name);

// $ODDKH_TABLE if set, else the compiled-in default (fallback arg).
std::string default_table_path(const std::string& fallback);

}  // namespace oddkh
