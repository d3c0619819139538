#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "hopf/interval.hpp"

namespace hopf {

// Interval schema:
//   { "elements": ["0","a","b","1"],
//     "covers":   [["0","a"], ["0","b"], ["a","1"], ["b","1"]],
//     "colors":   { "a": 1, "b": [1, 2] } }        // optional
// "colors" values may be a single integer or an array (a multiset).
Interval interval_from_json(const nlohmann::json& j);
nlohmann::json interval_to_json(const Interval& P);

// Same schema, but without the bottom/top requirement (ideal-lattice input).
struct RawPoset {
  int n = 0;
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> names;
};
RawPoset poset_from_json(const nlohmann::json& j);

Interval interval_from_file(const std::string& path);
nlohmann::json json_from_file(const std::string& path);

}  // namespace hopf
