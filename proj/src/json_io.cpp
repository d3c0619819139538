#include "hopf/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

struct ParsedPoset {
  RawPoset raw;
  std::vector<Color> colors;
};

Color parse_color(const nlohmann::json& v) {
  Color c;
  if (v.is_number_integer()) {
    c.push_back(v.get<int>());
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (!e.is_number_integer())
        throw InvalidInput("color entries must be integers");
      c.push_back(e.get<int>());
    }
  } else {
    throw InvalidInput("a color must be an integer or an array of integers");
  }
  for (int x : c)
    if (x < 1) throw InvalidInput("colors must be positive");
  std::sort(c.begin(), c.end());
  return c;
}

ParsedPoset parse_poset(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    throw InvalidInput("expected an object with an \"elements\" array");
  ParsedPoset p;
  std::map<std::string, int> index;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw InvalidInput("element names must be strings");
    std::string name = e.get<std::string>();
    if (index.count(name)) throw InvalidInput("duplicate element: " + name);
    index[name] = p.raw.n++;
    p.raw.names.push_back(name);
  }
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) throw InvalidInput("\"covers\" must be an array");
    for (const auto& c : j["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() ||
          !c[1].is_string())
        throw InvalidInput("each cover must be a pair of element names");
      auto a = index.find(c[0].get<std::string>());
      auto b = index.find(c[1].get<std::string>());
      if (a == index.end() || b == index.end())
        throw InvalidInput("cover references unknown element");
      p.raw.covers.emplace_back(a->second, b->second);
    }
  }
  p.colors.assign(p.raw.n, {});
  if (j.contains("colors")) {
    if (!j["colors"].is_object())
      throw InvalidInput("\"colors\" must be an object keyed by element");
    for (auto& [name, v] : j["colors"].items()) {
      auto it = index.find(name);
      if (it == index.end())
        throw InvalidInput("color for unknown element: " + name);
      p.colors[it->second] = parse_color(v);
    }
  }
  return p;
}

}  // namespace

Interval interval_from_json(const nlohmann::json& j) {
  ParsedPoset p = parse_poset(j);
  if (p.raw.n == 0) throw InvalidInput("an interval needs at least one element");
  if (!j.contains("relative_colors"))
    return Interval::from_covers(p.raw.n, p.raw.covers, std::move(p.colors),
                                 std::move(p.raw.names));
  // Contextual colors: entries are [x, z, color] with the color of z over x.
  std::map<std::string, int> index;
  for (int i = 0; i < p.raw.n; ++i) index[p.raw.names[i]] = i;
  int n = p.raw.n;
  std::vector<Color> rel(static_cast<size_t>(n) * n);
  if (!j["relative_colors"].is_array())
    throw InvalidInput("\"relative_colors\" must be an array of triples");
  for (const auto& e : j["relative_colors"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() ||
        !e[1].is_string())
      throw InvalidInput("each relative color must be [x, z, color]");
    auto x = index.find(e[0].get<std::string>());
    auto z = index.find(e[1].get<std::string>());
    if (x == index.end() || z == index.end())
      throw InvalidInput("relative color references unknown element");
    rel[x->second * n + z->second] = parse_color(e[2]);
  }
  Interval closure = Interval::from_covers(n, p.raw.covers);
  std::vector<std::vector<bool>> t(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t[a][b] = closure.leq(a, b);
      if (!t[a][b] && !rel[a * n + b].empty())
        throw InvalidInput("relative color for an unrelated pair");
    }
  return Interval::from_leq_table_rel(t, std::move(rel),
                                      std::move(p.raw.names));
}

RawPoset poset_from_json(const nlohmann::json& j) {
  return parse_poset(j).raw;
}

nlohmann::json interval_to_json(const Interval& P) {
  nlohmann::json j;
  j["elements"] = nlohmann::json::array();
  for (int x = 0; x < P.size(); ++x) j["elements"].push_back(P.name(x));
  j["covers"] = nlohmann::json::array();
  for (int x = 0; x < P.size(); ++x)
    for (int y = 0; y < P.size(); ++y)
      if (P.covers(x, y)) j["covers"].push_back({P.name(x), P.name(y)});
  if (P.has_relative_colors()) {
    nlohmann::json rel = nlohmann::json::array();
    for (int x = 0; x < P.size(); ++x)
      for (int z = 0; z < P.size(); ++z)
        if (P.leq(x, z) && !P.relative_color(x, z).empty())
          rel.push_back({P.name(x), P.name(z), P.relative_color(x, z)});
    j["relative_colors"] = rel;
    return j;
  }
  nlohmann::json colors = nlohmann::json::object();
  for (int x = 0; x < P.size(); ++x)
    if (!P.color(x).empty()) colors[P.name(x)] = P.color(x);
  if (!colors.empty()) j["colors"] = colors;
  return j;
}

nlohmann::json json_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("JSON parse error: ") + e.what());
  }
  return j;
}

Interval interval_from_file(const std::string& path) {
  return interval_from_json(json_from_file(path));
}

}  // namespace hopf
