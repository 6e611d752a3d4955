// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dcg/scenario.hpp"

#include <fstream>
#include <sstream>

#include "dcg/errors.hpp"
#include "dcg/rng.hpp"

namespace dcg {

using nlohmann::json;

Partition Scenario::partition() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(agents.size());
  for (const auto& a : agents) sizes.push_back(a.allowed.size());
  return Partition(sizes);
}

CoverageOracle Scenario::oracle() const {
  std::vector<std::vector<std::size_t>> allowed;
  std::vector<double> radii;
  for (const auto& a : agents) {
    allowed.push_back(a.allowed);
    radii.push_back(a.radius);
  }
  return CoverageOracle(interest_points, placements, allowed, radii);
}

std::vector<Point> grid_placements(double width, double height, std::size_t cols, std::size_t rows) {
  std::vector<Point> out;
  out.reserve(cols * rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      out.push_back({(static_cast<double>(c) + 0.5) * width / static_cast<double>(cols),
                     (static_cast<double>(r) + 0.5) * height / static_cast<double>(rows)});
    }
  }
  return out;
}

std::vector<Point> uniform_points(double width, double height, std::size_t count, std::uint64_t seed) {
  Rng rng = Rng::stream(seed, 0, StreamPurpose::scenario);
  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double x = rng.uniform() * width;
    const double y = rng.uniform() * height;
    out.push_back({x, y});
  }
  return out;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError("scenario " + where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(where, std::string("missing key \"") + key + "\"");
  return obj.at(key);
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number, got " + v.dump());
  return v.get<double>();
}

std::size_t count_value(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    fail(where, "expected a non-negative integer, got " + v.dump());
  }
  return v.get<std::size_t>();
}

Point point(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) fail(where, "expected [x, y], got " + v.dump());
  return {number(v[0], where + "/0"), number(v[1], where + "/1")};
}

std::vector<Point> point_list(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected a list of [x, y] pairs");
  std::vector<Point> out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(point(v[k], where + "/" + std::to_string(k)));
  return out;
}

}  // namespace

Scenario scenario_from_json(const json& doc) {
  if (!doc.is_object()) fail("/", "top level must be an object");
  Scenario s;

  const json& field = require(doc, "field", "/");
  if (!field.is_array() || field.size() != 2) fail("/field", "expected [width, height]");
  s.width = number(field[0], "/field/0");
  s.height = number(field[1], "/field/1");
  if (s.width <= 0 || s.height <= 0) fail("/field", "dimensions must be positive");

  if (doc.contains("placements")) {
    s.placements = point_list(doc.at("placements"), "/placements");
  } else {
    const json& grid = require(doc, "grid", "/");
    if (!grid.is_array() || grid.size() != 2) fail("/grid", "expected [cols, rows]");
    s.placements = grid_placements(s.width, s.height, count_value(grid[0], "/grid/0"),
                                   count_value(grid[1], "/grid/1"));
  }

  const json& points = require(doc, "interest_points", "/");
  if (points.is_object()) {
    const auto count = count_value(require(points, "count", "/interest_points"), "/interest_points/count");
    const auto seed = count_value(require(points, "seed", "/interest_points"), "/interest_points/seed");
    s.interest_points = uniform_points(s.width, s.height, count, seed);
  } else {
    s.interest_points = point_list(points, "/interest_points");
  }

  const json& agents = require(doc, "agents", "/");
  if (!agents.is_array() || agents.empty()) fail("/agents", "expected a non-empty list");
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string where = "/agents/" + std::to_string(i);
    AgentSpec a;
    a.radius = number(require(agents[i], "radius", where), where + "/radius");
    if (a.radius < 0) fail(where + "/radius", "must be non-negative");
    const json& allowed = require(agents[i], "allowed", where);
    if (allowed.is_string() && allowed.get<std::string>() == "all") {
      for (std::size_t b = 0; b < s.placements.size(); ++b) a.allowed.push_back(b);
    } else if (allowed.is_array()) {
      for (std::size_t k = 0; k < allowed.size(); ++k) {
        const auto b = count_value(allowed[k], where + "/allowed/" + std::to_string(k));
        if (b >= s.placements.size()) {
          fail(where + "/allowed/" + std::to_string(k),
               "placement " + std::to_string(b) + " does not exist");
        }
        a.allowed.push_back(b);
      }
    } else {
      fail(where + "/allowed", "expected a list of placement indices or \"all\"");
    }
    if (a.allowed.empty()) fail(where + "/allowed", "agent has no allowed placement");
    s.agents.push_back(std::move(a));
  }

  const json& graph = require(doc, "graph", "/");
  const json& edges = require(graph, "edges", "/graph");
  if (!edges.is_array()) fail("/graph/edges", "expected a list of [i, j] pairs");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string where = "/graph/edges/" + std::to_string(k);
    if (!edges[k].is_array() || edges[k].size() != 2) fail(where, "expected [i, j]");
    const auto i = count_value(edges[k][0], where + "/0");
    const auto j = count_value(edges[k][1], where + "/1");
    s.edges.emplace_back(i, j);
  }
  return s;
}

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream msg;
    msg << "scenario line " << line << ", column " << column << ": " << e.what();
    throw ConfigError(msg.str());
  }
  return scenario_from_json(doc);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scenario(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

json scenario_to_json(const Scenario& s) {
  json doc;
  doc["field"] = {s.width, s.height};
  json placements = json::array();
  for (const auto& p : s.placements) placements.push_back({p.x, p.y});
  doc["placements"] = std::move(placements);
  json points = json::array();
  for (const auto& p : s.interest_points) points.push_back({p.x, p.y});
  doc["interest_points"] = std::move(points);
  json agents = json::array();
  for (const auto& a : s.agents) agents.push_back({{"allowed", a.allowed}, {"radius", a.radius}});
  doc["agents"] = std::move(agents);
  json edges = json::array();
  for (const auto& [i, j] : s.edges) edges.push_back({i, j});
  doc["graph"] = {{"edges", std::move(edges)}};
  return doc;
}

}  // namespace dcg
