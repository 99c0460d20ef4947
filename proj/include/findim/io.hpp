// Copyright 2026 The findim Authors
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
//
// File formats.
//   Graphs:   edge-list text, one "u v [length]" per line, '#' comments,
//             a lone token declares an isolated vertex, missing length = 1;
//             or JSON {"vertices": [...], "edges": [["u","v",len?], ...]}.
//   Matrices: CSV, n rows of n comma-separated reals;
//             or JSON {"points": [names], "dist": [[...]]}.
// Edge output order is lexicographic by endpoint names.

#ifndef FINDIM_IO_HPP
#define FINDIM_IO_HPP

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "findim/graph.hpp"
#include "findim/metric_space.hpp"

namespace findim {

namespace detail {

inline double parse_real(const std::string& tok, const std::string& what) {
  try {
    size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("cannot parse " + what + ": '" + tok + "'");
  }
}

inline std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline Graph read_graph_edgelist(std::istream& in) {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  auto intern = [&](const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(names.size());
    names.push_back(name);
    index.emplace(name, id);
    return id;
  };
  std::vector<std::tuple<int, int, double>> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream ss(line);
    std::string u, v, len;
    if (!(ss >> u)) continue;  // blank line
    if (!(ss >> v)) {
      intern(u);  // isolated vertex declaration
      continue;
    }
    double length = 1.0;
    if (ss >> len) length = detail::parse_real(len, "edge length");
    std::string extra;
    if (ss >> extra) throw ParseError("trailing tokens on edge line: " + line);
    int iu = intern(u);
    int iv = intern(v);
    edges.emplace_back(iu, iv, length);
  }
  if (names.empty()) throw ParseError("empty graph file");
  return Graph::make(std::move(names), std::move(edges));
}

inline void write_graph_edgelist(std::ostream& out, const Graph& g) {
  if (g.edges().empty()) {
    out << g.vertex(0) << "\n";
    return;
  }
  std::vector<std::tuple<std::string, std::string, double>> rows;
  for (const Graph::Edge& e : g.edges()) {
    std::string a = g.vertex(e.u), b = g.vertex(e.v);
    if (b < a) std::swap(a, b);
    rows.emplace_back(std::move(a), std::move(b), e.length);
  }
  std::sort(rows.begin(), rows.end());
  for (const auto& [a, b, len] : rows) {
    out << a << " " << b;
    if (len != 1.0) out << " " << detail::format_real(len);
    out << "\n";
  }
}

inline Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw ParseError("graph JSON needs 'vertices' and 'edges'");
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  for (const auto& v : j.at("vertices")) {
    std::string name = v.get<std::string>();
    if (!index.emplace(name, static_cast<int>(names.size())).second)
      throw ParseError("duplicate vertex name: " + name);
    names.push_back(std::move(name));
  }
  std::vector<std::tuple<int, int, double>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3)
      throw ParseError("graph JSON edge must be [u, v] or [u, v, length]");
    auto lookup = [&](const std::string& name) {
      auto it = index.find(name);
      if (it == index.end()) throw ParseError("unknown vertex: " + name);
      return it->second;
    };
    int u = lookup(e.at(0).get<std::string>());
    int v = lookup(e.at(1).get<std::string>());
    double len = e.size() == 3 ? e.at(2).get<double>() : 1.0;
    edges.emplace_back(u, v, len);
  }
  return Graph::make(std::move(names), std::move(edges));
}

inline nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertices();
  auto edges = nlohmann::ordered_json::array();
  std::vector<std::tuple<std::string, std::string, double>> rows;
  for (const Graph::Edge& e : g.edges()) {
    std::string a = g.vertex(e.u), b = g.vertex(e.v);
    if (b < a) std::swap(a, b);
    rows.emplace_back(std::move(a), std::move(b), e.length);
  }
  std::sort(rows.begin(), rows.end());
  for (const auto& [a, b, len] : rows)
    edges.push_back(nlohmann::ordered_json::array({a, b, len}));
  j["edges"] = std::move(edges);
  return j;
}

inline FiniteMetricSpace read_matrix_csv(std::istream& in,
                                         double epsilon = kDefaultEpsilon) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
      row.push_back(detail::parse_real(cell, "matrix entry"));
    rows.push_back(std::move(row));
  }
  return FiniteMetricSpace::validated({}, std::move(rows), epsilon);
}

inline FiniteMetricSpace matrix_from_json(const nlohmann::json& j,
                                          double epsilon = kDefaultEpsilon) {
  if (!j.is_object() || !j.contains("dist"))
    throw ParseError("matrix JSON needs 'dist'");
  std::vector<std::string> points;
  if (j.contains("points"))
    for (const auto& p : j.at("points")) points.push_back(p.get<std::string>());
  std::vector<std::vector<double>> rows;
  for (const auto& r : j.at("dist")) {
    std::vector<double> row;
    for (const auto& v : r) row.push_back(v.get<double>());
    rows.push_back(std::move(row));
  }
  return FiniteMetricSpace::validated(std::move(points), std::move(rows),
                                      epsilon);
}

inline nlohmann::ordered_json matrix_to_json(const FiniteMetricSpace& x) {
  nlohmann::ordered_json j;
  j["points"] = x.points();
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < x.size(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int k = 0; k < x.size(); ++k) row.push_back(x.dist(i, k));
    rows.push_back(std::move(row));
  }
  j["dist"] = std::move(rows);
  return j;
}

// Sniffs the payload: '{' starts JSON (graph or matrix told apart by keys),
// a comma in the first data line means CSV, anything else is an edge list.
enum class PayloadKind { GraphEdgeList, GraphJson, MatrixCsv, MatrixJson };

inline PayloadKind sniff_payload(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') {
      auto j = nlohmann::json::parse(text);
      if (j.contains("dist")) return PayloadKind::MatrixJson;
      return PayloadKind::GraphJson;
    }
    break;
  }
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    return line.find(',') != std::string::npos ? PayloadKind::MatrixCsv
                                               : PayloadKind::GraphEdgeList;
  }
  throw ParseError("empty input");
}

}  // namespace findim

#endif  // FINDIM_IO_HPP
