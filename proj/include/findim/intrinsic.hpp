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
// Arcs, maximal geodesics and the intrinsic-space test. A pair with no
// strict intermediate point is a forced segment; the graph of forced
// segments carries the same shortest-path metric as the input space, and
// the space is intrinsic exactly when that graph is not complete.

#ifndef FINDIM_INTRINSIC_HPP
#define FINDIM_INTRINSIC_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "findim/graph.hpp"
#include "findim/metric_space.hpp"

namespace findim {

// A point sequence with its segment count and length in the ambient space.
struct Arc {
  std::vector<int> points;  // x_0 ... x_k, consecutive points distinct
  double length = 0.0;      // sum of consecutive distances
  int count() const { return static_cast<int>(points.size()) - 1; }
};

// One maximal geodesic per unordered point pair.
struct GeodesicFamily {
  std::map<std::pair<int, int>, Arc> geodesics;  // key (min, max)
};

namespace detail {

inline bool strictly_between(const FiniteMetricSpace& x, int a, int z, int b) {
  return z != a && z != b &&
         approx_eq(x.dist(a, z) + x.dist(z, b), x.dist(a, b), x.epsilon());
}

}  // namespace detail

// Graph on the points of F whose edges are the pairs with no strict
// intermediate point, weighted by the distance. Its shortest-path metric
// reproduces d(F): an edge realises its distance directly, and a non-edge
// splits at a strict midpoint, both of whose legs are strictly shorter, so
// induction over sorted distances closes the gap.
inline Graph segment_graph(const FiniteMetricSpace& f) {
  const int n = f.size();
  if (n < 2) throw SinglePoint("segment_graph");
  std::vector<std::tuple<int, int, double>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool forced = true;
      for (int z = 0; z < n && forced; ++z)
        if (detail::strictly_between(f, a, z, b)) forced = false;
      if (forced) edges.emplace_back(a, b, f.dist(a, b));
    }
  Graph g = Graph::make(f.points(), std::move(edges));  // throws if split

  FiniteMetricSpace derived = metric_space_of(g, f.epsilon());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!approx_eq(derived.dist(a, b), f.dist(a, b),
                     std::max(f.epsilon(), f.epsilon() * n)))
        throw InternalError("segment graph metric deviates at {" +
                            f.point(a) + ", " + f.point(b) + "}");
  return g;
}

// A geodesic from x to y of maximal segment count: longest path in the DAG
// of strict betweenness ordered by d(x, .). Ties broken by lowest index.
inline Arc maximal_geodesic(const FiniteMetricSpace& f, int x, int y) {
  if (x == y) throw ParseError("maximal_geodesic requires distinct endpoints");
  const int n = f.size();
  std::vector<int> nodes;
  for (int z = 0; z < n; ++z)
    if (z == x || z == y || detail::strictly_between(f, x, z, y))
      nodes.push_back(z);
  std::sort(nodes.begin(), nodes.end(), [&](int a, int b) {
    double da = f.dist(x, a), db = f.dist(x, b);
    if (da != db) return da < db;
    return a < b;
  });
  const int m = static_cast<int>(nodes.size());
  std::vector<int> longest(m, -1), parent(m, -1);
  int src = -1;
  for (int i = 0; i < m; ++i)
    if (nodes[i] == x) src = i;
  longest[src] = 0;
  for (int i = 0; i < m; ++i) {
    if (longest[i] < 0) continue;
    for (int j = 0; j < m; ++j) {
      int u = nodes[i], v = nodes[j];
      if (v == u || !approx_lt(f.dist(x, u), f.dist(x, v), f.epsilon()))
        continue;
      if (!approx_eq(f.dist(x, u) + f.dist(u, v), f.dist(x, v), f.epsilon()))
        continue;
      if (longest[i] + 1 > longest[j]) {
        longest[j] = longest[i] + 1;
        parent[j] = i;
      }
    }
  }
  int dst = -1;
  for (int i = 0; i < m; ++i)
    if (nodes[i] == y) dst = i;
  if (longest[dst] < 1)
    throw InternalError("no geodesic found between distinct points");
  Arc arc;
  for (int i = dst; i >= 0; i = parent[i]) {
    arc.points.push_back(nodes[i]);
    if (parent[i] < 0) break;
  }
  std::reverse(arc.points.begin(), arc.points.end());
  for (size_t i = 1; i < arc.points.size(); ++i)
    arc.length += f.dist(arc.points[i - 1], arc.points[i]);
  return arc;
}

struct IntrinsicVerdict {
  bool intrinsic = false;
  std::optional<Graph> segment_graph;  // present when intrinsic
  GeodesicFamily family;               // canonical maximal geodesics
};

// A space is intrinsic iff some chosen family of maximal geodesics has an
// arc of count >= 2; the canonical family realises the maximum count per
// pair, so this reduces to the segment graph not being complete. Two-point
// spaces only ever admit count-1 families and are never intrinsic.
inline IntrinsicVerdict is_intrinsic(const FiniteMetricSpace& f) {
  const int n = f.size();
  if (n < 2) throw SinglePoint("is_intrinsic");
  Graph g = segment_graph(f);
  IntrinsicVerdict verdict;
  int max_count = 1;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Arc arc = maximal_geodesic(f, a, b);
      max_count = std::max(max_count, arc.count());
      verdict.family.geodesics.emplace(std::make_pair(a, b), std::move(arc));
    }
  verdict.intrinsic = !g.complete();
  if (verdict.intrinsic != (max_count >= 2))
    throw InternalError("segment graph and geodesic counts disagree");
  if (verdict.intrinsic) verdict.segment_graph = std::move(g);
  return verdict;
}

// G(F, family): vertices are the points, edges the count-1 members of the
// family, lengths the distances. Validates the family first: one arc per
// pair, geodesic, of maximal count; the result reproduces d(F).
inline Graph representing_graph(const FiniteMetricSpace& f,
                                const GeodesicFamily& family) {
  const int n = f.size();
  if (n < 2) throw SinglePoint("representing_graph");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!family.geodesics.count({a, b}))
        throw FamilyInvalid(f.point(a), f.point(b), "missing arc");
  std::vector<std::tuple<int, int, double>> edges;
  for (const auto& [pair, arc] : family.geodesics) {
    auto [a, b] = pair;
    if (a < 0 || b >= n || a >= b)
      throw FamilyInvalid(std::to_string(a), std::to_string(b), "bad pair");
    if (arc.points.size() < 2 || arc.points.front() != a ||
        arc.points.back() != b)
      throw FamilyInvalid(f.point(a), f.point(b),
                          "arc endpoints do not match the pair");
    double len = 0.0;
    for (size_t i = 1; i < arc.points.size(); ++i) {
      if (arc.points[i] == arc.points[i - 1])
        throw FamilyInvalid(f.point(a), f.point(b),
                            "consecutive arc points coincide");
      len += f.dist(arc.points[i - 1], arc.points[i]);
    }
    if (!approx_eq(len, f.dist(a, b), f.epsilon()))
      throw FamilyInvalid(f.point(a), f.point(b), "arc is not a geodesic");
    if (arc.count() != maximal_geodesic(f, a, b).count())
      throw FamilyInvalid(f.point(a), f.point(b),
                          "arc count is not maximal");
    if (arc.count() == 1) edges.emplace_back(a, b, f.dist(a, b));
  }
  Graph g = Graph::make(f.points(), std::move(edges));
  FiniteMetricSpace derived = metric_space_of(g, f.epsilon());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!approx_eq(derived.dist(a, b), f.dist(a, b),
                     std::max(f.epsilon(), f.epsilon() * n)))
        throw InternalError("representing graph is not isometric to the space");
  return g;
}

}  // namespace findim

#endif  // FINDIM_INTRINSIC_HPP
