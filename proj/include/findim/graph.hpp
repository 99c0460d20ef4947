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
// Simple connected graphs with positive edge lengths, the shortest-path
// metric they induce, and the exact clique cover number (= minimum proper
// colouring of the complement) that drives the unit-length fast path.

#ifndef FINDIM_GRAPH_HPP
#define FINDIM_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "findim/dimension.hpp"
#include "findim/metric_space.hpp"

namespace findim {

class Graph {
 public:
  struct Edge {
    int u, v;       // u < v
    double length;  // > 0
  };

  // Validates: unique nonempty names, no loops or multi-edges, positive
  // lengths, connected. Edges are normalised (u < v) and sorted by indices.
  static Graph make(std::vector<std::string> vertices,
                    std::vector<std::tuple<int, int, double>> edges) {
    Graph g;
    const int n = static_cast<int>(vertices.size());
    if (n == 0) throw ParseError("graph needs at least one vertex");
    {
      std::unordered_map<std::string, int> seen;
      for (int i = 0; i < n; ++i) {
        if (vertices[i].empty()) throw ParseError("empty vertex name");
        if (!seen.emplace(vertices[i], i).second)
          throw ParseError("duplicate vertex name: " + vertices[i]);
      }
    }
    g.vertices_ = std::move(vertices);
    g.adj_.assign(n, {});
    std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
    for (auto& [a, b, len] : edges) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw ParseError("edge endpoint out of range");
      if (a == b) throw ParseError("loop at vertex " + g.vertices_[a]);
      int u = std::min(a, b), v = std::max(a, b);
      if (has[u][v])
        throw ParseError("duplicate edge {" + g.vertices_[u] + ", " +
                         g.vertices_[v] + "}");
      if (!(len > 0))
        throw ParseError("edge {" + g.vertices_[u] + ", " + g.vertices_[v] +
                         "} must have positive length");
      has[u][v] = 1;
      g.edges_.push_back({u, v, len});
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

    // Connectivity; report the component of vertex 0 as witness.
    std::vector<char> vis(n, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.adj_[v])
        if (!vis[w]) {
          vis[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != n) {
      std::string comp;
      for (int i = 0; i < n; ++i)
        if (vis[i]) comp += (comp.empty() ? "" : ", ") + g.vertices_[i];
      throw Disconnected(comp);
    }
    return g;
  }

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::string& vertex(int i) const { return vertices_[i]; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }
  bool unit_lengths() const {
    for (const Edge& e : edges_)
      if (e.length != 1.0) return false;
    return true;
  }
  bool complete() const {
    return static_cast<long>(edges_.size()) * 2 ==
           static_cast<long>(size()) * (size() - 1);
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// All-pairs shortest paths under the edge lengths (Floyd-Warshall). The
// output is a metric by construction and revalidates with epsilon = 0.
inline FiniteMetricSpace metric_space_of(const Graph& g,
                                         double epsilon = 0.0) {
  const int n = g.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0.0;
  for (const Graph::Edge& e : g.edges())
    d[e.u][e.v] = d[e.v][e.u] = std::min(d[e.u][e.v], e.length);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (d[i][k] == inf) continue;
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    }
  return FiniteMetricSpace::validated(g.vertices(), std::move(d), epsilon);
}

struct CliqueCover {
  std::vector<std::vector<int>> cliques;  // sorted parts, sorted list
  int size() const { return static_cast<int>(cliques.size()); }
};

struct CliqueCoverParams {
  int cap = 40;
};

namespace detail {

// Word-array bitset; clique cover instances can exceed 64 vertices.
class Bits {
 public:
  explicit Bits(int n = 0) : n_(n), w_((n + 63) / 64, 0) {}
  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  bool intersects(const Bits& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
  }

 private:
  int n_;
  std::vector<std::uint64_t> w_;
};

// Exact maximum clique size for n <= 64 via Bron-Kerbosch on word masks.
inline int max_clique_size64(const std::vector<std::uint64_t>& adj) {
  int best = 1;
  auto bk = [&](auto&& self, std::uint64_t r_count, std::uint64_t p,
                std::uint64_t q) -> void {
    if (p == 0 && q == 0) {
      best = std::max(best, static_cast<int>(r_count));
      return;
    }
    if (static_cast<int>(r_count) + std::popcount(p) <= best) return;
    std::uint64_t pq = p | q;
    int pivot = std::countr_zero(pq), deg = -1;
    for (std::uint64_t m = pq; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int dv = std::popcount(p & adj[v]);
      if (dv > deg) { deg = dv; pivot = v; }
    }
    for (std::uint64_t m = p & ~adj[pivot]; m; m &= m - 1) {
      int v = std::countr_zero(m);
      std::uint64_t bit = std::uint64_t(1) << v;
      self(self, r_count + 1, p & adj[v], q & adj[v]);
      p &= ~bit;
      q |= bit;
    }
  };
  int n = static_cast<int>(adj.size());
  std::uint64_t all = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
  bk(bk, 0, all, 0);
  return best;
}

// Greedy independent set (min degree first); any independent set is a valid
// lower bound for the clique cover number.
inline int greedy_independent_set(const Graph& g) {
  const int n = g.size();
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int size = 0, left = n;
  while (left > 0) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && (best < 0 || deg[v] < deg[best])) best = v;
    ++size;
    alive[best] = 0;
    --left;
    for (int w : g.neighbors(best))
      if (alive[w]) {
        alive[w] = 0;
        --left;
        for (int u : g.neighbors(w))
          if (alive[u]) --deg[u];
      }
  }
  return size;
}

// Greedy cover by maximal cliques in vertex order; exact on paths and stars,
// which keeps the trees produced by the density constructions cheap.
inline std::vector<std::vector<int>> greedy_clique_cover(const Graph& g) {
  const int n = g.size();
  std::vector<char> covered(n, 0);
  std::vector<std::vector<int>> cliques;
  for (int v = 0; v < n; ++v) {
    if (covered[v]) continue;
    std::vector<int> clique{v};
    covered[v] = 1;
    for (int w : g.neighbors(v)) {
      if (covered[w]) continue;
      bool ok = true;
      for (int u : clique)
        if (u != v && !g.adjacent(u, w)) { ok = false; break; }
      if (ok) {
        clique.push_back(w);
        covered[w] = 1;
      }
    }
    std::sort(clique.begin(), clique.end());
    cliques.push_back(std::move(clique));
  }
  return cliques;
}

// DSATUR greedy colouring of the complement graph; classes are cliques of g.
inline std::vector<std::vector<int>> dsatur_complement(const Graph& g) {
  const int n = g.size();
  std::vector<int> color(n, -1);
  std::vector<std::vector<char>> sat(n);  // sat[v][c]: complement nbr has c
  std::vector<int> satcnt(n, 0), compdeg(n);
  for (int v = 0; v < n; ++v) {
    sat[v].assign(n, 0);
    compdeg[v] = n - 1 - g.degree(v);
  }
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      if (pick < 0 || satcnt[v] > satcnt[pick] ||
          (satcnt[v] == satcnt[pick] && compdeg[v] > compdeg[pick]))
        pick = v;
    }
    int c = 0;
    while (c < n && sat[pick][c]) ++c;
    color[pick] = c;
    used = std::max(used, c + 1);
    for (int w = 0; w < n; ++w) {
      if (w == pick || g.adjacent(pick, w)) continue;  // complement nbrs
      if (!sat[w][c]) {
        sat[w][c] = 1;
        ++satcnt[w];
      }
    }
  }
  std::vector<std::vector<int>> classes(used);
  for (int v = 0; v < n; ++v) classes[color[v]].push_back(v);
  return classes;
}

inline void canonicalize(std::vector<std::vector<int>>& cliques) {
  for (auto& c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end());
}

}  // namespace detail

// Exact minimum clique cover, computed as a minimum proper colouring of the
// complement graph: DSATUR branch and bound seeded with two greedy covers,
// with lower bounds from a greedy independent set and from ceil(n/omega).
inline CliqueCover clique_cover_number(const Graph& g,
                                       const CliqueCoverParams& params = {}) {
  const int n = g.size();
  if (n > params.cap)
    throw InstanceTooLarge("clique_cover_number", n, params.cap);

  std::vector<std::vector<int>> ub_cover = detail::dsatur_complement(g);
  {
    auto pair_cover = detail::greedy_clique_cover(g);
    if (pair_cover.size() < ub_cover.size()) ub_cover = std::move(pair_cover);
  }

  int lb = detail::greedy_independent_set(g);
  if (n <= 64) {
    std::vector<std::uint64_t> adj(n, 0);
    for (const Graph::Edge& e : g.edges()) {
      adj[e.u] |= std::uint64_t(1) << e.v;
      adj[e.v] |= std::uint64_t(1) << e.u;
    }
    int omega = detail::max_clique_size64(adj);
    lb = std::max(lb, (n + omega - 1) / omega);
  }

  int best = static_cast<int>(ub_cover.size());
  if (lb < best) {
    // Branch and bound over complement colourings. Next vertex: maximum
    // saturation, then maximum complement degree, then lowest index.
    std::vector<int> color(n, -1);
    std::vector<detail::Bits> comp_adj;
    comp_adj.reserve(n);
    for (int v = 0; v < n; ++v) {
      detail::Bits b(n);
      for (int w = 0; w < n; ++w)
        if (w != v && !g.adjacent(v, w)) b.set(w);
      comp_adj.push_back(b);
    }
    std::vector<detail::Bits> classes;  // members per colour
    std::vector<int> best_color;

    auto dfs = [&](auto&& self, int colored, int used) -> void {
      if (used >= best) return;
      if (colored == n) {
        best = used;
        best_color = color;
        return;
      }
      int pick = -1, pick_sat = -1, pick_deg = -1;
      for (int v = 0; v < n; ++v) {
        if (color[v] >= 0) continue;
        int s = 0;
        for (int c = 0; c < used; ++c)
          if (classes[c].intersects(comp_adj[v])) ++s;
        int d = comp_adj[v].count();
        if (s > pick_sat || (s == pick_sat && d > pick_deg)) {
          pick = v;
          pick_sat = s;
          pick_deg = d;
        }
      }
      for (int c = 0; c < used && c < best; ++c) {
        if (classes[c].intersects(comp_adj[pick])) continue;
        color[pick] = c;
        classes[c].set(pick);
        self(self, colored + 1, used);
        classes[c].reset(pick);
        color[pick] = -1;
        if (best <= lb) return;
      }
      if (used + 1 < best) {
        if (static_cast<int>(classes.size()) <= used) classes.emplace_back(n);
        color[pick] = used;
        classes[used].set(pick);
        self(self, colored + 1, used + 1);
        classes[used].reset(pick);
        color[pick] = -1;
      }
    };
    dfs(dfs, 0, 0);

    if (!best_color.empty()) {
      std::vector<std::vector<int>> classes_out(best);
      for (int v = 0; v < n; ++v) classes_out[best_color[v]].push_back(v);
      ub_cover = std::move(classes_out);
    }
  }

  detail::canonicalize(ub_cover);
  CliqueCover cover;
  cover.cliques = std::move(ub_cover);
  return cover;
}

// N(G) for unit lengths: equals the clique cover number. The covering view
// needs two points per part, so the one-vertex graph is rejected.
inline int covering_number(const Graph& g,
                           const CliqueCoverParams& params = {}) {
  if (!g.unit_lengths()) throw NonUnitLengths("covering_number");
  if (g.size() < 2) throw SinglePoint("covering_number");
  return clique_cover_number(g, params).size();
}

namespace detail {

// Converts a clique cover into a 2-covering of diameter 1: singleton cliques
// are padded with their lowest-index neighbour.
inline Covering clique_cover_witness(const Graph& g,
                                     const FiniteMetricSpace& space,
                                     const CliqueCover& cover) {
  std::vector<std::vector<int>> parts;
  for (std::vector<int> clique : cover.cliques) {
    if (clique.size() == 1) clique.push_back(g.neighbors(clique[0]).front());
    std::sort(clique.begin(), clique.end());
    parts.push_back(std::move(clique));
  }
  std::sort(parts.begin(), parts.end());
  return make_covering(space, std::move(parts));
}

}  // namespace detail

// Finite dimension of a unit-length graph: ln(theta) / ln(Delta), with the
// one-vertex graph at zero and complete graphs infinite.
inline DimensionResult dim_f_graph(const Graph& g,
                                   const CliqueCoverParams& params = {}) {
  if (!g.unit_lengths()) throw NonUnitLengths("dim_f_graph");
  DimensionResult res;
  if (g.size() == 1) {
    res.kind = DimKind::Zero;
    return res;
  }
  FiniteMetricSpace space = metric_space_of(g);
  const MetricProfile prof = profile(space);
  res.profile = prof;
  if (g.complete()) {
    res.kind = DimKind::Infinite;
    return res;
  }
  CliqueCover cover = clique_cover_number(g, params);
  const int theta = cover.size();
  res.kind = DimKind::Finite;
  res.value = std::log(double(theta)) / std::log(prof.big_delta);
  res.covering_count = theta;
  res.witness = detail::clique_cover_witness(g, space, cover);
  res.achieved_hs = double(theta);
  return res;
}

// All labelled connected graphs on n vertices, ascending by edge bitmask.
// Edge k corresponds to the k-th pair in (0,1),(0,2),(1,2),(0,3),... order.
inline void for_each_connected_graph(
    int n, const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 7) throw InstanceTooLarge("for_each_connected_graph", n, 7);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  const std::uint32_t total = std::uint32_t(1) << pairs.size();
  std::vector<int> parent(n);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int comps = n;
    for (size_t k = 0; k < pairs.size(); ++k)
      if (mask & (std::uint32_t(1) << k)) {
        int a = find(pairs[k].first), b = find(pairs[k].second);
        if (a != b) {
          parent[a] = b;
          --comps;
        }
      }
    if (comps != 1) continue;
    std::vector<std::tuple<int, int, double>> edges;
    for (size_t k = 0; k < pairs.size(); ++k)
      if (mask & (std::uint32_t(1) << k))
        edges.emplace_back(pairs[k].first, pairs[k].second, 1.0);
    fn(Graph::make(names, std::move(edges)));
  }
}

// All labelled trees on n vertices via Pruefer sequences, in counting order.
inline void for_each_labeled_tree(int n,
                                  const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 9) throw InstanceTooLarge("for_each_labeled_tree", n, 9);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  if (n == 1) {
    fn(Graph::make(names, {}));
    return;
  }
  if (n == 2) {
    fn(Graph::make(names, {{0, 1, 1.0}}));
    return;
  }
  std::vector<int> seq(n - 2, 0);
  std::vector<int> degree(n);
  while (true) {
    std::fill(degree.begin(), degree.end(), 1);
    for (int v : seq) ++degree[v];
    std::vector<std::tuple<int, int, double>> edges;
    std::vector<int> deg = degree;
    // Standard decode: repeatedly join the smallest leaf to the next symbol.
    std::vector<char> used(n, 0);
    for (int v : seq) {
      int leaf = -1;
      for (int u = 0; u < n; ++u)
        if (deg[u] == 1 && !used[u]) {
          leaf = u;
          break;
        }
      edges.emplace_back(std::min(leaf, v), std::max(leaf, v), 1.0);
      used[leaf] = 1;
      --deg[v];
    }
    int a = -1, b = -1;
    for (int u = 0; u < n; ++u)
      if (!used[u] && deg[u] == 1) (a < 0 ? a : b) = u;
    edges.emplace_back(a, b, 1.0);
    fn(Graph::make(names, std::move(edges)));

    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
}

}  // namespace findim

#endif  // FINDIM_GRAPH_HPP
