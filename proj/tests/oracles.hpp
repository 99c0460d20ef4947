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
// Test-side oracles: independent brute-force routes for the quantities the
// library computes by smarter means, plus deterministic instance generators.
// None of these share code with the implementation paths they check.

#ifndef FINDIM_TESTS_ORACLES_HPP
#define FINDIM_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "findim/families.hpp"
#include "findim/graph.hpp"
#include "findim/intrinsic.hpp"
#include "findim/metric_space.hpp"

namespace findim::oracle {

// Deterministic RNG wrapper; avoids std distributions so sequences are
// identical across standard libraries.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int below(int n) { return static_cast<int>(gen() % std::uint64_t(n)); }
};

// Random metric with all distances in [1, 2): the triangle inequality holds
// automatically. Values are dyadic so downstream sums stay exact.
inline FiniteMetricSpace random_metric(int n, Rng& rng) {
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      m[i][j] = m[j][i] = 1.0 + rng.below(256) / 256.0;
  return validate_metric(std::move(m));
}

// Random connected graph: a random labelled tree plus random extra edges,
// with dyadic lengths in [1, 3].
inline Graph random_connected_graph(int n, Rng& rng, bool unit_lengths) {
  std::vector<std::tuple<int, int, double>> edges;
  std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
  auto length = [&]() {
    return unit_lengths ? 1.0 : 1.0 + rng.below(9) * 0.25;
  };
  for (int v = 1; v < n; ++v) {
    int u = rng.below(v);
    has[u][v] = 1;
    edges.emplace_back(u, v, length());
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!has[u][v] && rng.below(4) == 0) edges.emplace_back(u, v, length());
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return Graph::make(std::move(names), std::move(edges));
}

// nabla by exhaustion: the smallest distance value eta such that the union
// of every >=2-point subset of diameter <= eta covers the space. Does not
// use the nearest-neighbour formula.
inline double brute_force_nabla(const FiniteMetricSpace& x) {
  const int n = x.size();
  std::vector<double> values;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) values.push_back(x.dist(i, j));
  std::sort(values.begin(), values.end());
  for (double eta : values) {
    std::uint32_t covered = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
      if (std::popcount(mask) < 2) continue;
      std::vector<int> part;
      for (int v = 0; v < n; ++v)
        if (mask & (std::uint32_t(1) << v)) part.push_back(v);
      if (subset_diameter(x, part) <= eta) covered |= mask;
    }
    if (covered == (std::uint32_t(1) << n) - 1) return eta;
  }
  return values.back();
}

// Minimum clique cover by plain exhaustion over all cliques, n <= 8.
inline int brute_force_clique_cover(const Graph& g) {
  const int n = g.size();
  std::vector<std::uint32_t> cliques;
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
    bool clique = true;
    for (int u = 0; u < n && clique; ++u) {
      if (!(mask & (std::uint32_t(1) << u))) continue;
      for (int v = u + 1; v < n && clique; ++v)
        if ((mask & (std::uint32_t(1) << v)) && !g.adjacent(u, v))
          clique = false;
    }
    if (clique) cliques.push_back(mask);
  }
  std::vector<std::vector<int>> by_vertex(n);
  for (size_t c = 0; c < cliques.size(); ++c)
    for (int v = 0; v < n; ++v)
      if (cliques[c] & (std::uint32_t(1) << v))
        by_vertex[v].push_back(static_cast<int>(c));
  const std::uint32_t full = (std::uint32_t(1) << n) - 1;
  int best = n + 1;
  auto dfs = [&](auto&& self, std::uint32_t covered, int used) -> void {
    if (used >= best) return;
    if (covered == full) {
      best = used;
      return;
    }
    int v = std::countr_zero(~covered);
    for (int c : by_vertex[v]) self(self, covered | cliques[c], used + 1);
  };
  dfs(dfs, 0, 0);
  return best;
}

// Intrinsic test by the definition: enumerate every arc between every pair
// (all sequences of distinct intermediate points), find the maximal geodesic
// count per pair, and ask whether any pair reaches count >= 2. n <= 5.
inline bool brute_force_intrinsic(const FiniteMetricSpace& x) {
  const int n = x.size();
  int global_max = 1;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int best_count = 0;
      std::vector<int> arc{a};
      std::vector<char> used(n, 0);
      used[a] = 1;
      auto extend = [&](auto&& self, double len) -> void {
        int tail = arc.back();
        if (tail == b) {
          if (len == x.dist(a, b))
            best_count = std::max(best_count, int(arc.size()) - 1);
          return;
        }
        for (int z = 0; z < n; ++z) {
          if (used[z]) continue;
          used[z] = 1;
          arc.push_back(z);
          self(self, len + x.dist(tail, z));
          arc.pop_back();
          used[z] = 0;
        }
      };
      // also allow ending at b directly
      used[b] = 0;
      extend(extend, 0.0);
      global_max = std::max(global_max, best_count);
    }
  return global_max >= 2;
}

// Permutes the points of a space; profile and dimension must not change.
inline FiniteMetricSpace relabeled(const FiniteMetricSpace& x,
                                   const std::vector<int>& perm) {
  const int n = x.size();
  std::vector<std::string> names(n);
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    names[perm[i]] = x.point(i);
    for (int j = 0; j < n; ++j) m[perm[i]][perm[j]] = x.dist(i, j);
  }
  return FiniteMetricSpace::validated(std::move(names), std::move(m),
                                      x.epsilon());
}

inline FiniteMetricSpace scaled(const FiniteMetricSpace& x, double r) {
  const int n = x.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = r * x.dist(i, j);
  return FiniteMetricSpace::validated(x.points(), std::move(m), x.epsilon());
}

inline FiniteMetricSpace hop_space(const FamilySpec& spec) {
  return metric_space_of(generate(spec));
}

inline FamilySpec path_spec(int n) {
  FamilySpec s;
  s.kind = FamilyKind::Pn;
  s.n = n;
  return s;
}
inline FamilySpec star_spec(int n) {
  FamilySpec s;
  s.kind = FamilyKind::STn;
  s.n = n;
  return s;
}
inline FamilySpec complete_spec(int n) {
  FamilySpec s;
  s.kind = FamilyKind::Kn;
  s.n = n;
  return s;
}
inline FamilySpec cycle_spec(int n) {
  FamilySpec s;
  s.kind = FamilyKind::Cn;
  s.n = n;
  return s;
}
inline FamilySpec lpq_spec(int p, int q) {
  FamilySpec s;
  s.kind = FamilyKind::Lpq;
  s.p = p;
  s.q = q;
  return s;
}

// A path with explicit edge lengths.
inline Graph weighted_path(const std::vector<double>& lengths) {
  const int n = static_cast<int>(lengths.size()) + 1;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<std::tuple<int, int, double>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1, lengths[i]);
  return Graph::make(std::move(names), std::move(edges));
}

}  // namespace findim::oracle

#endif  // FINDIM_TESTS_ORACLES_HPP
