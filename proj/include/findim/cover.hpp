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
// Exact minimum-weight 2-cover machinery. A part of weight diam(U)^s may be
// replaced by any superset of equal diameter without increasing the cover
// weight, so the search space can be restricted to the inclusion-maximal
// sets of each attainable diameter value; those are exactly the maximal
// cliques of the distance-threshold graphs. The restriction is lossless for
// every s >= 0 and is verified against brute force in the test suite.

#ifndef FINDIM_COVER_HPP
#define FINDIM_COVER_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_set>
#include <vector>

#include "findim/metric_space.hpp"

namespace findim {

struct CoverParams {
  int dp_threshold = 16;  // subset DP up to this many points
  int exact_cap = 24;     // cap for the exact solver (branch and bound)

  // Candidate masks are 32-bit; nothing above 31 points is representable.
  int effective_cap() const { return std::min(exact_cap, 31); }
};

enum class CoverMode { Exact, Greedy };

// One candidate part: a point subset as a bitmask plus its exact diameter.
struct Candidate {
  std::uint32_t mask = 0;
  double diameter = 0.0;
};

// Inclusion-maximal candidate parts of diameter at most eta, one batch per
// distinct (epsilon-bucketed) distance value, deduplicated. Every pair at
// distance <= eta is inside at least one candidate.
struct CandidateFamily {
  std::vector<Candidate> sets;
  double eta = 0.0;
};

struct CoverSolution {
  Covering covering;
  double weight = 0.0;
  bool optimal = false;
};

namespace detail {

inline std::vector<int> mask_to_part(std::uint32_t mask) {
  std::vector<int> part;
  while (mask) {
    int b = std::countr_zero(mask);
    part.push_back(b);
    mask &= mask - 1;
  }
  return part;
}

// Distinct distance values <= eta, bucketed by epsilon-chaining; each bucket
// is represented by its largest member so that the threshold test stays an
// exact <=.
inline std::vector<double> distance_thresholds(const FiniteMetricSpace& x,
                                               double eta) {
  std::vector<double> values;
  const int n = x.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) values.push_back(x.dist(i, j));
  std::sort(values.begin(), values.end());
  std::vector<double> reps;
  size_t start = 0;
  for (size_t i = 1; i <= values.size(); ++i) {
    if (i == values.size() || values[i] - values[i - 1] > x.epsilon()) {
      reps.push_back(values[i - 1]);
      start = i;
    }
  }
  (void)start;
  while (!reps.empty() && !approx_le(reps.back(), eta, x.epsilon()))
    reps.pop_back();
  return reps;
}

// Bron-Kerbosch with pivoting over a threshold graph given as bitmask rows.
inline void maximal_cliques(const std::vector<std::uint32_t>& adj,
                            std::uint32_t r, std::uint32_t p, std::uint32_t q,
                            std::vector<std::uint32_t>& out) {
  if (p == 0 && q == 0) {
    out.push_back(r);
    return;
  }
  std::uint32_t pq = p | q;
  int pivot = std::countr_zero(pq);
  int best = -1;
  for (std::uint32_t m = pq; m; m &= m - 1) {
    int v = std::countr_zero(m);
    int deg = std::popcount(p & adj[v]);
    if (deg > best) {
      best = deg;
      pivot = v;
    }
  }
  std::uint32_t ext = p & ~adj[pivot];
  for (std::uint32_t m = ext; m; m &= m - 1) {
    int v = std::countr_zero(m);
    std::uint32_t bit = std::uint32_t(1) << v;
    maximal_cliques(adj, r | bit, p & adj[v], q & adj[v], out);
    p &= ~bit;
    q |= bit;
  }
}

}  // namespace detail

inline CandidateFamily enumerate_candidates(const FiniteMetricSpace& x,
                                            double eta,
                                            const CoverParams& params = {}) {
  const int n = x.size();
  if (n < 2) throw SinglePoint("enumerate_candidates");
  if (n > 31) throw InstanceTooLarge("enumerate_candidates", n, 31);
  const MetricProfile prof = profile(x);
  if (approx_lt(eta, prof.nabla, x.epsilon()))
    throw EtaBelowNabla(eta, prof.nabla);

  CandidateFamily family;
  family.eta = eta;
  std::unordered_set<std::uint32_t> seen;
  for (double threshold : detail::distance_thresholds(x, eta)) {
    std::vector<std::uint32_t> adj(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (j != i && x.dist(i, j) <= threshold)
          adj[i] |= std::uint32_t(1) << j;
    std::vector<std::uint32_t> cliques;
    std::uint32_t all = (n == 32) ? ~std::uint32_t(0)
                                  : ((std::uint32_t(1) << n) - 1);
    detail::maximal_cliques(adj, 0, all, 0, cliques);
    for (std::uint32_t mask : cliques) {
      if (std::popcount(mask) < 2) continue;
      if (!seen.insert(mask).second) continue;
      Candidate c;
      c.mask = mask;
      c.diameter = subset_diameter(x, detail::mask_to_part(mask));
      family.sets.push_back(c);
    }
  }
  // Canonical order: lexicographic on the sorted point lists. Keeps every
  // downstream tie-break deterministic.
  std::sort(family.sets.begin(), family.sets.end(),
            [](const Candidate& a, const Candidate& b) {
              return detail::mask_to_part(a.mask) < detail::mask_to_part(b.mask);
            });
  return family;
}

namespace detail {

struct CoverProblem {
  int n = 0;
  std::vector<std::uint32_t> masks;
  std::vector<double> diams;
  std::vector<std::vector<int>> by_point;  // candidate indices containing i
};

inline CoverProblem build_problem(const FiniteMetricSpace& x,
                                  const CandidateFamily& family) {
  CoverProblem prob;
  prob.n = x.size();
  prob.by_point.resize(prob.n);
  for (size_t c = 0; c < family.sets.size(); ++c) {
    prob.masks.push_back(family.sets[c].mask);
    prob.diams.push_back(family.sets[c].diameter);
    for (int i = 0; i < prob.n; ++i)
      if (family.sets[c].mask & (std::uint32_t(1) << i))
        prob.by_point[i].push_back(static_cast<int>(c));
  }
  return prob;
}

inline std::vector<double> weights_at(const CoverProblem& prob, double s) {
  std::vector<double> w(prob.diams.size());
  for (size_t i = 0; i < w.size(); ++i) w[i] = std::pow(prob.diams[i], s);
  return w;
}

inline CoverSolution finish_solution(const FiniteMetricSpace& x,
                                     std::vector<std::uint32_t> chosen,
                                     double weight, bool optimal) {
  std::vector<std::vector<int>> parts;
  parts.reserve(chosen.size());
  for (std::uint32_t m : chosen) parts.push_back(mask_to_part(m));
  std::sort(parts.begin(), parts.end());
  CoverSolution sol;
  sol.covering = make_covering(x, std::move(parts));
  sol.weight = weight;
  sol.optimal = optimal;
  return sol;
}

// Greedy weighted set cover: cheapest weight per newly covered point.
inline CoverSolution solve_greedy(const FiniteMetricSpace& x,
                                  const CoverProblem& prob,
                                  const std::vector<double>& w) {
  const std::uint32_t full =
      (prob.n == 32) ? ~std::uint32_t(0) : ((std::uint32_t(1) << prob.n) - 1);
  std::uint32_t covered = 0;
  std::vector<std::uint32_t> chosen;
  double total = 0.0;
  while (covered != full) {
    int best = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (size_t c = 0; c < prob.masks.size(); ++c) {
      int gain = std::popcount(prob.masks[c] & ~covered);
      if (gain == 0) continue;
      double ratio = w[c] / gain;
      if (ratio < best_ratio) {
        best_ratio = ratio;
        best = static_cast<int>(c);
      }
    }
    if (best < 0) throw InternalError("greedy cover: no candidate makes progress");
    covered |= prob.masks[best];
    chosen.push_back(prob.masks[best]);
    total += w[best];
  }
  return finish_solution(x, std::move(chosen), total, false);
}

// Subset DP over covered-point bitmasks. Points already covered are free, so
// overlapping parts come out naturally. Reconstruction keeps, at each step,
// the first optimal transition in candidate order, i.e. the lexicographically
// smallest part.
inline CoverSolution solve_dp(const FiniteMetricSpace& x,
                              const CoverProblem& prob,
                              const std::vector<double>& w) {
  const std::uint32_t full = (std::uint32_t(1) << prob.n) - 1;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dp(full + 1, inf);
  std::vector<int> choice(full + 1, -1);
  std::vector<std::uint32_t> from(full + 1, 0);
  dp[0] = 0.0;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (dp[mask] == inf) continue;
    int i = std::countr_zero(~mask);
    for (int c : prob.by_point[i]) {
      std::uint32_t next = mask | prob.masks[c];
      double cost = dp[mask] + w[c];
      if (cost < dp[next]) {
        dp[next] = cost;
        choice[next] = c;
        from[next] = mask;
      }
    }
  }
  if (dp[full] == inf) throw InternalError("cover DP found no covering");
  std::vector<std::uint32_t> chosen;
  for (std::uint32_t m = full; m != 0; m = from[m])
    chosen.push_back(prob.masks[choice[m]]);
  return finish_solution(x, std::move(chosen), dp[full], true);
}

// Branch and bound for 16 < n <= exact_cap: branch on the lowest uncovered
// point, admissible bound = remaining / largest-candidate-size * min weight,
// greedy solution as incumbent.
inline CoverSolution solve_bnb(const FiniteMetricSpace& x,
                               const CoverProblem& prob,
                               const std::vector<double>& w) {
  const std::uint32_t full =
      (prob.n == 32) ? ~std::uint32_t(0) : ((std::uint32_t(1) << prob.n) - 1);
  CoverSolution incumbent = solve_greedy(x, prob, w);
  double best = incumbent.weight;
  std::vector<std::uint32_t> best_chosen;
  bool improved = false;

  int max_size = 1;
  double min_weight = std::numeric_limits<double>::infinity();
  for (size_t c = 0; c < prob.masks.size(); ++c) {
    max_size = std::max(max_size, std::popcount(prob.masks[c]));
    min_weight = std::min(min_weight, w[c]);
  }

  std::vector<std::uint32_t> stack_parts;
  auto dfs = [&](auto&& self, std::uint32_t covered, double cost) -> void {
    if (covered == full) {
      if (cost < best) {
        best = cost;
        best_chosen = stack_parts;
        improved = true;
      }
      return;
    }
    int remaining = std::popcount(full & ~covered);
    double bound = cost + min_weight * ((remaining + max_size - 1) / max_size);
    if (bound >= best) return;
    int i = std::countr_zero(~covered);
    for (int c : prob.by_point[i]) {
      stack_parts.push_back(prob.masks[c]);
      self(self, covered | prob.masks[c], cost + w[c]);
      stack_parts.pop_back();
    }
  };
  dfs(dfs, 0, 0.0);

  if (!improved) {
    incumbent.optimal = true;  // greedy already optimal
    return incumbent;
  }
  return finish_solution(x, std::move(best_chosen), best, true);
}

inline CoverSolution solve_cover(const FiniteMetricSpace& x,
                                 const CoverProblem& prob,
                                 const std::vector<double>& w, CoverMode mode,
                                 const CoverParams& params) {
  if (mode == CoverMode::Greedy) return solve_greedy(x, prob, w);
  if (prob.n <= params.dp_threshold) return solve_dp(x, prob, w);
  return solve_bnb(x, prob, w);
}

}  // namespace detail

// H^s_eta: the minimum of sum diam(U)^s over 2-coverings of diameter <= eta.
inline CoverSolution h_s_eta(const FiniteMetricSpace& x, double s, double eta,
                             CoverMode mode = CoverMode::Exact,
                             const CoverParams& params = {}) {
  if (s < 0) throw ParseError("exponent s must be nonnegative");
  const int cap = mode == CoverMode::Exact ? params.effective_cap() : 31;
  if (x.size() > cap) throw InstanceTooLarge("h_s_eta", x.size(), cap);
  CandidateFamily family = enumerate_candidates(x, eta, params);
  detail::CoverProblem prob = detail::build_problem(x, family);
  return detail::solve_cover(x, prob, detail::weights_at(prob, s), mode,
                             params);
}

// H^s = H^s_nabla, the quantity entering the dimension equation.
inline double h_s(const FiniteMetricSpace& x, double s,
                  const CoverParams& params = {}) {
  return h_s_eta(x, s, profile(x).nabla, CoverMode::Exact, params).weight;
}

// N_nabla: the least cardinality of a 2-covering of diameter nabla.
inline int n_nabla(const FiniteMetricSpace& x, const CoverParams& params = {}) {
  CoverSolution sol =
      h_s_eta(x, 0.0, profile(x).nabla, CoverMode::Exact, params);
  return static_cast<int>(std::llround(sol.weight));
}

// Exhaustive oracle over all >=2-point subsets of diameter <= eta; no
// candidate restriction and no memoisation, only a cost cutoff. Kept
// independent of the exact solver on purpose.
inline CoverSolution brute_force_min_cover(const FiniteMetricSpace& x, double s,
                                           double eta) {
  const int n = x.size();
  if (n < 2) throw SinglePoint("brute_force_min_cover");
  if (n > 8) throw InstanceTooLarge("brute_force_min_cover", n, 8);
  const MetricProfile prof = profile(x);
  if (approx_lt(eta, prof.nabla, x.epsilon())) throw EtaBelowNabla(eta, prof.nabla);

  std::vector<std::uint32_t> subsets;
  std::vector<double> weights;
  const std::uint32_t full = (std::uint32_t(1) << n) - 1;
  for (std::uint32_t m = 1; m <= full; ++m) {
    if (std::popcount(m) < 2) continue;
    double d = subset_diameter(x, detail::mask_to_part(m));
    if (!approx_le(d, eta, x.epsilon())) continue;
    subsets.push_back(m);
    weights.push_back(std::pow(d, s));
  }
  std::vector<std::vector<int>> by_point(n);
  for (size_t c = 0; c < subsets.size(); ++c)
    for (int i = 0; i < n; ++i)
      if (subsets[c] & (std::uint32_t(1) << i))
        by_point[i].push_back(static_cast<int>(c));

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::uint32_t> best_parts, parts;
  auto dfs = [&](auto&& self, std::uint32_t covered, double cost) -> void {
    if (cost >= best) return;
    if (covered == full) {
      best = cost;
      best_parts = parts;
      return;
    }
    int i = std::countr_zero(~covered);
    for (int c : by_point[i]) {
      parts.push_back(subsets[c]);
      self(self, covered | subsets[c], cost + weights[c]);
      parts.pop_back();
    }
  };
  dfs(dfs, 0, 0.0);
  if (best == std::numeric_limits<double>::infinity())
    throw InternalError("brute force found no covering");
  return detail::finish_solution(x, std::move(best_parts), best, true);
}

}  // namespace findim

#endif  // FINDIM_COVER_HPP
