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
// The two finite dimensions. The Hausdorff variant solves H^s(X) = Delta^s
// for s by bisection; the box-counting variant is the closed formula
// ln(N_nabla) / ln(Delta/nabla). A single point has dimension zero and
// nabla == Delta forces the infinite case.

#ifndef FINDIM_DIMENSION_HPP
#define FINDIM_DIMENSION_HPP

#include <cmath>
#include <optional>

#include "findim/cover.hpp"
#include "findim/metric_space.hpp"

namespace findim {

enum class DimKind { Zero, Finite, Infinite };

inline const char* to_string(DimKind k) {
  switch (k) {
    case DimKind::Zero: return "zero";
    case DimKind::Finite: return "finite";
    case DimKind::Infinite: return "infinite";
  }
  return "?";
}

// Dimension value plus the data that witnesses it: the scale profile, the
// minimal covering cardinality N_nabla, and (when finite) the optimal
// covering at the root together with the achieved H^s.
struct DimensionResult {
  DimKind kind = DimKind::Zero;
  std::optional<double> value;           // present iff kind == Finite
  std::optional<MetricProfile> profile;  // absent for a single point
  std::optional<int> covering_count;     // N_nabla
  std::optional<Covering> witness;
  std::optional<double> achieved_hs;     // H^value(X)
};

struct HoelderParams {
  double r = 1.0;
  double beta = 1.0;
};

constexpr double kDefaultTol = 1e-9;

// dim_fH via bisection on f(s) = H^s(X)/Delta^s - 1. f(0) = N_nabla - 1 > 0
// whenever nabla < Delta, and f is strictly decreasing (a minimum of finitely
// many strictly decreasing functions: every candidate diameter is <= nabla
// < Delta), so the sign change brackets the unique root. Newton refinement is
// not used; H^s is a piecewise-smooth min with kinks where the optimal
// covering changes.
inline DimensionResult dim_fh(const FiniteMetricSpace& x,
                              double tol = kDefaultTol,
                              const CoverParams& params = {}) {
  if (tol <= 0) throw ParseError("tolerance must be positive");
  DimensionResult res;
  if (x.size() == 1) {
    res.kind = DimKind::Zero;
    return res;
  }
  const MetricProfile prof = profile(x);
  res.profile = prof;
  if (approx_eq(prof.nabla, prof.big_delta, x.epsilon())) {
    res.kind = DimKind::Infinite;
    return res;
  }
  if (x.size() > params.effective_cap())
    throw InstanceTooLarge("dim_fh", x.size(), params.effective_cap());

  const CandidateFamily family = enumerate_candidates(x, prof.nabla, params);
  const detail::CoverProblem prob = detail::build_problem(x, family);
  auto solve_at = [&](double s) {
    return detail::solve_cover(x, prob, detail::weights_at(prob, s),
                               CoverMode::Exact, params);
  };
  auto f = [&](double s) {
    return solve_at(s).weight / std::pow(prof.big_delta, s) - 1.0;
  };

  res.covering_count = static_cast<int>(std::llround(solve_at(0.0).weight));

  double hi = 1.0;
  int doublings = 0;
  while (f(hi) >= 0.0) {
    hi *= 2.0;
    if (++doublings > 60)
      throw InternalError("dimension bracket failed to close");
  }
  double lo = 0.0;
  for (int it = 0; it < 200 && (hi - lo) > 0.5 * tol; ++it) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double root = 0.5 * (lo + hi);
  CoverSolution at_root = solve_at(root);
  res.kind = DimKind::Finite;
  res.value = root;
  res.witness = at_root.covering;
  res.achieved_hs = at_root.weight;
  return res;
}

// dim_fB via the closed formula.
inline DimensionResult dim_fb(const FiniteMetricSpace& x,
                              const CoverParams& params = {}) {
  DimensionResult res;
  if (x.size() == 1) {
    res.kind = DimKind::Zero;
    return res;
  }
  const MetricProfile prof = profile(x);
  res.profile = prof;
  if (approx_eq(prof.nabla, prof.big_delta, x.epsilon())) {
    res.kind = DimKind::Infinite;
    return res;
  }
  CoverSolution sol =
      h_s_eta(x, 0.0, prof.nabla, CoverMode::Exact, params);
  const int n_cov = static_cast<int>(std::llround(sol.weight));
  res.kind = DimKind::Finite;
  res.value = std::log(double(n_cov)) / std::log(prof.big_delta / prof.nabla);
  res.covering_count = n_cov;
  res.witness = sol.covering;
  return res;
}

// Applies d' = r * d^beta pointwise and revalidates. beta <= 1 always
// preserves the metric axioms; beta > 1 may break the triangle inequality,
// in which case TriangleViolation propagates.
inline FiniteMetricSpace apply_hoelder(const FiniteMetricSpace& x,
                                       const HoelderParams& h) {
  if (h.r <= 0 || h.beta <= 0)
    throw ParseError("Hoelder parameters must be positive");
  const int n = x.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i) m[i][j] = h.r * std::pow(x.dist(i, j), h.beta);
  return FiniteMetricSpace::validated(x.points(), std::move(m), x.epsilon());
}

}  // namespace findim

#endif  // FINDIM_DIMENSION_HPP
