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
// Named graph families, graph products with their metric identities, the
// constructions that realise prescribed dimension values, and the exhaustive
// small-instance sweeps for the extremal theorems.

#ifndef FINDIM_FAMILIES_HPP
#define FINDIM_FAMILIES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "findim/graph.hpp"

namespace findim {

enum class FamilyKind { Kn, Pn, STn, Cn, Lpq, DoubleStar, PathPlusStar };

// Parameters for one family member. Only the fields a family consumes are
// read: Kn/Pn/STn/Cn use n; Lpq uses p, q and optionally bridges; DoubleStar
// uses n, m, x; PathPlusStar uses m, k.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Pn;
  int n = 0, p = 0, q = 0, m = 0, k = 0;
  double x = 0.0;
  std::vector<std::pair<int, int>> bridges;  // Lpq: (index in K_p, index in K_q)
};

namespace detail {

inline std::vector<std::string> indexed_names(const std::string& prefix,
                                              int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

inline Graph make_lpq(int p, int q, std::vector<std::pair<int, int>> bridges) {
  if (p < 2 || q < 2)
    throw InvalidFamilyParameters("Lpq requires p, q >= 2");
  if (bridges.empty()) bridges.emplace_back(0, 0);  // canonical single bridge
  std::vector<char> a_hit(p, 0), b_hit(q, 0);
  for (auto [i, j] : bridges) {
    if (i < 0 || i >= p || j < 0 || j >= q)
      throw InvalidFamilyParameters("Lpq bridge endpoint out of range");
    a_hit[i] = 1;
    b_hit[j] = 1;
  }
  // The bridge endpoint sets must be proper subsets of both cliques,
  // otherwise the diameter drops below 3.
  if (std::count(a_hit.begin(), a_hit.end(), 1) == p ||
      std::count(b_hit.begin(), b_hit.end(), 1) == q)
    throw InvalidFamilyParameters(
        "Lpq bridge endpoints must form proper subsets of both cliques");
  std::vector<std::string> names;
  for (int i = 0; i < p; ++i) names.push_back("a" + std::to_string(i));
  for (int j = 0; j < q; ++j) names.push_back("b" + std::to_string(j));
  std::vector<std::tuple<int, int, double>> edges;
  for (int i = 0; i < p; ++i)
    for (int i2 = i + 1; i2 < p; ++i2) edges.emplace_back(i, i2, 1.0);
  for (int j = 0; j < q; ++j)
    for (int j2 = j + 1; j2 < q; ++j2)
      edges.emplace_back(p + j, p + j2, 1.0);
  std::sort(bridges.begin(), bridges.end());
  bridges.erase(std::unique(bridges.begin(), bridges.end()), bridges.end());
  for (auto [i, j] : bridges) edges.emplace_back(i, p + j, 1.0);
  return Graph::make(std::move(names), std::move(edges));
}

}  // namespace detail

inline Graph generate(const FamilySpec& spec) {
  using detail::indexed_names;
  switch (spec.kind) {
    case FamilyKind::Kn: {
      if (spec.n < 1) throw InvalidFamilyParameters("Kn requires n >= 1");
      std::vector<std::tuple<int, int, double>> edges;
      for (int i = 0; i < spec.n; ++i)
        for (int j = i + 1; j < spec.n; ++j) edges.emplace_back(i, j, 1.0);
      return Graph::make(indexed_names("v", spec.n), std::move(edges));
    }
    case FamilyKind::Pn: {
      if (spec.n < 1) throw InvalidFamilyParameters("Pn requires n >= 1");
      std::vector<std::tuple<int, int, double>> edges;
      for (int i = 0; i + 1 < spec.n; ++i) edges.emplace_back(i, i + 1, 1.0);
      return Graph::make(indexed_names("v", spec.n), std::move(edges));
    }
    case FamilyKind::STn: {
      if (spec.n < 2) throw InvalidFamilyParameters("STn requires n >= 2");
      std::vector<std::tuple<int, int, double>> edges;
      for (int i = 1; i < spec.n; ++i) edges.emplace_back(0, i, 1.0);
      return Graph::make(indexed_names("v", spec.n), std::move(edges));
    }
    case FamilyKind::Cn: {
      if (spec.n < 3) throw InvalidFamilyParameters("Cn requires n >= 3");
      std::vector<std::tuple<int, int, double>> edges;
      for (int i = 0; i < spec.n; ++i)
        edges.emplace_back(i, (i + 1) % spec.n, 1.0);
      for (auto& [a, b, w] : edges)
        if (a > b) std::swap(a, b);
      return Graph::make(indexed_names("v", spec.n), std::move(edges));
    }
    case FamilyKind::Lpq:
      return detail::make_lpq(spec.p, spec.q, spec.bridges);
    case FamilyKind::DoubleStar: {
      if (spec.n < 1 || spec.m < 1 || !(spec.x > 0))
        throw InvalidFamilyParameters(
            "DoubleStar requires n, m >= 1 and x > 0");
      // Tree with n+m+1 edges: n leaves at c0, m leaves at c1, and the
      // bridge c0-c1 of length x.
      std::vector<std::string> names{"c0", "c1"};
      std::vector<std::tuple<int, int, double>> edges{{0, 1, spec.x}};
      for (int i = 0; i < spec.n; ++i) {
        names.push_back("a" + std::to_string(i));
        edges.emplace_back(0, 2 + i, 1.0);
      }
      for (int j = 0; j < spec.m; ++j) {
        names.push_back("b" + std::to_string(j));
        edges.emplace_back(1, 2 + spec.n + j, 1.0);
      }
      return Graph::make(std::move(names), std::move(edges));
    }
    case FamilyKind::PathPlusStar: {
      // Path v0..vm of diameter m with k - ceil((m+1)/2) extra leaves at v1;
      // the resulting dimension is ln(k)/ln(m).
      const int m = spec.m, k = spec.k;
      const int base = (m + 2) / 2;  // ceil((m+1)/2)
      if (m < 2) throw InvalidFamilyParameters("PathPlusStar requires m >= 2");
      const int c = k - base;
      if (c < 1)
        throw InvalidFamilyParameters(
            "PathPlusStar requires k >= ceil((m+1)/2) + 1");
      std::vector<std::string> names = detail::indexed_names("v", m + 1);
      std::vector<std::tuple<int, int, double>> edges;
      for (int i = 0; i < m; ++i) edges.emplace_back(i, i + 1, 1.0);
      for (int j = 0; j < c; ++j) {
        names.push_back("s" + std::to_string(j));
        edges.emplace_back(1, m + 1 + j, 1.0);
      }
      return Graph::make(std::move(names), std::move(edges));
    }
  }
  throw InvalidFamilyParameters("unknown family kind");
}

// Every member of L_{p,q}: all bridge-edge sets whose endpoint sets are
// proper nonempty subsets of both cliques. Exhaustive mode, p + q <= 8.
inline void for_each_lpq_variant(int p, int q,
                                 const std::function<void(const Graph&)>& fn) {
  if (p < 2 || q < 2) throw InvalidFamilyParameters("Lpq requires p, q >= 2");
  if (p + q > 8) throw InstanceTooLarge("for_each_lpq_variant", p + q, 8);
  const int cells = p * q;
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << cells); ++mask) {
    std::vector<std::pair<int, int>> bridges;
    std::vector<char> a_hit(p, 0), b_hit(q, 0);
    for (int c = 0; c < cells; ++c)
      if (mask & (std::uint32_t(1) << c)) {
        int i = c / q, j = c % q;
        bridges.emplace_back(i, j);
        a_hit[i] = 1;
        b_hit[j] = 1;
      }
    if (std::count(a_hit.begin(), a_hit.end(), 1) == p) continue;
    if (std::count(b_hit.begin(), b_hit.end(), 1) == q) continue;
    fn(detail::make_lpq(p, q, std::move(bridges)));
  }
}

// Recogniser for L_{p,q}: exactly the unit-length graphs with N = 2 and
// diameter 3. Returns the two cover clique sizes, smaller first.
inline std::optional<std::pair<int, int>> recognize_lpq(
    const Graph& g, const CliqueCoverParams& params = {}) {
  if (!g.unit_lengths()) throw NonUnitLengths("recognize_lpq");
  if (g.size() < 4) return std::nullopt;
  FiniteMetricSpace space = metric_space_of(g);
  const MetricProfile prof = profile(space);
  if (prof.big_delta != 3.0) return std::nullopt;
  CliqueCover cover = clique_cover_number(g, params);
  if (cover.size() != 2) return std::nullopt;
  int p = static_cast<int>(cover.cliques[0].size());
  int q = static_cast<int>(cover.cliques[1].size());
  if (p > q) std::swap(p, q);
  return std::make_pair(p, q);
}

enum class ProductMetric { DInf, D1 };

namespace detail {

inline Graph build_product(const Graph& g, const Graph& f, bool strong) {
  if (!g.unit_lengths() || !f.unit_lengths())
    throw NonUnitLengths(strong ? "strong_product" : "cartesian_product");
  const int ng = g.size(), nf = f.size();
  std::vector<std::string> names;
  names.reserve(size_t(ng) * nf);
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nf; ++b)
      names.push_back("(" + g.vertex(a) + "," + f.vertex(b) + ")");
  auto id = [&](int a, int b) { return a * nf + b; };
  std::vector<std::tuple<int, int, double>> edges;
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nf; ++b)
      for (int a2 = a; a2 < ng; ++a2)
        for (int b2 = 0; b2 < nf; ++b2) {
          if (a2 == a && b2 <= b) continue;
          bool ga = (a == a2) || g.adjacent(a, a2);
          bool fb = (b == b2) || f.adjacent(b, b2);
          bool edge;
          if (strong)
            edge = ga && fb;
          else
            edge = (a == a2 && f.adjacent(b, b2)) ||
                   (b == b2 && g.adjacent(a, a2));
          if (edge) edges.emplace_back(id(a, b), id(a2, b2), 1.0);
        }
  Graph prod = Graph::make(std::move(names), std::move(edges));

  // Postcondition: the hop metric of the product equals the d_inf (strong)
  // or d_1 (Cartesian) combination of the factor hop metrics.
  FiniteMetricSpace dp = metric_space_of(prod);
  FiniteMetricSpace dg = metric_space_of(g);
  FiniteMetricSpace df = metric_space_of(f);
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nf; ++b)
      for (int a2 = 0; a2 < ng; ++a2)
        for (int b2 = 0; b2 < nf; ++b2) {
          double want = strong ? std::max(dg.dist(a, a2), df.dist(b, b2))
                               : dg.dist(a, a2) + df.dist(b, b2);
          if (dp.dist(id(a, b), id(a2, b2)) != want)
            throw InternalError("product metric mismatch at (" +
                                prod.vertex(id(a, b)) + ", " +
                                prod.vertex(id(a2, b2)) + ")");
        }
  return prod;
}

}  // namespace detail

inline Graph strong_product(const Graph& g, const Graph& f) {
  return detail::build_product(g, f, true);
}
inline Graph cartesian_product(const Graph& g, const Graph& f) {
  return detail::build_product(g, f, false);
}

// Checks the product metric identities: delta and nabla are the minimum of
// the factors under either metric; the diameter is the max (d_inf) or the
// sum (d_1).
struct ProfileCheck {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  bool pass = false;
};
struct ProductProfileReport {
  bool pass = true;
  std::vector<ProfileCheck> checks;
};

inline ProductProfileReport product_profile_check(const Graph& g,
                                                  const Graph& f,
                                                  ProductMetric which) {
  Graph prod = which == ProductMetric::DInf ? strong_product(g, f)
                                            : cartesian_product(g, f);
  MetricProfile pg = profile(metric_space_of(g));
  MetricProfile pf = profile(metric_space_of(f));
  MetricProfile pp = profile(metric_space_of(prod));
  ProductProfileReport report;
  auto check = [&](const std::string& name, double expected, double actual) {
    ProfileCheck c{name, expected, actual, expected == actual};
    report.pass = report.pass && c.pass;
    report.checks.push_back(c);
  };
  check("delta", std::min(pg.delta, pf.delta), pp.delta);
  check("nabla", std::min(pg.nabla, pf.nabla), pp.nabla);
  if (which == ProductMetric::DInf)
    check("diameter", std::max(pg.big_delta, pf.big_delta), pp.big_delta);
  else
    check("diameter", pg.big_delta + pf.big_delta, pp.big_delta);
  return report;
}

// Exact rational endpoints for the interval construction.
struct Rational {
  long long num = 0;
  long long den = 1;
  double value() const { return double(num) / double(den); }
};

namespace detail {

inline long long gcd_ll(long long a, long long b) {
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace detail

// A unit-length graph whose dimension lies in [lo, hi], 1 <= lo < hi. With
// endpoints p/q and r/q on a common denominator the construction takes
// m = 2^q and an integer k in [2^p, 2^r]; the graph is PathPlusStar(m, k)
// with dimension ln(k)/ln(m). When 2^q would blow past the vertex cap, an
// ascending search over m >= 2 finds the smallest base with an admissible k.
struct IntervalConstruction {
  Graph graph;
  int m = 0;
  int k = 0;
};

inline IntervalConstruction construct_dimension_in_interval(
    Rational lo, Rational hi, int vertex_cap = 4096) {
  if (lo.den <= 0 || hi.den <= 0)
    throw InvalidFamilyParameters("rational denominators must be positive");
  if (lo.num * hi.den >= hi.num * lo.den)
    throw IntervalTooTight(std::to_string(lo.num) + "/" + std::to_string(lo.den),
                           std::to_string(hi.num) + "/" + std::to_string(hi.den));
  if (lo.num < lo.den)
    throw InvalidFamilyParameters("interval must lie in [1, infinity)");
  const double lo_v = lo.value(), hi_v = hi.value();

  auto try_base = [&](long long m) -> std::optional<IntervalConstruction> {
    if (m < 2) return std::nullopt;
    double k_lo_f = std::pow(double(m), lo_v);
    double k_hi_f = std::pow(double(m), hi_v);
    long long k_lo = static_cast<long long>(std::ceil(k_lo_f - 1e-9));
    long long k_hi = static_cast<long long>(std::floor(k_hi_f + 1e-9));
    k_lo = std::max(k_lo, m);
    if (k_lo > k_hi) return std::nullopt;
    // Geometric midpoint keeps the value interior when there is room.
    long long k = static_cast<long long>(
        std::floor(std::sqrt(double(k_lo) * double(k_hi))));
    k = std::clamp(k, k_lo, k_hi);
    for (long long cand : {k, k_lo, k_hi}) {
      double dim = std::log(double(cand)) / std::log(double(m));
      if (dim >= lo_v - 1e-12 && dim <= hi_v + 1e-12) {
        const int base = static_cast<int>((m + 2) / 2);
        long long vertices = m + 1 + (cand - base);
        if (cand - base < 1 || vertices > vertex_cap) continue;
        FamilySpec spec;
        spec.kind = FamilyKind::PathPlusStar;
        spec.m = static_cast<int>(m);
        spec.k = static_cast<int>(cand);
        return IntervalConstruction{generate(spec), spec.m, spec.k};
      }
    }
    return std::nullopt;
  };

  // Common-denominator route first: m = 2^q.
  long long g = detail::gcd_ll(lo.den, hi.den);
  long long q = lo.den / g * hi.den;
  if (q <= 20 && (1LL << q) <= vertex_cap) {
    if (auto r = try_base(1LL << q)) return *r;
  }
  for (long long m = 2; m <= vertex_cap; ++m) {
    if (auto r = try_base(m)) return *r;
    if (std::pow(double(m), lo_v) > double(vertex_cap))
      throw InstanceTooLarge("construct_dimension_in_interval",
                             static_cast<long>(std::pow(double(m), lo_v)),
                             vertex_cap);
  }
  throw IntervalTooTight(std::to_string(lo.num) + "/" + std::to_string(lo.den),
                         std::to_string(hi.num) + "/" + std::to_string(hi.den));
}

// A double star whose intrinsic metric has Hausdorff dimension exactly t:
// the smallest n + m >= max(3, ceil(3^t)) split as evenly as possible, with
// bridge length x = (n+m)^(1/t) - 2 >= 1, which keeps the space locally
// uniform and the dimension ln(n+m)/ln(2+x) = t.
struct ExactConstruction {
  Graph graph;
  int n = 0, m = 0;
  double x = 0.0;
};

inline ExactConstruction construct_dimension_exact(double t,
                                                   int vertex_cap = 4096) {
  if (!(t > 0)) throw InvalidFamilyParameters("target dimension must be > 0");
  const double size_f = std::pow(3.0, t);
  if (size_f > double(vertex_cap)) {
    double t_max = std::log(double(vertex_cap)) / std::log(3.0);
    throw InstanceTooLarge(
        "construct_dimension_exact: feasible range is 0 < t <= " +
            std::to_string(t_max),
        static_cast<long>(size_f), vertex_cap);
  }
  const long long total = std::max(3LL, (long long)std::ceil(size_f - 1e-12));
  const int n = static_cast<int>((total + 1) / 2);
  const int m = static_cast<int>(total / 2);
  const double x = std::pow(double(total), 1.0 / t) - 2.0;
  FamilySpec spec;
  spec.kind = FamilyKind::DoubleStar;
  spec.n = n;
  spec.m = m;
  spec.x = x;
  return ExactConstruction{generate(spec), n, m, x};
}

// ---------------------------------------------------------------------------
// Theorem sweeps.

struct SweepReport {
  std::string theorem;
  int n = 0;
  long count = 0;
  double min_dim = 0.0, max_dim = 0.0;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

namespace detail {

inline std::string graph_edges_string(const Graph& g) {
  std::string s;
  for (const Graph::Edge& e : g.edges()) {
    if (!s.empty()) s += " ";
    s += g.vertex(e.u) + "-" + g.vertex(e.v);
  }
  return s.empty() ? "(edgeless)" : s;
}

inline bool is_path_graph(const Graph& g) {
  int ones = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (g.degree(v) == 1)
      ++ones;
    else if (g.degree(v) != 2)
      return false;
  }
  return g.size() == 1 || ones == 2;
}

inline bool is_star_graph(const Graph& g) {
  int center = 0;
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) == g.size() - 1) ++center;
  if (center != 1 && !(g.size() == 2 && center == 2)) return false;
  return static_cast<int>(g.edges().size()) == g.size() - 1;
}

}  // namespace detail

// Bounds of the extremal theorem over every connected labelled non-complete
// graph on n vertices: ln2/ln3 <= dim <= ln(n-1)/ln2, the minimum exactly on
// the L_{p,q} members and the maximum attained by the star.
inline SweepReport sweep_extremal(int n, const CliqueCoverParams& params = {}) {
  if (n < 4) throw InvalidFamilyParameters("extremal sweep requires n >= 4");
  SweepReport report;
  report.theorem = "extremal";
  report.n = n;
  const double lo = std::log(2.0) / std::log(3.0);
  const double hi = std::log(double(n - 1)) / std::log(2.0);
  report.min_dim = hi;
  report.max_dim = lo;
  bool star_attains = false;
  for_each_connected_graph(n, [&](const Graph& g) {
    if (g.complete()) return;
    ++report.count;
    DimensionResult r = dim_f_graph(g, params);
    const double dim = *r.value;
    report.min_dim = std::min(report.min_dim, dim);
    report.max_dim = std::max(report.max_dim, dim);
    if (dim < lo - 1e-9 || dim > hi + 1e-9)
      report.violations.push_back("bounds violated by " +
                                  detail::graph_edges_string(g));
    const bool at_min = std::fabs(dim - lo) <= 1e-9;
    const bool is_lpq = recognize_lpq(g, params).has_value();
    if (at_min != is_lpq)
      report.violations.push_back("minimum/L_pq mismatch for " +
                                  detail::graph_edges_string(g));
    if (std::fabs(dim - hi) <= 1e-9 && detail::is_star_graph(g))
      star_attains = true;
  });
  if (!star_attains)
    report.violations.push_back("star does not attain the maximum");
  return report;
}

// Tree bounds: ln(ceil(n/2))/ln(n-1) <= dim <= ln(n-1)/ln2 over all labelled
// trees, with the minimum only on paths and the maximum only on stars.
inline SweepReport sweep_trees(int n, const CliqueCoverParams& params = {}) {
  if (n < 4) throw InvalidFamilyParameters("tree sweep requires n >= 4");
  SweepReport report;
  report.theorem = "trees";
  report.n = n;
  const double lo =
      std::log(std::ceil(n / 2.0)) / std::log(double(n - 1));
  const double hi = std::log(double(n - 1)) / std::log(2.0);
  report.min_dim = hi;
  report.max_dim = lo;
  for_each_labeled_tree(n, [&](const Graph& g) {
    ++report.count;
    DimensionResult r = dim_f_graph(g, params);
    const double dim = *r.value;
    report.min_dim = std::min(report.min_dim, dim);
    report.max_dim = std::max(report.max_dim, dim);
    if (dim < lo - 1e-9 || dim > hi + 1e-9)
      report.violations.push_back("bounds violated by " +
                                  detail::graph_edges_string(g));
    if ((std::fabs(dim - lo) <= 1e-9) != detail::is_path_graph(g))
      report.violations.push_back("minimum/path mismatch for " +
                                  detail::graph_edges_string(g));
    if ((std::fabs(dim - hi) <= 1e-9) != detail::is_star_graph(g))
      report.violations.push_back("maximum/star mismatch for " +
                                  detail::graph_edges_string(g));
  });
  return report;
}

// Strong-product subadditivity over all unordered pairs of connected
// non-complete labelled graphs with up to max_n vertices each:
// dim(G x F) <= dim(G) + dim(F) and N(G x F) <= N(G) N(F).
inline SweepReport sweep_strong_products(int max_n,
                                         const CliqueCoverParams& params = {}) {
  SweepReport report;
  report.theorem = "product";
  report.n = max_n;
  std::vector<Graph> graphs;
  std::vector<double> dims;
  std::vector<int> covers;
  for (int n = 2; n <= max_n; ++n)
    for_each_connected_graph(n, [&](const Graph& g) {
      if (g.complete()) return;
      DimensionResult r = dim_f_graph(g, params);
      graphs.push_back(g);
      dims.push_back(*r.value);
      covers.push_back(*r.covering_count);
    });
  report.min_dim = std::numeric_limits<double>::infinity();
  report.max_dim = 0.0;
  for (size_t i = 0; i < graphs.size(); ++i)
    for (size_t j = i; j < graphs.size(); ++j) {
      ++report.count;
      Graph prod = strong_product(graphs[i], graphs[j]);
      DimensionResult r = dim_f_graph(prod, params);
      if (r.kind != DimKind::Finite) {
        report.violations.push_back("product unexpectedly non-finite: " +
                                    detail::graph_edges_string(prod));
        continue;
      }
      const double dim = *r.value;
      report.min_dim = std::min(report.min_dim, dim);
      report.max_dim = std::max(report.max_dim, dim);
      if (dim > dims[i] + dims[j] + 1e-9)
        report.violations.push_back("subadditivity violated by pair (" +
                                    detail::graph_edges_string(graphs[i]) +
                                    ") x (" +
                                    detail::graph_edges_string(graphs[j]) + ")");
      if (*r.covering_count > covers[i] * covers[j])
        report.violations.push_back("N(GxF) > N(G)N(F) for pair (" +
                                    detail::graph_edges_string(graphs[i]) +
                                    ") x (" +
                                    detail::graph_edges_string(graphs[j]) + ")");
    }
  return report;
}

}  // namespace findim

#endif  // FINDIM_FAMILIES_HPP
