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
// Finite metric spaces: validation of the metric axioms and the three scale
// invariants delta (smallest distance), nabla (2-covering diameter) and
// Delta (diameter).

#ifndef FINDIM_METRIC_SPACE_HPP
#define FINDIM_METRIC_SPACE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "findim/errors.hpp"

namespace findim {

constexpr double kDefaultEpsilon = 1e-9;

// Comparison up to an absolute tolerance. All classification decisions
// (nabla == Delta, delta == nabla, betweenness, ...) go through these.
inline bool approx_eq(double a, double b, double eps) {
  return std::fabs(a - b) <= eps;
}
inline bool approx_le(double a, double b, double eps) { return a <= b + eps; }
inline bool approx_lt(double a, double b, double eps) { return a < b - eps; }

// A finite metric space: named points plus a validated symmetric distance
// matrix. Immutable after construction; all operations on it are pure.
class FiniteMetricSpace {
 public:
  // Checks the metric axioms up to `epsilon` and returns the space holding
  // the raw input matrix. Throws AsymmetricMatrix, NegativeOrZeroOffDiagonal
  // or TriangleViolation naming the first violating witness.
  static FiniteMetricSpace validated(std::vector<std::string> points,
                                     std::vector<std::vector<double>> matrix,
                                     double epsilon = kDefaultEpsilon) {
    const int n = static_cast<int>(matrix.size());
    if (n == 0) throw ParseError("empty distance matrix");
    for (const auto& row : matrix) {
      if (static_cast<int>(row.size()) != n)
        throw ParseError("distance matrix is not square");
    }
    if (points.empty()) {
      points.reserve(n);
      for (int i = 0; i < n; ++i) points.push_back(std::to_string(i));
    }
    if (static_cast<int>(points.size()) != n)
      throw ParseError("point list does not match matrix size");

    for (int i = 0; i < n; ++i) {
      if (!approx_eq(matrix[i][i], 0.0, epsilon))
        throw NegativeOrZeroOffDiagonal(i, i, matrix[i][i]);
      for (int j = i + 1; j < n; ++j) {
        if (!approx_eq(matrix[i][j], matrix[j][i], epsilon))
          throw AsymmetricMatrix(i, j);
        if (matrix[i][j] <= epsilon)
          throw NegativeOrZeroOffDiagonal(i, j, matrix[i][j]);
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          if (matrix[i][k] > matrix[i][j] + matrix[j][k] + epsilon)
            throw TriangleViolation(i, j, k);
        }
      }

    FiniteMetricSpace space;
    space.points_ = std::move(points);
    space.epsilon_ = epsilon;
    space.dist_.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) space.dist_[size_t(i) * n + j] = matrix[i][j];
    return space;
  }

  int size() const { return static_cast<int>(points_.size()); }
  const std::string& point(int i) const { return points_[i]; }
  const std::vector<std::string>& points() const { return points_; }
  double dist(int i, int j) const {
    return dist_[size_t(i) * points_.size() + j];
  }
  double epsilon() const { return epsilon_; }

  std::vector<std::vector<double>> matrix() const {
    const int n = size();
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = dist(i, j);
    return m;
  }

 private:
  std::vector<std::string> points_;
  std::vector<double> dist_;  // row-major n x n
  double epsilon_ = kDefaultEpsilon;
};

// Convenience overload: anonymous points named by index.
inline FiniteMetricSpace validate_metric(std::vector<std::vector<double>> m,
                                         double epsilon = kDefaultEpsilon) {
  return FiniteMetricSpace::validated({}, std::move(m), epsilon);
}

// The three scale invariants of a space with at least two points.
// Always 0 < delta <= nabla <= big_delta.
struct MetricProfile {
  double delta = 0.0;      // smallest positive pairwise distance
  double nabla = 0.0;      // 2-covering diameter
  double big_delta = 0.0;  // diameter
};

// nabla is computed by the closed neighbour formula: the largest, over all
// points, of the distance to the nearest other point. A 2-covering of
// diameter eta exists exactly when every point has such a neighbour within
// eta (cover with pairs), so this equals the least 2-covering diameter.
inline MetricProfile profile(const FiniteMetricSpace& x) {
  const int n = x.size();
  if (n < 2) throw SinglePoint("profile");
  MetricProfile p;
  p.delta = std::numeric_limits<double>::infinity();
  p.big_delta = 0.0;
  p.nabla = 0.0;
  for (int i = 0; i < n; ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = x.dist(i, j);
      nearest = std::min(nearest, d);
      if (j > i) {
        p.delta = std::min(p.delta, d);
        p.big_delta = std::max(p.big_delta, d);
      }
    }
    p.nabla = std::max(p.nabla, nearest);
  }
  if (!(p.delta <= p.nabla && p.nabla <= p.big_delta))
    throw InternalError("profile invariant delta <= nabla <= Delta violated");
  return p;
}

inline bool is_locally_uniform(const FiniteMetricSpace& x) {
  const MetricProfile p = profile(x);
  return approx_eq(p.delta, p.nabla, x.epsilon());
}

// A 2-covering: parts of at least two points each whose union is the whole
// space, annotated with their diameters.
struct Covering {
  std::vector<std::vector<int>> parts;  // each sorted ascending
  std::vector<double> part_diameters;
};

inline double subset_diameter(const FiniteMetricSpace& x,
                              const std::vector<int>& part) {
  double d = 0.0;
  for (size_t a = 0; a < part.size(); ++a)
    for (size_t b = a + 1; b < part.size(); ++b)
      d = std::max(d, x.dist(part[a], part[b]));
  return d;
}

// Builds a Covering from raw parts, checking the 2-covering invariants.
inline Covering make_covering(const FiniteMetricSpace& x,
                              std::vector<std::vector<int>> parts) {
  const int n = x.size();
  std::vector<char> hit(n, 0);
  Covering c;
  for (auto& part : parts) {
    std::sort(part.begin(), part.end());
    part.erase(std::unique(part.begin(), part.end()), part.end());
    if (part.size() < 2)
      throw ParseError("2-covering part with fewer than two points");
    for (int v : part) {
      if (v < 0 || v >= n) throw ParseError("covering part index out of range");
      hit[v] = 1;
    }
    c.part_diameters.push_back(subset_diameter(x, part));
    c.parts.push_back(std::move(part));
  }
  for (int v = 0; v < n; ++v)
    if (!hit[v])
      throw ParseError("covering does not contain point " + x.point(v));
  return c;
}

inline double covering_diameter(const Covering& c) {
  double d = 0.0;
  for (double pd : c.part_diameters) d = std::max(d, pd);
  return d;
}

}  // namespace findim

#endif  // FINDIM_METRIC_SPACE_HPP
