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

#include "findim/intrinsic.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "findim/families.hpp"
#include "oracles.hpp"

using namespace findim;

namespace {

FiniteMetricSpace uniform_space(int n) {
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 1.0));
  for (int i = 0; i < n; ++i) m[i][i] = 0.0;
  return validate_metric(std::move(m));
}

bool same_matrix(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a.dist(i, j) != b.dist(i, j)) return false;
  return true;
}

}  // namespace

TEST_CASE("segment graph", "[intrinsic]") {
  SECTION("hop P_4 reproduces P_4") {
    auto f = oracle::hop_space(oracle::path_spec(4));
    auto g = segment_graph(f);
    REQUIRE(g.edges().size() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 3));
  }
  SECTION("three points with distances (1, 1, 2) give the 2-edge path") {
    auto f = validate_metric({{0, 1, 1}, {1, 0, 2}, {1, 2, 0}});
    auto g = segment_graph(f);
    REQUIRE(g.edges().size() == 2);
    CHECK_FALSE(g.adjacent(1, 2));  // the distance-2 pair are the endpoints
  }
  SECTION("uniform space gives the complete graph") {
    auto g = segment_graph(uniform_space(5));
    CHECK(g.complete());
  }
  SECTION("its metric reproduces the input on random spaces") {
    oracle::Rng rng(20260809);
    for (int n = 2; n <= 7; ++n)
      for (int rep = 0; rep < 20; ++rep) {
        auto f = oracle::random_metric(n, rng);
        auto g = segment_graph(f);
        auto back = metric_space_of(g);
        CHECK(same_matrix(f, back));
      }
  }
}

TEST_CASE("maximal geodesics", "[intrinsic]") {
  SECTION("hop P_4 endpoints: the full 3-segment arc") {
    auto f = oracle::hop_space(oracle::path_spec(4));
    auto arc = maximal_geodesic(f, 0, 3);
    CHECK(arc.points == std::vector<int>{0, 1, 2, 3});
    CHECK(arc.count() == 3);
    CHECK(arc.length == 3.0);
  }
  SECTION("segment-graph edges have count 1") {
    auto f = oracle::hop_space(oracle::path_spec(4));
    CHECK(maximal_geodesic(f, 1, 2).count() == 1);
  }
  SECTION("uniform space: every pair has count 1") {
    auto f = uniform_space(4);
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        CHECK(maximal_geodesic(f, a, b).count() == 1);
  }
  SECTION("arcs are geodesics with maximal count on random spaces") {
    oracle::Rng rng(7);
    for (int rep = 0; rep < 20; ++rep) {
      auto f = oracle::random_metric(5, rng);
      for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
          auto arc = maximal_geodesic(f, a, b);
          CHECK(arc.length == f.dist(a, b));
          CHECK(arc.points.front() == a);
          CHECK(arc.points.back() == b);
        }
    }
  }
}

TEST_CASE("intrinsic verdicts", "[intrinsic]") {
  SECTION("hop P_4 is intrinsic with segment graph P_4") {
    auto v = is_intrinsic(oracle::hop_space(oracle::path_spec(4)));
    CHECK(v.intrinsic);
    REQUIRE(v.segment_graph.has_value());
    CHECK(v.segment_graph->edges().size() == 3);
  }
  SECTION("uniform spaces are not intrinsic") {
    for (int n = 2; n <= 6; ++n) CHECK_FALSE(is_intrinsic(uniform_space(n)).intrinsic);
  }
  SECTION("two-point spaces are never intrinsic") {
    CHECK_FALSE(is_intrinsic(validate_metric({{0, 3}, {3, 0}})).intrinsic);
  }
  SECTION("metrics of non-complete connected graphs are intrinsic") {
    for (int n = 3; n <= 5; ++n)
      for_each_connected_graph(n, [&](const Graph& g) {
        if (g.complete()) return;
        CHECK(is_intrinsic(metric_space_of(g)).intrinsic);
      });
  }
  SECTION("agrees with the definition-level brute force") {
    oracle::Rng rng(101);
    for (int n = 3; n <= 5; ++n)
      for (int rep = 0; rep < 20; ++rep) {
        auto f = oracle::random_metric(n, rng);
        CHECK(is_intrinsic(f).intrinsic == oracle::brute_force_intrinsic(f));
      }
    CHECK(oracle::brute_force_intrinsic(
              oracle::hop_space(oracle::path_spec(4))));
    CHECK_FALSE(oracle::brute_force_intrinsic(uniform_space(4)));
  }
  SECTION("verdict is invariant under relabeling") {
    oracle::Rng rng(55);
    for (int rep = 0; rep < 15; ++rep) {
      auto f = oracle::random_metric(5, rng);
      std::vector<int> perm{3, 0, 4, 1, 2};
      CHECK(is_intrinsic(f).intrinsic ==
            is_intrinsic(oracle::relabeled(f, perm)).intrinsic);
    }
  }
}

TEST_CASE("representing graph", "[intrinsic]") {
  SECTION("roundtrip through the canonical family") {
    auto f = oracle::hop_space(oracle::path_spec(4));
    auto v = is_intrinsic(f);
    auto g = representing_graph(f, v.family);
    CHECK(same_matrix(metric_space_of(g), f));
    CHECK(g.edges().size() == 3);
  }
  SECTION("(1,1,2) space maps to the 2-edge path") {
    auto f = validate_metric({{0, 1, 1}, {1, 0, 2}, {1, 2, 0}});
    auto g = representing_graph(f, is_intrinsic(f).family);
    CHECK(g.edges().size() == 2);
    CHECK(same_matrix(metric_space_of(g), f));
  }
  SECTION("a non-geodesic arc is rejected with the pair named") {
    auto f = oracle::hop_space(oracle::path_spec(4));
    auto family = is_intrinsic(f).family;
    family.geodesics[{0, 1}].points = {0, 2, 1};  // detour, length 3 != 1
    REQUIRE_THROWS_AS(representing_graph(f, family), FamilyInvalid);
  }
  SECTION("a non-maximal arc is rejected") {
    auto f = oracle::hop_space(oracle::path_spec(4));
    auto family = is_intrinsic(f).family;
    family.geodesics[{0, 3}].points = {0, 3};  // geodesic? no: d = 3, len 3
    family.geodesics[{0, 3}].length = 3.0;
    // The direct pair arc from 0 to 3 has length d(0,3) = 3, so it is a
    // geodesic, but its count 1 is below the maximal count 3.
    REQUIRE_THROWS_AS(representing_graph(f, family), FamilyInvalid);
  }
  SECTION("a missing pair is rejected") {
    auto f = oracle::hop_space(oracle::path_spec(3));
    GeodesicFamily family = is_intrinsic(f).family;
    family.geodesics.erase({0, 1});
    REQUIRE_THROWS_AS(representing_graph(f, family), FamilyInvalid);
  }
}

TEST_CASE("graph-metric roundtrip", "[intrinsic][prop]") {
  // Metrics of non-complete connected graphs are exactly the intrinsic
  // spaces; the segment graph reproduces the metric exactly, for unit and
  // for rational lengths.
  SECTION("unit lengths, all graphs up to 5 vertices") {
    for (int n = 3; n <= 5; ++n)
      for_each_connected_graph(n, [&](const Graph& g) {
        if (g.complete()) return;
        auto f = metric_space_of(g);
        auto v = is_intrinsic(f);
        REQUIRE(v.intrinsic);
        CHECK(same_matrix(metric_space_of(*v.segment_graph), f));
      });
  }
  SECTION("random rational lengths") {
    oracle::Rng rng(20260809);
    for (int rep = 0; rep < 60; ++rep) {
      int n = 3 + rng.below(4);
      auto g = oracle::random_connected_graph(n, rng, false);
      if (g.complete()) continue;
      auto f = metric_space_of(g);
      auto v = is_intrinsic(f);
      REQUIRE(v.intrinsic);
      CHECK(same_matrix(metric_space_of(*v.segment_graph), f));
      for (const auto& [pair, arc] : v.family.geodesics) {
        CHECK(arc.length == f.dist(pair.first, pair.second));
        CHECK(arc.count() == maximal_geodesic(f, pair.first, pair.second).count());
      }
    }
  }
}
