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

#include "findim/io.hpp"

#include <map>
#include <set>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace findim;

namespace {

// Name-level view of a graph: vertex set plus edge set with lengths.
// Vertex order may legitimately differ across a serialisation round trip.
struct GraphView {
  std::set<std::string> vertices;
  std::map<std::pair<std::string, std::string>, double> edges;
};

GraphView view_of(const Graph& g) {
  GraphView v;
  for (const auto& name : g.vertices()) v.vertices.insert(name);
  for (const Graph::Edge& e : g.edges()) {
    std::string a = g.vertex(e.u), b = g.vertex(e.v);
    if (b < a) std::swap(a, b);
    v.edges[{a, b}] = e.length;
  }
  return v;
}

bool same_view(const Graph& a, const Graph& b) {
  auto va = view_of(a), vb = view_of(b);
  return va.vertices == vb.vertices && va.edges == vb.edges;
}

}  // namespace

TEST_CASE("edge list parsing", "[io]") {
  SECTION("lengths default to one, comments and blanks are skipped") {
    std::istringstream in(
        "# a path with a stretched middle edge\n"
        "a b\n"
        "\n"
        "b c 2.5   # inline comment\n"
        "c d\n");
    Graph g = read_graph_edgelist(in);
    REQUIRE(g.size() == 4);
    REQUIRE(g.edges().size() == 3);
    CHECK(g.edges()[1].length == 2.5);
  }
  SECTION("single token declares an isolated vertex") {
    std::istringstream in("only\n");
    Graph g = read_graph_edgelist(in);
    CHECK(g.size() == 1);
    CHECK(g.edges().empty());
  }
  SECTION("vertex indices follow first mention") {
    std::istringstream in("0 1\n1 2\n2 3\n");
    Graph g = read_graph_edgelist(in);
    for (int i = 0; i < 4; ++i) CHECK(g.vertex(i) == std::to_string(i));
  }
  SECTION("junk is rejected") {
    std::istringstream bad("a b 1.0 extra\n");
    REQUIRE_THROWS_AS(read_graph_edgelist(bad), ParseError);
    std::istringstream nonnum("a b xyz\n");
    REQUIRE_THROWS_AS(read_graph_edgelist(nonnum), ParseError);
    std::istringstream empty("# nothing\n");
    REQUIRE_THROWS_AS(read_graph_edgelist(empty), ParseError);
  }
}

TEST_CASE("graph round trips", "[io][prop]") {
  oracle::Rng rng(20260809);
  SECTION("edge-list round trip preserves names, edges and lengths") {
    for (int rep = 0; rep < 40; ++rep) {
      auto g = oracle::random_connected_graph(2 + rng.below(6), rng,
                                              rep % 2 == 0);
      std::ostringstream out;
      write_graph_edgelist(out, g);
      std::istringstream in(out.str());
      CHECK(same_view(g, read_graph_edgelist(in)));
    }
  }
  SECTION("JSON round trip preserves vertex order exactly") {
    for (int rep = 0; rep < 40; ++rep) {
      auto g = oracle::random_connected_graph(2 + rng.below(6), rng, false);
      Graph back = graph_from_json(graph_to_json(g));
      CHECK(g.vertices() == back.vertices());
      CHECK(same_view(g, back));
    }
  }
  SECTION("edge output is sorted lexicographically by endpoint names") {
    auto g = Graph::make({"z", "m", "a"}, {{0, 1, 1.0}, {1, 2, 1.0}});
    std::ostringstream out;
    write_graph_edgelist(out, g);
    CHECK(out.str() == "a m\nm z\n");
  }
  SECTION("irrational lengths survive the text format") {
    auto built = construct_dimension_exact(1.5);
    std::ostringstream out;
    write_graph_edgelist(out, built.graph);
    std::istringstream in(out.str());
    CHECK(same_view(built.graph, read_graph_edgelist(in)));
  }
  SECTION("one member of every family round trips") {
    std::vector<FamilySpec> specs{
        oracle::complete_spec(1), oracle::complete_spec(5),
        oracle::path_spec(6),     oracle::star_spec(5),
        oracle::cycle_spec(5),    oracle::lpq_spec(3, 4)};
    FamilySpec ds;
    ds.kind = FamilyKind::DoubleStar;
    ds.n = 2;
    ds.m = 3;
    ds.x = 2.5;
    specs.push_back(ds);
    FamilySpec ps;
    ps.kind = FamilyKind::PathPlusStar;
    ps.m = 4;
    ps.k = 5;
    specs.push_back(ps);
    for (const auto& spec : specs) {
      Graph g = generate(spec);
      std::ostringstream out;
      write_graph_edgelist(out, g);
      std::istringstream in(out.str());
      CHECK(same_view(g, read_graph_edgelist(in)));
      CHECK(same_view(g, graph_from_json(graph_to_json(g))));
    }
  }
}

TEST_CASE("matrix formats", "[io]") {
  SECTION("CSV with default point names") {
    std::istringstream in("0,1,2\n1,0,1\n2,1,0\n");
    auto x = read_matrix_csv(in);
    REQUIRE(x.size() == 3);
    CHECK(x.point(0) == "0");
    CHECK(x.dist(0, 2) == 2.0);
  }
  SECTION("JSON with names, and a round trip") {
    nlohmann::json j = {{"points", {"p", "q"}}, {"dist", {{0, 2}, {2, 0}}}};
    auto x = matrix_from_json(j);
    CHECK(x.point(1) == "q");
    auto back = matrix_to_json(x);
    auto y = matrix_from_json(back);
    CHECK(y.points() == x.points());
    CHECK(y.dist(0, 1) == x.dist(0, 1));
  }
  SECTION("validation failures propagate") {
    std::istringstream ragged("0,1\n1,0,2\n");
    REQUIRE_THROWS_AS(read_matrix_csv(ragged), ParseError);
    std::istringstream bad("0,1,3\n1,0,1\n3,1,0\n");
    REQUIRE_THROWS_AS(read_matrix_csv(bad), TriangleViolation);
  }
}

TEST_CASE("payload sniffing", "[io]") {
  CHECK(sniff_payload("a b\n") == PayloadKind::GraphEdgeList);
  CHECK(sniff_payload("# c\n\nx y 2\n") == PayloadKind::GraphEdgeList);
  CHECK(sniff_payload("0,1\n1,0\n") == PayloadKind::MatrixCsv);
  CHECK(sniff_payload("{\"vertices\":[\"a\"],\"edges\":[]}") ==
        PayloadKind::GraphJson);
  CHECK(sniff_payload("{\"dist\":[[0]]}") == PayloadKind::MatrixJson);
  REQUIRE_THROWS_AS(sniff_payload("   \n"), ParseError);
}
