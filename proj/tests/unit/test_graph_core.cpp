#include <numeric>
#include <set>

#include "doctest.h"
#include "graphent/error.hpp"
#include "graphent/generators.hpp"
#include "graphent/graph.hpp"
#include "graphent/graph_io.hpp"

using namespace graphent;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected graphent::Error");
  return ErrorCode::InvalidArgument;
}

std::vector<Edge> edges_of(std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<Edge> out;
  for (auto [u, v] : pairs) out.push_back({u, v});
  return out;
}

}  // namespace

TEST_CASE("graph construction normalizes and validates") {
  const auto e = edges_of({{2, 1}, {1, 2}, {0, 1}});
  Graph g(3, e);
  CHECK(g.size() == 2);
  CHECK(g.edges()[0] == Edge{0, 1});
  CHECK(g.edges()[1] == Edge{1, 2});
  CHECK(g.degrees() == std::vector<std::size_t>{1, 2, 1});

  CHECK(code_of([] { Graph(0); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { Graph(2, edges_of({{0, 2}})); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { Graph(2, edges_of({{1, 1}})); }) == ErrorCode::LoopEdge);
}

TEST_CASE("parse_edge_list") {
  SUBCASE("path P3") {
    Graph g = parse_edge_list("0 1\n1 2");
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);
    CHECK(is_path(g));
  }
  SUBCASE("header declares isolated vertices") {
    Graph g = parse_edge_list("n 4\n0 1\n");
    CHECK(g.order() == 4);
    CHECK(g.size() == 1);
    CHECK(g.non_isolated_count() == 2);
  }
  SUBCASE("comments, blanks and duplicates") {
    Graph g = parse_edge_list("# triangle\n\n0 1\n1 2\r\n2 0\n1 0\n");
    CHECK(g.size() == 3);
  }
  SUBCASE("empty document is K1") { CHECK(parse_edge_list("").order() == 1); }
  SUBCASE("errors") {
    CHECK(code_of([] { parse_edge_list("0 0"); }) == ErrorCode::LoopEdge);
    CHECK(code_of([] { parse_edge_list("0 x"); }) == ErrorCode::MalformedToken);
    CHECK(code_of([] { parse_edge_list("0 1 2"); }) == ErrorCode::MalformedToken);
    CHECK(code_of([] { parse_edge_list("0 -3"); }) == ErrorCode::NegativeIndex);
    CHECK(code_of([] { parse_edge_list("0 1.5"); }) == ErrorCode::MalformedToken);
  }
}

TEST_CASE("parse_arc_list") {
  OrientedGraph k2 = parse_arc_list("0 1");
  CHECK(k2.underlying().size() == 1);
  CHECK(k2.direction(0, 1) == 1);
  CHECK(k2.direction(1, 0) == -1);

  OrientedGraph tri = parse_arc_list("0 1\n1 2\n2 0");
  CHECK(tri.underlying().size() == 3);
  CHECK(tri.direction(2, 0) == 1);
  CHECK(tri.direction(0, 2) == -1);
  CHECK(tri.direction(0, 0) == 0);

  CHECK(code_of([] { parse_arc_list("0 1\n1 0"); }) == ErrorCode::ContradictoryArcs);
  CHECK(code_of([] { parse_arc_list("2 2"); }) == ErrorCode::LoopEdge);
  CHECK(parse_arc_list(to_arc_list(tri)) == tri);
}

TEST_CASE("graph6 decoding") {
  CHECK(parse_graph6("A_") == make_family(Family::Complete, 2));
  CHECK(parse_graph6("A?") == Graph(2));
  CHECK(parse_graph6("@") == Graph(1));
  CHECK(parse_graph6("D??") == Graph(5));
  CHECK(parse_graph6("A_\n") == make_family(Family::Complete, 2));

  // strings produced by networkx.to_graph6_bytes
  CHECK(parse_graph6("Ch") == make_family(Family::Path, 4));
  CHECK(parse_graph6("C~") == make_family(Family::Complete, 4));
  CHECK(parse_graph6("Ds_") == make_family(Family::Star, 5));
  CHECK(parse_graph6("Dhc") == make_family(Family::Cycle, 5));
  Graph petersen = parse_graph6("IheA@GUAo");
  CHECK(petersen.order() == 10);
  CHECK(petersen.size() == 15);
  CHECK(is_regular(petersen));
  CHECK(petersen.has_edge(5, 7));
  CHECK(encode_graph6(petersen) == "IheA@GUAo");

  CHECK(code_of([] { parse_graph6("D???"); }) == ErrorCode::TrailingBytes);
  CHECK(code_of([] { parse_graph6("D?"); }) == ErrorCode::TruncatedBitStream);
  CHECK(code_of([] { parse_graph6("A "); }) == ErrorCode::ByteOutOfRange);
  CHECK(code_of([] { parse_graph6(""); }) == ErrorCode::TruncatedBitStream);
  CHECK(code_of([] { parse_graph6("~"); }) == ErrorCode::OutOfRange);
}

TEST_CASE("graph6 round trip over all labeled graphs n <= 6") {
  for (std::size_t n = 1; n <= 6; ++n) {
    LabeledGraphs all(n);
    std::set<std::string> seen;
    all.for_each([&](const Graph& g) {
      const std::string code = encode_graph6(g);
      REQUIRE(parse_graph6(code) == g);
      seen.insert(code);
    });
    CHECK(seen.size() == all.count());
  }
}

TEST_CASE("labeled graph enumeration") {
  CHECK(LabeledGraphs(1).count() == 1);
  CHECK(LabeledGraphs(3).count() == 8);
  CHECK(LabeledGraphs(6).count() == 32768);
  CHECK(LabeledGraphs(1).at(0) == Graph(1));
  // bit k <-> k-th lexicographic pair
  CHECK(LabeledGraphs(3).at(0b100) == Graph(3, edges_of({{1, 2}})));
  CHECK(LabeledGraphs(3).at(7) == make_family(Family::Complete, 3));
  CHECK(code_of([] { LabeledGraphs(0); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { LabeledGraphs(8); }) == ErrorCode::OutOfRange);

  // handshake on every graph, edge count distribution is binomial
  std::vector<std::uint64_t> by_m(11, 0);
  LabeledGraphs(5).for_each([&](const Graph& g) {
    const auto& d = g.degrees();
    CHECK(std::accumulate(d.begin(), d.end(), std::size_t{0}) == 2 * g.size());
    ++by_m[g.size()];
  });
  CHECK(by_m[0] == 1);
  CHECK(by_m[5] == 252);
  CHECK(by_m[10] == 1);
}

TEST_CASE("labeled tree enumeration") {
  CHECK(LabeledTrees(2).count() == 1);
  CHECK(LabeledTrees(2).at(0) == make_family(Family::Complete, 2));
  CHECK(code_of([] { LabeledTrees(1); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { LabeledTrees(10); }) == ErrorCode::OutOfRange);

  LabeledTrees three(3);
  CHECK(three.count() == 3);
  three.for_each([](const Graph& t) { CHECK(is_path(t)); });

  for (std::size_t n = 4; n <= 7; ++n) {
    LabeledTrees trees(n);
    std::set<std::vector<Edge>> distinct;
    trees.for_each([&](const Graph& t) {
      REQUIRE(t.size() == n - 1);
      REQUIRE(t.is_connected());
      distinct.insert(t.edges());
    });
    CHECK(distinct.size() == trees.count());
  }
  CHECK(LabeledTrees(4).count() == 16);
  CHECK(LabeledTrees(8).count() == 262144);
}

TEST_CASE("distances") {
  DistanceTable p3 = distances(make_family(Family::Path, 3));
  const std::uint32_t expected[3][3] = {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(p3(i, j) == expected[i][j]);
  }
  DistanceTable k4 = distances(make_family(Family::Complete, 4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(k4(i, j) == (i == j ? 0U : 1U));
  }
  CHECK(distances(make_family(Family::Path, 7))(0, 6) == 6);
  CHECK(code_of([] { distances(make_family(Family::Matching, 4)); }) ==
        ErrorCode::DisconnectedGraph);

  // symmetry and triangle inequality over connected graphs on 5 vertices
  LabeledGraphs(5).for_each([](const Graph& g) {
    if (!g.is_connected()) return;
    DistanceTable d = distances(g);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        REQUIRE(d(i, j) == d(j, i));
        if (i != j) REQUIRE(d(i, j) >= 1);
        for (std::size_t k = 0; k < 5; ++k) REQUIRE(d(i, j) <= d(i, k) + d(k, j));
      }
    }
  });
}

TEST_CASE("families and random generators") {
  CHECK(make_family(Family::Star, 4).degrees() == std::vector<std::size_t>{3, 1, 1, 1});
  Graph m4 = make_family(Family::Matching, 4);
  CHECK(m4.size() == 2);
  CHECK(is_perfect_matching(m4));
  CHECK(make_family(Family::Cycle, 5).size() == 5);
  CHECK(is_regular(make_family(Family::Cycle, 6)));
  CHECK(code_of([] { make_family(Family::Matching, 5); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_family(Family::Cycle, 2); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_family(Family::Path, 0); }) == ErrorCode::InvalidArgument);

  CHECK(random_gnp(8, 0.5, 1) == random_gnp(8, 0.5, 1));
  CHECK(random_gnp(8, 0.0, 3).size() == 0);
  CHECK(random_gnp(8, 1.0, 3).size() == 28);
  CHECK(code_of([] { random_gnp(4, 1.5, 0); }) == ErrorCode::InvalidArgument);

  Graph g = random_gnp(12, 0.4, 99);
  CHECK(random_orientation(g, 5) == random_orientation(g, 5));
  OrientedGraph og = random_orientation(g, 5);
  for (const Edge& e : g.edges()) CHECK(og.direction(e.u, e.v) == -og.direction(e.v, e.u));
}

TEST_CASE("structural predicates") {
  CHECK(is_star(make_family(Family::Star, 5)));
  CHECK_FALSE(is_star(make_family(Family::Path, 5)));
  CHECK(is_star(make_family(Family::Path, 3)));
  CHECK(is_path(make_family(Family::Path, 6)));
  CHECK_FALSE(is_path(make_family(Family::Star, 4)));
  CHECK(is_matching_plus_p3(parse_edge_list("0 1\n1 2\n3 4")));
  CHECK_FALSE(is_matching_plus_p3(parse_edge_list("0 1\n2 3\n3 4\n4 5")));
  CHECK(is_complete(make_family(Family::Complete, 5)));
}
