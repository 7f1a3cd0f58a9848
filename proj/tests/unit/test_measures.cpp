#include <cmath>

#include "doctest.h"
#include "graphent/error.hpp"
#include "graphent/generators.hpp"
#include "graphent/graph_io.hpp"
#include "graphent/measures.hpp"
#include "oracles.hpp"

using namespace graphent;
using doctest::Approx;

TEST_CASE("first Zagreb index") {
  CHECK(first_zagreb(make_family(Family::Complete, 3)) == 12);
  CHECK(first_zagreb(make_family(Family::Star, 4)) == 12);
  CHECK(first_zagreb(Graph(5)) == 0);
}

TEST_CASE("general Randic index") {
  for (std::size_t n = 2; n <= 9; ++n) {
    CHECK(general_randic_index(make_family(Family::Star, n), -1.0) == Approx(1.0));
  }
  CHECK(general_randic_index(make_family(Family::Path, 4), -1.0) == Approx(1.25));
  Graph g = parse_edge_list("0 1\n1 2\n2 3\n3 0\n0 2\n4 5");
  CHECK(general_randic_index(g, 0.0) == g.size());
  CHECK(general_randic_index(Graph(3), -1.0) == 0.0);
}

TEST_CASE("distance moments use the half-sum convention") {
  DistanceMoments p3 = distance_moments(make_family(Family::Path, 3));
  CHECK(p3.wiener == 2.0);
  CHECK(p3.second == 3.0);
  CHECK(p3.hyper_wiener == 2.5);
  for (std::size_t n = 2; n <= 8; ++n) {
    const double nn = static_cast<double>(n);
    CHECK(distance_moments(make_family(Family::Complete, n)).wiener == nn * (nn - 1) / 4);
  }
  DistanceMoments k2 = distance_moments(make_family(Family::Complete, 2));
  CHECK(k2.wiener == 0.5);
  CHECK(k2.second == 0.5);
  CHECK(k2.hyper_wiener == 0.5);
  CHECK(distance_moment(make_family(Family::Path, 3), 3.0) == 5.0);
  CHECK_THROWS_AS(distance_moments(make_family(Family::Matching, 4)), Error);

  LabeledGraphs(5).for_each([](const Graph& g) {
    if (!g.is_connected()) return;
    DistanceMoments dm = distance_moments(g);
    REQUIRE(dm.second == 2 * dm.hyper_wiener - dm.wiener);
    REQUIRE(distance_moment(g, 2.0) == dm.second);
  });
}

TEST_CASE("energy examples") {
  auto k = [](std::string_view s) { return parse_matrix_kind(s).value(); };
  CHECK(energy(k("incidence"), make_family(Family::Complete, 2)) == Approx(std::sqrt(2.0)));
  CHECK(energy(k("skew"), parse_arc_list("0 1")) == Approx(2.0));
  CHECK(energy(k("randic"), make_family(Family::Complete, 3)) == Approx(2.0));
  CHECK(energy(k("distance"), make_family(Family::Path, 3)) == Approx(2 + 2 * std::sqrt(3.0)));
  CHECK_THROWS_AS(energy(k("skew"), make_family(Family::Path, 3)), Error);
}

TEST_CASE("energy invariants over n <= 5") {
  auto k = [](std::string_view s) { return parse_matrix_kind(s).value(); };
  for (std::size_t n = 1; n <= 5; ++n) {
    LabeledGraphs(n).for_each([&](const Graph& g) {
      if (g.size() == 0) return;
      const double ie = energy(k("incidence"), g);
      CHECK(ie * ie <= static_cast<double>(n * 2 * g.size()) * (1 + 1e-12));

      Spectrum adj = symmetric_eigenvalues(adjacency_matrix(g));
      CHECK(oracle::close(energy(k("general-randic:0"), g), adj.sum_abs()));

      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        OrientedGraph og = random_orientation(g, seed);
        CHECK(oracle::close(kind_spectrum(k("skew"), og).sum_squares(), 2.0 * g.size()));
      }
    });
  }
}

TEST_CASE("named measures") {
  OrientedGraph p3 = OrientedGraph::canonical(make_family(Family::Path, 3));
  CHECK(evaluate_measure("m1", p3).value == 6);
  CHECK(evaluate_measure("randic-index:-1", p3).value == Approx(1.0));
  CHECK(evaluate_measure("wiener", p3).value == 2);
  CHECK(evaluate_measure("hyper-wiener", p3).value == 2.5);
  CHECK(evaluate_measure("wk:2", p3).value == 3);
  CHECK(evaluate_measure("energy:skew", p3).value == Approx(2 * std::sqrt(2.0)));
  CHECK(evaluate_measure("energy:distance", p3).name == "energy:distance");
  CHECK_THROWS_AS(evaluate_measure("m2", p3), Error);
  CHECK_THROWS_AS(evaluate_measure("energy:bogus", p3), Error);
  CHECK_THROWS_AS(evaluate_measure("wk:", p3), Error);
}
