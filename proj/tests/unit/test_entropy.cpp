#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "graphent/entropy.hpp"
#include "graphent/error.hpp"
#include "graphent/generators.hpp"
#include "graphent/measures.hpp"
#include "oracles.hpp"

using namespace graphent;
using doctest::Approx;

namespace {

ProbabilityVector uniform(std::size_t n, double base = kLogBase2) {
  return ProbabilityVector{std::vector<double>(n, 1.0 / static_cast<double>(n)), "test", base};
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected graphent::Error");
  return ErrorCode::InvalidArgument;
}

MatrixKind kind(std::string_view s) { return parse_matrix_kind(s).value(); }

}  // namespace

TEST_CASE("probabilities_from_spectrum") {
  ProbabilityVector p = probabilities_from_spectrum(Spectrum{{4, 1, 1}, SpectrumKind::Eigenvalues, "q"});
  CHECK(p.p[0] == Approx(2.0 / 3));
  CHECK(p.p[1] == Approx(1.0 / 6));
  CHECK(p.p[2] == Approx(1.0 / 6));
  CHECK(p.origin == "spectral:q");
  CHECK(probabilities_from_spectrum(Spectrum{{-3.5}, SpectrumKind::Eigenvalues, ""}).p ==
        std::vector<double>{1.0});
  CHECK(code_of([] { probabilities_from_spectrum(Spectrum{{0, 0}, SpectrumKind::Eigenvalues, ""}); }) ==
        ErrorCode::ZeroSpectrum);
}

TEST_CASE("I1") {
  for (std::size_t n = 1; n <= 8; ++n) CHECK(entropy_I1(uniform(n)) == Approx(1.0 - 1.0 / n));
  CHECK(entropy_I1(uniform(1)) == 0.0);
  ProbabilityVector q = probabilities_from_spectrum(Spectrum{{4, 1, 1}, SpectrumKind::Eigenvalues, ""});
  CHECK(entropy_I1(q) == Approx(0.5));
}

TEST_CASE("I2") {
  for (double alpha : {0.25, 0.5, 2.0, 3.0, 7.5}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      CHECK(entropy_I2(uniform(n), alpha) == Approx(std::log2(static_cast<double>(n))));
    }
  }
  ProbabilityVector q = probabilities_from_spectrum(Spectrum{{4, 1, 1}, SpectrumKind::Eigenvalues, ""});
  CHECK(entropy_I2(q, 2.0) == Approx(1.0));
  CHECK(entropy_I2(uniform(3, kLogBaseE), 2.0) == Approx(std::log(3.0)));
  CHECK(code_of([&] { entropy_I2(q, 1.0); }) == ErrorCode::AlphaOne);
  CHECK(code_of([&] { entropy_I2(q, 0.0); }) == ErrorCode::AlphaNonPositive);
  CHECK(code_of([&] { entropy_I2(q, -2.0); }) == ErrorCode::AlphaNonPositive);
}

TEST_CASE("I3") {
  for (double alpha : {0.3, 0.5, 2.0, 3.0}) {
    CHECK(entropy_I3(uniform(2), alpha) == Approx(1.0));
    CHECK(entropy_I3(uniform(1), alpha) == 0.0);
  }
  ProbabilityVector q = probabilities_from_spectrum(Spectrum{{4, 1, 1}, SpectrumKind::Eigenvalues, ""});
  CHECK(entropy_I3(q, 2.0) == Approx(1.0));
  CHECK(code_of([&] { entropy_I3(q, 1.0); }) == ErrorCode::AlphaOne);
  CHECK(code_of([&] { entropy_I3(q, 0.0); }) == ErrorCode::AlphaNonPositive);
}

TEST_CASE("functional entropy") {
  for (std::size_t n = 2; n <= 7; ++n) {
    Graph kn = make_family(Family::Complete, n);
    std::vector<double> deg(kn.degrees().begin(), kn.degrees().end());
    CHECK(functional_entropy(deg) == Approx(std::log2(static_cast<double>(n))));
  }
  CHECK(functional_entropy(std::vector<double>{1, 0}) == 0.0);
  // H(1/2, 1/6, 1/6, 1/6) = 1/2 + 1/2 log2 6
  Graph s4 = make_family(Family::Star, 4);
  std::vector<double> deg(s4.degrees().begin(), s4.degrees().end());
  CHECK(functional_entropy(deg) == Approx(0.5 + 0.5 * std::log2(6.0)));
  CHECK(functional_entropy(deg) == Approx(1.7925).epsilon(1e-4));
  CHECK(code_of([] { functional_entropy(std::vector<double>{0, 0}); }) == ErrorCode::AllZeroWeights);
  CHECK(code_of([] { functional_entropy(std::vector<double>{1, -1}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("entropy properties on random vectors") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 9;
    std::vector<double> w(n);
    for (double& x : w) x = u(rng) < 0.2 ? 0.0 : u(rng);
    if (std::all_of(w.begin(), w.end(), [](double x) { return x == 0.0; })) w[0] = 1.0;
    ProbabilityVector p = normalize_weights(w, "random");

    const double i1 = entropy_I1(p);
    CHECK(i1 >= -1e-15);
    CHECK(i1 <= 1.0 - 1.0 / static_cast<double>(n) + 1e-15);

    ProbabilityVector shuffled = p;
    std::shuffle(shuffled.p.begin(), shuffled.p.end(), rng);
    for (double alpha : {0.5, 2.0, 3.0}) {
      CHECK(entropy_I2(shuffled, alpha) == Approx(entropy_I2(p, alpha)).epsilon(1e-12));
      CHECK(entropy_I3(shuffled, alpha) == Approx(entropy_I3(p, alpha)).epsilon(1e-12));
    }
    // Renyi order -> 1 approaches Shannon
    for (double alpha : {1.0 - 1e-4, 1.0 + 1e-4}) {
      CHECK(std::abs(entropy_I2(p, alpha) - shannon_entropy(p)) <= 1e-3);
    }
  }
}

TEST_CASE("I1 maximum is attained only by the uniform vector") {
  for (std::size_t n = 2; n <= 6; ++n) {
    CHECK(entropy_I1(uniform(n)) == Approx(1.0 - 1.0 / n));
    std::vector<double> w(n, 1.0);
    w[0] = 1.001;
    CHECK(entropy_I1(normalize_weights(w, "")) < 1.0 - 1.0 / n);
  }
}

TEST_CASE("closed form examples") {
  EntropyTriple q = closed_form(kind("q"), make_family(Family::Complete, 3), 2.0);
  CHECK(q.i1 == Approx(0.5).epsilon(1e-12));
  CHECK(q.i2 == Approx(1.0).epsilon(1e-12));
  CHECK(q.i3 == Approx(1.0).epsilon(1e-12));

  for (double alpha : {0.5, 2.0, 3.0}) {
    CHECK(closed_form(kind("norm-l"), make_family(Family::Star, 4), alpha).i1 == Approx(0.625));
    CHECK(closed_form(kind("norm-q"), make_family(Family::Star, 4), alpha).i1 == Approx(0.625));
  }
  CHECK(closed_form(kind("distance"), make_family(Family::Path, 3), 2.0).i1 ==
        Approx(1.0 - 3.0 / (4.0 + 2.0 * std::sqrt(3.0))).epsilon(1e-12));
  CHECK(closed_form(kind("distance"), make_family(Family::Path, 3), 2.0).i1 ==
        Approx(0.5980762).epsilon(1e-7));
  CHECK(closed_form(kind("incidence"), make_family(Family::Complete, 2), 2.0).i1 ==
        Approx(0.0).epsilon(1e-12));
}

TEST_CASE("closed form hypotheses") {
  CHECK(code_of([] { closed_form(kind("q"), Graph(3), 2.0); }) == ErrorCode::EmptyEdgeSet);
  CHECK(code_of([] { closed_form(kind("incidence"), Graph(3), 2.0); }) == ErrorCode::EmptyEdgeSet);
  CHECK(code_of([] { closed_form(kind("distance"), make_family(Family::Matching, 4), 2.0); }) ==
        ErrorCode::DisconnectedGraph);
  CHECK(code_of([] { closed_form(kind("distance"), Graph(1), 2.0); }) == ErrorCode::ZeroSpectrum);
  CHECK(code_of([] {
          closed_form(kind("norm-l"), Graph(3, std::vector<Edge>{{0, 1}}), 2.0);
        }) == ErrorCode::HypothesisViolated);
  CHECK(code_of([] { closed_form(kind("skew"), make_family(Family::Path, 3), 2.0); }) ==
        ErrorCode::NotOriented);
  CHECK(code_of([] { closed_form(kind("q"), make_family(Family::Path, 3), 1.0); }) ==
        ErrorCode::AlphaOne);
}

TEST_CASE("spectral route equals closed form on small families") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (Family f : {Family::Complete, Family::Path, Family::Star}) {
      OrientedGraph og = random_orientation(make_family(f, n), n);
      for (const MatrixKind& k : all_matrix_kinds(1.0)) {
        ProbabilityVector p = probabilities_from_spectrum(kind_spectrum(k, og));
        ClosedFormInputs in = closed_form_inputs(k, og);
        for (double alpha : {0.5, 2.0, 3.0}) {
          EntropyTriple c = closed_form(in, alpha);
          CHECK(oracle::close(entropy_I1(p), c.i1));
          CHECK(oracle::close(entropy_I2(p, alpha), c.i2));
          CHECK(oracle::close(entropy_I3(p, alpha), c.i3));
        }
      }
    }
  }
}
