#include "graphent/measures.hpp"

#include <charconv>
#include <cmath>

#include "graphent/error.hpp"

namespace graphent {
namespace {

double parse_real_suffix(std::string_view name, std::string_view prefix) {
  const std::string_view num = name.substr(prefix.size());
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), x);
  if (num.empty() || ec != std::errc{} || ptr != num.data() + num.size() || !std::isfinite(x)) {
    throw Error(ErrorCode::InvalidArgument, "bad numeric parameter in measure '" +
                                                std::string(name) + "'");
  }
  return x;
}

Spectrum spectrum_of_matrix(const MatrixKind& kind, const DenseMatrix& m, std::size_t n) {
  std::string tag = to_string(kind);
  switch (kind.tag) {
    case MatrixTag::Incidence:
    case MatrixTag::RandicIncidence:
      return singular_values(m, n, std::move(tag));
    case MatrixTag::SkewAdjacency:
    case MatrixTag::SkewRandic:
      return skew_absolute_eigenvalues(m, std::move(tag));
    default:
      return symmetric_eigenvalues(m, std::move(tag));
  }
}

}  // namespace

double first_zagreb(const Graph& g) {
  double s = 0.0;
  for (std::size_t d : g.degrees()) s += static_cast<double>(d * d);
  return s;
}

double general_randic_index(const Graph& g, double beta) {
  double s = 0.0;
  for (const Edge& e : g.edges()) s += randic_weight(g.degree(e.u), g.degree(e.v), beta);
  return s;
}

DistanceMoments distance_moments(const Graph& g) {
  const DistanceTable d = distances(g);
  double w1 = 0.0, w2 = 0.0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = i + 1; j < g.order(); ++j) {
      const double x = d(i, j);
      w1 += x;
      w2 += x * x;
    }
  }
  DistanceMoments out;
  out.wiener = 0.5 * w1;
  out.second = 0.5 * w2;
  out.hyper_wiener = 0.5 * (out.second + out.wiener);
  return out;
}

double distance_moment(const Graph& g, double k) {
  const DistanceTable d = distances(g);
  double s = 0.0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = i + 1; j < g.order(); ++j) s += std::pow(static_cast<double>(d(i, j)), k);
  }
  return 0.5 * s;
}

Spectrum kind_spectrum(const MatrixKind& kind, const Graph& g) {
  return spectrum_of_matrix(kind, build(kind, g), g.order());
}

Spectrum kind_spectrum(const MatrixKind& kind, const OrientedGraph& g) {
  return spectrum_of_matrix(kind, build(kind, g), g.underlying().order());
}

double energy(const MatrixKind& kind, const Graph& g) { return kind_spectrum(kind, g).sum_abs(); }

double energy(const MatrixKind& kind, const OrientedGraph& g) {
  return kind_spectrum(kind, g).sum_abs();
}

IndexValue evaluate_measure(std::string_view name, const OrientedGraph& og) {
  const Graph& g = og.underlying();
  const std::string key(name);
  if (name == "m1") return {key, first_zagreb(g)};
  if (name == "wiener") return {key, distance_moments(g).wiener};
  if (name == "hyper-wiener") return {key, distance_moments(g).hyper_wiener};
  if (name.starts_with("randic-index:")) {
    return {key, general_randic_index(g, parse_real_suffix(name, "randic-index:"))};
  }
  if (name.starts_with("wk:")) return {key, distance_moment(g, parse_real_suffix(name, "wk:"))};
  if (name.starts_with("energy:")) {
    const auto kind = parse_matrix_kind(name.substr(7));
    if (!kind) throw Error(ErrorCode::InvalidArgument, "unknown matrix kind in '" + key + "'");
    return {key, energy(*kind, og)};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown measure '" + key + "'");
}

}  // namespace graphent
