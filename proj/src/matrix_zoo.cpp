#include "graphent/matrix_zoo.hpp"

#include <charconv>
#include <cmath>

#include "graphent/error.hpp"

namespace graphent {
namespace {

DenseMatrix edge_weighted(const Graph& g, double beta) {
  DenseMatrix m(g.order(), g.order());
  for (const Edge& e : g.edges()) {
    const double w = randic_weight(g.degree(e.u), g.degree(e.v), beta);
    m(e.u, e.v) = m(e.v, e.u) = w;
  }
  return m;
}

DenseMatrix normalized_laplacian(const Graph& g, double off_sign) {
  const std::size_t n = g.order();
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = g.degree(i) > 0 ? 1.0 : 0.0;
  for (const Edge& e : g.edges()) {
    const double w = off_sign * randic_weight(g.degree(e.u), g.degree(e.v), -0.5);
    m(e.u, e.v) = m(e.v, e.u) = w;
  }
  return m;
}

DenseMatrix incidence(const Graph& g, bool randic) {
  if (g.size() == 0) throw Error(ErrorCode::EmptyEdgeSet, "incidence matrix needs m >= 1");
  DenseMatrix m(g.order(), g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Edge& e = g.edges()[k];
    m(e.u, k) = randic ? inverse_sqrt_degree(g.degree(e.u)) : 1.0;
    m(e.v, k) = randic ? inverse_sqrt_degree(g.degree(e.v)) : 1.0;
  }
  return m;
}

DenseMatrix distance_matrix(const Graph& g) {
  const DistanceTable d = distances(g);
  const std::size_t n = g.order();
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(i, j);
  }
  return m;
}

DenseMatrix skew(const OrientedGraph& og, bool randic) {
  const Graph& g = og.underlying();
  DenseMatrix m(g.order(), g.order());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Edge& e = g.edges()[k];
    const double w = randic ? randic_weight(g.degree(e.u), g.degree(e.v), -0.5) : 1.0;
    const double s = og.forward()[k] ? w : -w;
    m(e.u, e.v) = s;
    m(e.v, e.u) = -s;
  }
  return m;
}

std::string format_beta(double beta) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, beta);
  return std::string(buf, end);
}

}  // namespace

double inverse_sqrt_degree(std::size_t d) {
  return d == 0 ? 0.0 : 1.0 / std::sqrt(static_cast<double>(d));
}

double randic_weight(std::size_t di, std::size_t dj, double beta) {
  const double prod = static_cast<double>(di) * static_cast<double>(dj);
  if (beta == -0.5) return 1.0 / std::sqrt(prod);
  return std::pow(prod, beta);
}

std::string to_string(const MatrixKind& kind) {
  switch (kind.tag) {
    case MatrixTag::SignlessLaplacian: return "q";
    case MatrixTag::NormalizedLaplacian: return "norm-l";
    case MatrixTag::NormalizedSignlessLaplacian: return "norm-q";
    case MatrixTag::Incidence: return "incidence";
    case MatrixTag::Distance: return "distance";
    case MatrixTag::SkewAdjacency: return "skew";
    case MatrixTag::RandicAdjacency: return "randic";
    case MatrixTag::RandicIncidence: return "randic-incidence";
    case MatrixTag::GeneralRandic: return "general-randic:" + format_beta(kind.beta);
    case MatrixTag::SkewRandic: return "skew-randic";
  }
  return "unknown";
}

std::optional<MatrixKind> parse_matrix_kind(std::string_view name) {
  constexpr std::string_view kGeneral = "general-randic:";
  if (name.starts_with(kGeneral)) {
    const std::string_view num = name.substr(kGeneral.size());
    double beta = 0.0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), beta);
    if (num.empty() || ec != std::errc{} || ptr != num.data() + num.size() || !std::isfinite(beta)) {
      return std::nullopt;
    }
    return MatrixKind{MatrixTag::GeneralRandic, beta};
  }
  if (name == "q") return MatrixKind{MatrixTag::SignlessLaplacian};
  if (name == "norm-l") return MatrixKind{MatrixTag::NormalizedLaplacian};
  if (name == "norm-q") return MatrixKind{MatrixTag::NormalizedSignlessLaplacian};
  if (name == "incidence") return MatrixKind{MatrixTag::Incidence};
  if (name == "distance") return MatrixKind{MatrixTag::Distance};
  if (name == "skew") return MatrixKind{MatrixTag::SkewAdjacency};
  if (name == "randic") return MatrixKind{MatrixTag::RandicAdjacency};
  if (name == "randic-incidence") return MatrixKind{MatrixTag::RandicIncidence};
  if (name == "skew-randic") return MatrixKind{MatrixTag::SkewRandic};
  return std::nullopt;
}

std::vector<MatrixKind> all_matrix_kinds(double general_randic_beta) {
  return {
      {MatrixTag::SignlessLaplacian},
      {MatrixTag::NormalizedLaplacian},
      {MatrixTag::NormalizedSignlessLaplacian},
      {MatrixTag::Incidence},
      {MatrixTag::Distance},
      {MatrixTag::SkewAdjacency},
      {MatrixTag::RandicAdjacency},
      {MatrixTag::RandicIncidence},
      {MatrixTag::GeneralRandic, general_randic_beta},
      {MatrixTag::SkewRandic},
  };
}

DenseMatrix adjacency_matrix(const Graph& g) {
  DenseMatrix m(g.order(), g.order());
  for (const Edge& e : g.edges()) m(e.u, e.v) = m(e.v, e.u) = 1.0;
  return m;
}

DenseMatrix degree_matrix(const Graph& g) {
  DenseMatrix m(g.order(), g.order());
  for (std::size_t i = 0; i < g.order(); ++i) m(i, i) = static_cast<double>(g.degree(i));
  return m;
}

DenseMatrix build(const MatrixKind& kind, const Graph& g) {
  switch (kind.tag) {
    case MatrixTag::SignlessLaplacian: return degree_matrix(g) + adjacency_matrix(g);
    case MatrixTag::NormalizedLaplacian: return normalized_laplacian(g, -1.0);
    case MatrixTag::NormalizedSignlessLaplacian: return normalized_laplacian(g, 1.0);
    case MatrixTag::Incidence: return incidence(g, false);
    case MatrixTag::Distance: return distance_matrix(g);
    case MatrixTag::RandicAdjacency: return edge_weighted(g, -0.5);
    case MatrixTag::RandicIncidence: return incidence(g, true);
    case MatrixTag::GeneralRandic: return edge_weighted(g, kind.beta);
    case MatrixTag::SkewAdjacency:
    case MatrixTag::SkewRandic:
      throw Error(ErrorCode::NotOriented, to_string(kind) + " needs an oriented graph");
  }
  throw Error(ErrorCode::InvalidArgument, "unknown matrix kind");
}

DenseMatrix build(const MatrixKind& kind, const OrientedGraph& g) {
  switch (kind.tag) {
    case MatrixTag::SkewAdjacency: return skew(g, false);
    case MatrixTag::SkewRandic: return skew(g, true);
    default: return build(kind, g.underlying());
  }
}

}  // namespace graphent
