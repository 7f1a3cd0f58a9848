#include "graphent/entropy.hpp"

#include <cmath>

#include "graphent/error.hpp"
#include "graphent/measures.hpp"

namespace graphent {
namespace {

double power_sum(const std::vector<double>& p, double alpha) {
  double s = 0.0;
  for (double x : p) {
    if (x > 0.0) s += std::pow(x, alpha);
  }
  return s;
}

double log_in_base(double x, double base) { return std::log(x) / std::log(base); }

void validate_log_base(double base) {
  if (!(base > 0.0) || base == 1.0 || !std::isfinite(base)) {
    throw Error(ErrorCode::InvalidArgument, "log base must be positive and != 1");
  }
}

void require_edges(const Graph& g, const MatrixKind& kind) {
  if (g.size() == 0) {
    throw Error(ErrorCode::EmptyEdgeSet, "closed form for " + to_string(kind) + " needs m >= 1");
  }
}

}  // namespace

void validate_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::AlphaNonPositive, "alpha must be a positive real");
  }
  if (alpha == 1.0) throw Error(ErrorCode::AlphaOne, "alpha = 1 is excluded");
}

ProbabilityVector normalize_weights(std::span<const double> weights, std::string origin,
                                    double log_base) {
  validate_log_base(log_base);
  if (weights.empty()) throw Error(ErrorCode::AllZeroWeights, "empty weight vector");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::InvalidArgument, "weights must be finite and nonnegative");
    }
    total += w;
  }
  if (total == 0.0) throw Error(ErrorCode::AllZeroWeights, "weights sum to zero");
  ProbabilityVector out{{}, std::move(origin), log_base};
  out.p.reserve(weights.size());
  for (double w : weights) out.p.push_back(w / total);
  return out;
}

ProbabilityVector probabilities_from_spectrum(const Spectrum& s, double log_base) {
  std::vector<double> magnitudes;
  magnitudes.reserve(s.size());
  for (double v : s.values) magnitudes.push_back(std::abs(v));
  if (s.sum_abs() == 0.0) {
    throw Error(ErrorCode::ZeroSpectrum,
                "all eigenvalues of " + (s.source.empty() ? std::string("matrix") : s.source) +
                    " are zero; entropy undefined");
  }
  return normalize_weights(magnitudes, "spectral:" + s.source, log_base);
}

double entropy_I1(const ProbabilityVector& p) {
  double s = 0.0;
  for (double x : p.p) s += x * x;
  return 1.0 - s;
}

double entropy_I2(const ProbabilityVector& p, double alpha) {
  validate_alpha(alpha);
  return log_in_base(power_sum(p.p, alpha), p.log_base) / (1.0 - alpha);
}

double entropy_I3(const ProbabilityVector& p, double alpha) {
  validate_alpha(alpha);
  return (power_sum(p.p, alpha) - 1.0) / (std::pow(2.0, 1.0 - alpha) - 1.0);
}

double shannon_entropy(const ProbabilityVector& p) {
  double h = 0.0;
  for (double x : p.p) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h / std::log(p.log_base);
}

double functional_entropy(std::span<const double> weights) {
  return shannon_entropy(normalize_weights(weights, "functional", kLogBase2));
}

int theorem_number(const MatrixKind& kind) {
  switch (kind.tag) {
    case MatrixTag::SignlessLaplacian: return 1;
    case MatrixTag::NormalizedLaplacian:
    case MatrixTag::NormalizedSignlessLaplacian: return 2;
    case MatrixTag::Incidence: return 3;
    case MatrixTag::Distance: return 4;
    case MatrixTag::SkewAdjacency: return 5;
    case MatrixTag::RandicAdjacency: return 6;
    case MatrixTag::RandicIncidence: return 7;
    case MatrixTag::GeneralRandic: return 8;
    case MatrixTag::SkewRandic: return 9;
  }
  return 0;
}

ClosedFormInputs closed_form_inputs(const MatrixKind& kind, const OrientedGraph& og) {
  const Graph& g = og.underlying();
  const double n = static_cast<double>(g.order());
  const double m = static_cast<double>(g.size());
  ClosedFormInputs in{kind, 0.0, 0.0, {}};

  if (kind.tag == MatrixTag::Distance) {
    if (!g.is_connected()) {
      throw Error(ErrorCode::DisconnectedGraph, "distance closed form needs a connected graph");
    }
    if (g.order() == 1) throw Error(ErrorCode::ZeroSpectrum, "distance matrix of K1 is zero");
  } else {
    require_edges(g, kind);
  }
  if ((kind.tag == MatrixTag::NormalizedLaplacian ||
       kind.tag == MatrixTag::NormalizedSignlessLaplacian) &&
      g.non_isolated_count() != g.order()) {
    throw Error(ErrorCode::HypothesisViolated,
                "normalized Laplacian closed form needs no isolated vertices");
  }

  in.spectrum = kind_spectrum(kind, og);
  const double energy_value = in.spectrum.sum_abs();
  const double e2 = energy_value * energy_value;
  switch (kind.tag) {
    case MatrixTag::SignlessLaplacian:
      in.trace_sum = 2.0 * m;
      in.i1 = 1.0 - (first_zagreb(g) + 2.0 * m) / (4.0 * m * m);
      break;
    case MatrixTag::NormalizedLaplacian:
    case MatrixTag::NormalizedSignlessLaplacian:
      in.trace_sum = n;
      in.i1 = 1.0 - (n + 2.0 * general_randic_index(g, -1.0)) / (n * n);
      break;
    case MatrixTag::Incidence:
      in.trace_sum = energy_value;
      in.i1 = 1.0 - 2.0 * m / e2;
      break;
    case MatrixTag::Distance: {
      const DistanceMoments dm = distance_moments(g);
      in.trace_sum = energy_value;
      in.i1 = 1.0 - 4.0 * (2.0 * dm.hyper_wiener - dm.wiener) / e2;
      break;
    }
    case MatrixTag::SkewAdjacency:
      in.trace_sum = energy_value;
      in.i1 = 1.0 - 2.0 * m / e2;
      break;
    case MatrixTag::RandicAdjacency:
    case MatrixTag::SkewRandic:
      in.trace_sum = energy_value;
      in.i1 = 1.0 - 2.0 * general_randic_index(g, -1.0) / e2;
      break;
    case MatrixTag::RandicIncidence:
      in.trace_sum = energy_value;
      in.i1 = 1.0 - static_cast<double>(g.non_isolated_count()) / e2;
      break;
    case MatrixTag::GeneralRandic:
      in.trace_sum = energy_value;
      in.i1 = 1.0 - 2.0 * general_randic_index(g, 2.0 * kind.beta) / e2;
      break;
  }
  return in;
}

ClosedFormInputs closed_form_inputs(const MatrixKind& kind, const Graph& g) {
  if (kind.needs_orientation()) {
    throw Error(ErrorCode::NotOriented, to_string(kind) + " needs an oriented graph");
  }
  return closed_form_inputs(kind, OrientedGraph::canonical(g));
}

EntropyTriple closed_form(const ClosedFormInputs& in, double alpha, double log_base) {
  validate_alpha(alpha);
  validate_log_base(log_base);
  const double ratio = spectral_moment(in.spectrum, alpha) / std::pow(in.trace_sum, alpha);
  EntropyTriple out;
  out.i1 = in.i1;
  out.i2 = log_in_base(ratio, log_base) / (1.0 - alpha);
  out.i3 = (ratio - 1.0) / (std::pow(2.0, 1.0 - alpha) - 1.0);
  return out;
}

EntropyTriple closed_form(const MatrixKind& kind, const OrientedGraph& g, double alpha,
                          double log_base) {
  return closed_form(closed_form_inputs(kind, g), alpha, log_base);
}

EntropyTriple closed_form(const MatrixKind& kind, const Graph& g, double alpha, double log_base) {
  return closed_form(closed_form_inputs(kind, g), alpha, log_base);
}

}  // namespace graphent
