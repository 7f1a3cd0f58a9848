#pragma once

#include <span>
#include <string>
#include <vector>

#include "graphent/graph.hpp"
#include "graphent/matrix_zoo.hpp"
#include "graphent/spectra.hpp"

namespace graphent {

inline constexpr double kLogBase2 = 2.0;
inline constexpr double kLogBaseE = 2.718281828459045;

/// Normalized nonnegative weights. log_base applies to the logarithmic
/// entropies (I2 and Shannon); I1 and I3 do not depend on it.
struct ProbabilityVector {
  std::vector<double> p;
  std::string origin;  // "spectral:<kind>" or "functional:<name>"
  double log_base = kLogBase2;
};

/// Throws AllZeroWeights if the weights sum to zero, InvalidArgument on a
/// negative or non-finite weight.
ProbabilityVector normalize_weights(std::span<const double> weights, std::string origin,
                                    double log_base = kLogBase2);

/// p_i = |mu_i| / sum |mu_j|, order preserved. Throws ZeroSpectrum.
ProbabilityVector probabilities_from_spectrum(const Spectrum& s, double log_base = kLogBase2);

/// 1 - sum p_i^2.
double entropy_I1(const ProbabilityVector& p);

/// Rényi-type: log(sum p_i^alpha) / (1 - alpha) in p.log_base.
/// Throws AlphaOne or AlphaNonPositive.
double entropy_I2(const ProbabilityVector& p, double alpha);

/// Daróczy-type: (sum p_i^alpha - 1) / (2^(1-alpha) - 1).
double entropy_I3(const ProbabilityVector& p, double alpha);

/// Shannon entropy of p in p.log_base, 0 log 0 = 0.
double shannon_entropy(const ProbabilityVector& p);

/// Shannon entropy (bits) of normalized vertex weights. Throws AllZeroWeights.
double functional_entropy(std::span<const double> weights);

/// Throws AlphaOne / AlphaNonPositive unless alpha is in (0,1) or (1,inf).
void validate_alpha(double alpha);

/// Which of the nine equality theorems covers the kind (1..9).
int theorem_number(const MatrixKind& kind);

/// Everything the closed forms need for one (kind, graph): the I1 value
/// from the index formula, the trace sum T and the spectrum for M*_alpha.
struct ClosedFormInputs {
  MatrixKind kind;
  double i1 = 0.0;
  double trace_sum = 0.0;
  Spectrum spectrum;
};

struct EntropyTriple {
  double i1 = 0.0;
  double i2 = 0.0;
  double i3 = 0.0;
};

/// Checks the theorem hypotheses and evaluates the index side.
/// Throws EmptyEdgeSet (m = 0 for every kind but Distance),
/// DisconnectedGraph (Distance), HypothesisViolated (isolated vertices for
/// the normalized Laplacians), ZeroSpectrum (Distance with n = 1).
ClosedFormInputs closed_form_inputs(const MatrixKind& kind, const OrientedGraph& g);
ClosedFormInputs closed_form_inputs(const MatrixKind& kind, const Graph& g);

/// I2 = log(M*_alpha / T^alpha) / (1 - alpha), I3 = (M*_alpha / T^alpha - 1) / (2^(1-alpha) - 1).
EntropyTriple closed_form(const ClosedFormInputs& in, double alpha, double log_base = kLogBase2);
EntropyTriple closed_form(const MatrixKind& kind, const OrientedGraph& g, double alpha,
                          double log_base = kLogBase2);
EntropyTriple closed_form(const MatrixKind& kind, const Graph& g, double alpha,
                          double log_base = kLogBase2);

}  // namespace graphent
