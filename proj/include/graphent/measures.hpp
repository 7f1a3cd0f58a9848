#pragma once

#include <string>
#include <string_view>

#include "graphent/graph.hpp"
#include "graphent/matrix_zoo.hpp"
#include "graphent/spectra.hpp"

namespace graphent {

/// M1 = sum of squared degrees.
double first_zagreb(const Graph& g);

/// R_beta = sum over edges of (d_i d_j)^beta.
double general_randic_index(const Graph& g, double beta);

/// Distance moments with the half-sum convention
/// W_k = 1/2 * sum_{i<j} d_ij^k, so W here is half the usual Wiener index.
struct DistanceMoments {
  double wiener = 0.0;        // W = W_1
  double second = 0.0;        // W_2
  double hyper_wiener = 0.0;  // WW = (W_2 + W_1) / 2
};

/// Throws DisconnectedGraph.
DistanceMoments distance_moments(const Graph& g);
double distance_moment(const Graph& g, double k);

/// Spectrum consumed by the entropies for each kind: eigenvalues for the
/// symmetric kinds, singular values (padded to n) for the incidence kinds,
/// |lambda| for the skew kinds.
Spectrum kind_spectrum(const MatrixKind& kind, const Graph& g);
Spectrum kind_spectrum(const MatrixKind& kind, const OrientedGraph& g);

/// Sum of |spectrum| for the kind: Q-energy, IE, DE, SE, RE, I_RE, RE_beta, RE_s.
double energy(const MatrixKind& kind, const Graph& g);
double energy(const MatrixKind& kind, const OrientedGraph& g);

struct IndexValue {
  std::string name;
  double value = 0.0;
};

/// Evaluates a named measure: m1, randic-index:<beta>, wiener, hyper-wiener,
/// wk:<k>, energy:<kind>. Skew energies use the given orientation.
IndexValue evaluate_measure(std::string_view name, const OrientedGraph& g);

}  // namespace graphent
