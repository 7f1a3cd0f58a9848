#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "graphent/dense_matrix.hpp"
#include "graphent/graph.hpp"

namespace graphent {

enum class MatrixTag {
  SignlessLaplacian,            // Q = D + A
  NormalizedLaplacian,          // D^-1/2 (D - A) D^-1/2
  NormalizedSignlessLaplacian,  // D^-1/2 (D + A) D^-1/2
  Incidence,                    // n x m vertex-edge 0/1
  Distance,
  SkewAdjacency,
  RandicAdjacency,              // (d_i d_j)^-1/2 on edges
  RandicIncidence,              // D^-1/2 I
  GeneralRandic,                // (d_i d_j)^beta on edges
  SkewRandic,                   // D^-1/2 S D^-1/2
};

struct MatrixKind {
  MatrixTag tag = MatrixTag::SignlessLaplacian;
  double beta = 0.0;  // GeneralRandic only

  bool needs_orientation() const noexcept {
    return tag == MatrixTag::SkewAdjacency || tag == MatrixTag::SkewRandic;
  }
  bool needs_edges() const noexcept {
    return tag == MatrixTag::Incidence || tag == MatrixTag::RandicIncidence;
  }

  friend bool operator==(const MatrixKind&, const MatrixKind&) = default;
};

/// CLI spelling: q, norm-l, norm-q, incidence, distance, skew, randic,
/// randic-incidence, general-randic:<beta>, skew-randic.
std::string to_string(const MatrixKind& kind);
std::optional<MatrixKind> parse_matrix_kind(std::string_view name);

/// The ten kinds with GeneralRandic at the given beta.
std::vector<MatrixKind> all_matrix_kinds(double general_randic_beta = 1.0);

/// (d_i d_j)^beta. beta = -1/2 is evaluated as 1/sqrt(d_i d_j) so the
/// Randić and general Randić constructors agree bit for bit.
double randic_weight(std::size_t di, std::size_t dj, double beta);

/// 1/sqrt(d) with the isolated-vertex convention 0 for d = 0.
double inverse_sqrt_degree(std::size_t d);

DenseMatrix adjacency_matrix(const Graph& g);
DenseMatrix degree_matrix(const Graph& g);

/// Throws NotOriented for skew kinds, DisconnectedGraph for Distance,
/// EmptyEdgeSet for the incidence kinds when m = 0.
DenseMatrix build(const MatrixKind& kind, const Graph& g);
DenseMatrix build(const MatrixKind& kind, const OrientedGraph& g);

}  // namespace graphent
