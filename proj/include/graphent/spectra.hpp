#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphent/dense_matrix.hpp"

namespace graphent {

enum class SpectrumKind { Eigenvalues, SingularValues, AbsoluteEigenvalues };

std::string_view to_string(SpectrumKind kind) noexcept;

/// Real spectrum sorted in descending order.
struct Spectrum {
  std::vector<double> values;
  SpectrumKind kind = SpectrumKind::Eigenvalues;
  std::string source;  // matrix family tag, e.g. "q"

  std::size_t size() const noexcept { return values.size(); }
  double sum() const;
  double sum_abs() const;
  double sum_squares() const;
};

namespace jacobi {
inline constexpr double kRelativeOffNorm = 1e-12;
inline constexpr int kMaxSweeps = 100;
}  // namespace jacobi

/// Tolerance on |m(i,j) - m(j,i)| accepted by the symmetric and skew solvers.
inline constexpr double kStructureTolerance = 1e-12;

/// Eigenvalues in [-kNegativeClamp, 0) of matrices that are positive
/// semidefinite by construction are rounded to 0; anything lower is an error.
inline constexpr double kNegativeClamp = 1e-10;

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// 1e-12 of the input norm. Throws NonSymmetric or NoConvergence.
Spectrum symmetric_eigenvalues(const DenseMatrix& m, std::string source = {});

/// Gram eigenvalues with |value| <= kGramNoiseFloor * ||M M^T||_F are set to 0
/// before taking square roots.
inline constexpr double kGramNoiseFloor = 64 * 2.220446049250313e-16;

/// Square roots of the eigenvalues of m * m^T, zero padded to pad_to.
/// Throws NumericalFailure if m * m^T has an eigenvalue below -kNegativeClamp.
Spectrum singular_values(const DenseMatrix& m, std::size_t pad_to, std::string source = {});

/// |lambda_i| for a real skew-symmetric matrix, i.e. its singular values.
/// Throws NonSkew.
Spectrum skew_absolute_eigenvalues(const DenseMatrix& m, std::string source = {});

/// Sum of |value|^alpha with 0^alpha = 0. Throws AlphaNonPositive for alpha <= 0.
double spectral_moment(const Spectrum& s, double alpha);

/// LU with partial pivoting; the sign is exact, singular input yields 0.
double determinant(const DenseMatrix& m);

}  // namespace graphent
