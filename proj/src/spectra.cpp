#include "graphent/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "graphent/error.hpp"

namespace graphent {
namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) s += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(s);
}

// One Jacobi rotation annihilating a(p,q); a is kept fully symmetric.
void rotate(DenseMatrix& a, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a(k, p);
    const double akq = a(k, q);
    const double new_kp = c * akp - s * akq;
    const double new_kq = s * akp + c * akq;
    a(k, p) = a(p, k) = new_kp;
    a(k, q) = a(q, k) = new_kq;
  }
}

// Values within noise_floor of zero are rounding residue of a singular
// direction; their square roots would otherwise surface as ~1e-8 garbage.
std::vector<double> clamp_psd(std::vector<double> values, double noise_floor,
                              std::string_view what) {
  for (double& v : values) {
    if (std::abs(v) <= noise_floor) {
      v = 0.0;
    } else if (v < 0.0) {
      if (v < -kNegativeClamp) {
        throw Error(ErrorCode::NumericalFailure, std::string(what) +
                                                     ": eigenvalue " + std::to_string(v) +
                                                     " of a PSD matrix below clamp threshold");
      }
      v = 0.0;
    }
  }
  return values;
}

}  // namespace

std::string_view to_string(SpectrumKind kind) noexcept {
  switch (kind) {
    case SpectrumKind::Eigenvalues: return "eigenvalues";
    case SpectrumKind::SingularValues: return "singular-values";
    case SpectrumKind::AbsoluteEigenvalues: return "absolute-eigenvalues";
  }
  return "unknown";
}

double Spectrum::sum() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

double Spectrum::sum_abs() const {
  double s = 0.0;
  for (double v : values) s += std::abs(v);
  return s;
}

double Spectrum::sum_squares() const {
  double s = 0.0;
  for (double v : values) s += v * v;
  return s;
}

Spectrum symmetric_eigenvalues(const DenseMatrix& m, std::string source) {
  if (!m.is_square() || !m.is_symmetric(kStructureTolerance)) {
    throw Error(ErrorCode::NonSymmetric, "matrix is not symmetric within 1e-12");
  }
  const std::size_t n = m.rows();
  DenseMatrix a = m;
  // symmetrize the accepted tolerance away so rotations see an exact copy
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) a(j, i) = a(i, j);
  }
  const double threshold = jacobi::kRelativeOffNorm * a.frobenius_norm();

  bool converged = false;
  for (int sweep = 0; sweep <= jacobi::kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == jacobi::kMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) != 0.0) rotate(a, p, q);
      }
    }
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence,
                "Jacobi sweep cap of " + std::to_string(jacobi::kMaxSweeps) + " reached");
  }

  Spectrum out;
  out.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.values.push_back(a(i, i));
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  out.kind = SpectrumKind::Eigenvalues;
  out.source = std::move(source);
  return out;
}

Spectrum singular_values(const DenseMatrix& m, std::size_t pad_to, std::string source) {
  if (pad_to < m.rows()) {
    throw Error(ErrorCode::InvalidArgument, "pad_to smaller than the row count");
  }
  const DenseMatrix gram_matrix = m * m.transpose();
  Spectrum gram = symmetric_eigenvalues(gram_matrix);
  const double floor = kGramNoiseFloor * gram_matrix.frobenius_norm();
  std::vector<double> values = clamp_psd(std::move(gram.values), floor, "singular_values");
  for (double& v : values) v = std::sqrt(v);
  values.resize(pad_to, 0.0);
  std::sort(values.begin(), values.end(), std::greater<>());
  return Spectrum{std::move(values), SpectrumKind::SingularValues, std::move(source)};
}

Spectrum skew_absolute_eigenvalues(const DenseMatrix& m, std::string source) {
  if (!m.is_square() || !m.is_skew_symmetric(kStructureTolerance)) {
    throw Error(ErrorCode::NonSkew, "matrix is not skew-symmetric within 1e-12");
  }
  Spectrum s = singular_values(m, m.rows(), std::move(source));
  s.kind = SpectrumKind::AbsoluteEigenvalues;
  return s;
}

double spectral_moment(const Spectrum& s, double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::AlphaNonPositive, "spectral moment needs alpha > 0");
  double total = 0.0;
  for (double v : s.values) {
    const double a = std::abs(v);
    if (a > 0.0) total += std::pow(a, alpha);
  }
  return total;
}

double determinant(const DenseMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  DenseMatrix lu = m;
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    }
    if (lu(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(pivot, j), lu(col, j));
      det = -det;
    }
    const double d = lu(col, col);
    det *= d;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = lu(r, col) / d;
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) lu(r, j) -= f * lu(col, j);
    }
  }
  return det;
}

}  // namespace graphent
