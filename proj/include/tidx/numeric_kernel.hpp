#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tidx/types.hpp"

namespace tidx {

/// Finite section of an operator between graded subspaces. Entries are always finite.
class RectMatrix {
 public:
  explicit RectMatrix(CMatrix entries);

  Eigen::Index rows() const { return entries_.rows(); }
  Eigen::Index cols() const { return entries_.cols(); }
  const CMatrix& dense() const { return entries_; }

 private:
  CMatrix entries_;
};

struct KernelReport {
  int dim = 0;
  /// Singular values declared zero, ascending. Implicit zeros (cols > rows) appear as 0.
  std::vector<double> singular_values_near_zero;
  /// Smallest kept singular value over largest rejected one; +inf when nothing is rejected,
  /// 0 when nothing is kept.
  double spectral_gap = 0.0;
  /// Relative residual ||A v|| / (sigma_max ||v||) per kernel candidate.
  std::vector<double> residuals;
  double sigma_max = 0.0;
  std::vector<std::string> warnings;
};

struct KernelResult {
  KernelReport report;
  /// Kernel candidates as columns (right singular vectors of the rejected singular values).
  CMatrix candidates;
};

inline constexpr double kDefaultRankTolerance = 1e-8;
inline constexpr double kDefaultResidualTolerance = 1e-6;
inline constexpr double kSpectralGapWarning = 1e3;

/// Numerical kernel dimension of m: the number of singular values sigma <= tol * sigma_max.
/// If sigma_max == 0 every column is in the kernel. Without want_candidates only the
/// singular values are computed and `candidates` and `residuals` stay empty.
KernelResult kernel_dim(const RectMatrix& m, double tol, bool want_candidates = true);

/// A family of image-exact truncations of one operator, indexed by a size parameter N.
/// Bases must be nested: the truncation at N is the leading block of the truncation at
/// any N' > N, rows and columns alike.
struct TruncationFamily {
  std::function<RectMatrix(int)> build;
  /// Residual checks use the truncation at N + residual_band.
  int residual_band = 1;
};

struct StabilizedKernel {
  KernelReport report;  // at the largest size
  std::vector<int> sizes;
  std::vector<int> dims;
};

/// Kernel dimension that must agree across all sizes; candidates at the largest size are
/// then re-checked against the wider truncation.
///
/// Throws UnstabilizedError when the dims disagree, ResidualFailureError when a candidate
/// is not annihilated by the wider operator to within residual_tol.
StabilizedKernel stabilized_kernel_dim(const TruncationFamily& family, std::span<const int> sizes,
                                       double tol, double residual_tol);

}  // namespace tidx
