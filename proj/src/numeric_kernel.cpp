#include "tidx/numeric_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/SVD>

#include "tidx/errors.hpp"

namespace tidx {

RectMatrix::RectMatrix(CMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.cols() < 1)
    throw NumericsError("truncation matrix must be non-empty");
  if (!entries_.allFinite()) throw NumericsError("truncation matrix has non-finite entries");
}

KernelResult kernel_dim(const RectMatrix& m, double tol, bool want_candidates) {
  if (!(tol > 0.0)) throw NumericsError("rank tolerance must be positive");
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();

  unsigned options = 0u;
  if (want_candidates)
    options = rows < cols ? static_cast<unsigned>(Eigen::ComputeFullV)
                          : static_cast<unsigned>(Eigen::ComputeThinV);
  Eigen::BDCSVD<CMatrix> svd(m.dense(), options);
  if (svd.info() != Eigen::Success) throw NumericsError("singular value decomposition failed");

  // Pad with the implicit zero singular values when cols > rows.
  std::vector<double> sigma(static_cast<std::size_t>(cols), 0.0);
  for (Eigen::Index j = 0; j < svd.singularValues().size(); ++j)
    sigma[static_cast<std::size_t>(j)] = svd.singularValues()(j);

  KernelResult out;
  KernelReport& report = out.report;
  report.sigma_max = sigma.front();
  const double threshold = tol * report.sigma_max;

  int rank = 0;
  if (report.sigma_max > 0.0)
    while (rank < cols && sigma[static_cast<std::size_t>(rank)] > threshold) ++rank;
  report.dim = static_cast<int>(cols) - rank;

  const double kept = rank > 0 ? sigma[static_cast<std::size_t>(rank - 1)] : 0.0;
  const double rejected = rank < cols ? sigma[static_cast<std::size_t>(rank)] : 0.0;
  if (rank == cols)
    report.spectral_gap = std::numeric_limits<double>::infinity();
  else if (rank == 0)
    report.spectral_gap = 0.0;
  else
    report.spectral_gap = rejected > 0.0 ? kept / rejected : std::numeric_limits<double>::infinity();

  for (Eigen::Index j = cols - 1; j >= rank; --j)
    report.singular_values_near_zero.push_back(sigma[static_cast<std::size_t>(j)]);

  if (report.dim > 0 && rank > 0 && report.spectral_gap < kSpectralGapWarning) {
    std::ostringstream msg;
    msg << "narrow spectral gap " << report.spectral_gap << " at rank decision";
    report.warnings.push_back(msg.str());
  }

  if (!want_candidates) return out;
  out.candidates = svd.matrixV().rightCols(report.dim);
  const double scale = report.sigma_max > 0.0 ? report.sigma_max : 1.0;
  for (Eigen::Index j = 0; j < out.candidates.cols(); ++j) {
    const CVector v = out.candidates.col(j);
    report.residuals.push_back((m.dense() * v).norm() / (scale * v.norm()));
  }

  return out;
}

StabilizedKernel stabilized_kernel_dim(const TruncationFamily& family, std::span<const int> sizes,
                                       double tol, double residual_tol) {
  if (sizes.size() < 2) throw NumericsError("stabilization needs at least two sizes");
  for (std::size_t j = 1; j < sizes.size(); ++j)
    if (sizes[j] <= sizes[j - 1]) throw NumericsError("stabilization sizes must increase");

  StabilizedKernel out;
  KernelResult last;
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    const int n = sizes[j];
    last = kernel_dim(family.build(n), tol, j + 1 == sizes.size());
    out.sizes.push_back(n);
    out.dims.push_back(last.report.dim);
  }
  if (std::adjacent_find(out.dims.begin(), out.dims.end(), std::not_equal_to<>()) !=
      out.dims.end()) {
    std::ostringstream msg;
    msg << "kernel dims";
    for (std::size_t j = 0; j < out.dims.size(); ++j)
      msg << " " << out.dims[j] << "@N=" << out.sizes[j];
    throw UnstabilizedError(msg.str());
  }

  const RectMatrix wide = family.build(sizes.back() + family.residual_band);
  const Eigen::Index cols = last.candidates.rows();
  if (wide.cols() < cols) throw NumericsError("residual truncation is narrower than the domain");
  const double scale = last.report.sigma_max > 0.0 ? last.report.sigma_max : 1.0;

  last.report.residuals.clear();
  for (Eigen::Index j = 0; j < last.candidates.cols(); ++j) {
    CVector padded = CVector::Zero(wide.cols());
    padded.head(cols) = last.candidates.col(j);
    const double residual = (wide.dense() * padded).norm() / (scale * padded.norm());
    last.report.residuals.push_back(residual);
    if (!(residual <= residual_tol)) {
      std::ostringstream msg;
      msg << "candidate " << j << " has relative residual " << residual << " > " << residual_tol;
      throw ResidualFailureError(msg.str());
    }
  }
  out.report = std::move(last.report);
  return out;
}

}  // namespace tidx
