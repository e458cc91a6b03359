#pragma once

#include <span>
#include <vector>

#include "tidx/types.hpp"

namespace tidx {

/// Matrix-valued Laurent polynomial on the unit circle,
///   alpha(z) = sum_{k = k_min}^{k_max} c_k z^k,   c_k an r x r complex matrix.
///
/// The coefficient window is kept canonical: the outermost coefficients are
/// nonzero, and only exactly-zero coefficients are trimmed. A symbol is never
/// identically zero.
class LaurentSymbol {
 public:
  /// Coefficients for exponents k_min, k_min + 1, ...; each must be rank x rank.
  LaurentSymbol(int rank, int k_min, std::vector<CMatrix> coeffs);

  static LaurentSymbol constant(const CMatrix& c);
  static LaurentSymbol identity(int rank);
  /// c z^k I_rank.
  static LaurentSymbol monomial(int k, int rank = 1, Complex c = 1.0);
  /// Scalar symbol sum_j coeffs[j] z^{k_min + j}.
  static LaurentSymbol scalar(int k_min, const std::vector<Complex>& coeffs);

  int rank() const { return rank_; }
  int k_min() const { return k_min_; }
  int k_max() const { return k_min_ + static_cast<int>(coeffs_.size()) - 1; }
  int width() const { return k_max() - k_min(); }
  bool is_scalar() const { return rank_ == 1; }

  /// c_k, or the zero matrix outside the window.
  CMatrix coeff(int k) const;
  std::span<const CMatrix> coeffs() const { return coeffs_; }

  CMatrix evaluate(Complex z) const;
  /// alpha(e^{i theta}).
  CMatrix evaluate_at_angle(double theta) const;
  /// d/dtheta alpha(e^{i theta}) = sum_k i k c_k e^{i k theta}.
  CMatrix angle_derivative(double theta) const;

  friend bool operator==(const LaurentSymbol& a, const LaurentSymbol& b);

 private:
  int rank_;
  int k_min_;
  std::vector<CMatrix> coeffs_;
};

/// Pointwise product; coefficients convolve.
LaurentSymbol multiply(const LaurentSymbol& a, const LaurentSymbol& b);
LaurentSymbol add(const LaurentSymbol& a, const LaurentSymbol& b);
LaurentSymbol scale(const LaurentSymbol& a, Complex s);
/// Constant matrix times symbol (left).
LaurentSymbol left_multiply(const CMatrix& m, const LaurentSymbol& a);

/// (a*)_k = (a_{-k})^dagger, so that a*(z) = a(z)^dagger on |z| = 1.
LaurentSymbol adjoint(const LaurentSymbol& a);

/// Determinant computed exactly over the Laurent coefficient ring.
LaurentSymbol det_laurent(const LaurentSymbol& a);

/// Block-diagonal symbol diag(a, b).
LaurentSymbol direct_sum(const LaurentSymbol& a, const LaurentSymbol& b);

/// Pointwise a^k. Negative k requires a pointwise-unitary symbol and uses adjoint(a)^{|k|}.
LaurentSymbol power(const LaurentSymbol& a, int k);

/// Max deviation of a(z)^dagger a(z) from the identity over a uniform grid.
double unitarity_defect(const LaurentSymbol& a, int grid_size);

/// min |det a(z)| over the uniform grid z_j = e^{2 pi i j / grid_size}.
double invertibility_margin(const LaurentSymbol& a, int grid_size);

inline constexpr double kUnitarityTolerance = 1e-10;

}  // namespace tidx
