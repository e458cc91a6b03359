#include "tidx/hardy_s1.hpp"

#include <algorithm>
#include <sstream>

#include "tidx/errors.hpp"

namespace tidx {

S1Truncation toeplitz_rect_s1(const LaurentSymbol& a, int n) {
  if (n < 1) throw SymbolError("truncation size must be positive");
  const int r = a.rank();
  const int m = n + std::max(a.k_max(), 0);
  CMatrix entries = CMatrix::Zero(static_cast<Eigen::Index>(m) * r, static_cast<Eigen::Index>(n) * r);
  for (int col = 0; col < n; ++col) {
    const int row_lo = std::max(0, col + a.k_min());
    const int row_hi = std::min(m - 1, col + a.k_max());
    for (int row = row_lo; row <= row_hi; ++row)
      entries.block(static_cast<Eigen::Index>(row) * r, static_cast<Eigen::Index>(col) * r, r, r) =
          a.coeffs()[static_cast<std::size_t>(row - col - a.k_min())];
  }
  return S1Truncation{a, n, m, RectMatrix(std::move(entries))};
}

int s1_margin_grid(const LaurentSymbol& a) { return 4 * (a.width() + 2); }

namespace {

TruncationFamily s1_family(const LaurentSymbol& a) {
  return TruncationFamily{[a](int n) { return toeplitz_rect_s1(a, n).matrix; },
                          std::max(1, a.width() + 1)};
}

}  // namespace

AnalyticIndex analytic_index_s1(const LaurentSymbol& a, int n, const IndexOptions& options) {
  AnalyticIndex out;
  out.invertibility_margin = invertibility_margin(a, s1_margin_grid(a));
  if (!(out.invertibility_margin > options.margin_threshold)) {
    std::ostringstream msg;
    msg << "symbol not invertible on S¹ (margin " << out.invertibility_margin << ")";
    throw NotInvertibleError(msg.str());
  }
  const std::vector<int> sizes =
      options.sizes.empty() ? std::vector<int>{n, 2 * n} : options.sizes;
  out.sizes = sizes;
  out.ker = stabilized_kernel_dim(s1_family(a), sizes, options.tol, options.residual_tol).report;
  out.coker =
      stabilized_kernel_dim(s1_family(adjoint(a)), sizes, options.tol, options.residual_tol).report;
  out.ker_dim = out.ker.dim;
  out.coker_dim = out.coker.dim;
  out.index = out.ker_dim - out.coker_dim;
  return out;
}

}  // namespace tidx
