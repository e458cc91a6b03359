#include "tidx/hardy_s3.hpp"

#include <cmath>
#include <sstream>

#include "tidx/errors.hpp"

namespace tidx {

MonomialIndex MonomialIndex::from_linear(int index) {
  int d = 0;
  while ((d + 1) * (d + 2) / 2 <= index) ++d;
  const int a = index - d * (d + 1) / 2;
  return {a, d - a};
}

double log_monomial_norm_sq(int a, int b) {
  return std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0);
}

double monomial_norm_sq(int a, int b) {
  if (a < 0 || b < 0) throw SymbolError("monomial exponents must be non-negative");
  return std::exp(log_monomial_norm_sq(a, b));
}

S3Truncation toeplitz_rect_s3(const S3Symbol& sym, int n) {
  if (n < 1) throw SymbolError("truncation size must be positive");
  const int r = sym.rank();
  const int m = n + sym.max_upward_shift();
  CMatrix entries = CMatrix::Zero(static_cast<Eigen::Index>(monomial_count(m)) * r,
                                  static_cast<Eigen::Index>(monomial_count(n)) * r);
  for (int col = 0; col < monomial_count(n); ++col) {
    const MonomialIndex src = MonomialIndex::from_linear(col);
    const double log_h_src = log_monomial_norm_sq(src.a, src.b);
    for (const auto& [e, coeff] : sym.terms()) {
      // z1^{a+p} z2^{b+q} conj(z1)^s conj(z2)^t projects onto a single monomial.
      const MonomialIndex dst{src.a + e.shift1(), src.b + e.shift2()};
      if (dst.a < 0 || dst.b < 0) continue;
      const double weight =
          std::exp(log_monomial_norm_sq(src.a + e.p, src.b + e.q) -
                   0.5 * (log_h_src + log_monomial_norm_sq(dst.a, dst.b)));
      entries.block(static_cast<Eigen::Index>(dst.linear()) * r,
                    static_cast<Eigen::Index>(col) * r, r, r) += weight * coeff;
    }
  }
  return S3Truncation{sym, n, m, RectMatrix(std::move(entries))};
}

int default_s3_truncation(const S3Symbol& a) {
  const int degree = a.max_total_degree();
  if (degree <= 1) return 8;
  if (degree == 2) return 20;
  return 40;
}

AnalyticIndex analytic_index_s3(const S3Symbol& a, int n, const IndexOptions& options) {
  AnalyticIndex out;
  out.invertibility_margin = invertibility_margin(a, kS3MarginGrid);
  if (!(out.invertibility_margin > options.margin_threshold)) {
    std::ostringstream msg;
    msg << "symbol not invertible on S³ (margin " << out.invertibility_margin << ")";
    throw NotInvertibleError(msg.str());
  }
  const std::vector<int> sizes =
      options.sizes.empty() ? std::vector<int>{n, n + 4} : options.sizes;
  out.sizes = sizes;
  auto family = [](const S3Symbol& s) {
    return TruncationFamily{[s](int k) { return toeplitz_rect_s3(s, k).matrix; },
                            std::max(1, s.max_total_degree())};
  };
  out.ker = stabilized_kernel_dim(family(a), sizes, options.tol, options.residual_tol).report;
  out.coker =
      stabilized_kernel_dim(family(adjoint(a)), sizes, options.tol, options.residual_tol).report;
  out.ker_dim = out.ker.dim;
  out.coker_dim = out.coker.dim;
  out.index = out.ker_dim - out.coker_dim;
  return out;
}

}  // namespace tidx
