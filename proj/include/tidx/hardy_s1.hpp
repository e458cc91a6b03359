#pragma once

#include <vector>

#include "tidx/laurent_symbol.hpp"
#include "tidx/numeric_kernel.hpp"

namespace tidx {

/// Toeplitz operator T_a on H^2(S^1) (x) C^r restricted to degrees < N, with codomain
/// degrees < M = N + max(k_max, 0). Basis ordering: degree-major, component-minor
/// (row/column index = degree * r + component). Block (m, n) equals c_{m - n}.
struct S1Truncation {
  LaurentSymbol symbol;
  int domain_degrees;    // N
  int codomain_degrees;  // M
  RectMatrix matrix;
};

S1Truncation toeplitz_rect_s1(const LaurentSymbol& a, int n);

struct IndexOptions {
  double tol = kDefaultRankTolerance;
  double residual_tol = kDefaultResidualTolerance;
  double margin_threshold = 1e-6;
  /// Explicit size schedule; empty means the module default ({N, 2N} on S^1, {N, N+4} on S^3).
  std::vector<int> sizes;
};

/// Analytic side of the index computation: both kernel reports plus bookkeeping.
struct AnalyticIndex {
  int index = 0;
  int ker_dim = 0;
  int coker_dim = 0;
  std::vector<int> sizes;
  double invertibility_margin = 0.0;
  KernelReport ker;
  KernelReport coker;
};

/// Grid used for the invertibility pre-check: 4 * (k_max - k_min + 2) points.
int s1_margin_grid(const LaurentSymbol& a);

/// Index of T_a from stabilized kernel dims of the truncations of a (kernel) and of
/// adjoint(a) (cokernel) at sizes {N, 2N}.
///
/// Throws NotInvertibleError when the pre-check margin is below options.margin_threshold,
/// and propagates UnstabilizedError / ResidualFailureError.
AnalyticIndex analytic_index_s1(const LaurentSymbol& a, int n, const IndexOptions& options = {});

inline constexpr int kDefaultS1Truncation = 64;

}  // namespace tidx
