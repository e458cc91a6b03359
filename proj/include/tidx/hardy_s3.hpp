#pragma once

#include <utility>

#include "tidx/hardy_s1.hpp"
#include "tidx/s3_symbol.hpp"

namespace tidx {

/// Bidegree (a, b) of the holomorphic monomial z1^a z2^b.
struct MonomialIndex {
  int a = 0;
  int b = 0;

  int total_degree() const { return a + b; }
  /// Total-degree-major, lexicographic-minor position: d(d+1)/2 + a for d = a + b.
  int linear() const { return total_degree() * (total_degree() + 1) / 2 + a; }
  static MonomialIndex from_linear(int index);

  bool operator==(const MonomialIndex&) const = default;
};

/// Number of monomials of total degree < n.
inline int monomial_count(int n) { return n * (n + 1) / 2; }

/// ||z1^a z2^b||^2 = a! b! / (a + b + 1)! under the normalized measure on S^3.
double monomial_norm_sq(int a, int b);
double log_monomial_norm_sq(int a, int b);

/// Szego-Toeplitz operator of a restricted to holomorphic monomials of total degree < N,
/// codomain total degree < M = N + a.max_upward_shift(), in the orthonormalized monomial
/// basis. Row/column index = linear(a, b) * r + component.
struct S3Truncation {
  S3Symbol symbol;
  int domain_degree;    // N
  int codomain_degree;  // M
  RectMatrix matrix;
};

S3Truncation toeplitz_rect_s3(const S3Symbol& a, int n);

/// Product grid used for the invertibility pre-check.
inline constexpr int kS3MarginGrid = 24;

/// Index of the Szego-Toeplitz operator from stabilized kernel dims at sizes {N, N + 4}.
AnalyticIndex analytic_index_s3(const S3Symbol& a, int n, const IndexOptions& options = {});

/// Degree cutoff that resolves the kernels of test symbols of the given total degree:
/// 8 up to degree 1 (polynomial kernels), 20 for degree 2, 40 beyond.
int default_s3_truncation(const S3Symbol& a);

}  // namespace tidx
