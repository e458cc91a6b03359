#pragma once

#include <compare>
#include <map>
#include <vector>

#include "tidx/types.hpp"

namespace tidx {

/// Exponents of z1^p z2^q conj(z1)^s conj(z2)^t.
struct S3Exponents {
  int p = 0;
  int q = 0;
  int s = 0;
  int t = 0;

  /// Net bidegree shift (p - s, q - t) applied to a holomorphic monomial.
  int shift1() const { return p - s; }
  int shift2() const { return q - t; }
  int total_shift() const { return shift1() + shift2(); }
  int total_degree() const { return p + q + s + t; }

  auto operator<=>(const S3Exponents&) const = default;
};

struct S3MonomialTerm {
  S3Exponents exponents;
  CMatrix coeff;
};

/// Matrix-valued polynomial in z1, z2, conj(z1), conj(z2) restricted to S^3.
/// Terms with identical exponents are merged; exactly-zero terms are dropped.
class S3Symbol {
 public:
  S3Symbol(int rank, const std::vector<S3MonomialTerm>& terms);

  static S3Symbol constant(const CMatrix& c);
  static S3Symbol identity(int rank);
  static S3Symbol monomial(S3Exponents e, int rank = 1, Complex c = 1.0);
  /// [[z1, -conj(z2)], [z2, conj(z1)]]: the standard degree-one map S^3 -> SU(2).
  static S3Symbol su2();

  int rank() const { return rank_; }
  const std::map<S3Exponents, CMatrix>& terms() const { return terms_; }

  /// max over terms of max(p - s + q - t, 0): the largest upward shift in total degree.
  int max_upward_shift() const;
  int max_total_degree() const;

  CMatrix evaluate(const HopfPoint& x) const;
  CMatrix evaluate(Complex z1, Complex z2) const;

  friend bool operator==(const S3Symbol& a, const S3Symbol& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  int rank_;
  std::map<S3Exponents, CMatrix> terms_;
};

S3Symbol multiply(const S3Symbol& a, const S3Symbol& b);
S3Symbol add(const S3Symbol& a, const S3Symbol& b);
S3Symbol left_multiply(const CMatrix& m, const S3Symbol& a);
/// (p, q, s, t, C) -> (s, t, p, q, C^dagger).
S3Symbol adjoint(const S3Symbol& a);
S3Symbol direct_sum(const S3Symbol& a, const S3Symbol& b);
/// Pointwise a^k; negative k requires a pointwise-unitary symbol.
S3Symbol power(const S3Symbol& a, int k);
/// Complex conjugate symbol x -> conj(a(x)).
S3Symbol conjugate(const S3Symbol& a);

/// Partial derivatives of a in Hopf coordinates (theta, phi1, phi2).
struct HopfPartials {
  CMatrix d_theta;
  CMatrix d_phi1;
  CMatrix d_phi2;
};

HopfPartials hopf_partials(const S3Symbol& a, const HopfPoint& x);

/// Product Hopf grid: grid_size values of theta spanning [0, pi/2] endpoints included,
/// grid_size uniform values of each phi.
std::vector<HopfPoint> hopf_grid(int grid_size);

double unitarity_defect(const S3Symbol& a, int grid_size);

/// min |det a(x)| over hopf_grid(grid_size).
double invertibility_margin(const S3Symbol& a, int grid_size);

}  // namespace tidx
