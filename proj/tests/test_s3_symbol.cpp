#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tidx/errors.hpp"
#include "tidx/s3_symbol.hpp"

namespace tidx {
namespace {

using testing::max_abs;
using testing::random_hopf_point;
using testing::random_s3_polynomial;

TEST(S3Symbol, HopfPointsLieOnTheSphere) {
  std::mt19937_64 rng(1);
  for (int j = 0; j < 20; ++j) {
    const HopfPoint x = random_hopf_point(rng);
    EXPECT_NEAR(std::norm(x.z1()) + std::norm(x.z2()), 1.0, 1e-15);
  }
}

TEST(S3Symbol, MultiplyAddAdjointMatchPointwise) {
  std::mt19937_64 rng(2);
  const S3Symbol a = random_s3_polynomial(rng, 2, 2, 5);
  const S3Symbol b = random_s3_polynomial(rng, 2, 3, 6);
  const S3Symbol ab = multiply(a, b);
  const S3Symbol sum = add(a, b);
  const S3Symbol star = adjoint(a);
  const S3Symbol bar = conjugate(a);
  for (int j = 0; j < 10; ++j) {
    const HopfPoint x = random_hopf_point(rng);
    const CMatrix va = a.evaluate(x);
    const CMatrix vb = b.evaluate(x);
    EXPECT_LT(max_abs(ab.evaluate(x) - va * vb), 1e-11);
    EXPECT_LT(max_abs(sum.evaluate(x) - va - vb), 1e-12);
    EXPECT_LT(max_abs(star.evaluate(x) - va.adjoint()), 1e-12);
    EXPECT_LT(max_abs(bar.evaluate(x) - va.conjugate()), 1e-12);
  }
}

TEST(S3Symbol, Su2IsSpecialUnitary) {
  const S3Symbol a = S3Symbol::su2();
  EXPECT_LT(unitarity_defect(a, 12), 1e-14);
  std::mt19937_64 rng(3);
  for (int j = 0; j < 1000; ++j) {
    const HopfPoint x = random_hopf_point(rng);
    const CMatrix v = a.evaluate(x);
    EXPECT_LT(max_abs(v.adjoint() * v - CMatrix::Identity(2, 2)), 1e-14);
    EXPECT_LT(std::abs(v.determinant() - 1.0), 1e-14);
  }
  EXPECT_NEAR(invertibility_margin(a, 24), 1.0, 1e-12);
  EXPECT_EQ(a.max_total_degree(), 1);
  EXPECT_EQ(a.max_upward_shift(), 1);
}

TEST(S3Symbol, NegativePowerIsPointwiseInverse) {
  const S3Symbol a = S3Symbol::su2();
  const S3Symbol inv2 = power(a, -2);
  std::mt19937_64 rng(4);
  for (int j = 0; j < 5; ++j) {
    const HopfPoint x = random_hopf_point(rng);
    const CMatrix v = a.evaluate(x);
    EXPECT_LT(max_abs(inv2.evaluate(x) * v * v - CMatrix::Identity(2, 2)), 1e-13);
  }
  EXPECT_THROW(power(S3Symbol::monomial({1, 0, 0, 0}), -1), SymbolError);
}

// Oracle: exact Hopf partials against central finite differences.
TEST(S3Symbol, Su2HopfPartialsMatchFiniteDifferences) {
  std::mt19937_64 rng(6);
  const S3Symbol a = S3Symbol::su2();
  const double h = 1e-5;
  for (int j = 0; j < 100; ++j) {
    const HopfPoint x = random_hopf_point(rng);
    const HopfPartials d = hopf_partials(a, x);
    HopfPoint p = x, m = x;
    p.theta += h;
    m.theta -= h;
    EXPECT_LT(max_abs(d.d_theta - (a.evaluate(p) - a.evaluate(m)) / (2.0 * h)), 1e-8);
    p = x, m = x;
    p.phi1 += h;
    m.phi1 -= h;
    EXPECT_LT(max_abs(d.d_phi1 - (a.evaluate(p) - a.evaluate(m)) / (2.0 * h)), 1e-8);
    p = x, m = x;
    p.phi2 += h;
    m.phi2 -= h;
    EXPECT_LT(max_abs(d.d_phi2 - (a.evaluate(p) - a.evaluate(m)) / (2.0 * h)), 1e-8);
  }
}

TEST(S3Symbol, HopfPartialsMatchFiniteDifferences) {
  std::mt19937_64 rng(5);
  const double h = 1e-6;
  for (int j = 0; j < 30; ++j) {
    const S3Symbol a = random_s3_polynomial(rng, 2, 3, 6);
    HopfPoint x = random_hopf_point(rng);
    const HopfPartials d = hopf_partials(a, x);
    auto fd = [&](double HopfPoint::*coord) {
      HopfPoint plus = x;
      HopfPoint minus = x;
      plus.*coord += h;
      minus.*coord -= h;
      return CMatrix((a.evaluate(plus) - a.evaluate(minus)) / (2.0 * h));
    };
    const double scale = 1.0 + max_abs(a.evaluate(x));
    EXPECT_LT(max_abs(d.d_theta - fd(&HopfPoint::theta)), 1e-6 * scale);
    EXPECT_LT(max_abs(d.d_phi1 - fd(&HopfPoint::phi1)), 1e-6 * scale);
    EXPECT_LT(max_abs(d.d_phi2 - fd(&HopfPoint::phi2)), 1e-6 * scale);
  }
}

TEST(S3Symbol, HopfPartialsAtPolesAreFinite) {
  const S3Symbol a = S3Symbol::su2();
  for (double theta : {0.0, kPi / 2}) {
    const HopfPartials d = hopf_partials(a, {theta, 0.4, 1.3});
    EXPECT_TRUE(d.d_theta.allFinite());
    EXPECT_TRUE(d.d_phi1.allFinite());
    EXPECT_TRUE(d.d_phi2.allFinite());
  }
}

TEST(S3Symbol, MergesTermsAndDropsZeros) {
  const S3Exponents e{1, 0, 0, 0};
  const CMatrix one = CMatrix::Identity(1, 1);
  const S3Symbol a(1, {{e, one}, {e, -one}, {{0, 1, 0, 0}, one}});
  EXPECT_EQ(a.terms().size(), 1u);
  EXPECT_THROW(S3Symbol(1, {{e, one}, {e, -one}}), SymbolError);
  EXPECT_THROW(S3Symbol(1, {{{-1, 0, 0, 0}, one}}), SymbolError);
}

TEST(S3Symbol, DirectSumAndMargin) {
  const S3Symbol d = direct_sum(S3Symbol::su2(), S3Symbol::identity(1));
  EXPECT_EQ(d.rank(), 3);
  EXPECT_NEAR(invertibility_margin(d, 8), 1.0, 1e-12);
  // z1 vanishes on the circle theta = pi/2, which the grid contains.
  EXPECT_LT(invertibility_margin(S3Symbol::monomial({1, 0, 0, 0}), 8), 1e-12);
}

}  // namespace
}  // namespace tidx
