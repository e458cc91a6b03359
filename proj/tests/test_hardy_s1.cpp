#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tidx/errors.hpp"
#include "tidx/hardy_s1.hpp"

namespace tidx {
namespace {

TEST(ToeplitzS1, BlockStructure) {
  std::mt19937_64 rng(1);
  const LaurentSymbol a = testing::random_laurent(rng, 2, -1, 2);
  const S1Truncation t = toeplitz_rect_s1(a, 5);
  EXPECT_EQ(t.domain_degrees, 5);
  EXPECT_EQ(t.codomain_degrees, 7);
  ASSERT_EQ(t.matrix.rows(), 14);
  ASSERT_EQ(t.matrix.cols(), 10);
  for (int m = 0; m < 7; ++m)
    for (int n = 0; n < 5; ++n)
      EXPECT_EQ(t.matrix.dense().block(2 * m, 2 * n, 2, 2), a.coeff(m - n)) << m << "," << n;
}

TEST(ToeplitzS1, ImageExactForPolynomialInputs) {
  // For f of degree < N, the truncation reproduces P(a f) exactly: compare coefficients.
  const LaurentSymbol a = LaurentSymbol::scalar(-2, {1.0, 2.0, 3.0, 4.0});  // z^-2 .. z^1
  const S1Truncation t = toeplitz_rect_s1(a, 4);
  CVector f(4);
  f << 1.0, -1.0, 0.5, 2.0;
  const CVector g = t.matrix.dense() * f;
  const LaurentSymbol prod = multiply(a, LaurentSymbol::scalar(0, {1.0, -1.0, 0.5, 2.0}));
  ASSERT_EQ(g.size(), 5);
  for (int k = 0; k < 5; ++k) EXPECT_EQ(g(k), prod.coeff(k)(0, 0)) << k;
}

TEST(ToeplitzS1, PrefixNested) {
  std::mt19937_64 rng(2);
  const LaurentSymbol a = testing::random_laurent(rng, 3, -2, 1);
  const CMatrix small = toeplitz_rect_s1(a, 4).matrix.dense();
  const CMatrix big = toeplitz_rect_s1(a, 9).matrix.dense();
  EXPECT_EQ(big.topLeftCorner(small.rows(), small.cols()), small);
}

// Noether law for monomials (the defining oracle of the module).
TEST(AnalyticIndexS1, MonomialsFollowNoether) {
  for (int m = -8; m <= 8; ++m) {
    const AnalyticIndex idx = analytic_index_s1(LaurentSymbol::monomial(m), kDefaultS1Truncation);
    EXPECT_EQ(idx.index, -m);
    EXPECT_EQ(idx.ker_dim, std::max(-m, 0));
    EXPECT_EQ(idx.coker_dim, std::max(m, 0));
    EXPECT_EQ(idx.sizes, (std::vector<int>{64, 128}));
  }
}

TEST(AnalyticIndexS1, DirectSumOfMonomials) {
  const LaurentSymbol d = direct_sum(LaurentSymbol::monomial(1), LaurentSymbol::monomial(-2));
  const AnalyticIndex idx = analytic_index_s1(d, 32);
  EXPECT_EQ(idx.ker_dim, 2);
  EXPECT_EQ(idx.coker_dim, 1);
  EXPECT_EQ(idx.index, 1);
}

TEST(AnalyticIndexS1, ScalarSymbolWithRootsInsideAndOutside) {
  // (z - 0.3)(z - 0.5i)(z - 3) z^-1: two roots inside, winding 1, index -1.
  LaurentSymbol f = LaurentSymbol::scalar(0, {-0.3, 1.0});
  f = multiply(f, LaurentSymbol::scalar(0, {Complex(0.0, -0.5), 1.0}));
  f = multiply(f, LaurentSymbol::scalar(0, {-3.0, 1.0}));
  f = multiply(f, LaurentSymbol::monomial(-1));
  const AnalyticIndex idx = analytic_index_s1(f, 64);
  EXPECT_EQ(idx.index, -1);
  EXPECT_GT(idx.invertibility_margin, 0.1);
}

TEST(AnalyticIndexS1, RejectsNonInvertibleSymbols) {
  EXPECT_THROW(analytic_index_s1(LaurentSymbol::scalar(0, {-1.0, 1.0}), 16), NotInvertibleError);
  // Near-singular: a root at distance 1e-9 from the circle fails the margin pre-check.
  EXPECT_THROW(analytic_index_s1(LaurentSymbol::scalar(0, {-(1.0 + 1e-9), 1.0}), 16),
               NotInvertibleError);
}

TEST(AnalyticIndexS1, SlowKernelDecayIsAFiniteSectionBlindSpot) {
  // Root at modulus 0.99: the cokernel vector (0.99^n) is invisible to sections of size 8
  // and 16 (both are well conditioned), so the analytic side alone reports 0 instead of -1.
  // The end-to-end report catches this through the topological cross-check (test_report).
  const LaurentSymbol f = LaurentSymbol::scalar(0, {-0.99, 1.0});
  EXPECT_EQ(analytic_index_s1(f, 8).index, 0);
  // With the root at 0.9 the tail 0.9^N drops below the rank tolerance by N ~ 200.
  const LaurentSymbol g = LaurentSymbol::scalar(0, {-0.9, 1.0});
  EXPECT_EQ(analytic_index_s1(g, 256).index, -1);
}

TEST(AnalyticIndexS1, CustomSizeSchedule) {
  IndexOptions options;
  options.sizes = {10, 20, 40};
  const AnalyticIndex idx = analytic_index_s1(LaurentSymbol::monomial(2), 10, options);
  EXPECT_EQ(idx.index, -2);
  EXPECT_EQ(idx.sizes, options.sizes);
}

}  // namespace
}  // namespace tidx
