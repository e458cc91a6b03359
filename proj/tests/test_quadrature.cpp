#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "tidx/errors.hpp"
#include "tidx/quadrature.hpp"
#include "tidx/types.hpp"

namespace tidx {
namespace {

TEST(GaussLegendre, ExactForPolynomialsUpToDegree2nMinus1) {
  for (int n = 1; n <= 12; ++n) {
    const QuadratureRule rule = gauss_legendre(n, -1.0, 2.0);
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double sum = 0.0;
      for (int j = 0; j < n; ++j) sum += rule.weights[j] * std::pow(rule.nodes[j], p);
      const double exact = (std::pow(2.0, p + 1) - std::pow(-1.0, p + 1)) / (p + 1);
      EXPECT_NEAR(sum, exact, 1e-12 * std::max(1.0, std::abs(exact))) << n << " " << p;
    }
  }
}

TEST(GaussLegendre, NodesInsideAndSorted) {
  const QuadratureRule rule = gauss_legendre(24, 0.0, kPi / 2);
  ASSERT_EQ(rule.nodes.size(), 24u);
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    EXPECT_GT(rule.nodes[j], 0.0);
    EXPECT_LT(rule.nodes[j], kPi / 2);
    EXPECT_GT(rule.weights[j], 0.0);
    if (j > 0) EXPECT_LT(rule.nodes[j - 1], rule.nodes[j]);
  }
  // The Hopf measure cos(t) sin(t) integrates to 1/2 over [0, pi/2].
  double mass = 0.0;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j)
    mass += rule.weights[j] * std::cos(rule.nodes[j]) * std::sin(rule.nodes[j]);
  EXPECT_NEAR(mass, 0.5, 1e-15);
  EXPECT_THROW(gauss_legendre(0, 0.0, 1.0), NumericsError);
}

TEST(PairwiseSum, MatchesExactSums) {
  std::vector<double> v(1000);
  std::iota(v.begin(), v.end(), 1.0);
  EXPECT_EQ(pairwise_sum(v), 500500.0);
  EXPECT_EQ(pairwise_sum({}), 0.0);
  EXPECT_EQ(pairwise_sum({3.5}), 3.5);
}

TEST(PairwiseSum, ReducesCancellationError) {
  std::vector<double> v(1 << 20, 0.1);
  EXPECT_NEAR(pairwise_sum(v), 0.1 * (1 << 20), 1e-8);
}

}  // namespace
}  // namespace tidx
