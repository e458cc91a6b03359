#pragma once

#include <vector>

namespace tidx {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule mapped to [lo, hi] (Golub-Welsch).
QuadratureRule gauss_legendre(int n, double lo, double hi);

/// Pairwise (tree) summation; the order of additions depends only on values.size().
double pairwise_sum(const std::vector<double>& values);

}  // namespace tidx
