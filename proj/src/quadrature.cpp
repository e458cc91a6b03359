#include "tidx/quadrature.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "tidx/errors.hpp"

namespace tidx {

QuadratureRule gauss_legendre(int n, double lo, double hi) {
  if (n < 1) throw NumericsError("quadrature needs at least one node");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double beta = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi);
  QuadratureRule rule;
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  for (int k = 0; k < n; ++k) {
    const double v0 = eig.eigenvectors()(0, k);
    rule.nodes.push_back(mid + half * eig.eigenvalues()(k));
    rule.weights.push_back(half * 2.0 * v0 * v0);
  }
  return rule;
}

namespace {

double pairwise(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += v[j];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise(v, half) + pairwise(v + half, n - half);
}

}  // namespace

double pairwise_sum(const std::vector<double>& values) {
  return pairwise(values.data(), values.size());
}

}  // namespace tidx
