#include "tidx/generators.hpp"

#include <cmath>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "tidx/errors.hpp"

namespace tidx {

namespace {

constexpr int kMarginGrid = 256;
constexpr int kMaxAttempts = 10000;

}  // namespace

double SymbolGenerator::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

int SymbolGenerator::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

Complex SymbolGenerator::unit_phase() { return std::polar(1.0, uniform(0.0, kTwoPi)); }

CMatrix SymbolGenerator::unitary(int rank) {
  std::normal_distribution<double> normal;
  CMatrix g(rank, rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < rank; ++i) g(i, j) = Complex(normal(engine_), normal(engine_));
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(rank, rank);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < rank; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

CMatrix SymbolGenerator::near_identity(int rank, double norm) {
  std::normal_distribution<double> normal;
  CMatrix b(rank, rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < rank; ++i) b(i, j) = Complex(normal(engine_), normal(engine_));
  const double s = Eigen::JacobiSVD<CMatrix>(b).singularValues()(0);
  return CMatrix::Identity(rank, rank) + (norm / s) * b;
}

LaurentSymbol SymbolGenerator::scalar_invertible(int lo, int hi, int max_roots, double margin,
                                                 double inner_radius) {
  if (hi < lo) throw SymbolError("empty window for scalar generator");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const int roots = uniform_int(0, std::min(max_roots, hi - lo));
    const int shift = uniform_int(lo, hi - roots);
    std::vector<Complex> poly{unit_phase()};
    for (int j = 0; j < roots; ++j) {
      const bool inside = uniform(0.0, 1.0) < 0.5;
      const double radius = inside ? uniform(0.0, inner_radius) : uniform(1.0 / inner_radius, 3.0);
      const Complex root = radius * unit_phase();
      std::vector<Complex> next(poly.size() + 1, 0.0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] += poly[i];
        next[i] -= root * poly[i];
      }
      poly = std::move(next);
    }
    double biggest = 0.0;
    for (Complex c : poly) biggest = std::max(biggest, std::abs(c));
    for (Complex& c : poly) c /= biggest;
    LaurentSymbol f = LaurentSymbol::scalar(shift, poly);
    if (invertibility_margin(f, kMarginGrid) > margin) return f;
  }
  throw SymbolError("scalar generator could not meet the margin");
}

LaurentSymbol SymbolGenerator::matrix_invertible(int rank, double margin) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    LaurentSymbol diag = scalar_invertible(-2, 2, 2, 0.3, 0.4);
    for (int j = 1; j < rank; ++j) diag = direct_sum(diag, scalar_invertible(-2, 2, 2, 0.3, 0.4));
    LaurentSymbol a = diag;
    if (rank > 1) {
      const int i = uniform_int(0, rank - 1);
      int j = uniform_int(0, rank - 2);
      if (j >= i) ++j;
      const int k = uniform_int(-1, 1);
      CMatrix unit = CMatrix::Zero(rank, rank);
      unit(i, j) = uniform(0.2, 1.0) * unit_phase();
      a = multiply(a, add(LaurentSymbol::identity(rank), LaurentSymbol(rank, k, {unit})));
    }
    a = multiply(left_multiply(unitary(rank), a), LaurentSymbol::constant(unitary(rank)));
    if (invertibility_margin(a, kMarginGrid) > margin) return a;
  }
  throw SymbolError("matrix generator could not meet the margin");
}

S3Symbol SymbolGenerator::s3_unitary_degree_one(int exponent) {
  const S3Symbol core = power(S3Symbol::su2(), exponent);
  return multiply(left_multiply(unitary(2), core), S3Symbol::constant(unitary(2)));
}

}  // namespace tidx
