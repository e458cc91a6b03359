#include "tidx/laurent_symbol.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "tidx/errors.hpp"

namespace tidx {

namespace {

bool exactly_zero(const CMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != Complex(0.0, 0.0)) return false;
  return true;
}

// Scalar Laurent polynomial used as the coefficient ring for determinants.
struct ScalarLaurent {
  int k_min = 0;
  std::vector<Complex> c;  // empty means zero

  bool is_zero() const { return c.empty(); }

  void trim() {
    std::size_t lo = 0;
    while (lo < c.size() && c[lo] == Complex(0.0, 0.0)) ++lo;
    if (lo == c.size()) {
      c.clear();
      k_min = 0;
      return;
    }
    std::size_t hi = c.size();
    while (c[hi - 1] == Complex(0.0, 0.0)) --hi;
    c = std::vector<Complex>(c.begin() + static_cast<std::ptrdiff_t>(lo),
                             c.begin() + static_cast<std::ptrdiff_t>(hi));
    k_min += static_cast<int>(lo);
  }
};

ScalarLaurent mul(const ScalarLaurent& a, const ScalarLaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  ScalarLaurent out;
  out.k_min = a.k_min + b.k_min;
  out.c.assign(a.c.size() + b.c.size() - 1, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  out.trim();
  return out;
}

ScalarLaurent add_signed(const ScalarLaurent& a, const ScalarLaurent& b, double sign) {
  if (b.is_zero()) return a;
  if (a.is_zero()) {
    ScalarLaurent out = b;
    for (auto& v : out.c) v *= sign;
    return out;
  }
  const int lo = std::min(a.k_min, b.k_min);
  const int hi = std::max(a.k_min + static_cast<int>(a.c.size()),
                          b.k_min + static_cast<int>(b.c.size()));
  ScalarLaurent out;
  out.k_min = lo;
  out.c.assign(static_cast<std::size_t>(hi - lo), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[a.k_min - lo + i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[b.k_min - lo + i] += sign * b.c[i];
  out.trim();
  return out;
}

}  // namespace

LaurentSymbol::LaurentSymbol(int rank, int k_min, std::vector<CMatrix> coeffs)
    : rank_(rank), k_min_(k_min), coeffs_(std::move(coeffs)) {
  if (rank_ < 1) throw SymbolError("Laurent symbol rank must be positive");
  for (const auto& c : coeffs_) {
    if (c.rows() != rank_ || c.cols() != rank_)
      throw SymbolError("Laurent coefficient is not " + std::to_string(rank_) + "x" +
                        std::to_string(rank_));
    if (!all_finite(c)) throw SymbolError("Laurent coefficient has non-finite entries");
  }
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const CMatrix& c) { return !exactly_zero(c); });
  if (first == coeffs_.end()) throw SymbolError("Laurent symbol is identically zero");
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(),
                           [](const CMatrix& c) { return !exactly_zero(c); })
                  .base();
  k_min_ += static_cast<int>(first - coeffs_.begin());
  coeffs_ = std::vector<CMatrix>(first, last);
}

LaurentSymbol LaurentSymbol::constant(const CMatrix& c) {
  return LaurentSymbol(static_cast<int>(c.rows()), 0, {c});
}

LaurentSymbol LaurentSymbol::identity(int rank) {
  return LaurentSymbol(rank, 0, {CMatrix::Identity(rank, rank)});
}

LaurentSymbol LaurentSymbol::monomial(int k, int rank, Complex c) {
  return LaurentSymbol(rank, k, {c * CMatrix::Identity(rank, rank)});
}

LaurentSymbol LaurentSymbol::scalar(int k_min, const std::vector<Complex>& coeffs) {
  std::vector<CMatrix> m;
  m.reserve(coeffs.size());
  for (Complex c : coeffs) m.push_back(CMatrix::Constant(1, 1, c));
  return LaurentSymbol(1, k_min, std::move(m));
}

CMatrix LaurentSymbol::coeff(int k) const {
  if (k < k_min() || k > k_max()) return CMatrix::Zero(rank_, rank_);
  return coeffs_[static_cast<std::size_t>(k - k_min_)];
}

CMatrix LaurentSymbol::evaluate(Complex z) const {
  CMatrix out = CMatrix::Zero(rank_, rank_);
  Complex zk = std::pow(z, k_min_);
  for (const auto& c : coeffs_) {
    out += zk * c;
    zk *= z;
  }
  return out;
}

CMatrix LaurentSymbol::evaluate_at_angle(double theta) const {
  CMatrix out = CMatrix::Zero(rank_, rank_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const int k = k_min_ + static_cast<int>(j);
    out += std::polar(1.0, k * theta) * coeffs_[j];
  }
  return out;
}

CMatrix LaurentSymbol::angle_derivative(double theta) const {
  CMatrix out = CMatrix::Zero(rank_, rank_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const int k = k_min_ + static_cast<int>(j);
    if (k == 0) continue;
    out += Complex(0.0, k) * std::polar(1.0, k * theta) * coeffs_[j];
  }
  return out;
}

bool operator==(const LaurentSymbol& a, const LaurentSymbol& b) {
  if (a.rank_ != b.rank_ || a.k_min_ != b.k_min_ || a.coeffs_.size() != b.coeffs_.size())
    return false;
  for (std::size_t j = 0; j < a.coeffs_.size(); ++j)
    if (a.coeffs_[j] != b.coeffs_[j]) return false;
  return true;
}

LaurentSymbol multiply(const LaurentSymbol& a, const LaurentSymbol& b) {
  if (a.rank() != b.rank())
    throw SymbolError("rank mismatch in multiply: " + std::to_string(a.rank()) + " vs " +
                      std::to_string(b.rank()));
  const int r = a.rank();
  const auto na = a.coeffs().size();
  const auto nb = b.coeffs().size();
  std::vector<CMatrix> out(na + nb - 1, CMatrix::Zero(r, r));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) out[i + j].noalias() += a.coeffs()[i] * b.coeffs()[j];
  return LaurentSymbol(r, a.k_min() + b.k_min(), std::move(out));
}

LaurentSymbol add(const LaurentSymbol& a, const LaurentSymbol& b) {
  if (a.rank() != b.rank()) throw SymbolError("rank mismatch in add");
  const int lo = std::min(a.k_min(), b.k_min());
  const int hi = std::max(a.k_max(), b.k_max());
  std::vector<CMatrix> out;
  for (int k = lo; k <= hi; ++k) out.push_back(a.coeff(k) + b.coeff(k));
  return LaurentSymbol(a.rank(), lo, std::move(out));
}

LaurentSymbol scale(const LaurentSymbol& a, Complex s) {
  std::vector<CMatrix> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c *= s;
  return LaurentSymbol(a.rank(), a.k_min(), std::move(out));
}

LaurentSymbol left_multiply(const CMatrix& m, const LaurentSymbol& a) {
  if (m.rows() != a.rank() || m.cols() != a.rank())
    throw SymbolError("rank mismatch in left_multiply");
  std::vector<CMatrix> out;
  for (const auto& c : a.coeffs()) out.push_back(m * c);
  return LaurentSymbol(a.rank(), a.k_min(), std::move(out));
}

LaurentSymbol adjoint(const LaurentSymbol& a) {
  std::vector<CMatrix> out;
  out.reserve(a.coeffs().size());
  for (int k = -a.k_max(); k <= -a.k_min(); ++k) out.push_back(a.coeff(-k).adjoint());
  return LaurentSymbol(a.rank(), -a.k_max(), std::move(out));
}

LaurentSymbol det_laurent(const LaurentSymbol& a) {
  const int r = a.rank();
  // entries[i][j] as scalar Laurent polynomials
  std::vector<std::vector<ScalarLaurent>> entries(r, std::vector<ScalarLaurent>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      ScalarLaurent e;
      e.k_min = a.k_min();
      for (const auto& c : a.coeffs()) e.c.push_back(c(i, j));
      e.trim();
      entries[i][j] = std::move(e);
    }

  // Laplace expansion down the rows, memoized over the set of consumed columns:
  // minor[mask] = det of rows [r - popcount(mask), r) restricted to columns in mask.
  const unsigned full = (1u << r) - 1u;
  std::vector<ScalarLaurent> minor(full + 1);
  minor[0] = ScalarLaurent{0, {Complex(1.0, 0.0)}};
  for (unsigned mask = 1; mask <= full; ++mask) {
    const int used = std::popcount(mask);
    const int row = r - used;
    ScalarLaurent acc;
    int position = 0;
    for (int col = 0; col < r; ++col) {
      if (!(mask & (1u << col))) continue;
      const double sign = (position % 2 == 0) ? 1.0 : -1.0;
      ++position;
      const auto term = mul(entries[row][col], minor[mask & ~(1u << col)]);
      acc = add_signed(acc, term, sign);
    }
    minor[mask] = std::move(acc);
  }
  const ScalarLaurent& det = minor[full];
  if (det.is_zero()) throw SymbolError("determinant is identically zero");
  return LaurentSymbol::scalar(det.k_min, det.c);
}

LaurentSymbol direct_sum(const LaurentSymbol& a, const LaurentSymbol& b) {
  const int r = a.rank() + b.rank();
  const int lo = std::min(a.k_min(), b.k_min());
  const int hi = std::max(a.k_max(), b.k_max());
  std::vector<CMatrix> out;
  for (int k = lo; k <= hi; ++k) {
    CMatrix c = CMatrix::Zero(r, r);
    c.topLeftCorner(a.rank(), a.rank()) = a.coeff(k);
    c.bottomRightCorner(b.rank(), b.rank()) = b.coeff(k);
    out.push_back(std::move(c));
  }
  return LaurentSymbol(r, lo, std::move(out));
}

double unitarity_defect(const LaurentSymbol& a, int grid_size) {
  const CMatrix eye = CMatrix::Identity(a.rank(), a.rank());
  double worst = 0.0;
  for (int j = 0; j < grid_size; ++j) {
    const CMatrix v = a.evaluate_at_angle(kTwoPi * j / grid_size);
    worst = std::max(worst, (v.adjoint() * v - eye).cwiseAbs().maxCoeff());
  }
  return worst;
}

LaurentSymbol power(const LaurentSymbol& a, int k) {
  if (k == 0) return LaurentSymbol::identity(a.rank());
  LaurentSymbol base = a;
  if (k < 0) {
    const int grid = 4 * (a.width() + 2) * 4;
    if (unitarity_defect(a, grid) > kUnitarityTolerance)
      throw SymbolError("negative powers require a pointwise-unitary symbol");
    base = adjoint(a);
    k = -k;
  }
  LaurentSymbol out = base;
  for (int j = 1; j < k; ++j) out = multiply(out, base);
  return out;
}

double invertibility_margin(const LaurentSymbol& a, int grid_size) {
  double margin = std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid_size; ++j) {
    const CMatrix v = a.evaluate_at_angle(kTwoPi * j / grid_size);
    margin = std::min(margin, std::abs(v.determinant()));
  }
  return margin;
}

}  // namespace tidx
