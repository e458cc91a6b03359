#include "tidx/s3_symbol.hpp"

#include <algorithm>
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

double ipow(double x, int n) {
  double out = 1.0;
  for (int j = 0; j < n; ++j) out *= x;
  return out;
}

// n * x^(n-1), zero when n == 0.
double dpow(double x, int n) { return n == 0 ? 0.0 : n * ipow(x, n - 1); }

void check_exponents(const S3Exponents& e) {
  if (e.p < 0 || e.q < 0 || e.s < 0 || e.t < 0)
    throw SymbolError("S3 exponents must be non-negative");
}

}  // namespace

S3Symbol::S3Symbol(int rank, const std::vector<S3MonomialTerm>& terms) : rank_(rank) {
  if (rank_ < 1) throw SymbolError("S3 symbol rank must be positive");
  for (const auto& term : terms) {
    check_exponents(term.exponents);
    if (term.coeff.rows() != rank_ || term.coeff.cols() != rank_)
      throw SymbolError("S3 coefficient is not " + std::to_string(rank_) + "x" +
                        std::to_string(rank_));
    if (!all_finite(term.coeff)) throw SymbolError("S3 coefficient has non-finite entries");
    auto [it, inserted] = terms_.try_emplace(term.exponents, term.coeff);
    if (!inserted) it->second += term.coeff;
  }
  std::erase_if(terms_, [](const auto& kv) { return exactly_zero(kv.second); });
  if (terms_.empty()) throw SymbolError("S3 symbol is identically zero");
}

S3Symbol S3Symbol::constant(const CMatrix& c) {
  return S3Symbol(static_cast<int>(c.rows()), std::vector<S3MonomialTerm>{{{}, c}});
}

S3Symbol S3Symbol::identity(int rank) { return constant(CMatrix::Identity(rank, rank)); }

S3Symbol S3Symbol::monomial(S3Exponents e, int rank, Complex c) {
  return S3Symbol(rank, std::vector<S3MonomialTerm>{{e, c * CMatrix::Identity(rank, rank)}});
}

S3Symbol S3Symbol::su2() {
  auto unit = [](int i, int j, Complex c) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(i, j) = c;
    return m;
  };
  return S3Symbol(2, std::vector<S3MonomialTerm>{
                         {{1, 0, 0, 0}, unit(0, 0, 1.0)},
                         {{0, 0, 0, 1}, unit(0, 1, -1.0)},
                         {{0, 1, 0, 0}, unit(1, 0, 1.0)},
                         {{0, 0, 1, 0}, unit(1, 1, 1.0)},
                     });
}

int S3Symbol::max_upward_shift() const {
  int shift = 0;
  for (const auto& [e, c] : terms_) shift = std::max(shift, e.total_shift());
  return shift;
}

int S3Symbol::max_total_degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e.total_degree());
  return deg;
}

CMatrix S3Symbol::evaluate(const HopfPoint& x) const {
  const double c = std::cos(x.theta);
  const double s = std::sin(x.theta);
  CMatrix out = CMatrix::Zero(rank_, rank_);
  for (const auto& [e, coeff] : terms_) {
    const double radial = ipow(c, e.p + e.s) * ipow(s, e.q + e.t);
    out += radial * std::polar(1.0, e.shift1() * x.phi1 + e.shift2() * x.phi2) * coeff;
  }
  return out;
}

CMatrix S3Symbol::evaluate(Complex z1, Complex z2) const {
  const Complex w1 = std::conj(z1);
  const Complex w2 = std::conj(z2);
  CMatrix out = CMatrix::Zero(rank_, rank_);
  for (const auto& [e, coeff] : terms_) {
    Complex m = 1.0;
    for (int j = 0; j < e.p; ++j) m *= z1;
    for (int j = 0; j < e.q; ++j) m *= z2;
    for (int j = 0; j < e.s; ++j) m *= w1;
    for (int j = 0; j < e.t; ++j) m *= w2;
    out += m * coeff;
  }
  return out;
}

S3Symbol multiply(const S3Symbol& a, const S3Symbol& b) {
  if (a.rank() != b.rank())
    throw SymbolError("rank mismatch in multiply: " + std::to_string(a.rank()) + " vs " +
                      std::to_string(b.rank()));
  std::vector<S3MonomialTerm> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms())
      out.push_back({{ea.p + eb.p, ea.q + eb.q, ea.s + eb.s, ea.t + eb.t}, ca * cb});
  return S3Symbol(a.rank(), out);
}

S3Symbol add(const S3Symbol& a, const S3Symbol& b) {
  if (a.rank() != b.rank()) throw SymbolError("rank mismatch in add");
  std::vector<S3MonomialTerm> out;
  for (const auto& [e, c] : a.terms()) out.push_back({e, c});
  for (const auto& [e, c] : b.terms()) out.push_back({e, c});
  return S3Symbol(a.rank(), out);
}

S3Symbol left_multiply(const CMatrix& m, const S3Symbol& a) {
  if (m.rows() != a.rank() || m.cols() != a.rank())
    throw SymbolError("rank mismatch in left_multiply");
  std::vector<S3MonomialTerm> out;
  for (const auto& [e, c] : a.terms()) out.push_back({e, m * c});
  return S3Symbol(a.rank(), out);
}

S3Symbol adjoint(const S3Symbol& a) {
  std::vector<S3MonomialTerm> out;
  for (const auto& [e, c] : a.terms()) out.push_back({{e.s, e.t, e.p, e.q}, c.adjoint()});
  return S3Symbol(a.rank(), out);
}

S3Symbol conjugate(const S3Symbol& a) {
  std::vector<S3MonomialTerm> out;
  for (const auto& [e, c] : a.terms()) out.push_back({{e.s, e.t, e.p, e.q}, c.conjugate()});
  return S3Symbol(a.rank(), out);
}

S3Symbol direct_sum(const S3Symbol& a, const S3Symbol& b) {
  const int r = a.rank() + b.rank();
  std::vector<S3MonomialTerm> out;
  for (const auto& [e, c] : a.terms()) {
    CMatrix m = CMatrix::Zero(r, r);
    m.topLeftCorner(a.rank(), a.rank()) = c;
    out.push_back({e, m});
  }
  for (const auto& [e, c] : b.terms()) {
    CMatrix m = CMatrix::Zero(r, r);
    m.bottomRightCorner(b.rank(), b.rank()) = c;
    out.push_back({e, m});
  }
  return S3Symbol(r, out);
}

std::vector<HopfPoint> hopf_grid(int grid_size) {
  std::vector<HopfPoint> grid;
  grid.reserve(static_cast<std::size_t>(grid_size) * grid_size * grid_size);
  for (int i = 0; i < grid_size; ++i) {
    const double theta = (kPi / 2) * i / (grid_size - 1);
    for (int j = 0; j < grid_size; ++j)
      for (int k = 0; k < grid_size; ++k)
        grid.push_back({theta, kTwoPi * j / grid_size, kTwoPi * k / grid_size});
  }
  return grid;
}

double unitarity_defect(const S3Symbol& a, int grid_size) {
  const CMatrix eye = CMatrix::Identity(a.rank(), a.rank());
  double worst = 0.0;
  for (const auto& x : hopf_grid(grid_size)) {
    const CMatrix v = a.evaluate(x);
    worst = std::max(worst, (v.adjoint() * v - eye).cwiseAbs().maxCoeff());
  }
  return worst;
}

S3Symbol power(const S3Symbol& a, int k) {
  if (k == 0) return S3Symbol::identity(a.rank());
  S3Symbol base = a;
  if (k < 0) {
    if (unitarity_defect(a, 2 * a.max_total_degree() + 8) > 1e-10)
      throw SymbolError("negative powers require a pointwise-unitary symbol");
    base = adjoint(a);
    k = -k;
  }
  S3Symbol out = base;
  for (int j = 1; j < k; ++j) out = multiply(out, base);
  return out;
}

double invertibility_margin(const S3Symbol& a, int grid_size) {
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& x : hopf_grid(grid_size))
    margin = std::min(margin, std::abs(a.evaluate(x).determinant()));
  return margin;
}

HopfPartials hopf_partials(const S3Symbol& a, const HopfPoint& x) {
  const int r = a.rank();
  HopfPartials out{CMatrix::Zero(r, r), CMatrix::Zero(r, r), CMatrix::Zero(r, r)};
  const double c = std::cos(x.theta);
  const double s = std::sin(x.theta);
  for (const auto& [e, coeff] : a.terms()) {
    const int nc = e.p + e.s;
    const int ns = e.q + e.t;
    const Complex phase = std::polar(1.0, e.shift1() * x.phi1 + e.shift2() * x.phi2);
    const double radial = ipow(c, nc) * ipow(s, ns);
    const double radial_dtheta = dpow(c, nc) * (-s) * ipow(s, ns) + ipow(c, nc) * dpow(s, ns) * c;
    out.d_theta += (radial_dtheta * phase) * coeff;
    out.d_phi1 += (Complex(0.0, e.shift1()) * radial * phase) * coeff;
    out.d_phi2 += (Complex(0.0, e.shift2()) * radial * phase) * coeff;
  }
  return out;
}

}  // namespace tidx
