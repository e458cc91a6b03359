#include "tidx/topo_index.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "tidx/errors.hpp"
#include "tidx/quadrature.hpp"

namespace tidx {

namespace {

constexpr double kNodeMargin = 1e-6;
constexpr int kS3PrecheckGrid = 24;
constexpr double kZeroSample = 1e-12;
constexpr double kRootCircleBand = 1e-8;
constexpr double kNegligibleCoefficient = 1e-13;

CMatrix pointwise_inverse(const CMatrix& v) {
  const CMatrix eye = CMatrix::Identity(v.rows(), v.cols());
  if ((v.adjoint() * v - eye).cwiseAbs().maxCoeff() <= kUnitarityTolerance) return v.adjoint();
  Eigen::PartialPivLU<CMatrix> lu(v);
  if (!(std::abs(lu.determinant()) > kNodeMargin))
    throw NotInvertibleError("singular evaluation at quadrature node");
  return lu.inverse();
}

void require_scalar(const LaurentSymbol& f) {
  if (!f.is_scalar()) throw SymbolError("winding numbers need a scalar symbol; use det_laurent");
}

ChernValue finish(std::vector<QuadratureStep> steps, double convergence_tol) {
  ChernValue out;
  out.grid_report = std::move(steps);
  out.value = out.grid_report.front().value;
  out.nearest_integer = static_cast<int>(std::lround(out.value.real()));
  out.integrality_defect = std::abs(out.value - Complex(out.nearest_integer, 0.0));
  const double delta = out.grid_report.back().delta;
  if (!(delta <= convergence_tol)) {
    std::ostringstream msg;
    msg << "non-convergent doubling: Chern value moved by " << delta;
    throw NumericsError(msg.str());
  }
  return out;
}

std::array<CMatrix, 3> maurer_cartan(const S3Symbol& a, const HopfPoint& x) {
  const CMatrix inv = pointwise_inverse(a.evaluate(x));
  const HopfPartials d = hopf_partials(a, x);
  return {inv * d.d_theta, inv * d.d_phi1, inv * d.d_phi2};
}

}  // namespace

Complex chern_s1_value(const LaurentSymbol& a, int n) {
  std::vector<double> re(static_cast<std::size_t>(n));
  std::vector<double> im(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double theta = kTwoPi * j / n;
    const CMatrix v = a.evaluate_at_angle(theta);
    const Complex tr = (pointwise_inverse(v) * a.angle_derivative(theta)).trace();
    re[static_cast<std::size_t>(j)] = tr.real();
    im[static_cast<std::size_t>(j)] = tr.imag();
  }
  const Complex integral = Complex(pairwise_sum(re), pairwise_sum(im)) * (kTwoPi / n);
  return -integral / Complex(0.0, kTwoPi) * kOddSphereTodd;
}

Complex chern_s3_value(const S3Symbol& a, int n_theta, int n_phi) {
  // Gauss-Legendre nodes avoid the circles theta = 0 and theta = pi/2, where symbols such
  // as z1 vanish; check a grid that contains them first.
  const double margin = invertibility_margin(a, kS3PrecheckGrid);
  if (!(margin > kNodeMargin)) {
    std::ostringstream msg;
    msg << "symbol not invertible on S³ (margin " << margin << ")";
    throw NotInvertibleError(msg.str());
  }
  const QuadratureRule rule = gauss_legendre(n_theta, 0.0, kPi / 2);
  const double phi_weight = (kTwoPi / n_phi) * (kTwoPi / n_phi);
  std::vector<double> re;
  std::vector<double> im;
  re.reserve(static_cast<std::size_t>(n_theta) * n_phi * n_phi);
  im.reserve(re.capacity());
  for (int i = 0; i < n_theta; ++i) {
    const double w = rule.weights[static_cast<std::size_t>(i)] * phi_weight;
    for (int j = 0; j < n_phi; ++j)
      for (int k = 0; k < n_phi; ++k) {
        const HopfPoint x{rule.nodes[static_cast<std::size_t>(i)], kTwoPi * j / n_phi,
                          kTwoPi * k / n_phi};
        const Complex f = w * s3_chern_density(a, x);
        re.push_back(f.real());
        im.push_back(f.imag());
      }
  }
  const Complex integral(pairwise_sum(re), pairwise_sum(im));
  // -1! / (3! (2 pi i)^2) = 1 / (24 pi^2)
  const double coefficient = 1.0 / (24.0 * kPi * kPi);
  return static_cast<double>(kS3Orientation) * coefficient * integral * kOddSphereTodd;
}

int winding_argument(const LaurentSymbol& f, int grid_size) {
  require_scalar(f);
  if (grid_size < 3) throw NumericsError("winding grid too small");
  // A grid of n points cannot tell z^k from z^{k-n}; keep n well above the largest degree.
  const int degree = std::max(std::abs(f.k_min()), std::abs(f.k_max()));
  int n = std::max(grid_size, 4 * (degree + 2));
  for (int attempt = 0; attempt <= 3; ++attempt, n *= 2) {
    std::vector<Complex> samples(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      samples[static_cast<std::size_t>(j)] = f.evaluate_at_angle(kTwoPi * j / n)(0, 0);
      if (std::abs(samples[static_cast<std::size_t>(j)]) < kZeroSample)
        throw NotInvertibleError("zero on circle");
    }
    double total = 0.0;
    bool undersampled = false;
    for (int j = 0; j < n; ++j) {
      const Complex next = samples[static_cast<std::size_t>((j + 1) % n)];
      const double step = std::arg(next / samples[static_cast<std::size_t>(j)]);
      if (std::abs(step) > kPi / 2) {
        undersampled = true;
        break;
      }
      total += step;
    }
    if (!undersampled) return static_cast<int>(std::lround(total / kTwoPi));
  }
  throw NumericsError("undersampled after retries");
}

int winding_roots(const LaurentSymbol& f) {
  require_scalar(f);
  // End coefficients at rounding level (cancellation residue, e.g. from det_laurent) only
  // contribute roots near 0 or infinity; dropping them shifts k_min consistently.
  std::vector<Complex> c;
  for (const auto& m : f.coeffs()) c.push_back(m(0, 0));
  double biggest = 0.0;
  for (Complex v : c) biggest = std::max(biggest, std::abs(v));
  const double negligible = kNegligibleCoefficient * biggest;
  std::size_t lo = 0;
  std::size_t hi = c.size();
  while (std::abs(c[lo]) <= negligible) ++lo;
  while (std::abs(c[hi - 1]) <= negligible) --hi;

  const int k_min = f.k_min() + static_cast<int>(lo);
  const int degree = static_cast<int>(hi - lo) - 1;
  if (degree == 0) return k_min;
  const Complex lead = c[hi - 1];
  CMatrix companion = CMatrix::Zero(degree, degree);
  for (int j = 1; j < degree; ++j) companion(j, j - 1) = 1.0;
  for (int j = 0; j < degree; ++j)
    companion(j, degree - 1) = -c[lo + static_cast<std::size_t>(j)] / lead;
  Eigen::ComplexEigenSolver<CMatrix> eig(companion, false);
  if (eig.info() != Eigen::Success) throw NumericsError("companion eigenvalue solve failed");
  int inside = 0;
  for (Eigen::Index j = 0; j < degree; ++j) {
    const double radius = std::abs(eig.eigenvalues()(j));
    if (std::abs(1.0 - radius) < kRootCircleBand)
      throw NotInvertibleError("root on unit circle (symbol not invertible)");
    if (radius < 1.0) ++inside;
  }
  return k_min + inside;
}

ChernValue chern_s1(const LaurentSymbol& a, int grid_size, double convergence_tol) {
  if (grid_size < 1) throw NumericsError("quadrature grid must be positive");
  const Complex coarse = chern_s1_value(a, grid_size);
  const Complex fine = chern_s1_value(a, 2 * grid_size);
  return finish({{grid_size, coarse, std::numeric_limits<double>::quiet_NaN()},
                 {2 * grid_size, fine, std::abs(fine - coarse)}},
                convergence_tol);
}

ChernValue chern_s3(const S3Symbol& a, int n_theta, int n_phi, double convergence_tol) {
  if (n_theta < 1 || n_phi < 1) throw NumericsError("quadrature node counts must be positive");
  const Complex coarse = chern_s3_value(a, n_theta, n_phi);
  const Complex fine = chern_s3_value(a, 2 * n_theta, 2 * n_phi);
  return finish({{n_theta, coarse, std::numeric_limits<double>::quiet_NaN()},
                 {2 * n_theta, fine, std::abs(fine - coarse)}},
                convergence_tol);
}

Complex s3_chern_density(const S3Symbol& a, const HopfPoint& x) {
  const auto [at, a1, a2] = maurer_cartan(a, x);
  return 3.0 * (at * (a1 * a2 - a2 * a1)).trace();
}

Complex s3_chern_density_permutation_sum(const S3Symbol& a, const HopfPoint& x) {
  const auto forms = maurer_cartan(a, x);
  std::array<int, 3> order{0, 1, 2};
  Complex total = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (order[i] > order[j]) ++inversions;
    const double sign = inversions % 2 == 0 ? 1.0 : -1.0;
    total += sign * (forms[order[0]] * forms[order[1]] * forms[order[2]]).trace();
  } while (std::next_permutation(order.begin(), order.end()));
  return total;
}

void require_integral(const ChernValue& value, double tol) {
  const double delta = value.grid_report.empty() ? 0.0 : value.grid_report.back().delta;
  if (value.integrality_defect < tol && std::abs(value.value.imag()) < tol && delta < tol) return;
  std::ostringstream msg;
  msg << "non-integral Chern value " << value.value.real() << (value.value.imag() < 0 ? "-" : "+")
      << std::abs(value.value.imag()) << "i (defect " << value.integrality_defect
      << "); symbol likely non-invertible or under-resolved";
  throw NumericsError(msg.str());
}

int topological_index(const LaurentSymbol& a, const QuadratureConfig& config) {
  const ChernValue ch = chern_s1(a, config.s1_grid, config.integrality_tol);
  require_integral(ch, config.integrality_tol);
  return ch.nearest_integer;
}

int topological_index(const S3Symbol& a, const QuadratureConfig& config) {
  const ChernValue ch = chern_s3(a, config.theta_nodes, config.phi_nodes, config.integrality_tol);
  require_integral(ch, config.integrality_tol);
  return ch.nearest_integer;
}

}  // namespace tidx
