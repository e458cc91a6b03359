#pragma once

#include <vector>

#include "tidx/laurent_symbol.hpp"
#include "tidx/s3_symbol.hpp"

namespace tidx {

/// One row of a quadrature convergence table. delta is |value - previous value|,
/// NaN on the first row.
struct QuadratureStep {
  int size = 0;
  Complex value;
  double delta = 0.0;
};

/// ch(alpha)[S^m] evaluated by quadrature (Td(S^m) = 1 on odd spheres).
struct ChernValue {
  Complex value;
  int nearest_integer = 0;
  double integrality_defect = 0.0;  // |value - nearest_integer|, imaginary part included
  std::vector<QuadratureStep> grid_report;
};

/// Orientation of [S^3] relative to the Hopf coordinate frame (theta, phi1, phi2).
/// Calibrated once so that the Szego-Toeplitz index of su2() equals its Chern number.
inline constexpr int kS3Orientation = -1;

/// Todd class of an odd-dimensional sphere.
inline constexpr double kOddSphereTodd = 1.0;

inline constexpr double kDefaultIntegralityTolerance = 1e-4;

/// Winding number of a scalar symbol by phase tracking on a uniform grid of
/// max(grid_size, 4 (max(|k_min|, |k_max|) + 2)) points (fewer would alias z^k to z^{k-n}).
/// The grid is doubled (at most three times) whenever a phase increment exceeds pi/2.
/// Throws NotInvertibleError if |f| < 1e-12 at a sample.
int winding_argument(const LaurentSymbol& f, int grid_size);

/// Winding number of a scalar symbol by the argument principle: k_min plus the number of
/// roots of z^{-k_min} f(z) inside the unit disk (companion-matrix eigenvalues). End
/// coefficients below 1e-13 of the largest are treated as zero.
/// Throws NotInvertibleError if a root lies within 1e-8 of the unit circle.
int winding_roots(const LaurentSymbol& f);

/// Single-grid quadrature values (no doubling check); building blocks of the tables below.
/// The S^3 value first checks invertibility on a Hopf grid that includes the poles
/// (NotInvertibleError when min |det| <= 1e-6).
Complex chern_s1_value(const LaurentSymbol& a, int grid_size);
Complex chern_s3_value(const S3Symbol& a, int n_theta, int n_phi);

/// -(1/2 pi i) * integral of tr(a^{-1} da) over S^1, trapezoid rule on grid_size nodes, with
/// a doubling check. Throws NumericsError if the doubled grid moves the value by more than
/// convergence_tol.
ChernValue chern_s1(const LaurentSymbol& a, int grid_size,
                    double convergence_tol = kDefaultIntegralityTolerance);

/// (1 / 24 pi^2) * integral over S^3 of tr((a^{-1} da)^3): Gauss-Legendre in theta, trapezoid
/// in phi1 and phi2, with a doubling check.
ChernValue chern_s3(const S3Symbol& a, int n_theta, int n_phi,
                    double convergence_tol = kDefaultIntegralityTolerance);

/// Coefficient of dtheta dphi1 dphi2 in tr((a^{-1} da)^3) at x, as 3 tr(A_t [A_1, A_2])
/// with A_u = a^{-1} d_u a.
Complex s3_chern_density(const S3Symbol& a, const HopfPoint& x);

/// Same density as the signed sum over all six orderings of (A_t, A_1, A_2).
Complex s3_chern_density_permutation_sum(const S3Symbol& a, const HopfPoint& x);

struct QuadratureConfig {
  int s1_grid = 512;
  int theta_nodes = 24;
  int phi_nodes = 24;
  double integrality_tol = kDefaultIntegralityTolerance;
};

/// Nearest integer to the Chern value, accepted only if the integrality defect, the
/// imaginary part and the doubling delta are all below config.integrality_tol.
int topological_index(const LaurentSymbol& a, const QuadratureConfig& config = {});
int topological_index(const S3Symbol& a, const QuadratureConfig& config = {});

/// Throws NumericsError ("non-integral Chern value") unless the value is accepted.
void require_integral(const ChernValue& value, double tol);

}  // namespace tidx
