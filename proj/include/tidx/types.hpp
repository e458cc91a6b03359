#pragma once

#include <complex>

#include <Eigen/Dense>

namespace tidx {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Point of S^3 in Hopf coordinates: z1 = cos(theta) e^{i phi1}, z2 = sin(theta) e^{i phi2},
/// theta in [0, pi/2], phi1 and phi2 in [0, 2pi).
struct HopfPoint {
  double theta = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;

  Complex z1() const { return std::polar(std::cos(theta), phi1); }
  Complex z2() const { return std::polar(std::sin(theta), phi2); }
};

inline bool all_finite(const CMatrix& m) { return m.allFinite(); }

}  // namespace tidx
