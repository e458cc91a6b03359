#pragma once

#include <cstdint>
#include <random>

#include "tidx/laurent_symbol.hpp"
#include "tidx/s3_symbol.hpp"

namespace tidx {

/// Seeded source of random invertible test symbols. Same seed, same sequence.
///
/// Scalar factors are built from roots kept away from the unit circle, so Toeplitz kernels
/// decay geometrically and finite sections resolve them.
class SymbolGenerator {
 public:
  explicit SymbolGenerator(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  // inclusive
  Complex unit_phase();

  /// Haar-ish random unitary (QR of a Gaussian matrix with phase-fixed R).
  CMatrix unitary(int rank);
  /// Constant matrix I + B with spectral norm of B equal to `norm` (< 1 keeps it invertible).
  CMatrix near_identity(int rank, double norm);

  /// Scalar symbol c z^p prod (z - root) with window inside [lo, hi], at most max_roots roots,
  /// each root of modulus <= inner_radius or in [1 / inner_radius, 3], coefficients scaled to
  /// max modulus 1, and grid margin above `margin`.
  LaurentSymbol scalar_invertible(int lo = -6, int hi = 6, int max_roots = 6, double margin = 0.1,
                                  double inner_radius = 0.6);

  /// U1 * diag(f_1..f_r) * E * U2: unitaries U1, U2, scalar factors f_i with window in [-2, 2]
  /// and roots of modulus <= 0.4 or >= 2.5,
  /// E = I + c z^k e_ij unimodular with k in {-1, 0, 1}. Window lies inside [-3, 3];
  /// margin above `margin`.
  LaurentSymbol matrix_invertible(int rank, double margin = 0.1);

  /// U1 * su2()^e * U2 with e in {-1, 0, 1}, U1 and U2 random unitaries (rank 2, degree <= 1).
  S3Symbol s3_unitary_degree_one(int exponent);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tidx
