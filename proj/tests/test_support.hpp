#pragma once

#include <random>

#include "tidx/laurent_symbol.hpp"
#include "tidx/s3_symbol.hpp"

namespace tidx::testing {

inline Complex random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  return {normal(rng), normal(rng)};
}

inline CMatrix random_matrix(std::mt19937_64& rng, int rank) {
  CMatrix m(rank, rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < rank; ++i) m(i, j) = random_complex(rng);
  return m;
}

/// Dense random Laurent symbol on the window [k_min, k_max] (not necessarily invertible).
inline LaurentSymbol random_laurent(std::mt19937_64& rng, int rank, int k_min, int k_max) {
  std::vector<CMatrix> coeffs;
  for (int k = k_min; k <= k_max; ++k) coeffs.push_back(random_matrix(rng, rank));
  return LaurentSymbol(rank, k_min, coeffs);
}

/// Random polynomial symbol on S^3 with all exponents p + q + s + t <= degree.
inline S3Symbol random_s3_polynomial(std::mt19937_64& rng, int rank, int degree, int terms) {
  std::uniform_int_distribution<int> exponent(0, degree);
  std::vector<S3MonomialTerm> out;
  while (static_cast<int>(out.size()) < terms) {
    S3Exponents e{exponent(rng), exponent(rng), exponent(rng), exponent(rng)};
    if (e.total_degree() > degree) continue;
    out.push_back({e, random_matrix(rng, rank)});
  }
  return S3Symbol(rank, out);
}

inline HopfPoint random_hopf_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return {unit(rng) * kPi / 2, unit(rng) * kTwoPi, unit(rng) * kTwoPi};
}

inline double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace tidx::testing
