#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tidx/errors.hpp"
#include "tidx/generators.hpp"
#include "tidx/topo_index.hpp"

namespace tidx {
namespace {

TEST(Winding, Monomials) {
  for (int m = -5; m <= 5; ++m) {
    const LaurentSymbol f = LaurentSymbol::monomial(m, 1, Complex(0.0, 2.0));
    EXPECT_EQ(winding_argument(f, 16), m);
    EXPECT_EQ(winding_roots(f), m);
  }
}

TEST(Winding, RootsInsideCount) {
  // z^-2 (z - 0.5)(z + 0.2i)(z - 4): winding -2 + 2 = 0.
  LaurentSymbol f = LaurentSymbol::monomial(-2);
  for (Complex r : {Complex(0.5), Complex(0.0, -0.2), Complex(4.0)})
    f = multiply(f, LaurentSymbol::scalar(0, {-r, 1.0}));
  EXPECT_EQ(winding_roots(f), 0);
  EXPECT_EQ(winding_argument(f, 8), 0);
}

TEST(Winding, ArgumentGridFloorPreventsAliasing) {
  // On 4 points z^7 coincides with z^-1; the degree floor makes the grid fine enough.
  EXPECT_EQ(winding_argument(LaurentSymbol::monomial(7), 4), 7);
  EXPECT_EQ(winding_argument(LaurentSymbol::monomial(-9), 3), -9);
}

TEST(Winding, ArgumentRefinesNearRoots) {
  // Root at 1.02: the phase moves fast near z = 1 and the first grid undersamples it.
  LaurentSymbol f = LaurentSymbol::scalar(0, {-1.02, 1.0});
  f = multiply(f, LaurentSymbol::scalar(0, {-0.98, 1.0}));
  EXPECT_EQ(winding_argument(f, 8), winding_roots(f));
}

TEST(Winding, RejectsZerosOnCircleAndMatrices) {
  EXPECT_THROW(winding_roots(LaurentSymbol::scalar(0, {-1.0, 1.0})), NotInvertibleError);
  EXPECT_THROW(winding_argument(LaurentSymbol::scalar(0, {-1.0, 1.0}), 8), NotInvertibleError);
  EXPECT_THROW(winding_roots(LaurentSymbol::identity(2)), SymbolError);
}

TEST(Winding, IgnoresRoundingLevelEndCoefficients) {
  const LaurentSymbol f = LaurentSymbol::scalar(-1, {1e-18, 2.0, 1.0, 1e-18});
  EXPECT_EQ(winding_roots(f), 0);
}

TEST(ChernS1, MonomialsAreMinusWinding) {
  for (int m = -4; m <= 4; ++m) {
    const ChernValue ch = chern_s1(LaurentSymbol::monomial(m), 64);
    EXPECT_EQ(ch.nearest_integer, -m);
    EXPECT_LT(ch.integrality_defect, 1e-13);
    ASSERT_EQ(ch.grid_report.size(), 2u);
    EXPECT_TRUE(std::isnan(ch.grid_report[0].delta));
  }
}

TEST(ChernS1, AgreesWithWindingOfDeterminant) {
  SymbolGenerator gen(11);
  for (int j = 0; j < 10; ++j) {
    const LaurentSymbol a = gen.matrix_invertible(3);
    const ChernValue ch = chern_s1(a, 512);
    EXPECT_LT(ch.integrality_defect, 1e-8);
    EXPECT_EQ(ch.nearest_integer, -winding_roots(det_laurent(a)));
  }
}

TEST(ChernS1, NonInvertibleSymbolThrows) {
  EXPECT_THROW(chern_s1(LaurentSymbol::scalar(0, {-1.0, 1.0}), 64), NotInvertibleError);
}

TEST(ChernS3, Su2AndPowers) {
  for (int k = -2; k <= 2; ++k) {
    const ChernValue ch = chern_s3(power(S3Symbol::su2(), k), 24, 24);
    EXPECT_EQ(ch.nearest_integer, k) << k;
    EXPECT_LT(ch.integrality_defect, 1e-6);
  }
}

TEST(ChernS3, AdjointReversesSignConjugationDoesNot) {
  EXPECT_EQ(chern_s3(adjoint(S3Symbol::su2()), 16, 16).nearest_integer, -1);
  // On SU(2), conj(g) = J g J^{-1}: complex conjugation preserves the degree.
  EXPECT_EQ(chern_s3(conjugate(S3Symbol::su2()), 16, 16).nearest_integer, 1);
}

TEST(ChernS3, InvariantUnderConstantUnitaries) {
  SymbolGenerator gen(3);
  const S3Symbol a = gen.s3_unitary_degree_one(1);
  const ChernValue ch = chern_s3(a, 16, 16);
  EXPECT_EQ(ch.nearest_integer, 1);
  EXPECT_LT(ch.integrality_defect, 1e-10);
}

TEST(ChernS3, NonUnitaryInvertibleSymbol) {
  // su2 times the positive constant diag(2, 1/2): not unitary, same class.
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 0.5;
  const S3Symbol a = multiply(S3Symbol::su2(), S3Symbol::constant(d));
  const ChernValue ch = chern_s3(a, 24, 24);
  EXPECT_EQ(ch.nearest_integer, 1);
  EXPECT_LT(ch.integrality_defect, 1e-6);
}

TEST(ChernS3, PermutationExpansionMatchesCommutatorForm) {
  std::mt19937_64 rng(9);
  SymbolGenerator gen(9);
  for (int j = 0; j < 10; ++j) {
    const S3Symbol a = j % 2 == 0 ? gen.s3_unitary_degree_one(1)
                                  : add(S3Symbol::su2(), S3Symbol::constant(0.1 * CMatrix::Identity(2, 2)));
    const HopfPoint x = testing::random_hopf_point(rng);
    const Complex fast = s3_chern_density(a, x);
    const Complex full = s3_chern_density_permutation_sum(a, x);
    EXPECT_LT(std::abs(fast - full), 1e-12 * (1.0 + std::abs(full)));
  }
}

TEST(ChernS3, VanishingSymbolThrows) {
  EXPECT_THROW(chern_s3(S3Symbol::monomial({1, 0, 0, 0}), 8, 8), NotInvertibleError);
}

TEST(TopologicalIndex, RequiresIntegrality) {
  ChernValue v;
  v.value = Complex(0.5, 0.0);
  v.nearest_integer = 0;
  v.integrality_defect = 0.5;
  EXPECT_THROW(require_integral(v, 1e-4), NumericsError);
  EXPECT_EQ(topological_index(LaurentSymbol::monomial(-3)), 3);
  EXPECT_EQ(topological_index(S3Symbol::su2()), 1);
}

}  // namespace
}  // namespace tidx
