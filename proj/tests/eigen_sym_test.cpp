#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "scx/eigen_sym.hpp"
#include "scx/error.hpp"

TEST(Jacobi, MatchesEigenOnRandomSymmetricMatrices) {
  for (int t = 0; t < 30; ++t) {
    const int side = 1 + t % 25;
    const scx::IntMatrix m = oracle::random_symmetric(1000 + t, side, 9);
    const auto got = scx::eigenvalues_sym(scx::SymMatrix::from_int(m));
    const Eigen::VectorXd want = oracle::eigenvalues(oracle::to_eigen(m));
    ASSERT_EQ(static_cast<int>(got.size()), side);
    for (int i = 0; i < side; ++i) EXPECT_NEAR(got[i], want(i), 1e-9 * (1 + std::abs(want(i))));
  }
}

TEST(Jacobi, DecompositionResiduals) {
  const scx::IntMatrix m = oracle::random_symmetric(5, 12, 4);
  const scx::SymMatrix s = scx::SymMatrix::from_int(m);
  const auto dec = scx::eigen_decomposition_sym(s);
  for (std::size_t k = 0; k < dec.values.size(); ++k) {
    double norm = 0.0;
    for (int i = 0; i < s.side(); ++i) {
      double r = -dec.values[k] * dec.vectors[k][i];
      for (int j = 0; j < s.side(); ++j) r += s(i, j) * dec.vectors[k][j];
      norm += r * r;
    }
    EXPECT_LT(std::sqrt(norm), 1e-9 * s.frobenius_norm());
  }
}

TEST(Jacobi, DiagonalAndEmpty) {
  const auto v = scx::eigenvalues_sym(scx::SymMatrix::diagonal({3.0, -1.0, 2.0}));
  EXPECT_EQ(v, (std::vector<double>{-1.0, 2.0, 3.0}));
  EXPECT_TRUE(scx::eigenvalues_sym(scx::SymMatrix(0)).empty());
}

TEST(Jacobi, RejectsAsymmetricAndNonFinite) {
  EXPECT_THROW(scx::SymMatrix(2, {1.0, 2.0, 3.0, 1.0}), scx::NumericError);
  EXPECT_THROW(scx::SymMatrix(1, {std::nan("")}), scx::NumericError);
}

TEST(Jacobi, SweepLimitIsReported) {
  const scx::IntMatrix m = oracle::random_symmetric(9, 20, 5);
  EXPECT_THROW(scx::eigenvalues_sym(scx::SymMatrix::from_int(m), {1e-300, 1}), scx::NumericError);
}
