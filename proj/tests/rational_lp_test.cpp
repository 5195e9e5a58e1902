#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "scx/error.hpp"
#include "scx/lp.hpp"
#include "scx/rational.hpp"

using scx::Rational;

TEST(Rational, Parse) {
  EXPECT_EQ(scx::parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(scx::parse_rational("-4"), Rational(-4));
  EXPECT_EQ(scx::to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(scx::to_string(Rational(2)), "2");
  EXPECT_THROW(scx::parse_rational("1/0"), scx::ParseError);
  EXPECT_THROW(scx::parse_rational("x"), scx::ParseError);
  EXPECT_THROW(scx::parse_rational(""), scx::ParseError);
  EXPECT_THROW(scx::parse_rational("1/2/3"), scx::ParseError);
}

TEST(Rank, DenseAndSparseAgreeWithOracle) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    const int rows = 1 + static_cast<int>(rng() % 8);
    const int cols = 1 + static_cast<int>(rng() % 8);
    scx::SparseIntMatrix sparse(rows, cols);
    scx::RationalMatrix dense(rows, cols);
    std::vector<std::vector<mpq_class>> plain(rows, std::vector<mpq_class>(cols));
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        // Low-entropy entries make rank deficiency common.
        const long v = static_cast<long>(rng() % 3) - 1;
        sparse.push(i, j, v);
        dense.set(i, j, Rational(v, 1 + static_cast<long>(rng() % 3)));
        plain[i][j] = dense(i, j);
      }
    }
    std::vector<std::vector<mpq_class>> plain_int(rows, std::vector<mpq_class>(cols));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) plain_int[i][j] = sparse.at(i, j);
    EXPECT_EQ(static_cast<long>(scx::rank_exact(dense)), oracle::rank_q(plain));
    EXPECT_EQ(static_cast<long>(scx::rank_exact(sparse)), oracle::rank_q(plain_int));
  }
}

TEST(Lp, SmallCoveringProblem) {
  // min x + y  s.t. x + 2y >= 2, 3x + y >= 3: optimum at (4/5, 3/5), value 7/5.
  scx::LpProblem p;
  p.objective = {1, 1};
  p.constraints = scx::RationalMatrix::from_int({{1, 2}, {3, 1}});
  p.bounds = {2, 3};
  const auto s = scx::lp_solve(p);
  ASSERT_EQ(s.status, scx::LpStatus::optimal);
  EXPECT_EQ(s.value, Rational(7, 5));
  EXPECT_EQ(s.primal[0], Rational(4, 5));
  EXPECT_EQ(s.primal[1], Rational(3, 5));
  EXPECT_TRUE(scx::certify_optimal(p, s));
}

TEST(Lp, InfeasibleAndUnbounded) {
  scx::LpProblem infeasible;
  infeasible.objective = {1};
  infeasible.constraints = scx::RationalMatrix::from_int({{0}});
  infeasible.bounds = {1};
  EXPECT_EQ(scx::lp_solve(infeasible).status, scx::LpStatus::infeasible);

  scx::LpProblem unbounded;
  unbounded.objective = {-1};
  unbounded.constraints = scx::RationalMatrix::from_int({{1}});
  unbounded.bounds = {1};
  EXPECT_EQ(scx::lp_solve(unbounded).status, scx::LpStatus::unbounded);
}

TEST(Lp, DegenerateProblemTerminates) {
  // A classic cycling-prone shape; Bland's rule must finish.
  scx::LpProblem p;
  p.objective = {-10, 57, 9, 24};
  p.constraints = scx::RationalMatrix(3, 4);
  const long a[3][4] = {{-1, 11, 5, -18}, {-1, 3, 1, -2}, {-1, 0, 0, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) p.constraints.set(i, j, Rational(a[i][j], i < 2 ? 2 : 1));
  p.bounds = {0, 0, -1};
  const auto s = scx::lp_solve(p);
  ASSERT_EQ(s.status, scx::LpStatus::optimal);
  EXPECT_EQ(s.value, Rational(-1));
  EXPECT_TRUE(scx::certify_optimal(p, s));
}

TEST(Lp, RandomProblemsCertify) {
  std::mt19937_64 rng(99);
  int optimal = 0;
  for (int t = 0; t < 60; ++t) {
    const int rows = 1 + static_cast<int>(rng() % 5);
    const int cols = 1 + static_cast<int>(rng() % 5);
    scx::LpProblem p;
    p.constraints = scx::RationalMatrix(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) p.constraints.set(i, j, static_cast<long>(rng() % 7) - 2);
    for (int j = 0; j < cols; ++j) p.objective.emplace_back(static_cast<long>(rng() % 5));
    for (int i = 0; i < rows; ++i) p.bounds.emplace_back(static_cast<long>(rng() % 7) - 3);
    const auto s = scx::lp_solve(p);
    if (s.status == scx::LpStatus::optimal) {
      ++optimal;
      EXPECT_TRUE(scx::certify_optimal(p, s));
    }
  }
  EXPECT_GT(optimal, 10);
}
