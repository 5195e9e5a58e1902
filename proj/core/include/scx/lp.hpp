#pragma once

#include <vector>

#include "scx/rational.hpp"

namespace scx {

/// minimise c·x subject to A x >= b, x >= 0, all data exact.
struct LpProblem {
  std::vector<Rational> objective;  // c, one entry per column of A
  RationalMatrix constraints;       // A
  std::vector<Rational> bounds;     // b, one entry per row of A
};

enum class LpStatus { optimal, infeasible, unbounded };

const char* to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;               // c·x = b·y when optimal
  std::vector<Rational> primal;  // x
  std::vector<Rational> dual;    // y >= 0 with Aᵀy <= c
  int pivots = 0;
};

/// Two-phase tableau simplex with Bland's rule throughout. An optimal
/// result is certified before returning (primal and dual feasibility,
/// equal objectives, complementary slackness, all exact); a failed
/// certificate throws NumericError.
LpSolution lp_solve(const LpProblem& problem);

/// Exact certificate check used by lp_solve; exposed for tests.
bool certify_optimal(const LpProblem& problem, const LpSolution& solution);

}  // namespace scx
