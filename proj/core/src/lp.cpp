#include "scx/lp.hpp"

#include <string>

#include "scx/error.hpp"

namespace scx {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::optimal:
      return "optimal";
    case LpStatus::infeasible:
      return "infeasible";
    case LpStatus::unbounded:
      return "unbounded";
  }
  return "?";
}

namespace {

// Columns: x (n), surplus s (m), artificials (one per row with b_i > 0).
// Every row is scaled by sign so its right-hand side is nonnegative; rows
// with b_i <= 0 start with their surplus basic, the rest with an artificial.
class Tableau {
 public:
  explicit Tableau(const LpProblem& p) : m_(p.constraints.rows()), n_(p.constraints.cols()) {
    flip_.assign(m_, false);
    for (int i = 0; i < m_; ++i) {
      if (p.bounds[i] <= 0) flip_[i] = true;
      if (!flip_[i]) ++num_art_;
    }
    cols_ = n_ + m_ + num_art_;
    rows_.assign(m_, std::vector<Rational>(cols_));
    rhs_.resize(m_);
    basis_.resize(m_);
    initial_basis_.resize(m_);
    int art = 0;
    for (int i = 0; i < m_; ++i) {
      const int sign = flip_[i] ? -1 : 1;
      for (int j = 0; j < n_; ++j) rows_[i][j] = sign * p.constraints(i, j);
      rows_[i][n_ + i] = -sign;
      rhs_[i] = sign * p.bounds[i];
      if (flip_[i]) {
        basis_[i] = n_ + i;
      } else {
        basis_[i] = n_ + m_ + art;
        rows_[i][basis_[i]] = 1;
        ++art;
      }
      initial_basis_[i] = basis_[i];
    }
  }

  bool is_artificial(int j) const { return j >= n_ + m_; }

  // Minimises cost·z over the current basis. Returns false if unbounded.
  bool optimise(const std::vector<Rational>& cost, bool allow_artificial, int& pivots) {
    std::vector<Rational> reduced = cost;
    for (int i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j < cols_; ++j) reduced[j] -= cb * rows_[i][j];
    }
    for (;;) {
      int entering = -1;
      for (int j = 0; j < cols_; ++j) {
        if (!allow_artificial && is_artificial(j)) continue;
        if (reduced[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;
      int leaving = -1;
      Rational best_ratio;
      for (int i = 0; i < m_; ++i) {
        if (rows_[i][entering] <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][entering];
        if (leaving < 0 || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering, &reduced);
      ++pivots;
    }
  }

  void pivot(int r, int e, std::vector<Rational>* reduced) {
    const Rational inv = 1 / rows_[r][e];
    for (int j = 0; j < cols_; ++j) {
      if (rows_[r][j] != 0) rows_[r][j] *= inv;
    }
    rhs_[r] *= inv;
    auto eliminate = [&](std::vector<Rational>& row, Rational* rhs) {
      const Rational factor = row[e];
      if (factor == 0) return;
      for (int j = 0; j < cols_; ++j) {
        if (rows_[r][j] != 0) row[j] -= factor * rows_[r][j];
      }
      if (rhs) *rhs -= factor * rhs_[r];
    };
    for (int i = 0; i < m_; ++i) {
      if (i != r) eliminate(rows_[i], &rhs_[i]);
    }
    if (reduced) eliminate(*reduced, nullptr);
    basis_[r] = e;
  }

  // After phase one: pivot zero-level artificials out where possible.
  void expel_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (int j = 0; j < n_ + m_; ++j) {
        if (rows_[i][j] != 0) {
          pivot(i, j, nullptr);
          break;
        }
      }
    }
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (int i = 0; i < m_; ++i) v += cost[basis_[i]] * rhs_[i];
    return v;
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(n_);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

  // y = D (c_Bᵀ B⁻¹); B⁻¹ is read off the columns of the initial basis.
  std::vector<Rational> dual(const std::vector<Rational>& cost) const {
    std::vector<Rational> y(m_);
    for (int k = 0; k < m_; ++k) {
      Rational v = 0;
      for (int i = 0; i < m_; ++i) v += cost[basis_[i]] * rows_[i][initial_basis_[k]];
      y[k] = flip_[k] ? -v : v;
    }
    return y;
  }

  int columns() const { return cols_; }
  int structural() const { return n_; }
  int surplus_end() const { return n_ + m_; }
  int artificial_count() const { return num_art_; }

 private:
  int m_;
  int n_;
  int num_art_ = 0;
  int cols_ = 0;
  std::vector<bool> flip_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
  std::vector<int> initial_basis_;
};

}  // namespace

bool certify_optimal(const LpProblem& p, const LpSolution& s) {
  const int m = p.constraints.rows();
  const int n = p.constraints.cols();
  if (static_cast<int>(s.primal.size()) != n || static_cast<int>(s.dual.size()) != m) return false;
  Rational cx = 0;
  for (int j = 0; j < n; ++j) {
    if (s.primal[j] < 0) return false;
    cx += p.objective[j] * s.primal[j];
  }
  Rational by = 0;
  for (int i = 0; i < m; ++i) {
    if (s.dual[i] < 0) return false;
    by += p.bounds[i] * s.dual[i];
    Rational ax = 0;
    for (int j = 0; j < n; ++j) ax += p.constraints(i, j) * s.primal[j];
    if (ax < p.bounds[i]) return false;
    if (s.dual[i] != 0 && ax != p.bounds[i]) return false;  // complementary slackness
  }
  for (int j = 0; j < n; ++j) {
    Rational aty = 0;
    for (int i = 0; i < m; ++i) aty += p.constraints(i, j) * s.dual[i];
    if (aty > p.objective[j]) return false;
    if (s.primal[j] != 0 && aty != p.objective[j]) return false;
  }
  return cx == by && cx == s.value;
}

LpSolution lp_solve(const LpProblem& problem) {
  const int m = problem.constraints.rows();
  const int n = problem.constraints.cols();
  if (static_cast<int>(problem.objective.size()) != n || static_cast<int>(problem.bounds.size()) != m) {
    throw InputError("lp_solve: objective/bounds sizes do not match the constraint matrix");
  }
  Tableau t(problem);
  LpSolution solution;

  if (t.artificial_count() > 0) {
    std::vector<Rational> phase_one(t.columns());
    for (int j = t.surplus_end(); j < t.columns(); ++j) phase_one[j] = 1;
    t.optimise(phase_one, true, solution.pivots);
    if (t.objective(phase_one) > 0) {
      solution.status = LpStatus::infeasible;
      return solution;
    }
    t.expel_artificials();
  }

  std::vector<Rational> cost(t.columns());
  for (int j = 0; j < n; ++j) cost[j] = problem.objective[j];
  if (!t.optimise(cost, false, solution.pivots)) {
    solution.status = LpStatus::unbounded;
    return solution;
  }
  solution.status = LpStatus::optimal;
  solution.value = t.objective(cost);
  solution.primal = t.primal();
  solution.dual = t.dual(cost);
  if (!certify_optimal(problem, solution)) {
    throw NumericError("lp_solve: optimality certificate failed");
  }
  return solution;
}

}  // namespace scx
