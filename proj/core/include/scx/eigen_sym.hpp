#pragma once

#include <vector>

#include "scx/matrix.hpp"

namespace scx {

/// Dense real symmetric matrix. Construction rejects any asymmetry.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int side);
  /// Throws NumericError if `row_major` is not exactly symmetric or has
  /// non-finite entries.
  SymMatrix(int side, std::vector<double> row_major);
  static SymMatrix from_int(const IntMatrix& m);
  static SymMatrix diagonal(const std::vector<double>& diag);

  int side() const { return side_; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * side_ + j]; }
  /// Sets both (i, j) and (j, i).
  void set(int i, int j, double value);
  const std::vector<double>& data() const { return data_; }
  double frobenius_norm() const;

 private:
  int side_ = 0;
  std::vector<double> data_;
};

struct JacobiOptions {
  double relative_tolerance = 1e-12;  // stop when off(A) < tol * ||A||_F
  int max_sweeps = 100;
};

struct SymEigenDecomposition {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[i] pairs with values[i], unit norm
  int sweeps = 0;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
/// Throws NumericError when the sweep limit is reached.
std::vector<double> eigenvalues_sym(const SymMatrix& m, const JacobiOptions& options = {});

/// Eigenpairs by cyclic Jacobi. The two extremal pairs are checked for
/// ||Mv - λv|| <= 1e-8 ||M||_F; a failed check throws NumericError.
SymEigenDecomposition eigen_decomposition_sym(const SymMatrix& m, const JacobiOptions& options = {});

}  // namespace scx
