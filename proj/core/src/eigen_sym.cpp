#include "scx/eigen_sym.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "scx/error.hpp"

namespace scx {

IntMatrix multiply_to_dense(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw InputError("multiply_to_dense: shape mismatch");
  }
  IntMatrix out(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (const auto& [k, aik] : a.row(i)) {
      for (const auto& [j, bkj] : b.row(k)) out(i, j) += aik * bkj;
    }
  }
  return out;
}

SymMatrix::SymMatrix(int side) : side_(side), data_(static_cast<std::size_t>(side) * side, 0.0) {}

SymMatrix::SymMatrix(int side, std::vector<double> row_major) : side_(side), data_(std::move(row_major)) {
  if (data_.size() != static_cast<std::size_t>(side) * side) {
    throw NumericError("SymMatrix: expected " + std::to_string(side * side) + " entries");
  }
  for (int i = 0; i < side_; ++i) {
    for (int j = 0; j < side_; ++j) {
      const double v = (*this)(i, j);
      if (!std::isfinite(v)) throw NumericError("SymMatrix: non-finite entry");
      if (v != (*this)(j, i)) throw NumericError("SymMatrix: matrix is not symmetric");
    }
  }
}

SymMatrix SymMatrix::from_int(const IntMatrix& m) {
  std::vector<double> data(m.data().begin(), m.data().end());
  return SymMatrix(m.side(), std::move(data));
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& diag) {
  SymMatrix m(static_cast<int>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), diag[i]);
  return m;
}

void SymMatrix::set(int i, int j, double value) {
  data_[static_cast<std::size_t>(i) * side_ + j] = value;
  data_[static_cast<std::size_t>(j) * side_ + i] = value;
}

double SymMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (double v : data_) sum += v * v;
  return std::sqrt(sum);
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, int m) {
  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    const double* row = a.data() + static_cast<std::size_t>(i) * m;
    for (int j = i + 1; j < m; ++j) sum += row[j] * row[j];
  }
  return std::sqrt(2.0 * sum);
}

// Cyclic Jacobi on a full row-major copy. Rows p and q are rotated as
// contiguous arrays and then mirrored into columns p and q.
SymEigenDecomposition jacobi(const SymMatrix& input, const JacobiOptions& options, bool want_vectors) {
  const int m = input.side();
  std::vector<double> a = input.data();
  std::vector<double> vt;  // rows are eigenvectors
  if (want_vectors) {
    vt.assign(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i) vt[static_cast<std::size_t>(i) * m + i] = 1.0;
  }
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * m + j]; };

  const double norm = input.frobenius_norm();
  SymEigenDecomposition out;
  bool converged = (norm == 0.0);
  int sweep = 0;
  for (; !converged && sweep < options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a, m) < options.relative_tolerance * norm) {
      converged = true;
      break;
    }
    for (int p = 0; p < m - 1; ++p) {
      for (int q = p + 1; q < m; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p);
        const double aqq = at(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        double* row_p = &at(p, 0);
        double* row_q = &at(q, 0);
        for (int k = 0; k < m; ++k) {
          const double xp = row_p[k];
          const double xq = row_q[k];
          row_p[k] = c * xp - s * xq;
          row_q[k] = s * xp + c * xq;
        }
        row_p[p] = app - t * apq;
        row_q[q] = aqq + t * apq;
        row_p[q] = 0.0;
        row_q[p] = 0.0;
        for (int k = 0; k < m; ++k) {
          if (k == p || k == q) continue;
          at(k, p) = row_p[k];
          at(k, q) = row_q[k];
        }
        if (want_vectors) {
          double* vp = &vt[static_cast<std::size_t>(p) * m];
          double* vq = &vt[static_cast<std::size_t>(q) * m];
          for (int k = 0; k < m; ++k) {
            const double xp = vp[k];
            const double xq = vq[k];
            vp[k] = c * xp - s * xq;
            vq[k] = s * xp + c * xq;
          }
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(a, m) >= options.relative_tolerance * norm) {
    throw NumericError("Jacobi eigensolver did not converge after " + std::to_string(options.max_sweeps) +
                       " sweeps");
  }
  out.sweeps = sweep;

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return at(i, i) < at(j, j); });
  for (int i : order) {
    out.values.push_back(at(i, i));
    if (want_vectors) {
      out.vectors.emplace_back(vt.begin() + static_cast<std::ptrdiff_t>(i) * m,
                               vt.begin() + static_cast<std::ptrdiff_t>(i + 1) * m);
    }
  }
  return out;
}

}  // namespace

std::vector<double> eigenvalues_sym(const SymMatrix& m, const JacobiOptions& options) {
  return jacobi(m, options, false).values;
}

SymEigenDecomposition eigen_decomposition_sym(const SymMatrix& m, const JacobiOptions& options) {
  SymEigenDecomposition dec = jacobi(m, options, true);
  const int side = m.side();
  if (side == 0) return dec;
  const double bound = 1e-8 * std::max(m.frobenius_norm(), 1.0);
  for (int idx : {0, side - 1}) {
    const auto& v = dec.vectors[idx];
    double residual = 0.0;
    for (int i = 0; i < side; ++i) {
      double mv = 0.0;
      for (int j = 0; j < side; ++j) mv += m(i, j) * v[j];
      const double r = mv - dec.values[idx] * v[i];
      residual += r * r;
    }
    if (std::sqrt(residual) > bound) {
      throw NumericError("eigenpair residual check failed for eigenvalue " + std::to_string(dec.values[idx]));
    }
  }
  return dec;
}

}  // namespace scx
