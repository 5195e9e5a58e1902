#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "scx/matrix.hpp"

namespace scx {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q != 0) into lowest terms. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

/// Dense matrix of exact rationals, each entry kept in lowest terms.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static RationalMatrix from_int(const std::vector<std::vector<long>>& rows);
  static RationalMatrix from_sparse(const SparseIntMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& operator()(int i, int j) const { return data_[index(i, j)]; }
  /// Sets an entry, canonicalising it.
  void set(int i, int j, Rational value);
  RationalMatrix transpose() const;

  bool operator==(const RationalMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination. Rows are first
/// scaled by the lcm of their denominators.
std::size_t rank_exact(const RationalMatrix& m);

/// Rank over Q of a sparse integer matrix by fraction-free sparse row
/// elimination with content normalisation.
std::size_t rank_exact(const SparseIntMatrix& m);

}  // namespace scx
