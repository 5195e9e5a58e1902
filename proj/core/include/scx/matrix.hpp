#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace scx {

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int side) : side_(side), data_(static_cast<std::size_t>(side) * side, 0) {}

  int side() const { return side_; }
  std::int64_t operator()(int i, int j) const { return data_[index(i, j)]; }
  std::int64_t& operator()(int i, int j) { return data_[index(i, j)]; }
  const std::vector<std::int64_t>& data() const { return data_; }

  bool is_symmetric() const {
    for (int i = 0; i < side_; ++i)
      for (int j = i + 1; j < side_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * side_ + j; }

  int side_ = 0;
  std::vector<std::int64_t> data_;
};

inline IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.side());
  for (int i = 0; i < a.side(); ++i)
    for (int j = 0; j < a.side(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

/// Row-compressed sparse integer matrix. Each row holds (column, value)
/// pairs sorted by column with no explicit zeros.
class SparseIntMatrix {
 public:
  using Entry = std::pair<int, std::int64_t>;

  SparseIntMatrix() = default;
  SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Entry>& row(int i) const { return data_[i]; }

  /// Entries must be appended in increasing column order per row.
  void push(int i, int j, std::int64_t value) {
    if (value != 0) data_[i].emplace_back(j, value);
  }

  std::int64_t at(int i, int j) const {
    for (const auto& [c, v] : data_[i]) {
      if (c == j) return v;
    }
    return 0;
  }

  SparseIntMatrix transpose() const {
    SparseIntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) t.data_[j].emplace_back(i, v);
    return t;
  }

  std::size_t nonzeros() const {
    std::size_t count = 0;
    for (const auto& r : data_) count += r.size();
    return count;
  }

  bool operator==(const SparseIntMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Entry>> data_;
};

/// A·B for sparse operands, as a dense matrix (requires a square result).
IntMatrix multiply_to_dense(const SparseIntMatrix& a, const SparseIntMatrix& b);

}  // namespace scx
