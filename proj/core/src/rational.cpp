#include "scx/rational.hpp"

#include <algorithm>
#include <map>

#include "scx/error.hpp"

namespace scx {

Rational parse_rational(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  BigInt p(num_str, 10);
  BigInt q{std::string(den), 10};
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

double to_double(const Rational& r) { return r.get_d(); }

RationalMatrix RationalMatrix::from_int(const std::vector<std::vector<long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InputError("ragged integer matrix");
    for (int j = 0; j < c; ++j) m.set(i, j, Rational(rows[i][j]));
  }
  return m;
}

RationalMatrix RationalMatrix::from_sparse(const SparseIntMatrix& s) {
  RationalMatrix m(s.rows(), s.cols());
  for (int i = 0; i < s.rows(); ++i)
    for (const auto& [j, v] : s.row(i)) m.set(i, j, Rational(static_cast<long>(v)));
  return m;
}

void RationalMatrix::set(int i, int j, Rational value) {
  value.canonicalize();
  data_[index(i, j)] = std::move(value);
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.data_[t.index(j, i)] = data_[index(i, j)];
  return t;
}

std::size_t rank_exact(const RationalMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (int i = 0; i < rows; ++i) {
    BigInt scale = 1;
    for (int j = 0; j < cols; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (scale / m(i, j).get_den());
  }
  BigInt previous = 1;
  std::size_t rank = 0;
  for (int c = 0; c < cols && static_cast<int>(rank) < rows; ++c) {
    int pivot = -1;
    for (int i = static_cast<int>(rank); i < rows; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    const auto& prow = a[rank];
    for (int i = static_cast<int>(rank) + 1; i < rows; ++i) {
      auto& row = a[i];
      for (int j = c + 1; j < cols; ++j) {
        row[j] = prow[c] * row[j] - row[c] * prow[j];
        mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), previous.get_mpz_t());
      }
      row[c] = 0;
    }
    previous = prow[c];
    ++rank;
  }
  return rank;
}

namespace {

using SparseRow = std::vector<std::pair<int, BigInt>>;

// a <- pa * a - pb * b, dropping zeros; both rows sorted by column.
SparseRow combine(const BigInt& pa, const SparseRow& a, const BigInt& pb, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, pa * a[i].second);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -pb * b[j].second);
      ++j;
    } else {
      BigInt v = pa * a[i].second - pb * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void normalise_content(SparseRow& row) {
  if (row.empty()) return;
  BigInt g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::size_t rank_exact(const SparseIntMatrix& m) {
  std::map<int, SparseRow> pivots;  // leading column -> row
  for (int i = 0; i < m.rows(); ++i) {
    SparseRow row;
    row.reserve(m.row(i).size());
    for (const auto& [c, v] : m.row(i)) row.emplace_back(c, BigInt(static_cast<long>(v)));
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      const SparseRow& p = it->second;
      const BigInt g = gcd(p.front().second, row.front().second);
      row = combine(p.front().second / g, row, row.front().second / g, p);
      normalise_content(row);
    }
    if (!row.empty()) {
      const int lead = row.front().first;
      pivots.emplace(lead, std::move(row));
    }
  }
  return pivots.size();
}

}  // namespace scx
