#include "oracles.hpp"

#include <algorithm>
#include <random>

namespace oracle {

using scx::VertexSet;

bool is_face(VertexSet s, const std::vector<VertexSet>& missing) {
  for (VertexSet m : missing)
    if (m.subset_of(s)) return false;
  return true;
}

std::vector<std::vector<VertexSet>> faces_by_dim(int n, const std::vector<VertexSet>& missing) {
  std::vector<std::vector<VertexSet>> out(n + 1);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const VertexSet s(bits);
    if (is_face(s, missing)) out[s.size()].push_back(s);
  }
  for (auto& level : out) std::sort(level.begin(), level.end(), scx::lex_less);
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

Eigen::MatrixXd coboundary(const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(upper.size()),
                                            static_cast<Eigen::Index>(lower.size()));
  for (std::size_t i = 0; i < upper.size(); ++i) {
    const std::vector<int> verts = upper[i].to_vector();
    for (std::size_t j = 0; j < verts.size(); ++j) {
      const VertexSet face = upper[i].without(verts[j]);
      const auto it = std::find(lower.begin(), lower.end(), face);
      if (it != lower.end()) d(static_cast<Eigen::Index>(i), it - lower.begin()) = (j % 2 == 0) ? 1.0 : -1.0;
    }
  }
  return d;
}

namespace {

const std::vector<VertexSet>& level_or_empty(const std::vector<std::vector<VertexSet>>& f, int k) {
  static const std::vector<VertexSet> empty;
  const int idx = k + 1;
  return (idx >= 0 && idx < static_cast<int>(f.size())) ? f[idx] : empty;
}

}  // namespace

Eigen::MatrixXd laplacian(int n, const std::vector<VertexSet>& missing, int k) {
  const auto f = faces_by_dim(n, missing);
  const auto& below = level_or_empty(f, k - 1);
  const auto& here = level_or_empty(f, k);
  const auto& above = level_or_empty(f, k + 1);
  const Eigen::MatrixXd down = coboundary(below, here);  // d_{k-1}
  const Eigen::MatrixXd up = coboundary(here, above);    // d_k
  return down * down.transpose() + up.transpose() * up;
}

Eigen::VectorXd eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return Eigen::VectorXd();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Eigen::MatrixXd to_eigen(const scx::IntMatrix& m) {
  Eigen::MatrixXd out(m.side(), m.side());
  for (int i = 0; i < m.side(); ++i)
    for (int j = 0; j < m.side(); ++j) out(i, j) = static_cast<double>(m(i, j));
  return out;
}

long rank_q(std::vector<std::vector<mpq_class>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  long rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<long>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const mpq_class f = rows[i][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

long matrix_rank(const Eigen::MatrixXd& m) {
  std::vector<std::vector<mpq_class>> rows(m.rows(), std::vector<mpq_class>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[i][j] = static_cast<long>(m(i, j));
  return rank_q(std::move(rows));
}

}  // namespace

long betti(int n, const std::vector<VertexSet>& missing, int k) {
  const auto f = faces_by_dim(n, missing);
  const auto& here = level_or_empty(f, k);
  if (here.empty()) return 0;
  const long up = matrix_rank(coboundary(here, level_or_empty(f, k + 1)));
  const long down = k >= 0 ? matrix_rank(coboundary(level_or_empty(f, k - 1), here)) : 0;
  return static_cast<long>(here.size()) - up - down;
}

std::optional<int> total_domination(int n, const std::vector<VertexSet>& missing) {
  std::optional<int> best;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const VertexSet s(bits);
    if (best && s.size() >= *best) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      bool served = false;
      for (std::uint64_t sub = bits;; sub = (sub - 1) & bits) {
        const VertexSet sigma(sub);
        if (is_face(sigma, missing) && !is_face(sigma.with(v), missing)) {
          served = true;
          break;
        }
        if (sub == 0) break;
      }
      ok = served;
    }
    if (ok) best = s.size();
  }
  return best;
}

int rank_mod_p(const std::vector<std::vector<int>>& columns, VertexSet s, int p) {
  std::vector<std::vector<long>> rows;
  for (int v : s) rows.emplace_back(columns[v].begin(), columns[v].end());
  if (rows.empty()) return 0;
  const std::size_t dim = rows.front().size();
  auto inv = [p](long a) {
    for (long x = 1; x < p; ++x)
      if ((a * x) % p == 1) return x;
    return 0L;
  };
  int rank = 0;
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && ((rows[pivot][c] % p) + p) % p == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const long iv = inv(((rows[rank][c] % p) + p) % p);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const long f = (((rows[i][c] % p) + p) % p) * iv % p;
      for (std::size_t j = 0; j < dim; ++j) rows[i][j] = ((rows[i][j] - f * rows[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

int phi(const std::vector<std::vector<int>>& columns, int p, int d, VertexSet s) {
  int best = 0;
  const std::uint64_t full = s.bits();
  for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
    const VertexSet t(sub);
    if (t.size() > best) {
      bool gp = true;
      for (std::uint64_t part = sub; part && gp; part = (part - 1) & sub) {
        const VertexSet u(part);
        if (u.size() <= d + 1 && rank_mod_p(columns, u, p) != u.size()) gp = false;
      }
      if (gp) best = t.size();
    }
    if (sub == 0) break;
  }
  return best;
}

scx::IntMatrix random_symmetric(std::uint64_t seed, int side, int range) {
  std::mt19937_64 rng(seed);
  scx::IntMatrix m(side);
  for (int i = 0; i < side; ++i)
    for (int j = i; j < side; ++j) {
      const auto v = static_cast<std::int64_t>(rng() % (2 * range + 1)) - range;
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

}  // namespace oracle
