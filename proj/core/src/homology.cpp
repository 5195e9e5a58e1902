#include "scx/homology.hpp"

#include <algorithm>
#include <string>

#include "scx/error.hpp"
#include "scx/rational.hpp"

namespace scx {

OrientedBasis::OrientedBasis(const Complex& x, int k) : dim_(k), faces_(x.faces(k)) {
  index_.reserve(faces_.size());
  for (int i = 0; i < static_cast<int>(faces_.size()); ++i) index_.emplace(faces_[i], i);
}

int OrientedBasis::index_of(VertexSet face) const {
  auto it = index_.find(face);
  return it == index_.end() ? -1 : it->second;
}

int sign(std::span<const int> sigma, std::span<const int> tau) {
  const VertexSet sigma_set = VertexSet::from_vertices(sigma);
  const VertexSet tau_set = VertexSet::from_vertices(tau);
  if (!tau_set.subset_of(sigma_set)) {
    throw InputError("sign: " + tau_set.to_string() + " is not a subset of " + sigma_set.to_string());
  }
  // Target order: vertices of σ∖τ in σ's order, then τ in its own order.
  std::vector<int> target;
  target.reserve(sigma.size());
  for (int v : sigma) {
    if (!tau_set.contains(v)) target.push_back(v);
  }
  target.insert(target.end(), tau.begin(), tau.end());
  // Permutation as the positions in σ of the target sequence.
  std::vector<int> perm;
  perm.reserve(target.size());
  for (int v : target) {
    perm.push_back(static_cast<int>(std::find(sigma.begin(), sigma.end(), v) - sigma.begin()));
  }
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

int face_sign(VertexSet sigma, VertexSet tau) {
  int parity = 0;
  for (int x : sigma - tau) parity += tau.rank_of(x);
  return parity % 2 == 0 ? 1 : -1;
}

SparseIntMatrix coboundary_matrix(const Complex& x, int k) {
  if (k < -2) return SparseIntMatrix(0, 0);
  const OrientedBasis rows(x, k + 1);
  if (k == -2) return SparseIntMatrix(rows.size(), 0);
  const OrientedBasis cols(x, k);
  SparseIntMatrix d(rows.size(), cols.size());
  std::vector<SparseIntMatrix::Entry> entries;
  for (int r = 0; r < rows.size(); ++r) {
    const VertexSet rho = rows.face(r);
    entries.clear();
    if (k == -1) {
      entries.emplace_back(0, 1);
    } else {
      for (int v : rho) {
        const VertexSet tau = rho.without(v);
        entries.emplace_back(cols.index_of(tau), face_sign(rho, tau));
      }
      std::sort(entries.begin(), entries.end());
    }
    for (const auto& [c, s] : entries) d.push(r, c, s);
  }
  return d;
}

SparseIntMatrix boundary_matrix(const Complex& x, int k) { return coboundary_matrix(x, k).transpose(); }

IntMatrix upper_laplacian(const Complex& x, int k) {
  return laplacians(x, k).upper;
}

LaplacianSet laplacians(const Complex& x, int k) {
  LaplacianSet out;
  out.k = k;
  if (k < -1) return out;
  const OrientedBasis basis(x, k);
  const int m = basis.size();
  out.lower = IntMatrix(m);
  out.upper = IntMatrix(m);
  out.full = IntMatrix(m);
  if (k == -1) {
    const auto vertices = static_cast<std::int64_t>(x.num_faces(0));
    out.upper(0, 0) = vertices;
    out.full(0, 0) = vertices;
    return out;
  }
  const VertexSet vertices = [&] {
    VertexSet v;
    for (VertexSet s : x.faces(0)) v = v | s;
    return v;
  }();
  for (int a = 0; a < m; ++a) {
    const VertexSet sigma = basis.face(a);
    const int deg = x.degree(sigma);
    out.lower(a, a) = k + 1;
    out.upper(a, a) = deg;
    out.full(a, a) = k + 1 + deg;
    for (int u : sigma) {
      const VertexSet common = sigma.without(u);
      for (int v : vertices - sigma) {
        const VertexSet tau = common.with(v);
        const int b = basis.index_of(tau);
        if (b < 0) continue;
        const int s = face_sign(sigma, common) * face_sign(tau, common);
        out.lower(a, b) = s;
        if (x.contains(sigma | tau)) {
          out.upper(a, b) = -s;
        } else {
          out.full(a, b) = s;
        }
      }
    }
  }
  return out;
}

LaplacianSet laplacians_from_products(const Complex& x, int k) {
  LaplacianSet out;
  out.k = k;
  if (k < -1) return out;
  const SparseIntMatrix d_prev = coboundary_matrix(x, k - 1);
  const SparseIntMatrix d_k = coboundary_matrix(x, k);
  out.lower = multiply_to_dense(d_prev, d_prev.transpose());
  out.upper = multiply_to_dense(d_k.transpose(), d_k);
  out.full = out.lower + out.upper;
  return out;
}

SpectrumReport spectrum(const Complex& x, int k) {
  SpectrumReport report;
  report.k = k;
  const IntMatrix l = laplacians(x, k).full;
  if (l.side() == 0) return report;
  report.eigenvalues = eigenvalues_sym(SymMatrix::from_int(l));
  report.mu = report.eigenvalues.front();
  report.lambda_max = report.eigenvalues.back();
  return report;
}

double spectral_gap(const Complex& x, int k) { return spectrum(x, k).mu; }

double lambda_bar(const Complex& x, int i) {
  if (i < 1) throw InputError("lambda_bar: requires i >= 1");
  const Complex y = derived_yi(x, i);
  const IntMatrix up = upper_laplacian(y, i - 1);
  const auto values = eigenvalues_sym(SymMatrix::from_int(up));
  return values.back();
}

namespace {

std::size_t coboundary_rank(const Complex& x, int k) {
  if (k < -1) return 0;
  return rank_exact(coboundary_matrix(x, k));
}

}  // namespace

long betti_exact(const Complex& x, int k) {
  if (k < -1) throw InputError("betti_exact: k must be >= -1");
  const auto faces = static_cast<long>(x.num_faces(k));
  if (faces == 0) return 0;
  return faces - static_cast<long>(coboundary_rank(x, k)) - static_cast<long>(coboundary_rank(x, k - 1));
}

long betti_hodge(const Complex& x, int k, double tol) {
  const SpectrumReport s = spectrum(x, k);
  return std::count_if(s.eigenvalues.begin(), s.eigenvalues.end(), [tol](double v) { return v < tol; });
}

std::vector<long> betti_numbers(const Complex& x) {
  const int dim = x.dimension();
  std::vector<std::size_t> ranks;  // ranks[k+1] = rank d_k
  for (int k = -1; k <= dim; ++k) ranks.push_back(coboundary_rank(x, k));
  std::vector<long> betti;
  for (int k = -1; k <= dim; ++k) {
    const long below = k == -1 ? 0 : static_cast<long>(ranks[k]);
    betti.push_back(static_cast<long>(x.num_faces(k)) - static_cast<long>(ranks[k + 1]) - below);
  }
  return betti;
}

Eta eta(const Complex& x) {
  const int dim = x.dimension();
  std::size_t rank_below = 0;
  for (int k = -1; k <= dim; ++k) {
    const std::size_t rank_here = coboundary_rank(x, k);
    const long b = static_cast<long>(x.num_faces(k)) - static_cast<long>(rank_here) - static_cast<long>(rank_below);
    if (b != 0) return Eta{k + 1};
    rank_below = rank_here;
  }
  return Eta{};
}

long reduced_euler_characteristic(const Complex& x) {
  long chi = 0;
  const int dim = x.dimension();
  for (int k = -1; k <= dim; ++k) {
    const long count = static_cast<long>(x.num_faces(k));
    chi += (k % 2 == 0) ? count : -count;
  }
  return chi;
}

}  // namespace scx
