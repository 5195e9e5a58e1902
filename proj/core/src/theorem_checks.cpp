#include "scx/theorem_checks.hpp"

#include <cmath>
#include <sstream>

#include "scx/error.hpp"

namespace scx {

namespace {

int require_h(const Complex& x, const char* who) {
  const auto d = x.max_missing_dim();
  if (!d) throw InputError(std::string(who) + ": complex has no missing faces, h(X) undefined");
  return *d;
}

void require_no_missing_vertices(const Complex& x, const char* who) {
  if (x.missing_dims().count(0)) {
    throw InputError(std::string(who) + ": complexes with missing vertices are not supported");
  }
}

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

CheckResult at_least(std::string check, std::string detail, double lhs, double rhs, double slack) {
  CheckResult r;
  r.check = std::move(check);
  r.detail = std::move(detail);
  r.lhs = lhs;
  r.rhs = rhs;
  if (std::isinf(lhs) && lhs > 0) {
    r.vacuous = true;
    r.margin = kInfinity;
    r.pass = true;
    return r;
  }
  r.margin = lhs - rhs;
  r.pass = r.margin >= -slack;
  return r;
}

}  // namespace

long binomial(long n, long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  __int128 out = 1;
  for (long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return static_cast<long>(out);
}

CheckResult check_fp(const Complex& x, int k, const Tolerances& tol) {
  const int d = require_h(x, "check_fp");
  if (k < d) throw InputError("check_fp: requires k >= h(X) = " + std::to_string(d));
  const double n = x.num_vertices();
  const double mu_k = spectral_gap(x, k);
  const double mu_prev = spectral_gap(x, k - 1);
  const double lhs = std::isinf(mu_k) ? kInfinity : (k - d + 1) * mu_k;
  const double rhs = (k + 1) * mu_prev - d * n;
  auto r = at_least("fp", "d=" + std::to_string(d) + " k=" + std::to_string(k), lhs, rhs, tol.slack);
  r.note = "mu_k=" + fmt(mu_k) + " mu_{k-1}=" + fmt(mu_prev);
  return r;
}

CheckResult check_corollary_fp(const Complex& x, int k, const Tolerances& tol) {
  const int d = require_h(x, "check_corollary_fp");
  if (d < 1) throw InputError("check_corollary_fp: requires h(X) >= 1");
  if (k < d - 1) throw InputError("check_corollary_fp: requires k >= h(X) - 1");
  const double n = x.num_vertices();
  const double threshold = (1.0 - 1.0 / static_cast<double>(binomial(k + 1, d))) * n;
  const double mu = spectral_gap(x, d - 1);
  CheckResult r;
  r.check = "corollary-fp";
  r.detail = "d=" + std::to_string(d) + " k=" + std::to_string(k);
  r.lhs = mu;
  r.rhs = threshold;
  r.margin = mu - threshold;
  r.applicable = std::isinf(mu) || mu > threshold + tol.slack;
  if (!r.applicable) {
    r.note = "hypothesis fails; not applicable";
    return r;
  }
  std::ostringstream betti;
  for (int j = d - 1; j <= k; ++j) {
    const long b = betti_exact(x, j);
    betti << "b" << j << "=" << b << ' ';
    if (b != 0) r.pass = false;
  }
  r.note = betti.str();
  return r;
}

CheckResult check_intersection_eigen(std::span<const Complex> complexes, int k, const Tolerances& tol) {
  const Complex meet = intersect(complexes);
  const double n = meet.num_vertices();
  const double mu_meet = spectral_gap(meet, k);
  double sum = 0.0;
  if (!std::isinf(mu_meet)) {
    for (const Complex& a : complexes) sum += spectral_gap(a, k);
  }
  const double rhs = sum - static_cast<double>(complexes.size() - 1) * n;
  return at_least("intersection-eigen", "m=" + std::to_string(complexes.size()) + " k=" + std::to_string(k),
                  mu_meet, rhs, tol.slack);
}

CheckResult check_yi_identity(const Complex& x, int i) {
  if (i < 1) throw InputError("check_yi_identity: requires i >= 1");
  const Complex y = derived_yi(x, i);
  const Complex xi = derived_xi(x, i);
  const IntMatrix up = upper_laplacian(y, i - 1);
  const IntMatrix full = laplacians(xi, i - 1).full;
  const std::int64_t n = x.num_vertices();
  CheckResult r;
  r.check = "yi-identity";
  r.detail = "i=" + std::to_string(i) + " side=" + std::to_string(up.side());
  if (up.side() != full.side() || OrientedBasis(y, i - 1).faces() != OrientedBasis(xi, i - 1).faces()) {
    r.pass = false;
    r.note = "bases of Y_i and X_i differ";
    return r;
  }
  long mismatches = 0;
  for (int a = 0; a < up.side(); ++a)
    for (int b = 0; b < up.side(); ++b)
      if (up(a, b) + full(a, b) != (a == b ? n : 0)) ++mismatches;
  r.exact_lhs = std::to_string(mismatches);
  r.exact_rhs = "0";
  const double mu = eigenvalues_sym(SymMatrix::from_int(full)).front();
  const double lb = eigenvalues_sym(SymMatrix::from_int(up)).back();
  r.lhs = mu;
  r.rhs = static_cast<double>(n) - lb;
  r.margin = r.lhs - r.rhs;
  const bool spectral_ok = std::abs(r.margin) <= 1e-8 * std::max<double>(1.0, static_cast<double>(n));
  r.pass = mismatches == 0 && spectral_ok;
  r.note = "entry mismatches=" + std::to_string(mismatches);
  return r;
}

CheckResult check_mu_lower_bound(const Complex& x, int k, const Tolerances& tol) {
  require_no_missing_vertices(x, "check_mu_lower_bound");
  if (k < 0) throw InputError("check_mu_lower_bound: requires k >= 0");
  const double n = x.num_vertices();
  double sum = 0.0;
  for (int i : x.missing_dims()) sum += static_cast<double>(binomial(k + 1, i)) * lambda_bar(x, i);
  return at_least("mu-lower-bound", "k=" + std::to_string(k), spectral_gap(x, k), n - sum, tol.slack);
}

CheckResult check_eigenhom2(const Complex& x, const Tolerances& tol) {
  require_no_missing_vertices(x, "check_eigenhom2");
  const Eta e = eta(x);
  if (e.infinite()) {
    CheckResult r;
    r.check = "eigenhom2";
    r.detail = "eta=inf";
    r.vacuous = true;
    r.lhs = kInfinity;
    r.rhs = x.num_vertices();
    r.margin = kInfinity;
    return r;
  }
  double sum = 0.0;
  for (int i : x.missing_dims()) sum += static_cast<double>(binomial(*e.value, i)) * lambda_bar(x, i);
  return at_least("eigenhom2", "eta=" + e.to_string(), sum, x.num_vertices(), tol.slack);
}

CheckResult check_pluslapnorm(const Complex& y, int i, std::span<const double> phi, const Tolerances& tol) {
  if (i < 1) throw InputError("check_pluslapnorm: requires i >= 1");
  const OrientedBasis basis(y, i - 1);
  if (basis.size() != binomial(y.num_vertices(), i)) {
    throw InputError("check_pluslapnorm: complex lacks a full (i-1)-skeleton");
  }
  if (static_cast<int>(phi.size()) != basis.size()) throw InputError("check_pluslapnorm: cochain size mismatch");
  const IntMatrix up = upper_laplacian(y, i - 1);
  double lhs = 0.0;
  for (int a = 0; a < up.side(); ++a)
    for (int b = 0; b < up.side(); ++b) lhs += phi[a] * static_cast<double>(up(a, b)) * phi[b];

  // φ on the ordered simplex [v, σ]: the ascending value times the sign of
  // the sorting permutation.
  auto value_on = [&](int v, VertexSet sigma) {
    const VertexSet face = sigma.with(v);
    return face_sign(face, sigma) * phi[basis.index_of(face)];
  };
  double rhs = 0.0;
  const int n = y.num_vertices();
  for (VertexSet sigma : subsets_of_size(y.ground(), i - 1)) {
    for (int v = 0; v < n; ++v) {
      if (sigma.contains(v)) continue;
      for (int w = v + 1; w < n; ++w) {
        if (sigma.contains(w) || !y.contains(sigma.with(v).with(w))) continue;
        const double diff = value_on(v, sigma) - value_on(w, sigma);
        rhs += diff * diff;
      }
    }
  }
  CheckResult r;
  r.check = "pluslapnorm";
  r.detail = "i=" + std::to_string(i);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.pass = r.margin >= -tol.slack;
  return r;
}

CheckResult check_countdegrees(const Complex& x, VertexSet sigma) {
  const int d = require_h(x, "check_countdegrees");
  const int k = sigma.size() - 1;
  if (!x.contains(sigma)) throw InputError("check_countdegrees: " + sigma.to_string() + " is not a face");
  if (k < d) throw InputError("check_countdegrees: requires k >= h(X)");
  long lhs = 0;
  for (int u : sigma) lhs += x.degree(sigma.without(u));
  long rhs = (k + 1) + static_cast<long>(k + 1) * x.degree(sigma);
  std::vector<long> by_size(d + 2, 0);
  for (int v = 0; v < x.num_vertices(); ++v) {
    const int m = missing_stats(x, sigma.with(v)).core_size;
    if (m >= 2) ++by_size[m];
  }
  for (int r = 2; r <= d + 1; ++r) rhs += (r - 1) * by_size[r];
  CheckResult r;
  r.check = "countdegrees";
  r.detail = "sigma=" + sigma.to_string();
  r.lhs = static_cast<double>(lhs);
  r.rhs = static_cast<double>(rhs);
  r.exact_lhs = std::to_string(lhs);
  r.exact_rhs = std::to_string(rhs);
  r.margin = r.lhs - r.rhs;
  r.pass = lhs == rhs;
  return r;
}

CheckResult check_laplacian_assembly(const Complex& x, int k) {
  const LaplacianSet formula = laplacians(x, k);
  const LaplacianSet product = laplacians_from_products(x, k);
  CheckResult r;
  r.check = "laplacian-assembly";
  r.detail = "k=" + std::to_string(k) + " side=" + std::to_string(formula.full.side());
  r.pass = formula.lower == product.lower && formula.upper == product.upper && formula.full == product.full &&
           formula.full.is_symmetric();
  r.exact_lhs = "formula";
  r.exact_rhs = r.pass ? "formula" : "product differs";
  return r;
}

CheckResult check_hodge(const Complex& x, int k, const Tolerances& tol) {
  const long exact = betti_exact(x, k);
  const long hodge = betti_hodge(x, k, tol.kernel);
  CheckResult r;
  r.check = "hodge";
  r.detail = "k=" + std::to_string(k);
  r.lhs = static_cast<double>(hodge);
  r.rhs = static_cast<double>(exact);
  r.exact_lhs = std::to_string(hodge);
  r.exact_rhs = std::to_string(exact);
  r.pass = exact == hodge;
  return r;
}

CheckResult check_multiplier_betti(const Complex& x, std::span<const int> a) {
  const Complex blown = multiplier(x, a);
  auto base = betti_numbers(x);
  auto lifted = betti_numbers(blown);
  const std::size_t len = std::max(base.size(), lifted.size());
  base.resize(len, 0);
  lifted.resize(len, 0);
  auto join = [](const std::vector<long>& v) {
    std::string s;
    for (long b : v) s += (s.empty() ? "" : ",") + std::to_string(b);
    return s;
  };
  CheckResult r;
  r.check = "multiplier-betti";
  r.detail = "n=" + std::to_string(x.num_vertices()) + " N=" + std::to_string(blown.num_vertices());
  r.exact_lhs = join(lifted);
  r.exact_rhs = join(base);
  r.pass = base == lifted;
  return r;
}

}  // namespace scx
