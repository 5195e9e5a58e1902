#include "scx/domination.hpp"

#include <algorithm>
#include <cmath>

#include "scx/error.hpp"
#include "scx/theorem_checks.hpp"

namespace scx {

namespace {

Rational dot_rows(const RationalMatrix& m, int v, int w) {
  Rational s = 0;
  for (int c = 0; c < m.cols(); ++c) s += m(v, c) * m(w, c);
  return s;
}

// Visits every subset of `ground` of size k containing `forced`, in
// increasing bitmask order, until `fn` returns true.
template <class Fn>
bool for_each_superset_of_size(VertexSet ground, VertexSet forced, int k, Fn fn) {
  const std::vector<int> free = (ground - forced).to_vector();
  const int need = k - forced.size();
  if (need < 0 || need > static_cast<int>(free.size())) return false;
  if (need == 0) return fn(forced);
  const int f = static_cast<int>(free.size());
  std::uint64_t comb = (std::uint64_t{1} << need) - 1;
  const std::uint64_t limit = std::uint64_t{1} << f;
  while (comb < limit) {
    VertexSet s = forced;
    for (int b = 0; b < f; ++b)
      if ((comb >> b) & 1U) s = s.with(free[b]);
    if (fn(s)) return true;
    const std::uint64_t low = comb & (~comb + 1);
    const std::uint64_t ripple = comb + low;
    comb = (((ripple ^ comb) >> 2) / low) | ripple;
  }
  return false;
}

std::string rational_or_inf(const RepValue& v) { return v.infinite ? "inf" : to_string(v.value); }

}  // namespace

std::vector<VertexSet> representation_index_sets(const Complex& x) {
  std::vector<VertexSet> out;
  for (int i : x.missing_dims()) {
    if (i < 1) continue;
    for (VertexSet s : subsets_of_size(x.ground(), i - 1)) out.push_back(s);
  }
  return out;
}

const RepresentationBlock* VectorRepresentation::find(VertexSet sigma) const {
  for (const auto& b : blocks)
    if (b.sigma == sigma) return &b;
  return nullptr;
}

VectorRepresentation all_ones_representation(const Complex& x) {
  VectorRepresentation p;
  p.num_vertices = x.num_vertices();
  for (VertexSet sigma : representation_index_sets(x)) {
    RationalMatrix m(x.num_vertices(), 1);
    for (int v = 0; v < x.num_vertices(); ++v) m.set(v, 0, 1);
    p.blocks.push_back({sigma, std::move(m)});
  }
  return p;
}

RepresentationCheck validate_representation(const VectorRepresentation& p, const Complex& x) {
  if (p.num_vertices != x.num_vertices()) throw InputError("representation: vertex count mismatch");
  const auto index_sets = representation_index_sets(x);
  if (index_sets.size() != p.blocks.size()) {
    throw InputError("representation: expected " + std::to_string(index_sets.size()) + " blocks, got " +
                     std::to_string(p.blocks.size()));
  }
  for (VertexSet sigma : index_sets) {
    const auto* b = p.find(sigma);
    if (!b) throw InputError("representation: no block for sigma " + sigma.to_string());
    if (b->matrix.rows() != x.num_vertices()) {
      throw InputError("representation: block " + sigma.to_string() + " has wrong row count");
    }
  }
  RepresentationCheck out;
  for (const auto& b : p.blocks) {
    for (int v = 0; v < b.matrix.rows(); ++v)
      for (int c = 0; c < b.matrix.cols(); ++c)
        if (sgn(b.matrix(v, c)) < 0) {
          out.valid = false;
          out.violations.push_back("negative entry in block " + b.sigma.to_string() + " row " + std::to_string(v));
        }
  }
  for (VertexSet mu : x.missing_faces()) {
    if (mu.size() < 2) continue;
    for (VertexSet sigma : subsets_of_size(mu, mu.size() - 2)) {
      const auto* b = p.find(sigma);
      const std::vector<int> pair = (mu - sigma).to_vector();
      const Rational s = dot_rows(b->matrix, pair[0], pair[1]);
      if (s < 1) {
        out.valid = false;
        out.violations.push_back("sigma " + sigma.to_string() + " pair (" + std::to_string(pair[0]) + "," +
                                 std::to_string(pair[1]) + ") product " + to_string(s) + " < 1");
      }
    }
  }
  return out;
}

std::vector<RationalMatrix> gram_matrices(const VectorRepresentation& p) {
  std::vector<RationalMatrix> out;
  const int n = p.num_vertices;
  for (const auto& b : p.blocks) {
    RationalMatrix g(n, n);
    for (int v = 0; v < n; ++v)
      for (int w = v; w < n; ++w) {
        const Rational s = dot_rows(b.matrix, v, w);
        g.set(v, w, s);
        g.set(w, v, s);
      }
    out.push_back(std::move(g));
  }
  return out;
}

RepValue rep_value(const VectorRepresentation& p, const Complex& x) {
  const auto check = validate_representation(p, x);
  if (!check.valid) throw InputError("rep_value: invalid representation: " + check.violations.front());
  const int n = x.num_vertices();
  const auto grams = gram_matrices(p);
  const int blocks = static_cast<int>(grams.size());

  // Covering LP: min Σ α_σ(v) s.t. Σ_σ Σ_v α_σ(v) G_σ(v, w) >= 1 for every w.
  LpProblem cover;
  cover.objective.assign(static_cast<std::size_t>(blocks) * n, Rational(1));
  cover.constraints = RationalMatrix(n, blocks * n);
  cover.bounds.assign(n, Rational(1));
  for (int b = 0; b < blocks; ++b)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) cover.constraints.set(w, b * n + v, grams[b](v, w));

  // Packing LP: max Σ y(w) s.t. Σ_w y(w) G_σ(w, v) <= 1, written as a
  // minimisation of -1·y with negated rows.
  LpProblem pack;
  pack.objective.assign(n, Rational(-1));
  pack.constraints = RationalMatrix(blocks * n, n);
  pack.bounds.assign(static_cast<std::size_t>(blocks) * n, Rational(-1));
  for (int b = 0; b < blocks; ++b)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) pack.constraints.set(b * n + v, w, -grams[b](w, v));

  RepValue out;
  out.primal = lp_solve(cover);
  out.dual = lp_solve(pack);
  const bool cover_infeasible = out.primal.status == LpStatus::infeasible;
  const bool pack_unbounded = out.dual.status == LpStatus::unbounded;
  if (cover_infeasible && pack_unbounded) {
    out.infinite = true;
    return out;
  }
  if (out.primal.status != LpStatus::optimal || out.dual.status != LpStatus::optimal) {
    throw NumericError(std::string("rep_value: covering LP ") + to_string(out.primal.status) + ", packing LP " +
                       to_string(out.dual.status));
  }
  const Rational packed = -out.dual.value;
  if (out.primal.value != packed) {
    throw NumericError("rep_value: covering value " + to_string(out.primal.value) + " != packing value " +
                       to_string(packed));
  }
  out.value = out.primal.value;
  return out;
}

bool is_totally_dominating(const Complex& x, VertexSet s) {
  for (int v = 0; v < x.num_vertices(); ++v) {
    bool served = false;
    for (VertexSet mu : x.missing_faces()) {
      if (mu.contains(v) && mu.without(v).subset_of(s)) {
        served = true;
        break;
      }
    }
    if (!served) return false;
  }
  return true;
}

DominationResult total_domination(const Complex& x, int max_vertices) {
  const int n = x.num_vertices();
  if (n > max_vertices) {
    throw GuardError("total_domination: n = " + std::to_string(n) + " exceeds the limit " +
                     std::to_string(max_vertices));
  }
  // Vertices with a single way to be served force that set into S.
  VertexSet forced;
  for (int v = 0; v < n; ++v) {
    std::vector<VertexSet> options;
    for (VertexSet mu : x.missing_faces())
      if (mu.contains(v)) options.push_back(mu.without(v));
    if (options.empty()) return {};
    if (options.size() == 1) forced = forced | options.front();
  }
  DominationResult out;
  for (int k = std::max(1, forced.size()); k <= n; ++k) {
    const bool found = for_each_superset_of_size(x.ground(), forced, k, [&](VertexSet s) {
      if (!is_totally_dominating(x, s)) return false;
      out.gamma = k;
      out.witness = s;
      return true;
    });
    if (found) return out;
  }
  return out;
}

AlphaCertificate dominating_alpha_from_tds(const Complex& x, VertexSet s, const VectorRepresentation& p) {
  const auto dims = x.missing_dims();
  if (dims.size() != 1 || *dims.begin() < 1) {
    throw InputError("dominating_alpha_from_tds: missing faces must all have one dimension d >= 1");
  }
  if (!is_totally_dominating(x, s)) throw InputError("dominating_alpha_from_tds: S is not totally dominating");
  const int n = x.num_vertices();
  AlphaCertificate out;
  out.d = *dims.begin();
  out.sigmas = subsets_of_size(x.ground(), out.d - 1);
  const Rational share(1, out.d);
  for (VertexSet sigma : out.sigmas) {
    std::vector<Rational> a(n, Rational(0));
    if (sigma.subset_of(s)) {
      for (int v : s - sigma) a[v] = share;
    }
    for (const auto& q : a) out.total += q;
    out.alpha.push_back(std::move(a));
  }
  out.expected = binomial(s.size(), out.d);

  out.dominating = true;
  for (int w = 0; w < n && out.dominating; ++w) {
    Rational cover = 0;
    for (std::size_t j = 0; j < out.sigmas.size(); ++j) {
      const auto* b = p.find(out.sigmas[j]);
      if (!b) throw InputError("dominating_alpha_from_tds: representation lacks block " + out.sigmas[j].to_string());
      for (int v = 0; v < n; ++v)
        if (out.alpha[j][v] != 0) cover += out.alpha[j][v] * dot_rows(b->matrix, v, w);
    }
    if (cover < 1) out.dominating = false;
  }
  return out;
}

CheckResult check_gamma_vs_gamma(const Complex& x, const VectorRepresentation& p) {
  const auto dims = x.missing_dims();
  if (dims.size() != 1 || *dims.begin() < 1) {
    throw InputError("check_gamma_vs_gamma: missing faces must all have one dimension d >= 1");
  }
  const int d = *dims.begin();
  CheckResult r;
  r.check = "gamma-vs-gamma";
  const DominationResult dom = total_domination(x);
  if (!dom.gamma) {
    r.detail = "gamma=inf";
    r.vacuous = true;
    r.lhs = kInfinity;
    r.margin = kInfinity;
    return r;
  }
  const RepValue value = rep_value(p, x);
  const AlphaCertificate alpha = dominating_alpha_from_tds(x, dom.witness, p);
  const Rational bound = binomial(*dom.gamma, d);
  r.detail = "d=" + std::to_string(d) + " gamma=" + std::to_string(*dom.gamma) + " S=" + dom.witness.to_string();
  r.lhs = to_double(bound);
  r.rhs = value.infinite ? kInfinity : to_double(value.value);
  r.exact_lhs = to_string(bound);
  r.exact_rhs = rational_or_inf(value);
  r.margin = r.lhs - r.rhs;
  r.pass = !value.infinite && value.value <= bound && alpha.dominating && alpha.total == alpha.expected;
  r.note = "alpha total=" + to_string(alpha.total) + (alpha.dominating ? " dominating" : " NOT dominating");
  return r;
}

CheckResult check_connectivity_bound(const Complex& x, const VectorRepresentation& p) {
  CheckResult r;
  r.check = "connectivity-bound";
  const Eta e = eta(x);
  r.detail = "eta=" + e.to_string();
  if (e.infinite()) {
    r.vacuous = true;
    r.lhs = kInfinity;
    r.margin = kInfinity;
    return r;
  }
  long sum = 0;
  for (int d : x.missing_dims()) sum += d * binomial(*e.value, d);
  const RepValue value = rep_value(p, x);
  r.lhs = static_cast<double>(sum);
  r.rhs = value.infinite ? kInfinity : to_double(value.value);
  r.exact_lhs = std::to_string(sum);
  r.exact_rhs = rational_or_inf(value);
  r.margin = r.lhs - r.rhs;
  r.pass = !value.infinite && Rational(sum) >= value.value;
  return r;
}

CheckResult check_eigenrep(const Complex& x, const VectorRepresentation& p, int i, const Tolerances& tol) {
  if (!x.missing_dims().count(i) || i < 1) throw InputError("check_eigenrep: requires i in D(X), i >= 1");
  const int n = x.num_vertices();
  Rational best = 0;
  for (VertexSet sigma : subsets_of_size(x.ground(), i - 1)) {
    const auto* b = p.find(sigma);
    if (!b) throw InputError("check_eigenrep: representation lacks block " + sigma.to_string());
    const RationalMatrix& m = b->matrix;
    std::vector<Rational> total(m.cols(), Rational(0));
    for (int w = 0; w < n; ++w)
      for (int c = 0; c < m.cols(); ++c) total[c] += m(w, c);
    for (int v = 0; v < n; ++v) {
      Rational s = 0;
      for (int c = 0; c < m.cols(); ++c) s += m(v, c) * total[c];
      if (s > best) best = s;
    }
  }
  const Rational bound = i * best;
  CheckResult r;
  r.check = "eigenrep";
  r.detail = "i=" + std::to_string(i);
  r.lhs = to_double(bound);
  r.rhs = lambda_bar(x, i);
  r.exact_lhs = to_string(bound);
  r.margin = r.lhs - r.rhs;
  r.pass = r.margin >= -tol.slack;
  return r;
}

std::optional<VertexSet> colorful_simplex_search(const Complex& z, const Partition& partition) {
  const int m = partition.size();
  if (m > 20) throw GuardError("colorful_simplex_search: more than 20 classes");
  if (!partition.support().subset_of(z.ground())) {
    throw InputError("colorful_simplex_search: partition classes must lie in the vertex set");
  }
  std::vector<std::vector<int>> classes;
  for (VertexSet c : partition.classes()) classes.push_back(c.to_vector());
  std::optional<VertexSet> found;
  auto descend = [&](auto&& self, int depth, VertexSet current) -> bool {
    if (depth == m) {
      found = current;
      return true;
    }
    for (int v : classes[depth]) {
      const VertexSet next = current.with(v);
      if (z.contains(next) && self(self, depth + 1, next)) return true;
    }
    return false;
  };
  descend(descend, 0, VertexSet());
  return found;
}

HallReport check_hall_eta(const Complex& z, const Partition& partition) {
  const int m = partition.size();
  if (m > 20) throw GuardError("check_hall_eta: more than 20 classes");
  HallReport out;
  out.check = "hall-eta";
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    const int size = std::popcount(mask);
    const Eta e = eta(z.induced(partition.union_of(mask)));
    HallRow row;
    row.classes = mask;
    row.value = e.to_string();
    row.threshold = std::to_string(size);
    row.margin = e.infinite() ? kInfinity : static_cast<double>(*e.value - size);
    row.holds = e.infinite() || *e.value >= size;
    out.hypothesis = out.hypothesis && row.holds;
    out.rows.push_back(std::move(row));
  }
  out.witness = colorful_simplex_search(z, partition);
  return out;
}

HallReport check_generalhalltype(const Complex& x, const Partition& partition,
                                 const std::vector<VectorRepresentation>* reps) {
  const int m = partition.size();
  if (m > 20) throw GuardError("check_generalhalltype: more than 20 classes");
  const std::uint64_t count = (std::uint64_t{1} << m) - 1;
  if (reps && reps->size() != count) {
    throw InputError("check_generalhalltype: expected one representation per nonempty class subset");
  }
  HallReport out;
  out.check = "general-hall";
  for (std::uint64_t mask = 1; mask <= count; ++mask) {
    const int size = std::popcount(mask);
    const Complex sub = x.induced(partition.union_of(mask));
    long threshold = 0;
    for (int r : sub.missing_dims()) threshold += r * binomial(size - 1, r);
    const VectorRepresentation p = reps ? (*reps)[mask - 1] : all_ones_representation(sub);
    const RepValue value = rep_value(p, sub);
    HallRow row;
    row.classes = mask;
    row.value = rational_or_inf(value);
    row.threshold = std::to_string(threshold);
    row.margin = value.infinite ? kInfinity : to_double(value.value) - static_cast<double>(threshold);
    row.holds = value.infinite || value.value > threshold;
    out.hypothesis = out.hypothesis && row.holds;
    out.rows.push_back(std::move(row));
  }
  out.witness = colorful_simplex_search(x, partition);
  return out;
}

}  // namespace scx
