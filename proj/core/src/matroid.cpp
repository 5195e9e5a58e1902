#include "scx/matroid.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "scx/builtins.hpp"
#include "scx/error.hpp"
#include "scx/lp.hpp"
#include "scx/theorem_checks.hpp"

namespace scx {

namespace {

int mod(long a, int p) {
  const long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inverse_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw InputError("inverse_mod: zero has no inverse");
}

long threshold_sum(int d, int size) {
  long s = 0;
  for (int r = 1; r <= d; ++r) s += r * binomial(size - 1, r);
  return static_cast<long>(d) * s;
}

// True when v can join the general-position set c: no subset T of c with
// |T| <= d has v in its closure.
bool extends_general_position(const Matroid& m, VertexSet c, int v) {
  if (m.rank(VertexSet::singleton(v)) == 0) return false;
  const int d = m.d();
  const int top = std::min(d, c.size());
  for (int k = 1; k <= top; ++k) {
    for (VertexSet t : subsets_of_size(c, k)) {
      if (m.rank(t.with(v)) != k + 1) return false;
    }
  }
  return true;
}

VertexSet relabel(VertexSet s, VertexSet u) {
  VertexSet out;
  for (int v : s) out = out.with(u.rank_of(v));
  return out;
}

}  // namespace

Matroid Matroid::linear(int p, std::vector<std::vector<int>> columns) {
  static const std::set<int> primes{2, 3, 5, 7, 11, 13};
  if (!primes.count(p)) throw InputError("linear matroid: p must be a prime <= 13");
  if (columns.empty() || columns.size() > 64) throw InputError("linear matroid: need 1..64 columns");
  const std::size_t dim = columns.front().size();
  if (dim == 0) throw InputError("linear matroid: columns must be nonempty");
  for (auto& c : columns) {
    if (c.size() != dim) throw InputError("linear matroid: columns differ in length");
    for (int& e : c) e = mod(e, p);
  }
  Matroid m;
  m.kind_ = Kind::linear;
  m.name_ = "linear";
  m.n_ = static_cast<int>(columns.size());
  m.p_ = p;
  m.columns_ = std::move(columns);
  m.full_rank_ = m.rank(m.ground());
  return m;
}

Matroid Matroid::uniform(int rank, int n) {
  if (n < 1 || n > 64 || rank < 0 || rank > n) throw InputError("uniform matroid: need 0 <= rank <= n <= 64");
  Matroid m;
  m.kind_ = Kind::uniform;
  m.name_ = "U" + std::to_string(rank) + "," + std::to_string(n);
  m.n_ = n;
  m.uniform_rank_ = rank;
  m.full_rank_ = rank;
  return m;
}

Matroid Matroid::ag23() {
  std::vector<std::vector<int>> cols;
  for (const auto& pt : builtins::affine_plane_points()) cols.emplace_back(pt.begin(), pt.end());
  Matroid m = linear(3, std::move(cols));
  m.name_ = "AG23";
  return m;
}

Matroid Matroid::pg33() {
  std::vector<std::vector<int>> cols;
  for (const auto& pt : builtins::projective_space_points()) cols.emplace_back(pt.begin(), pt.end());
  Matroid m = linear(3, std::move(cols));
  m.name_ = "PG33";
  return m;
}

int Matroid::rank(VertexSet s) const {
  if (!s.subset_of(ground())) throw InputError("rank: subset outside the ground set");
  if (kind_ == Kind::uniform) return std::min(s.size(), uniform_rank_);
  // Row-reduce the chosen columns, kept as rows of a small matrix.
  std::vector<std::vector<int>> rows;
  for (int v : s) rows.push_back(columns_[v]);
  const int dim = static_cast<int>(columns_.front().size());
  int r = 0;
  for (int c = 0; c < dim && r < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    const int inv = inverse_mod(rows[r][c], p_);
    for (int& e : rows[r]) e = e * inv % p_;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const int f = rows[i][c];
      for (int j = c; j < dim; ++j) rows[i][j] = mod(rows[i][j] - f * rows[r][j], p_);
    }
    ++r;
  }
  return r;
}

VertexSet Matroid::closure(VertexSet s) const {
  const int base = rank(s);
  VertexSet out = s;
  for (int v = 0; v < n_; ++v)
    if (!s.contains(v) && rank(s.with(v)) == base) out = out.with(v);
  return out;
}

std::vector<VertexSet> Matroid::flats(int r) const {
  if (r < 0 || r > full_rank_) throw InputError("flats: rank out of range");
  std::set<VertexSet, decltype(&lex_less)> found(&lex_less);
  if (r == 0) {
    found.insert(closure(VertexSet()));
  } else {
    for (VertexSet t : subsets_of_size(ground(), r))
      if (is_independent(t)) found.insert(closure(t));
  }
  return {found.begin(), found.end()};
}

bool is_general_position(const Matroid& m, VertexSet s) {
  const int top = std::min(m.d() + 1, s.size());
  for (int k = 1; k <= top; ++k)
    for (VertexSet t : subsets_of_size(s, k))
      if (!m.is_independent(t)) return false;
  return true;
}

bool is_general_position_by_flats(const Matroid& m, VertexSet s) {
  for (int k = 0; k <= m.d(); ++k)
    for (VertexSet f : m.flats(k))
      if ((f & s).size() > k) return false;
  return true;
}

std::vector<VertexSet> circuits(const Matroid& m, VertexSet u, int max_size) {
  std::vector<VertexSet> out;
  for (int k = 1; k <= std::min(max_size, u.size()); ++k) {
    for (VertexSet t : subsets_of_size(u, k)) {
      if (m.rank(t) != k - 1) continue;
      bool minimal = true;
      for (int v : t)
        if (!m.is_independent(t.without(v))) {
          minimal = false;
          break;
        }
      if (minimal) out.push_back(t);
    }
  }
  return out;
}

Complex gp_complex(const Matroid& m, VertexSet u) {
  if (!u.subset_of(m.ground())) throw InputError("gp_complex: U outside the ground set");
  std::vector<VertexSet> missing;
  for (VertexSet c : circuits(m, u, m.d() + 1)) missing.push_back(relabel(c, u));
  return Complex::from_missing_faces(u.size(), missing);
}

int phi(const Matroid& m, VertexSet s, VertexSet* best_set) {
  if (s.size() > 24) throw GuardError("phi: |S| = " + std::to_string(s.size()) + " exceeds 24");
  const std::vector<int> order = s.to_vector();
  const int total = static_cast<int>(order.size());
  int best = 0;
  VertexSet incumbent;
  auto search = [&](auto&& self, int index, VertexSet current) -> void {
    if (current.size() + (total - index) <= best) return;
    if (index == total) {
      best = current.size();
      incumbent = current;
      return;
    }
    const int v = order[index];
    if (extends_general_position(m, current, v)) self(self, index + 1, current.with(v));
    self(self, index + 1, current);
  };
  search(search, 0, VertexSet());
  if (best_set) *best_set = incumbent;
  return best;
}

PhiStar phi_star(const Matroid& m, VertexSet s) {
  const int d = m.d();
  if (d < 1) throw InputError("phi_star: requires rank >= 2");
  for (int v : s)
    if (m.rank(VertexSet::singleton(v)) == 0) throw InputError("phi_star: S contains a loop");
  const std::vector<int> elems = s.to_vector();
  const int cols = static_cast<int>(elems.size());

  // One constraint per (σ ⊆ S, |σ| = k-1, rank-k flat F): the v ∈ S with
  // cl(vσ) = F carry total weight at most d.
  std::set<std::vector<int>> groups;
  for (int k = 1; k <= d; ++k) {
    for (VertexSet sigma : subsets_of_size(s, k - 1)) {
      std::map<std::uint64_t, std::vector<int>> by_flat;
      for (int j = 0; j < cols; ++j) {
        const VertexSet vs = sigma.with(elems[j]);
        if (m.rank(vs) != k) continue;
        by_flat[m.closure(vs).bits()].push_back(j);
      }
      for (auto& [flat, members] : by_flat) groups.insert(members);
    }
  }
  LpProblem lp;
  lp.objective.assign(cols, Rational(-1));
  lp.constraints = RationalMatrix(static_cast<int>(groups.size()), cols);
  lp.bounds.assign(groups.size(), Rational(-d));
  int row = 0;
  for (const auto& g : groups) {
    for (int j : g) lp.constraints.set(row, j, -1);
    ++row;
  }
  const LpSolution sol = lp_solve(lp);
  if (sol.status != LpStatus::optimal) {
    throw NumericError(std::string("phi_star: LP ") + to_string(sol.status));
  }
  PhiStar out;
  out.value = -sol.value;
  out.weight.assign(m.size(), Rational(0));
  for (int j = 0; j < cols; ++j) out.weight[elems[j]] = sol.primal[j];
  out.constraints = static_cast<int>(groups.size());
  return out;
}

VectorRepresentation flat_representation(const Matroid& m, VertexSet u) {
  const Complex x = gp_complex(m, u);
  const std::vector<int> elems = u.to_vector();
  VectorRepresentation p;
  p.num_vertices = u.size();
  for (VertexSet local_sigma : representation_index_sets(x)) {
    VertexSet sigma;
    for (int i : local_sigma) sigma = sigma.with(elems[i]);
    const int r = local_sigma.size() + 1;
    std::vector<VertexSet> hit;  // column order: first appearance
    std::vector<int> column_of(elems.size(), -1);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const VertexSet vs = sigma.with(elems[i]);
      if (m.rank(vs) != r) continue;
      const VertexSet f = m.closure(vs);
      auto it = std::find(hit.begin(), hit.end(), f);
      column_of[i] = static_cast<int>(it - hit.begin());
      if (it == hit.end()) hit.push_back(f);
    }
    RationalMatrix mat(u.size(), std::max<int>(1, static_cast<int>(hit.size())));
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (column_of[i] >= 0) mat.set(static_cast<int>(i), column_of[i], 1);
    p.blocks.push_back({local_sigma, std::move(mat)});
  }
  return p;
}

CheckResult check_flat_representation(const Matroid& m, VertexSet u) {
  const Complex x = gp_complex(m, u);
  const VectorRepresentation p = flat_representation(m, u);
  const RepresentationCheck valid = validate_representation(p, x);
  CheckResult r;
  r.check = "flat-representation";
  r.detail = "|U|=" + std::to_string(u.size()) + " d=" + std::to_string(m.d());
  if (!valid.valid) {
    r.pass = false;
    r.note = valid.violations.front();
    return r;
  }
  const PhiStar star = phi_star(m, u);
  const RepValue value = rep_value(p, x);

  // α = f/d restricted to U must satisfy α P_σ P_σᵀ <= 1 for every σ.
  const std::vector<int> elems = u.to_vector();
  bool alpha_ok = true;
  for (const RationalMatrix& g : gram_matrices(p)) {
    for (int w = 0; w < g.rows() && alpha_ok; ++w) {
      Rational s = 0;
      for (int v = 0; v < g.rows(); ++v) s += star.weight[elems[v]] * g(v, w);
      if (s > m.d()) alpha_ok = false;
    }
  }
  r.rhs = to_double(star.value);
  r.exact_rhs = to_string(star.value);
  if (value.infinite) {
    r.lhs = kInfinity;
    r.exact_lhs = "inf";
    r.margin = kInfinity;
    r.pass = alpha_ok;
  } else {
    const Rational bound = m.d() * value.value;
    r.lhs = to_double(bound);
    r.exact_lhs = to_string(bound);
    r.margin = r.lhs - r.rhs;
    r.pass = alpha_ok && star.value <= bound;
  }
  r.note = std::string("f/d packing ") + (alpha_ok ? "feasible" : "INFEASIBLE");
  return r;
}

std::optional<VertexSet> colorful_gp_search(const Matroid& m, const Partition& partition) {
  const int classes = partition.size();
  if (classes > 12) throw GuardError("colorful_gp_search: more than 12 classes");
  if (!partition.support().subset_of(m.ground())) throw InputError("colorful_gp_search: class outside ground set");
  std::vector<std::vector<int>> members;
  for (VertexSet c : partition.classes()) members.push_back(c.to_vector());
  std::optional<VertexSet> found;
  auto descend = [&](auto&& self, int depth, VertexSet current) -> bool {
    if (depth == classes) {
      found = current;
      return true;
    }
    for (int v : members[depth])
      if (extends_general_position(m, current, v) && self(self, depth + 1, current.with(v))) return true;
    return false;
  };
  descend(descend, 0, VertexSet());
  return found;
}

HallReport check_myHMSstar(const Matroid& m, const Partition& partition) {
  const int classes = partition.size();
  if (classes > 12) throw GuardError("check_myHMSstar: more than 12 classes");
  HallReport out;
  out.check = "myHMSstar";
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << classes); ++mask) {
    const int size = std::popcount(mask);
    const long threshold = threshold_sum(m.d(), size);
    const Rational value = phi_star(m, partition.union_of(mask)).value;
    HallRow row;
    row.classes = mask;
    row.value = to_string(value);
    row.threshold = std::to_string(threshold);
    row.margin = to_double(value) - static_cast<double>(threshold);
    row.holds = value > threshold;
    out.hypothesis = out.hypothesis && row.holds;
    out.rows.push_back(std::move(row));
  }
  out.witness = colorful_gp_search(m, partition);
  return out;
}

HallReport check_myHMS(const Matroid& m, const Partition& partition) {
  const int classes = partition.size();
  if (classes > 12) throw GuardError("check_myHMS: more than 12 classes");
  HallReport out;
  out.check = "myHMS";
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << classes); ++mask) {
    const int size = std::popcount(mask);
    const long threshold = size <= m.d() + 1 ? size - 1 : threshold_sum(m.d(), size);
    const int value = phi(m, partition.union_of(mask));
    HallRow row;
    row.classes = mask;
    row.value = std::to_string(value);
    row.threshold = std::to_string(threshold);
    row.margin = static_cast<double>(value - threshold);
    row.holds = value > threshold;
    out.hypothesis = out.hypothesis && row.holds;
    out.rows.push_back(std::move(row));
  }
  out.witness = colorful_gp_search(m, partition);
  return out;
}

}  // namespace scx
