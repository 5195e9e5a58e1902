#include "scx/complex.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_set>

#include "scx/error.hpp"

namespace scx {

using FaceSet = std::unordered_set<VertexSet, VertexSetHash>;

struct Complex::Cache {
  std::mutex mutex;
  // levels[s] holds the faces of cardinality s, lexicographically sorted.
  std::vector<std::unique_ptr<std::vector<VertexSet>>> levels;
  std::vector<std::unique_ptr<FaceSet>> level_sets;
  FaceSet missing_set;
  bool exhausted = false;  // a level came out empty; no larger faces exist
  std::unique_ptr<std::vector<VertexSet>> facets;
};

namespace {

const std::vector<VertexSet> kNoFaces;

void check_vertex_count(int n) {
  if (n < 1 || n > Complex::kMaxVertices) {
    throw InputError("vertex count must be in 1..64, got " + std::to_string(n));
  }
}

VertexSet checked_set(int n, const std::vector<int>& vertices) {
  for (int v : vertices) {
    if (v < 0 || v >= n) {
      throw InputError("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n - 1));
    }
  }
  return VertexSet::from_vertices(vertices);
}

// Extends a lexicographically sorted level of s-faces to the candidate
// (s+1)-sets all of whose s-subsets are faces, preserving lexicographic order.
template <typename Visit>
void extend_level(int n, const std::vector<VertexSet>& level, const FaceSet& level_set,
                  VertexSet vertices, Visit&& visit) {
  for (VertexSet sigma : level) {
    const int start = sigma.empty() ? 0 : sigma.max() + 1;
    for (int v = start; v < n; ++v) {
      if (!vertices.contains(v)) continue;
      const VertexSet tau = sigma.with(v);
      bool boundary_present = true;
      for (int u : sigma) {
        if (!level_set.count(tau.without(u))) {
          boundary_present = false;
          break;
        }
      }
      if (boundary_present) visit(tau);
    }
  }
}

VertexSet compress(VertexSet s, VertexSet onto) {
  VertexSet out;
  for (int v : s) out = out.with(onto.rank_of(v));
  return out;
}

}  // namespace

Complex::Complex(int n, std::vector<VertexSet> missing)
    : n_(n), missing_(std::move(missing)), cache_(std::make_shared<Cache>()) {
  std::sort(missing_.begin(), missing_.end(), size_lex_less);
  cache_->missing_set.insert(missing_.begin(), missing_.end());
}

Complex Complex::from_facets(int n, std::span<const VertexSet> facets) {
  check_vertex_count(n);
  const VertexSet ground = VertexSet::first(n);
  VertexSet vertices;
  for (VertexSet f : facets) {
    if (!f.subset_of(ground)) throw InputError("facet " + f.to_string() + " has a vertex out of range");
    vertices = vertices | f;
  }
  const std::vector<VertexSet> maximal = [&] {
    std::vector<VertexSet> sorted(facets.begin(), facets.end());
    std::sort(sorted.begin(), sorted.end(), [](VertexSet a, VertexSet b) {
      return b.size() < a.size() || (a.size() == b.size() && lex_less(a, b));
    });
    std::vector<VertexSet> kept;
    for (VertexSet f : sorted) {
      if (std::none_of(kept.begin(), kept.end(), [f](VertexSet k) { return f.subset_of(k); })) {
        kept.push_back(f);
      }
    }
    return kept;
  }();
  auto in_some_facet = [&](VertexSet s) {
    return std::any_of(maximal.begin(), maximal.end(), [s](VertexSet f) { return s.subset_of(f); });
  };

  std::vector<VertexSet> missing;
  for (int v = 0; v < n; ++v) {
    if (!vertices.contains(v)) missing.push_back(VertexSet::singleton(v));
  }
  std::vector<VertexSet> level;
  for (int v : vertices) level.push_back(VertexSet::singleton(v));
  while (!level.empty()) {
    FaceSet level_set(level.begin(), level.end());
    std::vector<VertexSet> next;
    extend_level(n, level, level_set, vertices, [&](VertexSet tau) {
      if (in_some_facet(tau)) {
        next.push_back(tau);
      } else {
        missing.push_back(tau);
      }
    });
    level = std::move(next);
  }
  return Complex(n, std::move(missing));
}

Complex Complex::from_facets(int n, const std::vector<std::vector<int>>& facets) {
  check_vertex_count(n);
  std::vector<VertexSet> sets;
  sets.reserve(facets.size());
  for (const auto& f : facets) sets.push_back(checked_set(n, f));
  return from_facets(n, sets);
}

Complex Complex::from_missing_faces(int n, std::span<const VertexSet> missing) {
  check_vertex_count(n);
  const VertexSet ground = VertexSet::first(n);
  std::vector<VertexSet> sets(missing.begin(), missing.end());
  for (VertexSet m : sets) {
    if (m.empty()) throw InputError("the empty set cannot be a missing face");
    if (!m.subset_of(ground)) throw InputError("missing face " + m.to_string() + " has a vertex out of range");
  }
  std::sort(sets.begin(), sets.end(), size_lex_less);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (sets[i].subset_of(sets[j])) {
        throw InputError("missing faces do not form an antichain: " + sets[i].to_string() +
                         " ⊆ " + sets[j].to_string());
      }
    }
  }
  return Complex(n, std::move(sets));
}

Complex Complex::from_missing_faces(int n, const std::vector<std::vector<int>>& missing) {
  check_vertex_count(n);
  std::vector<VertexSet> sets;
  sets.reserve(missing.size());
  for (const auto& m : missing) sets.push_back(checked_set(n, m));
  return from_missing_faces(n, sets);
}

Complex Complex::simplex(int n) {
  check_vertex_count(n);
  return Complex(n, {});
}

bool Complex::contains(VertexSet face) const {
  if (!face.subset_of(ground())) return false;
  return std::none_of(missing_.begin(), missing_.end(),
                      [face](VertexSet m) { return m.subset_of(face); });
}

const std::vector<VertexSet>& Complex::faces(int k) const {
  if (k < -1 || k >= n_) return kNoFaces;
  const std::size_t want = static_cast<std::size_t>(k + 1);
  std::lock_guard lock(cache_->mutex);
  auto& levels = cache_->levels;
  auto& sets = cache_->level_sets;
  if (levels.empty()) {
    levels.push_back(std::make_unique<std::vector<VertexSet>>(1, VertexSet{}));
    sets.push_back(std::make_unique<FaceSet>(FaceSet{VertexSet{}}));
  }
  while (levels.size() <= want) {
    auto next = std::make_unique<std::vector<VertexSet>>();
    if (!cache_->exhausted) {
      const std::size_t s = levels.size() - 1;
      if (s == 0) {
        for (int v = 0; v < n_; ++v) {
          if (!cache_->missing_set.count(VertexSet::singleton(v))) next->push_back(VertexSet::singleton(v));
        }
      } else {
        extend_level(n_, *levels[s], *sets[s], ground(), [&](VertexSet tau) {
          if (!cache_->missing_set.count(tau)) next->push_back(tau);
        });
      }
      if (next->empty()) cache_->exhausted = true;
    }
    sets.push_back(std::make_unique<FaceSet>(next->begin(), next->end()));
    levels.push_back(std::move(next));
  }
  return *levels[want];
}

int Complex::dimension() const {
  int k = -1;
  while (k + 1 < n_ && !faces(k + 1).empty()) ++k;
  return k;
}

const std::vector<VertexSet>& Complex::facets() const {
  const int dim = dimension();
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->facets) return *cache_->facets;
  }
  std::vector<VertexSet> out;
  for (int k = -1; k <= dim; ++k) {
    for (VertexSet sigma : faces(k)) {
      bool maximal = true;
      for (int v = 0; v < n_ && maximal; ++v) {
        if (!sigma.contains(v) && contains(sigma.with(v))) maximal = false;
      }
      if (maximal) out.push_back(sigma);
    }
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  std::lock_guard lock(cache_->mutex);
  if (!cache_->facets) cache_->facets = std::make_unique<std::vector<VertexSet>>(std::move(out));
  return *cache_->facets;
}

std::vector<VertexSet> Complex::missing_faces_of_dim(int i) const {
  std::vector<VertexSet> out;
  for (VertexSet m : missing_) {
    if (m.size() == i + 1) out.push_back(m);
  }
  return out;
}

std::set<int> Complex::missing_dims() const {
  std::set<int> dims;
  for (VertexSet m : missing_) dims.insert(m.size() - 1);
  return dims;
}

std::optional<int> Complex::max_missing_dim() const {
  if (missing_.empty()) return std::nullopt;
  return missing_.back().size() - 1;
}

int Complex::degree(VertexSet sigma) const {
  if (!contains(sigma)) throw InputError("degree: " + sigma.to_string() + " is not a face");
  int count = 0;
  for (int v = 0; v < n_; ++v) {
    if (!sigma.contains(v) && contains(sigma.with(v))) ++count;
  }
  return count;
}

Complex Complex::link(VertexSet sigma) const {
  if (!contains(sigma)) throw InputError("link: " + sigma.to_string() + " is not a face");
  std::vector<VertexSet> candidates;
  for (VertexSet m : missing_) candidates.push_back(m - sigma);
  for (int s : sigma) candidates.push_back(VertexSet::singleton(s));
  return Complex(n_, minimal_elements(std::move(candidates)));
}

Complex Complex::induced(VertexSet u) const {
  if (!u.subset_of(ground())) throw InputError("induced: " + u.to_string() + " is not a vertex subset");
  std::vector<VertexSet> kept;
  for (VertexSet m : missing_) {
    if (m.subset_of(u)) kept.push_back(compress(m, u));
  }
  return Complex(u.size(), std::move(kept));
}

Complex intersect(std::span<const Complex> complexes) {
  if (complexes.empty()) throw InputError("intersect: no complexes given");
  const int n = complexes.front().num_vertices();
  std::vector<VertexSet> all;
  for (const Complex& c : complexes) {
    if (c.num_vertices() != n) throw InputError("intersect: complexes have different vertex counts");
    all.insert(all.end(), c.missing_faces().begin(), c.missing_faces().end());
  }
  return Complex::from_missing_faces(n, minimal_elements(std::move(all)));
}

Complex intersect(const Complex& a, const Complex& b) {
  const Complex both[] = {a, b};
  return intersect(std::span<const Complex>(both));
}

MissingFaceStats missing_stats(const Complex& x, VertexSet theta) {
  const auto d = x.max_missing_dim();
  if (!d) throw InputError("missing_stats: complex has no missing faces");
  if (theta.size() < *d + 1) {
    throw InputError("missing_stats: |θ| must be at least h(X)+1 = " + std::to_string(*d + 1));
  }
  MissingFaceStats stats;
  stats.theta = theta;
  for (VertexSet tau : subsets_of_size(theta, *d + 1)) {
    if (!x.contains(tau)) stats.absent_top_faces.push_back(tau);
  }
  if (!stats.absent_top_faces.empty()) {
    VertexSet core = theta;
    for (VertexSet tau : stats.absent_top_faces) core = core & tau;
    stats.common_core = core;
    stats.core_size = core.size();
  }
  return stats;
}

Complex derived_xi(const Complex& x, int i) {
  auto faces = x.missing_faces_of_dim(i);
  if (faces.empty()) throw InputError("derived_xi: " + std::to_string(i) + " ∉ D(X)");
  return Complex::from_missing_faces(x.num_vertices(), faces);
}

Complex derived_yi(const Complex& x, int i) {
  auto top = x.missing_faces_of_dim(i);
  if (top.empty()) throw InputError("derived_yi: " + std::to_string(i) + " ∉ D(X)");
  std::vector<VertexSet> facets = top;
  for (VertexSet s : subsets_of_size(x.ground(), i)) {
    if (std::none_of(top.begin(), top.end(), [s](VertexSet t) { return s.subset_of(t); })) {
      facets.push_back(s);
    }
  }
  return Complex::from_facets(x.num_vertices(), facets);
}

std::vector<int> multiplier_projection(std::span<const int> a) {
  std::vector<int> proj;
  for (std::size_t v = 0; v < a.size(); ++v) {
    for (int j = 0; j < a[v]; ++j) proj.push_back(static_cast<int>(v));
  }
  return proj;
}

Complex multiplier(const Complex& x, std::span<const int> a) {
  const int n = x.num_vertices();
  if (static_cast<int>(a.size()) != n) throw InputError("multiplier: need one multiplicity per vertex");
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    if (a[v] < 1) throw InputError("multiplier: a(" + std::to_string(v) + ") < 1");
    offset[v + 1] = offset[v] + a[v];
  }
  if (offset[n] > Complex::kMaxVertices) throw InputError("multiplier: more than 64 vertices");
  std::vector<VertexSet> missing;
  for (VertexSet mu : x.missing_faces()) {
    std::vector<VertexSet> partial{VertexSet{}};
    for (int v : mu) {
      std::vector<VertexSet> grown;
      for (VertexSet p : partial) {
        for (int j = 0; j < a[v]; ++j) grown.push_back(p.with(offset[v] + j));
      }
      partial = std::move(grown);
    }
    missing.insert(missing.end(), partial.begin(), partial.end());
  }
  return Complex::from_missing_faces(offset[n], missing);
}

Partition::Partition(std::vector<VertexSet> classes) : classes_(std::move(classes)) {
  VertexSet seen;
  for (VertexSet c : classes_) {
    if (c.empty()) throw InputError("partition classes must be non-empty");
    if (c.intersects(seen)) throw InputError("partition classes must be disjoint");
    seen = seen | c;
  }
}

Partition Partition::from_lists(const std::vector<std::vector<int>>& classes) {
  std::vector<VertexSet> sets;
  for (const auto& c : classes) sets.push_back(VertexSet::from_vertices(c));
  return Partition(std::move(sets));
}

VertexSet Partition::support() const {
  return union_of(classes_.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << classes_.size()) - 1);
}

VertexSet Partition::union_of(std::uint64_t mask) const {
  VertexSet out;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if ((mask >> i) & 1U) out = out | classes_[i];
  }
  return out;
}

bool is_colorful(VertexSet sigma, const Partition& partition) {
  return std::all_of(partition.classes().begin(), partition.classes().end(),
                     [sigma](VertexSet c) { return (sigma & c).size() == 1; });
}

}  // namespace scx
