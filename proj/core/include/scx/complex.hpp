#pragma once

#include <memory>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "scx/vertex_set.hpp"

namespace scx {

/// A finite abstract simplicial complex on the vertex set {0, ..., n-1}.
///
/// The complex is determined by its missing faces (minimal non-faces),
/// which are what the object stores. Face lists per dimension and the
/// facet list are derived on first use and cached; the cache is shared
/// between copies and guarded by a mutex, so a Complex may be queried from
/// several threads.
///
/// The empty face always belongs to the complex. A vertex v with {v} not a
/// face is represented by the missing face {v}.
class Complex {
 public:
  static constexpr int kMaxVertices = VertexSet::kCapacity;

  /// All subsets of the given sets. Sets contained in others are absorbed.
  /// Throws InputError for n outside 1..64, out-of-range or repeated vertices.
  static Complex from_facets(int n, std::span<const VertexSet> facets);
  static Complex from_facets(int n, const std::vector<std::vector<int>>& facets);

  /// The unique complex whose missing faces are exactly `missing`.
  /// Throws InputError if `missing` is not an antichain or contains ∅.
  static Complex from_missing_faces(int n, std::span<const VertexSet> missing);
  static Complex from_missing_faces(int n, const std::vector<std::vector<int>>& missing);

  /// The full simplex on n vertices (no missing faces).
  static Complex simplex(int n);

  int num_vertices() const { return n_; }
  VertexSet ground() const { return VertexSet::first(n_); }

  bool contains(VertexSet face) const;

  /// Sorted (lexicographically) list of the k-dimensional faces; k = -1
  /// yields the single empty face. Empty for k < -1 or k >= n.
  const std::vector<VertexSet>& faces(int k) const;
  std::size_t num_faces(int k) const { return faces(k).size(); }

  /// Inclusion-maximal faces, sorted by size then lexicographically.
  const std::vector<VertexSet>& facets() const;

  /// Largest face dimension; -1 when only the empty face is present.
  int dimension() const;

  /// Missing faces sorted by size then lexicographically.
  const std::vector<VertexSet>& missing_faces() const { return missing_; }

  /// Missing faces of dimension i (cardinality i+1).
  std::vector<VertexSet> missing_faces_of_dim(int i) const;

  /// D(X): the dimensions i such that X has a missing face of dimension i.
  std::set<int> missing_dims() const;

  /// h(X) = max D(X); nullopt for a full simplex.
  std::optional<int> max_missing_dim() const;

  /// Number of (k+1)-faces containing the k-face sigma. Throws if sigma ∉ X.
  int degree(VertexSet sigma) const;

  /// lk(X, sigma) on the same vertex labels; vertices outside the link are
  /// missing singletons. Throws if sigma ∉ X.
  Complex link(VertexSet sigma) const;

  /// X[U], relabelled so that the members of U become 0..|U|-1 in
  /// increasing order. U = ∅ yields the complex {∅} on zero vertices.
  Complex induced(VertexSet u) const;

  bool operator==(const Complex& other) const {
    return n_ == other.n_ && missing_ == other.missing_;
  }

 private:
  struct Cache;

  Complex(int n, std::vector<VertexSet> missing);

  int n_ = 0;
  std::vector<VertexSet> missing_;
  std::shared_ptr<Cache> cache_;
};

/// Face-set intersection of complexes sharing the same vertex count.
Complex intersect(std::span<const Complex> complexes);
Complex intersect(const Complex& a, const Complex& b);

/// T(θ), m̃(θ) and m(θ) for θ relative to d = h(X).
struct MissingFaceStats {
  VertexSet theta;
  std::vector<VertexSet> absent_top_faces;  // T(θ)
  VertexSet common_core;                    // m̃(θ); ∅ when T(θ) is empty
  int core_size = 0;                        // m(θ)
};

/// Throws InputError if h(X) is undefined or |θ| < h(X)+1.
MissingFaceStats missing_stats(const Complex& x, VertexSet theta);

/// The complex X_i whose missing faces are the missing i-faces of X.
Complex derived_xi(const Complex& x, int i);

/// Y_i: full (i-1)-skeleton on V plus the missing i-faces of X as i-faces.
Complex derived_yi(const Complex& x, int i);

/// X^a: vertex v is replaced by a[v] clones numbered consecutively
/// (clones of v come before clones of v+1).
Complex multiplier(const Complex& x, std::span<const int> a);

/// The projection X^a → X as a vertex map.
std::vector<int> multiplier_projection(std::span<const int> a);

/// Disjoint non-empty vertex classes V_1..V_m.
class Partition {
 public:
  Partition() = default;
  /// Throws InputError on empty or overlapping classes.
  explicit Partition(std::vector<VertexSet> classes);
  static Partition from_lists(const std::vector<std::vector<int>>& classes);

  const std::vector<VertexSet>& classes() const { return classes_; }
  int size() const { return static_cast<int>(classes_.size()); }
  VertexSet support() const;
  /// Union of the classes whose index bit is set in `mask`.
  VertexSet union_of(std::uint64_t mask) const;

 private:
  std::vector<VertexSet> classes_;
};

bool is_colorful(VertexSet sigma, const Partition& partition);

}  // namespace scx
