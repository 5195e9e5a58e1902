#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scx/check.hpp"
#include "scx/complex.hpp"
#include "scx/domination.hpp"
#include "scx/rational.hpp"

namespace scx {

/// A matroid given by an exact rank oracle: linear over F_p, uniform, or
/// one of the two finite-geometry builtins.
class Matroid {
 public:
  enum class Kind { linear, uniform };

  /// columns[v] is the vector of ground element v over F_p; p must be a
  /// prime <= 13. Entries are reduced mod p.
  static Matroid linear(int p, std::vector<std::vector<int>> columns);
  static Matroid uniform(int rank, int n);
  /// AG(2,3): columns (x, y, 1) over F_3 in lexicographic (x, y) order.
  static Matroid ag23();
  /// PG(3,3): the 40 normalised points of F_3^4 in lexicographic order.
  static Matroid pg33();

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int size() const { return n_; }
  VertexSet ground() const { return VertexSet::first(n_); }
  int prime() const { return p_; }
  const std::vector<std::vector<int>>& columns() const { return columns_; }

  int rank(VertexSet s) const;
  int full_rank() const { return full_rank_; }
  /// d = rank(V) - 1.
  int d() const { return full_rank_ - 1; }
  bool is_independent(VertexSet s) const { return rank(s) == s.size(); }
  VertexSet closure(VertexSet s) const;
  /// Distinct closures of the independent r-subsets, sorted lexicographically.
  /// Throws InputError unless 0 <= r <= rank(V).
  std::vector<VertexSet> flats(int r) const;

 private:
  Matroid() = default;

  Kind kind_ = Kind::uniform;
  std::string name_;
  int n_ = 0;
  int p_ = 0;
  int uniform_rank_ = 0;
  int full_rank_ = 0;
  std::vector<std::vector<int>> columns_;
};

/// Every subset of S of size <= d+1 is independent.
bool is_general_position(const Matroid& m, VertexSet s);

/// Every flat of rank k <= d holds at most k points of S.
bool is_general_position_by_flats(const Matroid& m, VertexSet s);

/// Minimal dependent subsets of U with at most max_size elements, sorted
/// by size then lexicographically.
std::vector<VertexSet> circuits(const Matroid& m, VertexSet u, int max_size);

/// M̃[U]: vertices relabeled to 0..|U|-1 in increasing order, missing faces
/// the circuits of size <= d+1 inside U.
Complex gp_complex(const Matroid& m, VertexSet u);

/// Largest subset of S in general position, by branch and bound. Throws
/// GuardError when |S| > 24.
int phi(const Matroid& m, VertexSet s, VertexSet* best = nullptr);

struct PhiStar {
  Rational value;
  std::vector<Rational> weight;  // f(v) for every ground element (0 off S)
  int constraints = 0;
};

/// Exact fractional general-position LP. Requires d >= 1 and no loops in S.
PhiStar phi_star(const Matroid& m, VertexSet s);

/// P_σ(v)(F) = 1 iff cl(vσ) = F for |σ| = r-1 and F a rank-r flat, as a
/// representation of gp_complex(m, u). Flats hit by no vertex are dropped.
VectorRepresentation flat_representation(const Matroid& m, VertexSet u);

/// φ*(U) <= d·|P| for the flat representation P, with the weight f/d
/// checked to be feasible for the packing LP.
CheckResult check_flat_representation(const Matroid& m, VertexSet u);

/// First colorful set in general position in lexicographic transversal
/// order. Throws GuardError when there are more than 12 classes.
std::optional<VertexSet> colorful_gp_search(const Matroid& m, const Partition& partition);

/// φ*(∪_I V_i) > d Σ_{r=1}^d r·C(|I|-1, r) for every I implies a colorful
/// set in general position.
HallReport check_myHMSstar(const Matroid& m, const Partition& partition);

/// As check_myHMSstar with φ and threshold |I|-1 when |I| <= d+1.
HallReport check_myHMS(const Matroid& m, const Partition& partition);

}  // namespace scx
