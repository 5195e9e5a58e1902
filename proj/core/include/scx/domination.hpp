#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scx/check.hpp"
#include "scx/complex.hpp"
#include "scx/homology.hpp"
#include "scx/lp.hpp"
#include "scx/rational.hpp"

namespace scx {

/// S(X): every (i-1)-subset of V for i ∈ D(X), i >= 1, sorted by size then
/// lexicographically.
std::vector<VertexSet> representation_index_sets(const Complex& x);

struct RepresentationBlock {
  VertexSet sigma;
  RationalMatrix matrix;  // one row per vertex
};

/// One nonnegative rational matrix per index set of S(X).
struct VectorRepresentation {
  int num_vertices = 0;
  std::vector<RepresentationBlock> blocks;

  /// Block for sigma, or nullptr.
  const RepresentationBlock* find(VertexSet sigma) const;
};

/// Every P_σ is a single column of ones.
VectorRepresentation all_ones_representation(const Complex& x);

struct RepresentationCheck {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Exact check of nonnegativity and of row_v·row_w >= 1 whenever vwσ is a
/// missing face. Throws InputError when the blocks do not match S(X) or a
/// matrix has the wrong number of rows.
RepresentationCheck validate_representation(const VectorRepresentation& p, const Complex& x);

/// P_σ P_σᵀ for every block, in block order.
std::vector<RationalMatrix> gram_matrices(const VectorRepresentation& p);

struct RepValue {
  bool infinite = false;  // no dominating family exists
  Rational value;         // |P| when finite
  LpSolution primal;      // covering LP over α_σ(v)
  LpSolution dual;        // single-vector packing LP over y(v)
};

/// |P| from the covering LP, cross-checked against the packing LP
/// max{1·y : y P_σ P_σᵀ <= 1}. Throws NumericError if the two disagree.
/// Throws InputError if P is not a valid representation of X.
RepValue rep_value(const VectorRepresentation& p, const Complex& x);

bool is_totally_dominating(const Complex& x, VertexSet s);

struct DominationResult {
  std::optional<int> gamma;  // empty means ∞
  VertexSet witness;         // a minimum totally dominating set when finite
};

/// γ̃(X) by exhaustive search in increasing size. Throws GuardError when
/// n > max_vertices.
DominationResult total_domination(const Complex& x, int max_vertices = 22);

struct AlphaCertificate {
  int d = 0;
  std::vector<VertexSet> sigmas;            // C(V, d-1) in lex order
  std::vector<std::vector<Rational>> alpha;  // α_σ, one entry per vertex
  Rational total;
  Rational expected;  // C(|S|, d)
  bool dominating = false;
};

/// α_σ = (1/d)·1_{S∖σ} for σ ⊆ S, |σ| = d-1, and 0 otherwise. Requires
/// every missing face to have dimension d >= 1 and S totally dominating.
AlphaCertificate dominating_alpha_from_tds(const Complex& x, VertexSet s, const VectorRepresentation& p);

/// |P| <= C(γ̃, d) when D(X) = {d}; vacuous when γ̃ = ∞.
CheckResult check_gamma_vs_gamma(const Complex& x, const VectorRepresentation& p);

/// Σ_{r∈D(X)} r·C(η, r) >= |P|; vacuous when η = ∞.
CheckResult check_connectivity_bound(const Complex& x, const VectorRepresentation& p);

/// λ̄_i(X) <= i · max_{|σ|=i-1, v} P_σ(v)·Σ_w P_σ(w) for i ∈ D(X).
CheckResult check_eigenrep(const Complex& x, const VectorRepresentation& p, int i, const Tolerances& tol = {});

/// First transversal in lexicographic order that is a face of Z. Throws
/// GuardError when the partition has more than 20 classes.
std::optional<VertexSet> colorful_simplex_search(const Complex& z, const Partition& partition);

/// One row per nonempty class subset I of a Hall-type sweep.
struct HallRow {
  std::uint64_t classes = 0;  // bit i set when class i is in I
  std::string value;          // left-hand side for I
  std::string threshold;      // right-hand side for I
  double margin = 0.0;        // value - threshold; +inf for an ∞ value
  bool holds = false;
};

struct HallReport {
  std::string check;
  std::vector<HallRow> rows;
  bool hypothesis = true;             // every row holds
  std::optional<VertexSet> witness;   // colorful set found by search
  bool pass() const { return !hypothesis || witness.has_value(); }
};

/// η(Z[∪_I W_i]) >= |I| for every I; when that holds a colorful simplex
/// must exist.
HallReport check_hall_eta(const Complex& z, const Partition& partition);

/// |P_I| > Σ_{r∈D(X_I)} r·C(|I|-1, r) for every I, with X_I the induced
/// subcomplex and P_I its all-ones representation (or reps[mask-1] when
/// supplied); when that holds a colorful simplex must exist.
HallReport check_generalhalltype(const Complex& x, const Partition& partition,
                                 const std::vector<VectorRepresentation>* reps = nullptr);

}  // namespace scx
