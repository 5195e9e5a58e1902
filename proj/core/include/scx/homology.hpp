#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "scx/complex.hpp"
#include "scx/eigen_sym.hpp"
#include "scx/matrix.hpp"

namespace scx {

/// Kernel threshold and inequality slack used throughout.
struct Tolerances {
  double kernel = 1e-7;
  double slack = 1e-9;
};

/// The k-faces of a complex, each oriented by ascending vertex order; fixes
/// the standard basis of C^k(X).
class OrientedBasis {
 public:
  OrientedBasis(const Complex& x, int k);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(faces_.size()); }
  const std::vector<VertexSet>& faces() const { return faces_; }
  VertexSet face(int i) const { return faces_[i]; }
  /// Position of a face in the basis, or -1.
  int index_of(VertexSet face) const;

 private:
  int dim_;
  std::vector<VertexSet> faces_;
  std::unordered_map<VertexSet, int, VertexSetHash> index_;
};

/// [σ : τ] for ordered simplices: the sign of the permutation taking σ to
/// the ordered union (σ∖τ)τ. Throws InputError unless τ ⊆ σ as sets with
/// no repeated vertices.
int sign(std::span<const int> sigma, std::span<const int> tau);

/// [σ : τ] when both carry their ascending (standard) orientation.
int face_sign(VertexSet sigma, VertexSet tau);

/// d_k : C^k → C^{k+1} in the standard bases (rows: (k+1)-faces, columns:
/// k-faces). d_{-1} is the all-ones column. k < -1 yields an empty matrix.
SparseIntMatrix coboundary_matrix(const Complex& x, int k);

/// ∂_k : C^{k+1} → C^k, the transpose of d_k.
SparseIntMatrix boundary_matrix(const Complex& x, int k);

struct LaplacianSet {
  int k = 0;
  IntMatrix lower;  // d_{k-1} ∂_{k-1}
  IntMatrix upper;  // ∂_k d_k
  IntMatrix full;   // lower + upper
};

/// Laplacians assembled entry by entry from the combinatorial formulas.
LaplacianSet laplacians(const Complex& x, int k);

/// Laplacians assembled as products of coboundary matrices.
LaplacianSet laplacians_from_products(const Complex& x, int k);

/// Upper Laplacian only, from the entry formula.
IntMatrix upper_laplacian(const Complex& x, int k);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct SpectrumReport {
  int k = 0;
  std::vector<double> eigenvalues;  // ascending
  double mu = kInfinity;            // smallest; +∞ on an empty cochain space
  double lambda_max = -kInfinity;   // largest; -∞ on an empty cochain space
};

SpectrumReport spectrum(const Complex& x, int k);

/// μ_k(X); +∞ when X has no k-faces.
double spectral_gap(const Complex& x, int k);

/// λ̄_i(X): largest eigenvalue of L⁺_{i-1}(Y_i). Throws InputError unless
/// i ∈ D(X) and i >= 1.
double lambda_bar(const Complex& x, int i);

/// Reduced Betti number from exact ranks over Q (k >= -1).
long betti_exact(const Complex& x, int k);

/// Number of eigenvalues of L_k below `tol`.
long betti_hodge(const Complex& x, int k, double tol = Tolerances{}.kernel);

/// Reduced Betti numbers β_{-1} .. β_{dim X}.
std::vector<long> betti_numbers(const Complex& x);

/// η(X) = (least i >= -1 with β_i != 0) + 1, i.e. the homological
/// connectivity plus 2; empty optional means ∞.
struct Eta {
  std::optional<int> value;
  bool infinite() const { return !value.has_value(); }
  std::string to_string() const { return value ? std::to_string(*value) : "inf"; }
};

Eta eta(const Complex& x);

/// Σ_k (-1)^k |X(k)| over k >= -1.
long reduced_euler_characteristic(const Complex& x);

}  // namespace scx
