#pragma once

#include <span>
#include <vector>

#include "scx/check.hpp"
#include "scx/complex.hpp"
#include "scx/homology.hpp"

namespace scx {

/// (k-d+1) μ_k >= (k+1) μ_{k-1} - d n with d = h(X). Requires k >= d.
CheckResult check_fp(const Complex& x, int k, const Tolerances& tol = {});

/// If μ_{d-1} > (1 - 1/C(k+1,d)) n (strictly, beyond the slack) then
/// β_j = 0 for d-1 <= j <= k. Requires k >= d-1 and d >= 1.
CheckResult check_corollary_fp(const Complex& x, int k, const Tolerances& tol = {});

/// μ_k(∩A_i) >= Σ μ_k(A_i) - (m-1) n.
CheckResult check_intersection_eigen(std::span<const Complex> complexes, int k, const Tolerances& tol = {});

/// L⁺_{i-1}(Y_i) + L_{i-1}(X_i) = n·I entrywise, and μ_{i-1}(X_i) = n - λ̄_i.
CheckResult check_yi_identity(const Complex& x, int i);

/// μ_k(X) >= n - Σ_{i∈D(X)} C(k+1, i) λ̄_i.
CheckResult check_mu_lower_bound(const Complex& x, int k, const Tolerances& tol = {});

/// Σ_{i∈D(X)} C(η, i) λ̄_i >= n; vacuous when η = ∞.
CheckResult check_eigenhom2(const Complex& x, const Tolerances& tol = {});

/// <L⁺_{i-1}(Y) φ, φ> <= Σ_σ Σ_{vw ∈ lk(Y,σ)} (φ(vσ) - φ(wσ))² for a
/// complex Y with full (i-1)-skeleton and φ indexed by OrientedBasis(Y, i-1).
CheckResult check_pluslapnorm(const Complex& y, int i, std::span<const double> phi, const Tolerances& tol = {});

/// Σ_{τ ⊂ σ} deg(τ) = k+1 + (k+1) deg(σ) + Σ_r (r-1) |{v : m(vσ) = r}|,
/// exactly, for σ ∈ X(k) with k >= h(X).
CheckResult check_countdegrees(const Complex& x, VertexSet sigma);

/// Formula-assembled and product-assembled Laplacians agree exactly.
CheckResult check_laplacian_assembly(const Complex& x, int k);

/// betti_hodge(k, tol.kernel) == betti_exact(k).
CheckResult check_hodge(const Complex& x, int k, const Tolerances& tol = {});

/// Betti numbers of X^a equal those of X for every k.
CheckResult check_multiplier_betti(const Complex& x, std::span<const int> a);

/// Binomial coefficient with C(n, r) = 0 for r > n or r < 0.
long binomial(long n, long r);

}  // namespace scx
