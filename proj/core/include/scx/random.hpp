#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "scx/complex.hpp"
#include "scx/domination.hpp"
#include "scx/matroid.hpp"

namespace scx {

/// Generator for trial `trial` of a campaign seeded with `seed`. Only raw
/// engine output is consumed below, so streams are identical everywhere.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Uniform integer in [lo, hi].
int draw_int(std::mt19937_64& rng, int lo, int hi);

/// True with probability num/den.
bool draw_chance(std::mt19937_64& rng, int num, int den);

/// Uniform double in [-1, 1).
double draw_unit(std::mt19937_64& rng);

struct RandomComplexOptions {
  int n_max = 7;
  int d_max = 3;
  int n_fixed = 0;     // when > 0, use exactly this many vertices
  bool mixed = true;   // allow lower-cardinality missing faces
};

/// n ∈ [4, n_max], d ∈ [1, min(d_max, n-1)]; every (d+1)-subset becomes a
/// missing-face candidate with probability 1/2. With probability 1/4 (when
/// mixed) each subset of size 2..d is also a candidate with probability
/// 1/4. Candidates are reduced to their minimal elements; an empty result
/// gets one random (d+1)-subset. No missing vertices are produced.
Complex random_complex(std::mt19937_64& rng, const RandomComplexOptions& options);

/// Nonnegative representation with entries in {0, 1/2, 1, 3/2, 2} and 1..3
/// columns per block, plus one repair column when some required product
/// falls below 1.
VectorRepresentation random_representation(std::mt19937_64& rng, const Complex& x);

/// Loopless linear matroid over F_p with n ∈ [n_min, n_max] columns in
/// F_p^rank and full rank, rank ∈ [2, min(rank_max, n)].
Matroid random_linear_matroid(std::mt19937_64& rng, int p, int n_min, int n_max, int rank_max);

/// m nonempty disjoint classes drawn from `ground`; each vertex joins a
/// random class or, with probability 1/4, none (m <= |ground|).
Partition random_partition(std::mt19937_64& rng, VertexSet ground, int m);

/// a(v) ∈ [1, a_max] for every vertex.
std::vector<int> random_multiplier(std::mt19937_64& rng, int n, int a_max);

std::vector<double> random_cochain(std::mt19937_64& rng, int size);

}  // namespace scx
