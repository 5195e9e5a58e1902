#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "scx/builtins.hpp"
#include "scx/domination.hpp"
#include "scx/error.hpp"
#include "scx/random.hpp"
#include "scx/theorem_checks.hpp"

using scx::Complex;
using scx::Rational;
using scx::VertexSet;

namespace {

Complex edge_independence() { return Complex::from_missing_faces(2, std::vector<std::vector<int>>{{0, 1}}); }

// Missing edge {0,1} with vertex 2 coning off everything.
Complex cone() { return Complex::from_missing_faces(3, std::vector<std::vector<int>>{{0, 1}}); }

Complex relabel(const Complex& x, const std::vector<int>& perm) {
  std::vector<VertexSet> missing;
  for (VertexSet m : x.missing_faces()) {
    VertexSet image;
    for (int v : m) image = image.with(perm[v]);
    missing.push_back(image);
  }
  return Complex::from_missing_faces(x.num_vertices(), missing);
}

scx::VectorRepresentation column(const Complex& x, const std::vector<long>& entries) {
  scx::VectorRepresentation p = scx::all_ones_representation(x);
  for (auto& b : p.blocks) {
    std::vector<std::vector<long>> rows;
    for (long e : entries) rows.push_back({e});
    b.matrix = scx::RationalMatrix::from_int(rows);
  }
  return p;
}

}  // namespace

TEST(IndexSets, SizesFollowMissingDims) {
  EXPECT_EQ(scx::representation_index_sets(edge_independence()), (std::vector<VertexSet>{VertexSet{}}));
  const auto s = scx::representation_index_sets(scx::builtins::affine_plane_complex());
  EXPECT_EQ(s.size(), 9u);
  for (VertexSet sigma : s) EXPECT_EQ(sigma.size(), 1);
}

TEST(TotalDomination, EdgeIndependenceComplex) {
  const Complex x = edge_independence();
  const auto g = scx::total_domination(x);
  ASSERT_TRUE(g.gamma);
  EXPECT_EQ(*g.gamma, 2);
  EXPECT_EQ(g.witness, (VertexSet{0, 1}));
  const auto v = scx::rep_value(scx::all_ones_representation(x), x);
  EXPECT_FALSE(v.infinite);
  EXPECT_EQ(v.value, Rational(1));
  EXPECT_TRUE(scx::check_gamma_vs_gamma(x, scx::all_ones_representation(x)).pass);
}

TEST(TotalDomination, ConeIsInfinite) {
  const Complex x = cone();
  EXPECT_FALSE(scx::total_domination(x).gamma);
  EXPECT_FALSE(oracle::total_domination(3, x.missing_faces()));
  EXPECT_TRUE(scx::check_gamma_vs_gamma(x, scx::all_ones_representation(x)).vacuous);
}

TEST(TotalDomination, MatchesDefinition) {
  for (int t = 0; t < 60; ++t) {
    auto rng = scx::trial_rng(61, t);
    const Complex x = scx::random_complex(rng, {});
    const auto got = scx::total_domination(x);
    const auto want = oracle::total_domination(x.num_vertices(), x.missing_faces());
    EXPECT_EQ(got.gamma, want) << t;
    if (got.gamma) {
      EXPECT_EQ(got.witness.size(), *got.gamma);
      EXPECT_TRUE(scx::is_totally_dominating(x, got.witness));
    }
  }
}

TEST(TotalDomination, RelabelInvariant) {
  for (int t = 0; t < 20; ++t) {
    auto rng = scx::trial_rng(67, t);
    const Complex x = scx::random_complex(rng, {});
    std::vector<int> perm(x.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(scx::total_domination(x).gamma, scx::total_domination(relabel(x, perm)).gamma);
  }
}

TEST(TotalDomination, Guard) {
  EXPECT_THROW(scx::total_domination(Complex::simplex(23)), scx::GuardError);
}

TEST(Representation, Validation) {
  const Complex x = edge_independence();
  EXPECT_TRUE(scx::validate_representation(scx::all_ones_representation(x), x).valid);
  const auto zero = column(x, {0, 0});
  const auto check = scx::validate_representation(zero, x);
  EXPECT_FALSE(check.valid);
  EXPECT_FALSE(check.violations.empty());
  EXPECT_THROW(scx::rep_value(zero, x), scx::InputError);
  EXPECT_THROW(scx::validate_representation(column(x, {1, 1, 1}), x), scx::InputError);
  scx::VectorRepresentation negative = column(x, {2, 1});
  negative.blocks[0].matrix.set(0, 0, Rational(-1));
  EXPECT_FALSE(scx::validate_representation(negative, x).valid);
}

TEST(Representation, GramOfOnes) {
  const Complex x = scx::builtins::affine_plane_complex();
  for (const auto& g : scx::gram_matrices(scx::all_ones_representation(x))) {
    ASSERT_EQ(g.rows(), 9);
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) EXPECT_EQ(g(i, j), Rational(1));
  }
}

TEST(RepValue, ZeroRowOnApexIsInfinite) {
  const Complex x = cone();
  const auto v = scx::rep_value(column(x, {1, 1, 0}), x);
  EXPECT_TRUE(v.infinite);
  EXPECT_TRUE(scx::check_connectivity_bound(x, column(x, {1, 1, 0})).pass);
}

TEST(RepValue, ScaledColumn) {
  // Rows 2 and 1/2: vertex 1 needs α_0 + α_1/4 >= 1, so the optimum is α = (1, 0).
  const Complex x = edge_independence();
  scx::VectorRepresentation p = column(x, {2, 1});
  p.blocks[0].matrix.set(1, 0, Rational(1, 2));
  const auto v = scx::rep_value(p, x);
  ASSERT_FALSE(v.infinite);
  EXPECT_EQ(v.value, Rational(1));
}

TEST(RepValue, AllOnesIsOne) {
  for (int t = 0; t < 20; ++t) {
    auto rng = scx::trial_rng(71, t);
    const Complex x = scx::random_complex(rng, {});
    EXPECT_EQ(scx::rep_value(scx::all_ones_representation(x), x).value, Rational(1));
  }
}

TEST(Alpha, CertificateFromDominatingSet) {
  int seen = 0;
  for (int t = 0; t < 80 && seen < 15; ++t) {
    auto rng = scx::trial_rng(73, t);
    const Complex x = scx::random_complex(rng, {.mixed = false});
    const auto g = scx::total_domination(x);
    if (!g.gamma) continue;
    const auto p = scx::random_representation(rng, x);
    const auto cert = scx::dominating_alpha_from_tds(x, g.witness, p);
    EXPECT_TRUE(cert.dominating);
    EXPECT_EQ(cert.total, cert.expected);
    EXPECT_TRUE(scx::check_gamma_vs_gamma(x, p).pass);
    ++seen;
  }
  EXPECT_GT(seen, 5);
}

TEST(Bounds, RandomRepresentations) {
  for (int t = 0; t < 30; ++t) {
    auto rng = scx::trial_rng(79, t);
    const Complex x = scx::random_complex(rng, {.n_max = 6});
    const auto p = scx::random_representation(rng, x);
    ASSERT_TRUE(scx::validate_representation(p, x).valid);
    EXPECT_TRUE(scx::check_connectivity_bound(x, p).pass);
    for (int i : x.missing_dims()) {
      if (i < 1) continue;
      EXPECT_TRUE(scx::check_eigenrep(x, p, i).pass) << i;
    }
  }
}

TEST(Colorful, Octahedron) {
  const Complex oct = scx::builtins::complete_multipartite_clique_complex(3, 2);
  const auto parts = scx::Partition::from_lists({{0, 1}, {2, 3}, {4, 5}});
  const auto w = scx::colorful_simplex_search(oct, parts);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (VertexSet{0, 2, 4}));
  const auto hall = scx::check_hall_eta(oct, parts);
  EXPECT_EQ(hall.rows.size(), 7u);
  EXPECT_TRUE(hall.pass());
  const auto general = scx::check_generalhalltype(oct, parts);
  EXPECT_TRUE(general.pass());
}

TEST(Colorful, NoTransversalInAPartitionOfAMissingEdge) {
  const auto parts = scx::Partition::from_lists({{0}, {1}});
  EXPECT_FALSE(scx::colorful_simplex_search(edge_independence(), parts));
  const auto hall = scx::check_hall_eta(edge_independence(), parts);
  EXPECT_FALSE(hall.hypothesis);
  EXPECT_TRUE(hall.pass());
}
