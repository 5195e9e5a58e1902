#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "scx/builtins.hpp"
#include "scx/complex.hpp"
#include "scx/error.hpp"
#include "scx/random.hpp"

using scx::Complex;
using scx::VertexSet;

TEST(Complex, FacesMatchBruteForceOnRandomComplexes) {
  for (int t = 0; t < 40; ++t) {
    auto rng = scx::trial_rng(7, t);
    const Complex x = scx::random_complex(rng, {});
    const auto want = oracle::faces_by_dim(x.num_vertices(), x.missing_faces());
    ASSERT_EQ(x.dimension(), static_cast<int>(want.size()) - 2);
    for (int k = -1; k <= x.dimension(); ++k) EXPECT_EQ(x.faces(k), want[k + 1]) << "trial " << t << " k " << k;
    EXPECT_TRUE(x.faces(x.dimension() + 1).empty());
  }
}

TEST(Complex, FacetRoundTrip) {
  for (int t = 0; t < 30; ++t) {
    auto rng = scx::trial_rng(11, t);
    const Complex x = scx::random_complex(rng, {});
    const Complex y = Complex::from_facets(x.num_vertices(), x.facets());
    EXPECT_EQ(x, y);
  }
}

TEST(Complex, HollowTriangle) {
  const Complex x = scx::builtins::hollow_triangle();
  EXPECT_EQ(x.dimension(), 1);
  EXPECT_EQ(x.missing_faces(), (std::vector<VertexSet>{{0, 1, 2}}));
  EXPECT_EQ(x.num_faces(1), 3u);
  EXPECT_EQ(x.degree({0}), 2);
}

TEST(Complex, AffinePlaneCounts) {
  const Complex x = scx::builtins::affine_plane_complex();
  EXPECT_EQ(x.num_vertices(), 9);
  EXPECT_EQ(x.missing_faces().size(), 12u);
  EXPECT_EQ(x.num_faces(1), 36u);
  EXPECT_EQ(x.num_faces(2), 72u);  // 84 triples minus 12 lines
  EXPECT_EQ(x.degree({0, 1}), 6);
  EXPECT_EQ(x.missing_dims(), (std::set<int>{2}));
}

TEST(Complex, ProjectiveSpaceCounts) {
  const auto lines = scx::builtins::projective_space_lines();
  EXPECT_EQ(lines.size(), 130u);
  for (VertexSet l : lines) EXPECT_EQ(l.size(), 4);
  const Complex x = scx::builtins::projective_space_complex();
  EXPECT_EQ(x.num_vertices(), 40);
  EXPECT_EQ(x.missing_faces().size(), 520u);
  EXPECT_EQ(x.num_faces(1), 780u);
  EXPECT_EQ(x.degree({0, 1}), 36);
}

TEST(Complex, RejectsBadInput) {
  EXPECT_THROW(Complex::from_missing_faces(3, std::vector<std::vector<int>>{{0, 1}, {0, 1, 2}}), scx::InputError);
  EXPECT_THROW(Complex::from_missing_faces(3, std::vector<std::vector<int>>{{}}), scx::InputError);
  EXPECT_THROW(Complex::from_facets(3, std::vector<std::vector<int>>{{0, 3}}), scx::InputError);
  EXPECT_THROW(Complex::simplex(0), scx::InputError);
  EXPECT_THROW(Complex::simplex(65), scx::InputError);
}

TEST(Complex, LinkMatchesDefinition) {
  for (int t = 0; t < 30; ++t) {
    auto rng = scx::trial_rng(13, t);
    const Complex x = scx::random_complex(rng, {});
    for (VertexSet sigma : x.faces(0)) {
      const Complex lk = x.link(sigma);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << x.num_vertices()); ++bits) {
        const VertexSet tau(bits);
        const bool want = !tau.intersects(sigma) && x.contains(tau | sigma);
        EXPECT_EQ(lk.contains(tau), want);
      }
    }
  }
}

TEST(Complex, InducedRelabels) {
  const Complex x = Complex::from_missing_faces(5, std::vector<std::vector<int>>{{1, 3}, {0, 2, 4}});
  const Complex y = x.induced({1, 2, 3});
  EXPECT_EQ(y.num_vertices(), 3);
  EXPECT_EQ(y.missing_faces(), (std::vector<VertexSet>{{0, 2}}));
}

TEST(Complex, IntersectionIsFaceIntersection) {
  for (int t = 0; t < 20; ++t) {
    auto rng = scx::trial_rng(17, t);
    const Complex a = scx::random_complex(rng, {.n_max = 6});
    scx::RandomComplexOptions same{.n_fixed = a.num_vertices()};
    const Complex b = scx::random_complex(rng, same);
    const Complex c = scx::intersect(a, b);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << a.num_vertices()); ++bits) {
      const VertexSet s(bits);
      EXPECT_EQ(c.contains(s), a.contains(s) && b.contains(s));
    }
  }
}

TEST(Complex, MultiplierIsPreimage) {
  for (int t = 0; t < 20; ++t) {
    auto rng = scx::trial_rng(19, t);
    const Complex x = scx::random_complex(rng, {.n_max = 5});
    const auto a = scx::random_multiplier(rng, x.num_vertices(), 2);
    const Complex y = scx::multiplier(x, a);
    const auto pi = scx::multiplier_projection(a);
    ASSERT_EQ(y.num_vertices(), static_cast<int>(pi.size()));
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << y.num_vertices()); ++bits) {
      const VertexSet s(bits);
      VertexSet image;
      for (int v : s) image = image.with(pi[v]);
      EXPECT_EQ(y.contains(s), x.contains(image));
    }
  }
}

TEST(Complex, MissingStats) {
  const Complex x = scx::builtins::affine_plane_complex();
  // {0,1,2} is a line; θ = {0,1,2,3} contains exactly that absent triple.
  const auto s = scx::missing_stats(x, {0, 1, 2, 3});
  EXPECT_EQ(s.absent_top_faces.size(), 1u);
  EXPECT_EQ(s.core_size, 3);
  EXPECT_EQ(scx::missing_stats(x, {0, 1, 3}).core_size, 0);
}

TEST(Complex, DerivedComplexes) {
  const Complex x = Complex::from_missing_faces(5, std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}});
  const Complex x2 = scx::derived_xi(x, 2);
  EXPECT_EQ(x2.missing_faces(), (std::vector<VertexSet>{{2, 3, 4}}));
  const Complex y2 = scx::derived_yi(x, 2);
  EXPECT_EQ(y2.num_faces(1), 10u);
  EXPECT_EQ(y2.faces(2), (std::vector<VertexSet>{{2, 3, 4}}));
}

TEST(Partition, Validation) {
  EXPECT_THROW(scx::Partition({{0, 1}, {1, 2}}), scx::InputError);
  EXPECT_THROW(scx::Partition({{0, 1}, VertexSet()}), scx::InputError);
  const scx::Partition p({{0, 1}, {2}, {3, 4}});
  EXPECT_EQ(p.union_of(0b101), VertexSet({0, 1, 3, 4}));
  EXPECT_TRUE(scx::is_colorful({0, 2, 4}, p));
  EXPECT_FALSE(scx::is_colorful({0, 1, 2}, p));
}
