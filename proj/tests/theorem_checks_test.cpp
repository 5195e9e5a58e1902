#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "scx/builtins.hpp"
#include "scx/error.hpp"
#include "scx/random.hpp"
#include "scx/theorem_checks.hpp"

using scx::Complex;
using scx::VertexSet;

namespace {

Complex random_small(int seed, int t) {
  auto rng = scx::trial_rng(seed, t);
  return scx::random_complex(rng, {});
}

// Right-hand side of the degree-count identity from brute-force face tests.
long degree_identity_rhs(const Complex& x, VertexSet sigma) {
  const int d = *x.max_missing_dim();
  const int k = sigma.size() - 1;
  auto deg = [&](VertexSet s) {
    int c = 0;
    for (int v = 0; v < x.num_vertices(); ++v)
      if (!s.contains(v) && oracle::is_face(s.with(v), x.missing_faces())) ++c;
    return c;
  };
  long rhs = (k + 1) + static_cast<long>(k + 1) * deg(sigma);
  for (int v = 0; v < x.num_vertices(); ++v) {
    const VertexSet theta = sigma.with(v);
    VertexSet core = theta;
    bool any = false;
    for (VertexSet t : scx::subsets_of_size(theta, d + 1)) {
      if (oracle::is_face(t, x.missing_faces())) continue;
      core = core & t;
      any = true;
    }
    const int m = any ? core.size() : 0;
    if (m >= 2) rhs += m - 1;
  }
  return rhs;
}

}  // namespace

TEST(Binomial, Values) {
  EXPECT_EQ(scx::binomial(5, 2), 10);
  EXPECT_EQ(scx::binomial(0, 0), 1);
  EXPECT_EQ(scx::binomial(0, 1), 0);
  EXPECT_EQ(scx::binomial(3, -1), 0);
  EXPECT_EQ(scx::binomial(64, 32), 1832624140942590534L);
}

TEST(CountDegrees, MatchesBruteForce) {
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    const Complex x = random_small(41, t);
    const int d = *x.max_missing_dim();
    for (int k = d; k <= x.dimension(); ++k) {
      for (VertexSet sigma : x.faces(k)) {
        const auto r = scx::check_countdegrees(x, sigma);
        EXPECT_TRUE(r.pass) << r.detail;
        EXPECT_EQ(r.exact_rhs, std::to_string(degree_identity_rhs(x, sigma)));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(CountDegrees, RejectsSmallFaces) {
  const Complex x = scx::builtins::affine_plane_complex();
  EXPECT_THROW(scx::check_countdegrees(x, {0}), scx::InputError);
  EXPECT_THROW(scx::check_countdegrees(x, {0, 1, 2}), scx::InputError);
  EXPECT_TRUE(scx::check_countdegrees(x, {0, 1, 3}).pass);
}

TEST(Fp, HoldsOnRandomComplexes) {
  for (int t = 0; t < 40; ++t) {
    const Complex x = random_small(43, t);
    const int d = *x.max_missing_dim();
    for (int k = d; k <= x.dimension(); ++k) EXPECT_TRUE(scx::check_fp(x, k).pass);
  }
  EXPECT_THROW(scx::check_fp(scx::builtins::affine_plane_complex(), 1), scx::InputError);
}

TEST(Fp, VacuousAboveDimension) {
  const auto r = scx::check_fp(scx::builtins::hollow_triangle(), 2);
  EXPECT_TRUE(r.vacuous);
  EXPECT_TRUE(r.pass);
}

TEST(CorollaryFp, AffinePlaneSitsOnTheBoundary) {
  const auto r = scx::check_corollary_fp(scx::builtins::affine_plane_complex(), 2);
  EXPECT_FALSE(r.applicable);
  EXPECT_NEAR(r.lhs, 6.0, 1e-9);
  EXPECT_NEAR(r.rhs, 6.0, 1e-12);
}

TEST(CorollaryFp, FourCycleApplies) {
  // Clique complex of C4: μ_0 = 2 > 0, so β_0 must vanish.
  const Complex c4 = scx::builtins::complete_multipartite_clique_complex(2, 2);
  const auto r = scx::check_corollary_fp(c4, 0);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.lhs, 2.0, 1e-9);
  EXPECT_FALSE(scx::check_corollary_fp(c4, 1).applicable);
}

TEST(YiIdentity, ExactOnRandomComplexes) {
  for (int t = 0; t < 30; ++t) {
    const Complex x = random_small(47, t);
    for (int i : x.missing_dims()) EXPECT_TRUE(scx::check_yi_identity(x, i).pass) << t;
  }
}

TEST(Intersection, SingleComplexIsEquality) {
  const std::vector<Complex> one{scx::builtins::affine_plane_complex()};
  const auto r = scx::check_intersection_eigen(one, 1);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.margin, 0.0, 1e-9);
}

TEST(MuLowerBound, AndEigenhom) {
  const Complex x = scx::builtins::affine_plane_complex();
  for (int k = 0; k <= 2; ++k) EXPECT_TRUE(scx::check_mu_lower_bound(x, k).pass);
  const auto e = scx::check_eigenhom2(x);
  EXPECT_TRUE(e.pass);
  EXPECT_NEAR(e.lhs, 9.0, 1e-9);  // C(3,2)·3 = n: tight
}

TEST(PlusLapNorm, RandomCochains) {
  for (int t = 0; t < 30; ++t) {
    auto rng = scx::trial_rng(53, t);
    const Complex x = scx::random_complex(rng, {});
    for (int i : x.missing_dims()) {
      const Complex y = scx::derived_yi(x, i);
      const auto phi = scx::random_cochain(rng, static_cast<int>(scx::binomial(x.num_vertices(), i)));
      EXPECT_TRUE(scx::check_pluslapnorm(y, i, phi).pass);
    }
  }
}

TEST(PlusLapNorm, RejectsIncompleteSkeleton) {
  const std::vector<double> phi(3, 1.0);
  EXPECT_THROW(scx::check_pluslapnorm(Complex::from_missing_faces(3, std::vector<std::vector<int>>{{0, 1}}), 2, phi),
               scx::InputError);
}

TEST(Multiplier, BettiInvariance) {
  for (int t = 0; t < 20; ++t) {
    auto rng = scx::trial_rng(59, t);
    const Complex x = scx::random_complex(rng, {.n_max = 6});
    const auto a = scx::random_multiplier(rng, x.num_vertices(), 2);
    EXPECT_TRUE(scx::check_multiplier_betti(x, a).pass);
  }
}
