#include <gtest/gtest.h>

#include "scx/builtins.hpp"
#include "scx/error.hpp"
#include "scx/io.hpp"
#include "scx/random.hpp"

using scx::Complex;
using scx::Rational;
using scx::VertexSet;

TEST(Io, ComplexFromFacetsAndMissingFaces) {
  const Complex a = scx::parse_complex(R"({"n": 3, "facets": [[0, 1], [1, 2], [0, 2]]})");
  const Complex b = scx::parse_complex(R"({"n": 3, "missing_faces": [[0, 1, 2]]})");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, scx::builtins::hollow_triangle());
}

TEST(Io, ComplexRoundTrip) {
  for (int t = 0; t < 20; ++t) {
    auto rng = scx::trial_rng(109, t);
    const Complex x = scx::random_complex(rng, {});
    EXPECT_EQ(scx::parse_complex(scx::complex_to_json(x)), x);
  }
}

TEST(Io, ComplexErrors) {
  EXPECT_THROW(scx::parse_complex("{"), scx::ParseError);
  EXPECT_THROW(scx::parse_complex(R"({"facets": [[0]]})"), scx::ParseError);
  EXPECT_THROW(scx::parse_complex(R"({"n": 2})"), scx::ParseError);
  EXPECT_THROW(scx::parse_complex(R"({"n": 2, "facets": [[0]], "missing_faces": [[1]]})"), scx::ParseError);
  EXPECT_THROW(scx::parse_complex(R"({"n": 2, "facets": [[0, 5]]})"), scx::ParseError);
  EXPECT_THROW(scx::parse_complex(R"({"n": 2, "facets": [[0, "a"]]})"), scx::ParseError);
  EXPECT_THROW(scx::parse_complex(R"({"n": 3, "missing_faces": [[0, 1], [0, 1, 2]]})"), scx::ParseError);
}

TEST(Io, RepresentationRoundTrip) {
  for (int t = 0; t < 10; ++t) {
    auto rng = scx::trial_rng(113, t);
    const Complex x = scx::random_complex(rng, {});
    const auto p = scx::random_representation(rng, x);
    const auto q = scx::parse_representation(scx::representation_to_json(p), x.num_vertices());
    ASSERT_EQ(q.blocks.size(), p.blocks.size());
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
      EXPECT_EQ(q.blocks[i].sigma, p.blocks[i].sigma);
      EXPECT_EQ(q.blocks[i].matrix, p.blocks[i].matrix);
    }
  }
}

TEST(Io, RepresentationEntries) {
  const auto p = scx::parse_representation(R"({"sets": [{"sigma": [], "matrix": [["1/2", 1], [2, "3/4"]]}]})", 2);
  ASSERT_EQ(p.blocks.size(), 1u);
  EXPECT_EQ(p.blocks[0].matrix(0, 0), Rational(1, 2));
  EXPECT_EQ(p.blocks[0].matrix(1, 1), Rational(3, 4));
  EXPECT_THROW(scx::parse_representation(R"({"sets": [{"sigma": [], "matrix": [[1]]}]})", 2), scx::ParseError);
  EXPECT_THROW(scx::parse_representation(R"({"sets": [{"sigma": [], "matrix": [[1], [1, 2]]}]})", 2),
               scx::ParseError);
  EXPECT_THROW(scx::parse_representation(R"({"sets": [{"sigma": [], "matrix": [["x"], [1]]}]})", 2),
               scx::ParseError);
}

TEST(Io, Matroids) {
  const auto lin = scx::parse_matroid(R"({"kind": "linear", "p": 3, "columns": [[1, 0], [0, 1], [1, 1]]})");
  EXPECT_EQ(lin.size(), 3);
  EXPECT_EQ(lin.full_rank(), 2);
  EXPECT_EQ(scx::parse_matroid(R"({"kind": "uniform", "rank": 2, "n": 5})").size(), 5);
  EXPECT_EQ(scx::parse_matroid(R"({"kind": "builtin", "name": "AG23"})").size(), 9);
  EXPECT_THROW(scx::parse_matroid(R"({"kind": "builtin", "name": "Fano"})"), scx::ParseError);
  EXPECT_THROW(scx::parse_matroid(R"({"kind": "graphic"})"), scx::ParseError);
  EXPECT_THROW(scx::parse_matroid(R"({"kind": "linear", "p": 4, "columns": [[1]]})"), scx::ParseError);
  EXPECT_EQ(scx::resolve_matroid("uniform:3,7").full_rank(), 3);
  EXPECT_EQ(scx::resolve_matroid("builtin:PG33").size(), 40);
  EXPECT_THROW(scx::resolve_matroid("builtin:nope"), scx::ParseError);
}

TEST(Io, PartitionsAndSubsets) {
  const auto p = scx::parse_partition(R"({"classes": [[0, 1], [2]]})");
  EXPECT_EQ(p.size(), 2);
  EXPECT_THROW(scx::parse_partition(R"({"classes": [[0, 1], [1]]})"), scx::ParseError);
  EXPECT_THROW(scx::parse_partition(R"({"classes": [[]]})"), scx::ParseError);
  EXPECT_EQ(scx::resolve_partition("3-parallel-lines").classes()[2], (VertexSet{6, 7, 8}));
  EXPECT_EQ(scx::resolve_subset("all", VertexSet::first(5)), VertexSet::first(5));
}

TEST(Io, BuiltinComplexes) {
  EXPECT_EQ(scx::resolve_complex("builtin:ag23"), scx::builtins::affine_plane_complex());
  EXPECT_EQ(scx::resolve_complex("builtin:rpartite:3,2"), scx::builtins::complete_multipartite_clique_complex(3, 2));
  EXPECT_EQ(scx::resolve_complex("builtin:simplex:4"), Complex::simplex(4));
  EXPECT_THROW(scx::resolve_complex("builtin:rpartite:3"), scx::ParseError);
  EXPECT_THROW(scx::resolve_complex("builtin:rpartite:3,x"), scx::ParseError);
  EXPECT_THROW(scx::resolve_complex("builtin:torus"), scx::ParseError);
  EXPECT_THROW(scx::resolve_complex("/nonexistent/complex.json"), scx::InputError);
}
