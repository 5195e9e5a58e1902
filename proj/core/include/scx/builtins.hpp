#pragma once

#include <array>
#include <vector>

#include "scx/complex.hpp"

namespace scx::builtins {

/// Points of the affine plane over F_3 as columns (x, y, 1), ordered
/// lexicographically by (x, y). Vertex i of every AG(2,3) object is points[i].
std::vector<std::array<int, 3>> affine_plane_points();

/// The 40 points of the projective space of dimension 3 over F_3,
/// normalised so the first nonzero coordinate is 1, in lexicographic order.
std::vector<std::array<int, 4>> projective_space_points();

/// The 12 lines of AG(2,3), each a 3-point vertex set.
std::vector<VertexSet> affine_plane_lines();

/// The 130 lines of PG(3,3), each a 4-point vertex set.
std::vector<VertexSet> projective_space_lines();

/// 9 vertices, missing faces = the lines of AG(2,3).
Complex affine_plane_complex();

/// 40 vertices, missing faces = the 3-subsets of the lines of PG(3,3).
Complex projective_space_complex();

/// Clique complex of the complete r-partite graph with parts of size l.
/// Part j consists of vertices j*l .. j*l + l - 1.
Complex complete_multipartite_clique_complex(int r, int l);

/// Boundary of the 2-simplex.
Complex hollow_triangle();

}  // namespace scx::builtins
