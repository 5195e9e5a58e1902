#pragma once

#include <string>
#include <string_view>

#include "scx/complex.hpp"
#include "scx/domination.hpp"
#include "scx/matroid.hpp"

namespace scx {

/// {"n": int, "facets": [[int,...],...]} or {"n": int, "missing_faces": [...]},
/// exactly one of the two face keys. Throws ParseError.
Complex parse_complex(std::string_view json);

/// {"sets": [{"sigma": [int,...], "matrix": [["p/q",...],...]},...]} with
/// one matrix row per vertex; integer entries are also accepted.
VectorRepresentation parse_representation(std::string_view json, int num_vertices);

/// {"kind":"linear","p":3,"columns":[[int,...],...]} |
/// {"kind":"uniform","rank":int,"n":int} | {"kind":"builtin","name":"AG23"|"PG33"}.
Matroid parse_matroid(std::string_view json);

/// {"classes": [[int,...],...]}.
Partition parse_partition(std::string_view json);

std::string complex_to_json(const Complex& x);
std::string representation_to_json(const VectorRepresentation& p);

/// Whole file contents. Throws InputError when unreadable.
std::string read_file(const std::string& path);

/// A complex file path, or builtin:ag23 | builtin:pg33 | builtin:rpartite:R,L |
/// builtin:simplex:N | builtin:hollow-triangle.
Complex resolve_complex(const std::string& spec);

/// A matroid file path, builtin:AG23 | builtin:PG33, or uniform:R,N.
Matroid resolve_matroid(const std::string& spec);

/// A partition file path, or 3-parallel-lines (the lines x = 0, 1, 2 of
/// AG(2,3) as vertex classes).
Partition resolve_partition(const std::string& spec);

/// A subset file path holding {"subset": [int,...]}, or "all".
VertexSet resolve_subset(const std::string& spec, VertexSet ground);

}  // namespace scx
