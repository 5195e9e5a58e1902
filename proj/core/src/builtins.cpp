#include "scx/builtins.hpp"

#include <algorithm>
#include <map>

#include "scx/error.hpp"

namespace scx::builtins {

namespace {

constexpr int kP = 3;

int mod3(int x) { return ((x % kP) + kP) % kP; }

std::array<int, 4> normalise(std::array<int, 4> v) {
  for (int c : v) {
    if (c != 0) {
      const int inv = (c == 1) ? 1 : 2;  // inverses mod 3
      for (int& e : v) e = mod3(e * inv);
      break;
    }
  }
  return v;
}

}  // namespace

std::vector<std::array<int, 3>> affine_plane_points() {
  std::vector<std::array<int, 3>> pts;
  for (int x = 0; x < kP; ++x) {
    for (int y = 0; y < kP; ++y) pts.push_back({x, y, 1});
  }
  return pts;
}

std::vector<std::array<int, 4>> projective_space_points() {
  std::vector<std::array<int, 4>> pts;
  for (int a = 0; a < kP; ++a)
    for (int b = 0; b < kP; ++b)
      for (int c = 0; c < kP; ++c)
        for (int d = 0; d < kP; ++d) {
          std::array<int, 4> v{a, b, c, d};
          if (v == std::array<int, 4>{0, 0, 0, 0}) continue;
          if (normalise(v) == v) pts.push_back(v);
        }
  return pts;  // already lexicographic
}

std::vector<VertexSet> affine_plane_lines() {
  const auto pts = affine_plane_points();
  std::vector<VertexSet> lines;
  for (int i = 0; i < 9; ++i)
    for (int j = i + 1; j < 9; ++j)
      for (int k = j + 1; k < 9; ++k) {
        const auto& p = pts[i];
        const auto& q = pts[j];
        const auto& r = pts[k];
        const int det = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
        if (mod3(det) == 0) lines.push_back(VertexSet{i, j, k});
      }
  return lines;
}

std::vector<VertexSet> projective_space_lines() {
  const auto pts = projective_space_points();
  std::map<std::array<int, 4>, int> index;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) index[pts[i]] = i;
  std::vector<VertexSet> lines;
  for (int i = 0; i < 40; ++i)
    for (int j = i + 1; j < 40; ++j) {
      VertexSet line{i, j};
      for (int t = 1; t < kP; ++t) {
        std::array<int, 4> v{};
        for (int c = 0; c < 4; ++c) v[c] = mod3(pts[i][c] + t * pts[j][c]);
        line = line.with(index.at(normalise(v)));
      }
      if (line.min() == i && (line - VertexSet::singleton(i)).min() == j) lines.push_back(line);
    }
  std::sort(lines.begin(), lines.end(), lex_less);
  return lines;
}

Complex affine_plane_complex() {
  return Complex::from_missing_faces(9, affine_plane_lines());
}

Complex projective_space_complex() {
  std::vector<VertexSet> missing;
  for (VertexSet line : projective_space_lines()) {
    for (VertexSet triple : subsets_of_size(line, 3)) missing.push_back(triple);
  }
  return Complex::from_missing_faces(40, missing);
}

Complex complete_multipartite_clique_complex(int r, int l) {
  if (r < 1 || l < 1 || r * l > Complex::kMaxVertices) {
    throw InputError("complete multipartite complex needs r, l >= 1 and r*l <= 64");
  }
  std::vector<VertexSet> missing;
  for (int part = 0; part < r; ++part) {
    for (int a = 0; a < l; ++a)
      for (int b = a + 1; b < l; ++b) missing.push_back(VertexSet{part * l + a, part * l + b});
  }
  return Complex::from_missing_faces(r * l, missing);
}

Complex hollow_triangle() {
  return Complex::from_facets(3, std::vector<std::vector<int>>{{0, 1}, {1, 2}, {0, 2}});
}

}  // namespace scx::builtins
