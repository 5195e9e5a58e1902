#include "scx/random.hpp"

#include <algorithm>

#include "scx/error.hpp"

namespace scx {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

VertexSet random_subset_of_size(std::mt19937_64& rng, int n, int k) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  VertexSet out;
  for (int i = 0; i < k; ++i) {
    const int j = draw_int(rng, i, n - 1);
    std::swap(pool[i], pool[j]);
    out = out.with(pool[i]);
  }
  return out;
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(trial + 1)));
}

int draw_int(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

bool draw_chance(std::mt19937_64& rng, int num, int den) { return static_cast<int>(rng() % den) < num; }

double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

Complex random_complex(std::mt19937_64& rng, const RandomComplexOptions& options) {
  const int n = options.n_fixed > 0 ? options.n_fixed : draw_int(rng, 4, std::max(4, options.n_max));
  const int d = draw_int(rng, 1, std::max(1, std::min(options.d_max, n - 1)));
  const VertexSet ground = VertexSet::first(n);
  std::vector<VertexSet> candidates;
  for (VertexSet s : subsets_of_size(ground, d + 1))
    if (draw_chance(rng, 1, 2)) candidates.push_back(s);
  if (options.mixed && draw_chance(rng, 1, 4)) {
    for (int size = 2; size <= d; ++size)
      for (VertexSet s : subsets_of_size(ground, size))
        if (draw_chance(rng, 1, 4)) candidates.push_back(s);
  }
  std::vector<VertexSet> missing = minimal_elements(candidates);
  if (missing.empty()) missing.push_back(random_subset_of_size(rng, n, d + 1));
  return Complex::from_missing_faces(n, missing);
}

VectorRepresentation random_representation(std::mt19937_64& rng, const Complex& x) {
  const int n = x.num_vertices();
  VectorRepresentation p;
  p.num_vertices = n;
  for (VertexSet sigma : representation_index_sets(x)) {
    const int width = draw_int(rng, 1, 3);
    RationalMatrix m(n, width);
    for (int v = 0; v < n; ++v)
      for (int c = 0; c < width; ++c) m.set(v, c, Rational(draw_int(rng, 0, 4), 2));
    p.blocks.push_back({sigma, std::move(m)});
  }
  // Repair: one extra column per block, 1 on every vertex of a deficient pair.
  for (auto& b : p.blocks) {
    VertexSet deficient;
    for (VertexSet mu : x.missing_faces()) {
      if (mu.size() != b.sigma.size() + 2 || !b.sigma.subset_of(mu)) continue;
      const auto pair = (mu - b.sigma).to_vector();
      Rational s = 0;
      for (int c = 0; c < b.matrix.cols(); ++c) s += b.matrix(pair[0], c) * b.matrix(pair[1], c);
      if (s < 1) deficient = deficient.with(pair[0]).with(pair[1]);
    }
    if (deficient.empty()) continue;
    RationalMatrix wider(n, b.matrix.cols() + 1);
    for (int v = 0; v < n; ++v) {
      for (int c = 0; c < b.matrix.cols(); ++c) wider.set(v, c, b.matrix(v, c));
      wider.set(v, b.matrix.cols(), deficient.contains(v) ? 1 : 0);
    }
    b.matrix = std::move(wider);
  }
  return p;
}

Matroid random_linear_matroid(std::mt19937_64& rng, int p, int n_min, int n_max, int rank_max) {
  const int n = draw_int(rng, n_min, n_max);
  if (n_min < 2) throw InputError("random_linear_matroid: need n_min >= 2");
  const int rank = draw_int(rng, 2, std::max(2, std::min(rank_max, n)));
  // Redraw until the columns span F_p^rank.
  for (;;) {
    std::vector<std::vector<int>> cols;
    for (int v = 0; v < n; ++v) {
      std::vector<int> c(rank, 0);
      while (std::all_of(c.begin(), c.end(), [](int e) { return e == 0; }))
        for (int& e : c) e = draw_int(rng, 0, p - 1);
      cols.push_back(std::move(c));
    }
    Matroid m = Matroid::linear(p, std::move(cols));
    if (m.full_rank() == rank) return m;
  }
}

Partition random_partition(std::mt19937_64& rng, VertexSet ground, int m) {
  std::vector<int> verts = ground.to_vector();
  if (m < 1 || m > static_cast<int>(verts.size())) throw InputError("random_partition: bad class count");
  for (int i = static_cast<int>(verts.size()) - 1; i > 0; --i) std::swap(verts[i], verts[draw_int(rng, 0, i)]);
  std::vector<VertexSet> classes(m);
  for (int i = 0; i < m; ++i) classes[i] = classes[i].with(verts[i]);
  for (std::size_t i = m; i < verts.size(); ++i) {
    if (draw_chance(rng, 1, 4)) continue;
    const int c = draw_int(rng, 0, m - 1);
    classes[c] = classes[c].with(verts[i]);
  }
  return Partition(std::move(classes));
}

std::vector<int> random_multiplier(std::mt19937_64& rng, int n, int a_max) {
  std::vector<int> a(n);
  for (int& x : a) x = draw_int(rng, 1, a_max);
  return a;
}

std::vector<double> random_cochain(std::mt19937_64& rng, int size) {
  std::vector<double> phi(size);
  for (double& x : phi) x = draw_unit(rng);
  return phi;
}

}  // namespace scx
