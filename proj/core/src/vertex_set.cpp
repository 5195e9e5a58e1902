#include "scx/vertex_set.hpp"

#include <algorithm>
#include <sstream>

#include "scx/error.hpp"

namespace scx {

VertexSet::VertexSet(std::initializer_list<int> vertices)
    : VertexSet(from_vertices(std::span<const int>(vertices.begin(), vertices.size()))) {}

VertexSet VertexSet::from_vertices(std::span<const int> vertices) {
  std::uint64_t bits = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kCapacity) {
      throw InputError("vertex " + std::to_string(v) + " outside 0..63");
    }
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (bits & bit) {
      throw InputError("duplicate vertex " + std::to_string(v));
    }
    bits |= bit;
  }
  return VertexSet(bits);
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : *this) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

bool lex_less(VertexSet a, VertexSet b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

bool size_lex_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

namespace {

void collect_subsets(const std::vector<int>& ground, std::size_t start, int remaining,
                     VertexSet current, std::vector<VertexSet>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i + remaining <= ground.size(); ++i) {
    collect_subsets(ground, i + 1, remaining - 1, current.with(ground[i]), out);
  }
}

}  // namespace

std::vector<VertexSet> subsets_of_size(VertexSet ground, int k) {
  std::vector<VertexSet> out;
  if (k < 0 || k > ground.size()) return out;
  collect_subsets(ground.to_vector(), 0, k, VertexSet{}, out);
  return out;
}

std::vector<VertexSet> minimal_elements(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), size_lex_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [s](VertexSet k) { return k.subset_of(s); });
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

}  // namespace scx
