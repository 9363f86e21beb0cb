#include <bit>
#include <vector>

#include "orthocircles/graph.hpp"

namespace orthocircles {

int SmallGraph::pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  // pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

bool SmallGraph::has_edge(int i, int j) const {
  return i != j && ((mask >> pair_index(n, i, j)) & 1u) != 0;
}

int SmallGraph::edge_count() const { return std::popcount(mask); }

std::vector<int> SmallGraph::degrees() const {
  std::vector<int> deg(std::size_t(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (has_edge(i, j)) {
        ++deg[std::size_t(i)];
        ++deg[std::size_t(j)];
      }
  return deg;
}

namespace {

// Edge masks of every triangle and every 4-cycle on n labelled vertices.
struct Patterns {
  std::vector<std::uint32_t> triangles;
  // Each 4-subset contributes its pair mask plus the three 4-cycles on it.
  struct Quad {
    std::uint32_t all;
    std::uint32_t cycles[3];
  };
  std::vector<Quad> quads;

  explicit Patterns(int n) {
    auto bit = [n](int i, int j) { return std::uint32_t(1) << SmallGraph::pair_index(n, i, j); };
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) {
          triangles.push_back(bit(a, b) | bit(b, c) | bit(a, c));
          for (int d = c + 1; d < n; ++d) {
            Quad q{};
            q.all = bit(a, b) | bit(a, c) | bit(a, d) | bit(b, c) | bit(b, d) | bit(c, d);
            q.cycles[0] = bit(a, b) | bit(b, c) | bit(c, d) | bit(a, d);
            q.cycles[1] = bit(a, b) | bit(b, d) | bit(c, d) | bit(a, c);
            q.cycles[2] = bit(a, c) | bit(b, c) | bit(b, d) | bit(a, d);
            quads.push_back(q);
          }
        }
  }

  bool c3(std::uint32_t m) const {
    for (auto t : triangles)
      if ((m & t) == t) return true;
    return false;
  }
  bool c4(std::uint32_t m) const {
    for (const auto& q : quads) {
      const std::uint32_t sub = m & q.all;
      if (sub == q.cycles[0] || sub == q.cycles[1] || sub == q.cycles[2]) return true;
    }
    return false;
  }
};

}  // namespace

bool has_induced_c3(const SmallGraph& g) { return Patterns(g.n).c3(g.mask); }
bool has_induced_c4(const SmallGraph& g) { return Patterns(g.n).c4(g.mask); }

MaxEdgesResult max_edges_c3c4_free(int n) {
  if (n < 1 || n > 7) throw DomainError("max_edges_c3c4_free: n must be in [1, 7]");
  const Patterns patterns(n);
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t(1) << pairs;

  MaxEdgesResult result;
  result.witness.n = n;
  for (std::uint64_t raw = 0; raw < total; ++raw) {
    const auto mask = std::uint32_t(raw);
    ++result.graphs_examined;
    const int edges = std::popcount(mask);
    if (edges <= result.max_edges && raw != 0) continue;
    if (patterns.c3(mask) || patterns.c4(mask)) continue;
    result.max_edges = edges;
    result.witness.mask = mask;
  }
  return result;
}

}  // namespace orthocircles
