#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthocircles/arrangement.hpp"

namespace orthocircles {

using Edge = std::pair<int, int>;

/// Intersection graph with its straight-line drawing (vertices at the circle
/// centers). Vertices are indexed in arrangement order; edges satisfy first < second.
class IntersectionGraph {
 public:
  IntersectionGraph() = default;
  IntersectionGraph(std::vector<std::string> ids, std::vector<Point> positions, std::vector<Edge> edges);

  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::vector<Point>& positions() const { return positions_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[std::size_t(v)]; }
  bool adjacent(int u, int v) const;
  int degree(int v) const { return int(adjacency_[std::size_t(v)].size()); }

  /// Subgraph induced by `vertices` (indices into this graph), re-indexed in the given order.
  IntersectionGraph induced(const std::vector<int>& vertices) const;

 private:
  std::vector<std::string> ids_;
  std::vector<Point> positions_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Edges are the crossing pairs. Throws TangencyError on any tangent pair.
IntersectionGraph build_graph(const Arrangement& arr);

std::vector<int> degree_sequence(const IntersectionGraph& g);
inline std::size_t edge_count(const IntersectionGraph& g) { return g.edge_count(); }

struct SegmentCrossing {
  Edge first;
  Edge second;
  Point point;
  /// Collinear or touching configuration rather than a transversal crossing.
  bool degenerate = false;
};

struct CrossingReport {
  std::vector<SegmentCrossing> crossing_pairs;
  std::size_t count = 0;
};

/// All pairs of vertex-disjoint edges whose open segments meet.
CrossingReport crossing_pairs(const IntersectionGraph& g, const Tolerance& tol = {});

/// Boundary walk of the unbounded face, counterclockwise, starting at the
/// lexicographically smallest position. Vertices may repeat where the walk
/// passes a cut vertex. For a disconnected drawing the walks of all
/// components that are not enclosed by another component are concatenated.
/// Throws NotPlaneError if the drawing has crossings.
std::vector<int> outer_face(const IntersectionGraph& g, const Tolerance& tol = {});

/// Distinct vertices of outer_face(g).
std::vector<int> outer_face_vertices(const IntersectionGraph& g, const Tolerance& tol = {});

enum class ForbiddenKind { K4, InducedC4 };

struct ForbiddenWitness {
  ForbiddenKind kind = ForbiddenKind::K4;
  std::array<int, 4> vertices{};
};

/// Exhaustive scan of all 4-subsets for a K4 or an induced 4-cycle.
std::optional<ForbiddenWitness> find_forbidden(const IntersectionGraph& g);

// ---------------------------------------------------------------------------
// exhaustive small-graph oracle

/// Simple graph on n <= 7 vertices; bit k of `mask` is the k-th pair (i, j),
/// i < j, in lexicographic order.
struct SmallGraph {
  int n = 0;
  std::uint32_t mask = 0;

  static int pair_index(int n, int i, int j);
  bool has_edge(int i, int j) const;
  int edge_count() const;
  std::vector<int> degrees() const;
};

bool has_induced_c3(const SmallGraph& g);
bool has_induced_c4(const SmallGraph& g);

struct MaxEdgesResult {
  int max_edges = 0;
  SmallGraph witness;
  std::uint64_t graphs_examined = 0;
};

/// Maximum edge count over all graphs on n vertices with no induced C3 or C4,
/// by enumeration of every labelled graph. The witness is the first maximizer
/// in mask order.
MaxEdgesResult max_edges_c3c4_free(int n);

// ---------------------------------------------------------------------------
// edge bounds

struct BoundEntry {
  std::string name;
  bool applicable = false;
  double bound = 0.0;
  bool pass = true;
  double slack = 0.0;
};

struct BoundReport {
  std::size_t n = 0;
  std::size_t m = 0;
  bool orthogonal = false;
  bool acute = false;
  bool nonnested = false;
  std::vector<BoundEntry> entries;

  bool pass() const;
};

/// Edge count against the general orthogonal bound (4 + 5/11) n, the
/// nonnested orthogonal bound 3n - 8 (n >= 5) and the acute nonnested bound 3n - 6.
BoundReport check_bounds(const Arrangement& arr);

}  // namespace orthocircles
