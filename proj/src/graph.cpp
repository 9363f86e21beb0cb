#include "orthocircles/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace orthocircles {

IntersectionGraph::IntersectionGraph(std::vector<std::string> ids, std::vector<Point> positions,
                                     std::vector<Edge> edges)
    : ids_(std::move(ids)), positions_(std::move(positions)), edges_(std::move(edges)) {
  if (positions_.size() != ids_.size()) throw DomainError("graph: one position per vertex required");
  adjacency_.resize(ids_.size());
  for (auto& e : edges_) {
    if (e.first == e.second) throw DomainError("graph: loops are not allowed");
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || std::size_t(e.second) >= ids_.size()) throw DomainError("graph: edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [u, v] : edges_) {
    adjacency_[std::size_t(u)].push_back(v);
    adjacency_[std::size_t(v)].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool IntersectionGraph::adjacent(int u, int v) const {
  const auto& nb = adjacency_[std::size_t(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

IntersectionGraph IntersectionGraph::induced(const std::vector<int>& vertices) const {
  std::vector<int> local(ids_.size(), -1);
  std::vector<std::string> ids;
  std::vector<Point> pos;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    local[std::size_t(vertices[k])] = int(k);
    ids.push_back(ids_[std::size_t(vertices[k])]);
    pos.push_back(positions_[std::size_t(vertices[k])]);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : edges_)
    if (local[std::size_t(u)] >= 0 && local[std::size_t(v)] >= 0)
      edges.emplace_back(local[std::size_t(u)], local[std::size_t(v)]);
  return IntersectionGraph(std::move(ids), std::move(pos), std::move(edges));
}

IntersectionGraph build_graph(const Arrangement& arr) {
  std::vector<std::string> ids;
  std::vector<Point> pos;
  for (const auto& c : arr.circles()) {
    ids.push_back(c.id);
    pos.push_back(c.center);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    for (std::size_t j = i + 1; j < arr.size(); ++j) {
      const auto rel = relation(arr[i], arr[j], arr.tolerance());
      if (rel.kind == RelationKind::Tangent)
        throw TangencyError("circles '" + arr[i].id + "' and '" + arr[j].id + "' are tangent");
      if (rel.crossing()) edges.emplace_back(int(i), int(j));
    }
  }
  return IntersectionGraph(std::move(ids), std::move(pos), std::move(edges));
}

std::vector<int> degree_sequence(const IntersectionGraph& g) {
  std::vector<int> deg(g.vertex_count());
  for (std::size_t v = 0; v < deg.size(); ++v) deg[v] = g.degree(int(v));
  std::sort(deg.begin(), deg.end());
  return deg;
}

namespace {

int orientation(const Point& a, const Point& b, const Point& c, double eps) {
  const Point ab = b - a;
  const Point ac = c - a;
  const double o = cross2<double>(ab, ac);
  if (std::abs(o) <= eps * ab.norm() * ac.norm()) return 0;
  return o > 0 ? 1 : -1;
}

// p collinear with ab: does it lie strictly between a and b?
bool in_open_segment(const Point& p, const Point& a, const Point& b, double eps) {
  const Point ab = b - a;
  const double t = (p - a).dot(ab) / ab.squaredNorm();
  return t > eps && t < 1.0 - eps;
}

std::optional<SegmentCrossing> segment_crossing(const Point& a, const Point& b, const Point& c,
                                                const Point& d, double eps) {
  const int o1 = orientation(a, b, c, eps);
  const int o2 = orientation(a, b, d, eps);
  const int o3 = orientation(c, d, a, eps);
  const int o4 = orientation(c, d, b, eps);
  SegmentCrossing hit;
  if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
    if (o1 == o2 || o3 == o4) return std::nullopt;
    const Point r = b - a;
    const Point s = d - c;
    const double t = cross2<double>(c - a, s) / cross2<double>(r, s);
    hit.point = a + t * r;
    return hit;
  }
  hit.degenerate = true;
  if (o1 == 0 && in_open_segment(c, a, b, eps)) { hit.point = c; return hit; }
  if (o2 == 0 && in_open_segment(d, a, b, eps)) { hit.point = d; return hit; }
  if (o3 == 0 && in_open_segment(a, c, d, eps)) { hit.point = a; return hit; }
  if (o4 == 0 && in_open_segment(b, c, d, eps)) { hit.point = b; return hit; }
  return std::nullopt;
}

bool boxes_overlap(const Point& a, const Point& b, const Point& c, const Point& d) {
  return std::max(a.x(), b.x()) >= std::min(c.x(), d.x()) && std::max(c.x(), d.x()) >= std::min(a.x(), b.x()) &&
         std::max(a.y(), b.y()) >= std::min(c.y(), d.y()) && std::max(c.y(), d.y()) >= std::min(a.y(), b.y());
}

}  // namespace

CrossingReport crossing_pairs(const IntersectionGraph& g, const Tolerance& tol) {
  CrossingReport report;
  const auto& pos = g.positions();
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      const Point &pa = pos[std::size_t(a)], &pb = pos[std::size_t(b)];
      const Point &pc = pos[std::size_t(c)], &pd = pos[std::size_t(d)];
      if (!boxes_overlap(pa, pb, pc, pd)) continue;
      if (auto hit = segment_crossing(pa, pb, pc, pd, tol.rel_eps)) {
        hit->first = edges[i];
        hit->second = edges[j];
        report.crossing_pairs.push_back(*hit);
      }
    }
  }
  report.count = report.crossing_pairs.size();
  return report;
}

namespace {

bool lex_less(const Point& a, const Point& b) {
  return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
}

// Closed boundary walk of the unbounded face of one connected component.
std::vector<int> component_outer_walk(const IntersectionGraph& g, const std::vector<int>& component) {
  const auto& pos = g.positions();
  int start = component.front();
  for (int v : component) {
    const Point& p = pos[std::size_t(v)];
    const Point& q = pos[std::size_t(start)];
    if (p.y() < q.y() || (p.y() == q.y() && p.x() < q.x())) start = v;
  }
  if (g.degree(start) == 0) return {start};

  auto angle = [&](int from, int to) {
    const Point d = pos[std::size_t(to)] - pos[std::size_t(from)];
    return std::atan2(d.y(), d.x());
  };
  // Neighbors of every vertex in counterclockwise order.
  std::vector<std::vector<int>> rotation(g.vertex_count());
  for (int v : component) {
    auto nb = g.neighbors(v);
    std::sort(nb.begin(), nb.end(), [&](int a, int b) { return angle(v, a) < angle(v, b); });
    rotation[std::size_t(v)] = std::move(nb);
  }

  // From the lowest vertex every edge points into the upper half plane; the
  // steepest one has the unbounded face on its left.
  const auto& first_rot = rotation[std::size_t(start)];
  int first_to = *std::max_element(first_rot.begin(), first_rot.end(),
                                   [&](int a, int b) { return angle(start, a) < angle(start, b); });

  std::vector<int> walk;
  int from = start;
  int to = first_to;
  const std::size_t limit = 2 * g.edge_count() + 2;
  do {
    walk.push_back(from);
    const auto& rot = rotation[std::size_t(to)];
    const auto it = std::find(rot.begin(), rot.end(), from);
    const std::size_t k = std::size_t(it - rot.begin());
    const int next = rot[(k + rot.size() - 1) % rot.size()];
    from = to;
    to = next;
  } while (!(from == start && to == first_to) && walk.size() <= limit);

  // The trace keeps the unbounded face on its left, i.e. runs clockwise.
  std::reverse(walk.begin(), walk.end());
  auto smallest = std::min_element(walk.begin(), walk.end(),
                                    [&](int a, int b) { return lex_less(pos[std::size_t(a)], pos[std::size_t(b)]); });
  std::rotate(walk.begin(), smallest, walk.end());
  return walk;
}

bool strictly_inside_walk(const Point& p, const std::vector<int>& walk, const std::vector<Point>& pos) {
  if (walk.size() < 3) return false;
  bool inside = false;
  for (std::size_t i = 0, j = walk.size() - 1; i < walk.size(); j = i++) {
    const Point& a = pos[std::size_t(walk[i])];
    const Point& b = pos[std::size_t(walk[j])];
    if ((a.y() > p.y()) != (b.y() > p.y())) {
      const double x = a.x() + (p.y() - a.y()) * (b.x() - a.x()) / (b.y() - a.y());
      if (p.x() < x) inside = !inside;
    }
  }
  return inside;
}

std::vector<std::vector<int>> components(const IntersectionGraph& g) {
  std::vector<int> label(g.vertex_count(), -1);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> comp{int(s)};
    label[s] = int(out.size());
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int w : g.neighbors(comp[k]))
        if (label[std::size_t(w)] < 0) {
          label[std::size_t(w)] = int(out.size());
          comp.push_back(w);
        }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::vector<int> outer_face(const IntersectionGraph& g, const Tolerance& tol) {
  if (g.vertex_count() == 0) return {};
  const auto crossings = crossing_pairs(g, tol);
  if (crossings.count > 0)
    throw NotPlaneError("drawing has " + std::to_string(crossings.count) + " edge crossings");

  const auto& pos = g.positions();
  std::vector<std::vector<int>> walks;
  for (const auto& comp : components(g)) walks.push_back(component_outer_walk(g, comp));

  std::vector<std::vector<int>> exposed;
  for (std::size_t i = 0; i < walks.size(); ++i) {
    bool enclosed = false;
    for (std::size_t j = 0; j < walks.size() && !enclosed; ++j)
      enclosed = i != j && strictly_inside_walk(pos[std::size_t(walks[i].front())], walks[j], pos);
    if (!enclosed) exposed.push_back(walks[i]);
  }
  std::sort(exposed.begin(), exposed.end(), [&](const auto& a, const auto& b) {
    return lex_less(pos[std::size_t(a.front())], pos[std::size_t(b.front())]);
  });
  std::vector<int> out;
  for (const auto& w : exposed) out.insert(out.end(), w.begin(), w.end());
  return out;
}

std::vector<int> outer_face_vertices(const IntersectionGraph& g, const Tolerance& tol) {
  std::vector<int> walk = outer_face(g, tol);
  std::vector<int> seen;
  for (int v : walk)
    if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
  return seen;
}

std::optional<ForbiddenWitness> find_forbidden(const IntersectionGraph& g) {
  const int n = int(g.vertex_count());
  std::vector<std::uint8_t> adj(std::size_t(n) * std::size_t(n), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[std::size_t(u) * std::size_t(n) + std::size_t(v)] = 1;
    adj[std::size_t(v) * std::size_t(n) + std::size_t(u)] = 1;
  }
  auto A = [&](int u, int v) { return int(adj[std::size_t(u) * std::size_t(n) + std::size_t(v)]); };

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const int e_ab = A(a, b);
      for (int c = b + 1; c < n; ++c) {
        const int e_abc = e_ab + A(a, c) + A(b, c);
        if (e_abc == 0) continue;  // three missing pairs leave at most 3 edges
        for (int d = c + 1; d < n; ++d) {
          const int da = A(a, d), db = A(b, d), dc = A(c, d);
          const int edges = e_abc + da + db + dc;
          if (edges == 6) return ForbiddenWitness{ForbiddenKind::K4, {a, b, c, d}};
          if (edges != 4) continue;
          const int deg_a = A(a, b) + A(a, c) + da;
          const int deg_b = A(a, b) + A(b, c) + db;
          const int deg_c = A(a, c) + A(b, c) + dc;
          if (deg_a == 2 && deg_b == 2 && deg_c == 2)
            return ForbiddenWitness{ForbiddenKind::InducedC4, {a, b, c, d}};
        }
      }
    }
  return std::nullopt;
}

bool BoundReport::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const BoundEntry& e) { return !e.applicable || e.pass; });
}

BoundReport check_bounds(const Arrangement& arr) {
  BoundReport report;
  const auto g = build_graph(arr);
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.orthogonal = validate(arr, ValidationMode::Orthogonal).ok;
  report.acute = validate(arr, ValidationMode::Acute).ok;
  report.nonnested = is_nonnested(arr);

  const double n = double(report.n);
  const double m = double(report.m);
  auto entry = [&](std::string name, bool applicable, double bound) {
    BoundEntry e;
    e.name = std::move(name);
    e.applicable = applicable;
    e.bound = bound;
    e.slack = bound - m;
    e.pass = !applicable || m <= bound;
    report.entries.push_back(e);
  };
  entry("general_orthogonal", report.orthogonal, (4.0 + 5.0 / 11.0) * n);
  entry("nonnested_orthogonal", report.orthogonal && report.nonnested && report.n >= 5, 3.0 * n - 8.0);
  entry("acute_nonnested", report.acute && report.nonnested && report.n >= 3, 3.0 * n - 6.0);
  return report;
}

}  // namespace orthocircles
