#include "orthocircles/cells.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace orthocircles {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0 ? a + kTwoPi : a;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[std::size_t(x)] != x) x = parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
    return x;
  }
  void unite(int a, int b) { parent[std::size_t(find(a))] = find(b); }
};

// Green's theorem contribution of a circular arc to the enclosed signed area.
double arc_area(const Circle& c, double start, double sweep) {
  const double end = start + sweep;
  const double cx = c.center.x(), cy = c.center.y(), r = c.radius;
  return 0.5 * (r * (cx * (std::sin(end) - std::sin(start)) - cy * (std::cos(end) - std::cos(start))) +
                r * r * sweep);
}

bool angle_on_arc(double phi, double start, double sweep) {
  const double lo = sweep >= 0 ? start : start + sweep;
  return wrap_angle(phi - lo) <= std::abs(sweep);
}

// Parity of the crossings of a fixed-direction ray from p with the cycle.
bool cycle_encloses(const Point& p, const ArcSubdivision::Cycle& cycle,
                    const std::vector<ArcSubdivision::HalfEdge>& half_edges, const Arrangement& arr) {
  // An irrational-looking direction keeps the ray off arc endpoints in practice.
  const Point dir(std::cos(0.7390851332151607), std::sin(0.7390851332151607));
  int hits = 0;
  for (int h : cycle.half_edges) {
    const auto& he = half_edges[std::size_t(h)];
    const Circle& c = arr[std::size_t(he.circle)];
    const Point w = p - c.center;
    const double b = w.dot(dir);
    const double disc = b * b - (w.squaredNorm() - c.radius * c.radius);
    if (disc <= 0) continue;
    const double root = std::sqrt(disc);
    for (double t : {-b - root, -b + root}) {
      if (t <= 0) continue;
      const Point q = w + t * dir;
      if (angle_on_arc(std::atan2(q.y(), q.x()), he.start_angle, he.sweep)) ++hits;
    }
  }
  return hits % 2 == 1;
}

}  // namespace

ArcSubdivision build_subdivision(const Arrangement& arr) {
  ArcSubdivision sub;
  const std::size_t n = arr.size();
  const double eps = arr.tolerance().rel_eps;

  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto pts = intersect_points(arr[i], arr[j], arr.tolerance());
      if (pts.empty()) continue;
      sets.unite(int(i), int(j));
      for (const auto& p : pts) sub.vertices_.push_back({p, int(i), int(j)});
    }
  }

  // Generic position: no two intersection points may coincide.
  {
    auto& vs = sub.vertices_;
    std::vector<std::size_t> order(vs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vs[a].point.x() < vs[b].point.x(); });
    double rmax = 0;
    for (const auto& c : arr.circles()) rmax = std::max(rmax, c.radius);
    const double reach = 10.0 * eps * rmax;
    auto local_scale = [&](const ArcSubdivision::Vertex& v) {
      return std::max(arr[std::size_t(v.first_circle)].radius, arr[std::size_t(v.second_circle)].radius);
    };
    for (std::size_t a = 0; a < order.size(); ++a) {
      const auto& va = vs[order[a]];
      for (std::size_t b = a + 1; b < order.size(); ++b) {
        const auto& vb = vs[order[b]];
        if (vb.point.x() - va.point.x() > reach) break;
        const double limit = 10.0 * eps * std::max(local_scale(va), local_scale(vb));
        if ((va.point - vb.point).norm() <= limit)
          throw NonGenericError("intersection points of (" + arr[std::size_t(va.first_circle)].id + ", " +
                                arr[std::size_t(va.second_circle)].id + ") and (" +
                                arr[std::size_t(vb.first_circle)].id + ", " +
                                arr[std::size_t(vb.second_circle)].id + ") coincide");
      }
    }
  }

  // Split every circle into arcs.
  std::vector<std::vector<int>> on_circle(n);
  for (std::size_t v = 0; v < sub.vertices_.size(); ++v) {
    on_circle[std::size_t(sub.vertices_[v].first_circle)].push_back(int(v));
    on_circle[std::size_t(sub.vertices_[v].second_circle)].push_back(int(v));
  }
  auto& hes = sub.half_edges_;
  auto angle_of = [&](int v, std::size_t c) {
    const Point d = sub.vertices_[std::size_t(v)].point - arr[c].center;
    return wrap_angle(std::atan2(d.y(), d.x()));
  };
  for (std::size_t c = 0; c < n; ++c) {
    auto& vs = on_circle[c];
    if (vs.empty()) {
      const int id = int(hes.size());
      hes.push_back({int(c), -1, -1, true, 0.0, kTwoPi, id + 1, id, -1});
      hes.push_back({int(c), -1, -1, false, 0.0, -kTwoPi, id, id + 1, -1});
      ++sub.isolated_loops_;
      continue;
    }
    std::sort(vs.begin(), vs.end(), [&](int a, int b) { return angle_of(a, c) < angle_of(b, c); });
    for (std::size_t k = 0; k < vs.size(); ++k) {
      const int from = vs[k];
      const int to = vs[(k + 1) % vs.size()];
      const double a0 = angle_of(from, c);
      double sweep = angle_of(to, c) - a0;
      if (sweep <= 0) sweep += kTwoPi;
      const int id = int(hes.size());
      hes.push_back({int(c), from, to, true, a0, sweep, id + 1, -1, -1});
      hes.push_back({int(c), to, from, false, a0 + sweep, -sweep, id, -1, -1});
    }
  }

  // Rotation system: outgoing half-edges at each vertex sorted by tangent direction.
  std::vector<std::vector<int>> outgoing(sub.vertices_.size());
  for (std::size_t h = 0; h < hes.size(); ++h)
    if (hes[h].origin >= 0) outgoing[std::size_t(hes[h].origin)].push_back(int(h));
  auto tangent_angle = [&](int h) {
    const auto& he = hes[std::size_t(h)];
    const Point radial = sub.vertices_[std::size_t(he.origin)].point - arr[std::size_t(he.circle)].center;
    const Point t = he.counterclockwise ? perp<double>(radial) : Point(-perp<double>(radial));
    return std::atan2(t.y(), t.x());
  };
  for (auto& out : outgoing)
    std::sort(out.begin(), out.end(), [&](int a, int b) { return tangent_angle(a) < tangent_angle(b); });
  for (std::size_t h = 0; h < hes.size(); ++h) {
    auto& he = hes[h];
    if (he.target < 0) continue;
    const auto& out = outgoing[std::size_t(he.target)];
    const auto k = std::size_t(std::find(out.begin(), out.end(), he.twin) - out.begin());
    he.next = out[(k + out.size() - 1) % out.size()];
  }

  // Trace boundary cycles.
  auto& cycles = sub.cycles_;
  for (std::size_t h = 0; h < hes.size(); ++h) {
    if (hes[h].cycle >= 0) continue;
    ArcSubdivision::Cycle cyc;
    int cur = int(h);
    do {
      hes[std::size_t(cur)].cycle = int(cycles.size());
      cyc.half_edges.push_back(cur);
      const auto& he = hes[std::size_t(cur)];
      cyc.signed_area += arc_area(arr[std::size_t(he.circle)], he.start_angle, he.sweep);
      cur = he.next;
    } while (cur != int(h));
    cyc.component = sets.find(hes[h].circle);
    cycles.push_back(std::move(cyc));
  }

  // Positive cycles bound faces; negative ones are outer boundaries of
  // components and become holes of the smallest enclosing face.
  auto& faces = sub.faces_;
  faces.push_back({});  // unbounded
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    if (cycles[k].signed_area > 0) {
      cycles[k].face = int(faces.size());
      faces.push_back({int(k), {}, 0});
    }
  }
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    auto& cyc = cycles[k];
    if (cyc.signed_area > 0) continue;
    const auto& first = hes[std::size_t(cyc.half_edges.front())];
    const Circle& c = arr[std::size_t(first.circle)];
    const double mid = first.start_angle + 0.5 * first.sweep;
    const Point sample = c.center + c.radius * Point(std::cos(mid), std::sin(mid));
    int best = 0;
    double best_area = 0;
    for (std::size_t f = 1; f < faces.size(); ++f) {
      const auto& outer = cycles[std::size_t(faces[f].outer_cycle)];
      if (outer.component == cyc.component) continue;
      if (best != 0 && outer.signed_area >= best_area) continue;
      if (cycle_encloses(sample, outer, hes, arr)) {
        best = int(f);
        best_area = outer.signed_area;
      }
    }
    cyc.face = best;
    faces[std::size_t(best)].hole_cycles.push_back(int(k));
  }
  for (auto& f : faces) {
    if (f.outer_cycle >= 0) f.arc_count += int(cycles[std::size_t(f.outer_cycle)].half_edges.size());
    for (int hcyc : f.hole_cycles) f.arc_count += int(cycles[std::size_t(hcyc)].half_edges.size());
  }

  std::vector<int> roots;
  for (std::size_t i = 0; i < n; ++i) roots.push_back(sets.find(int(i)));
  std::sort(roots.begin(), roots.end());
  sub.components_ = std::size_t(std::unique(roots.begin(), roots.end()) - roots.begin());
  return sub;
}

bool ArcSubdivision::euler_holds() const {
  const long v = long(vertices_.size() + isolated_loops_);
  const long e = long(arc_count());
  const long f = long(faces_.size());
  return v - e + f == 1 + long(components_);
}

FaceCensus face_census(const ArcSubdivision& sub) {
  FaceCensus census;
  for (const auto& f : sub.faces()) {
    if (f.unbounded()) continue;
    ++census.by_sides[f.arc_count];
    ++census.bounded_faces;
  }
  if (auto it = census.by_sides.find(2); it != census.by_sides.end()) census.digon_count = it->second;
  if (auto it = census.by_sides.find(3); it != census.by_sides.end()) census.triangle_count = it->second;
  return census;
}

}  // namespace orthocircles
