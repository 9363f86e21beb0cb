#include "orthocircles/analysis.hpp"

#include <algorithm>
#include <map>

#include "orthocircles/graph.hpp"

namespace orthocircles {

namespace {

struct Context {
  const Arrangement& arr;
  const Tolerance& tol;
  std::size_t n;
  RelationTable rel;
  std::vector<char> ortho;
  std::vector<std::vector<int>> crossing;
  std::map<std::pair<int, int>, std::vector<Point>> points;
  DepthLabeling depth;

  explicit Context(const Arrangement& a)
      : arr(a), tol(a.tolerance()), n(a.size()), rel(a), ortho(n * n, 0), crossing(n), depth(depth_labeling(a)) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!rel.crossing(i, j)) continue;
        crossing[i].push_back(int(j));
        crossing[j].push_back(int(i));
        points[{int(i), int(j)}] = intersect_points(arr[i], arr[j], tol);
        if (orthogonal(arr[i], arr[j], tol)) ortho[i * n + j] = ortho[j * n + i] = 1;
      }
  }

  bool orth(int i, int j) const { return ortho[std::size_t(i) * n + std::size_t(j)] != 0; }
  bool cross(int i, int j) const { return rel.crossing(std::size_t(i), std::size_t(j)); }
  const std::string& id(int i) const { return arr[std::size_t(i)].id; }
  const Circle& circle(int i) const { return arr[std::size_t(i)]; }
  const std::vector<Point>& pair_points(int i, int j) const {
    return points.at({std::min(i, j), std::max(i, j)});
  }
};

AuditEntry make_entry(std::string tag) {
  AuditEntry e;
  e.tag = std::move(tag);
  e.status = AuditStatus::Pass;
  return e;
}

AuditEntry not_applicable(std::string tag, std::string why) {
  AuditEntry e;
  e.tag = std::move(tag);
  e.status = AuditStatus::NotApplicable;
  e.detail = std::move(why);
  return e;
}

void fail(AuditEntry& e, std::string detail, std::vector<std::string> ids, std::vector<Point> pts = {}) {
  if (e.status == AuditStatus::Fail) return;  // keep the first witness
  e.status = AuditStatus::Fail;
  e.detail = std::move(detail);
  e.witness_ids = std::move(ids);
  e.witness_points = std::move(pts);
}

// --- nonnested checks -------------------------------------------------------

AuditEntry check_center_containment(const Context& cx) {
  auto e = make_entry("center-containment");
  long checked = 0;
  for (std::size_t i = 0; i < cx.n; ++i)
    for (std::size_t j = 0; j < cx.n; ++j) {
      if (i == j) continue;
      ++checked;
      if (point_in_circle(cx.arr[i].center, cx.arr[j], cx.tol) == Location::Inside)
        fail(e, "center of " + cx.arr[i].id + " lies inside " + cx.arr[j].id, {cx.arr[i].id, cx.arr[j].id},
             {cx.arr[i].center});
    }
  e.counts = {{"checked", checked}};
  return e;
}

AuditEntry check_segment_to_boundary(const Context& cx) {
  auto e = make_entry("segment-to-boundary");
  e.sampled = true;
  long checked = 0;
  for (int a = 0; a < int(cx.n); ++a) {
    const Circle& A = cx.circle(a);
    for (int partner : cx.crossing[std::size_t(a)]) {
      for (const Point& p : cx.pair_points(a, partner)) {
        for (int b = 0; b < int(cx.n); ++b) {
          if (b == a) continue;
          ++checked;
          const int hits = segment_circle_intersections(A.center, p, cx.circle(b), cx.tol);
          if (hits > 1)
            fail(e, cx.id(b) + " meets the segment from the center of " + cx.id(a) + " to a point on it twice",
                 {cx.id(a), cx.id(b), cx.id(partner)}, {A.center, p});
        }
      }
    }
  }
  e.counts = {{"checked", checked}};
  return e;
}

AuditEntry check_center_segment_clearance(const Context& cx) {
  auto e = make_entry("center-segment-clearance");
  long checked = 0;
  for (int a = 0; a < int(cx.n); ++a)
    for (int b : cx.crossing[std::size_t(a)]) {
      if (b < a) continue;
      for (int d = 0; d < int(cx.n); ++d) {
        if (d == a || d == b) continue;
        ++checked;
        if (segment_circle_intersections(cx.circle(a).center, cx.circle(b).center, cx.circle(d), cx.tol) > 0)
          fail(e, cx.id(d) + " meets the center segment of crossing pair " + cx.id(a) + ", " + cx.id(b),
               {cx.id(a), cx.id(b), cx.id(d)}, {cx.circle(a).center, cx.circle(b).center});
      }
    }
  e.counts = {{"checked", checked}};
  return e;
}

// --- orthogonal checks ------------------------------------------------------

std::vector<int> common_orthogonal(const Context& cx, int a, int b) {
  std::vector<int> out;
  for (int c : cx.crossing[std::size_t(a)])
    if (c != b && cx.orth(c, a) && cx.orth(c, b)) out.push_back(c);
  return out;
}

AuditEntry check_nested_pair_neighbors(const Context& cx) {
  auto e = make_entry("nested-pair-orthogonal-neighbors");
  long checked = 0;
  long worst = 0;
  for (int inner = 0; inner < int(cx.n); ++inner)
    for (int outer = 0; outer < int(cx.n); ++outer) {
      if (!cx.rel.inside(std::size_t(inner), std::size_t(outer))) continue;
      ++checked;
      const auto common = common_orthogonal(cx, inner, outer);
      worst = std::max(worst, long(common.size()));
      if (common.size() > 2) {
        std::vector<std::string> ids{cx.id(outer), cx.id(inner)};
        for (int c : common) ids.push_back(cx.id(c));
        fail(e, "nested pair " + cx.id(outer) + " > " + cx.id(inner) + " has " + std::to_string(common.size()) +
                    " common orthogonal circles",
             ids);
      }
    }
  e.counts = {{"checked", checked}, {"max_common", worst}};
  return e;
}

AuditEntry check_one_intersection_point(const Context& cx) {
  auto e = make_entry("one-intersection-point");
  long checked = 0;
  for (int a = 0; a < int(cx.n); ++a)
    for (int b : cx.crossing[std::size_t(a)]) {
      if (b < a) continue;
      const auto& pts = cx.pair_points(a, b);
      for (int c : common_orthogonal(cx, a, b)) {
        ++checked;
        int inside = 0, outside = 0;
        for (const Point& p : pts) {
          const Location loc = point_in_circle(p, cx.circle(c), cx.tol);
          inside += loc == Location::Inside;
          outside += loc == Location::Outside;
        }
        if (inside != 1 || outside != 1)
          fail(e, cx.id(c) + " contains " + std::to_string(inside) + " intersection points of " + cx.id(a) + ", " +
                      cx.id(b),
               {cx.id(a), cx.id(b), cx.id(c)}, pts);
      }
    }
  e.counts = {{"checked", checked}};
  return e;
}

AuditEntry check_same_point_nesting(const Context& cx) {
  auto e = make_entry("same-point-nesting");
  long checked = 0;
  for (int a = 0; a < int(cx.n); ++a)
    for (int b : cx.crossing[std::size_t(a)]) {
      if (b < a) continue;
      const auto common = common_orthogonal(cx, a, b);
      for (const Point& p : cx.pair_points(a, b)) {
        std::vector<int> holders;
        for (int c : common)
          if (point_in_circle(p, cx.circle(c), cx.tol) == Location::Inside) holders.push_back(c);
        for (std::size_t k = 0; k < holders.size(); ++k)
          for (std::size_t l = k + 1; l < holders.size(); ++l) {
            ++checked;
            if (!cx.rel(std::size_t(holders[k]), std::size_t(holders[l])).nested())
              fail(e, cx.id(holders[k]) + " and " + cx.id(holders[l]) + " share an intersection point of " +
                          cx.id(a) + ", " + cx.id(b) + " but are not nested",
                   {cx.id(a), cx.id(b), cx.id(holders[k]), cx.id(holders[l])}, {p});
          }
      }
    }
  e.counts = {{"checked", checked}};
  return e;
}

// 1000 points of a barycentric grid strictly inside the triangle.
std::vector<Point> triangle_samples(const Point& p, const Point& q, const Point& r) {
  constexpr int kSide = 45;
  constexpr std::size_t kCount = 1000;
  std::vector<Point> out;
  for (int i = 0; i < kSide && out.size() < kCount; ++i)
    for (int j = 0; i + j < kSide && out.size() < kCount; ++j) {
      const double u = (i + 1.0 / 3.0) / kSide;
      const double v = (j + 1.0 / 3.0) / kSide;
      out.push_back(p + u * (q - p) + v * (r - p));
    }
  return out;
}

AuditEntry check_triangle_coverage(const Context& cx) {
  auto e = make_entry("triangle-coverage");
  e.sampled = true;
  long triangles = 0, samples = 0;
  for (int a = 0; a < int(cx.n); ++a)
    for (int b : cx.crossing[std::size_t(a)]) {
      if (b < a || !cx.orth(a, b)) continue;
      for (int c : cx.crossing[std::size_t(b)]) {
        if (c < b || !cx.orth(b, c) || !cx.orth(a, c)) continue;
        ++triangles;
        for (const Point& s : triangle_samples(cx.circle(a).center, cx.circle(b).center, cx.circle(c).center)) {
          ++samples;
          const bool covered = point_in_circle(s, cx.circle(a), cx.tol) != Location::Outside ||
                               point_in_circle(s, cx.circle(b), cx.tol) != Location::Outside ||
                               point_in_circle(s, cx.circle(c), cx.tol) != Location::Outside;
          if (!covered)
            fail(e, "sample point in the center triangle of " + cx.id(a) + ", " + cx.id(b) + ", " + cx.id(c) +
                        " is uncovered",
                 {cx.id(a), cx.id(b), cx.id(c)}, {s});
        }
      }
    }
  e.counts = {{"triangles", triangles}, {"samples", samples}};
  return e;
}

// --- classification checks --------------------------------------------------

int green_degree(const Context& cx, const Classification& cls, int black) {
  int k = 0;
  for (int g : cls.green) k += cx.cross(g, black);
  return k;
}

std::vector<int> inner_with_two_greens(const Context& cx, const Classification& cls) {
  std::vector<int> out;
  for (int b : cls.inner_black)
    if (green_degree(cx, cls, b) >= 2) out.push_back(b);
  return out;
}

AuditEntry check_deep_green(const Context& cx, const Classification& cls) {
  auto e = make_entry("deep-green");
  long checked = 0;
  for (int b : cls.inner_black)
    for (int g : cls.green) {
      if (!cx.cross(g, b)) continue;
      ++checked;
      if (!cx.depth.deep(std::size_t(g)))
        fail(e, "shallow green circle " + cx.id(g) + " crosses inner black circle " + cx.id(b), {cx.id(g), cx.id(b)});
    }
  e.counts = {{"checked", checked}};
  return e;
}

AuditEntry check_green_intersection_budget(const Context& cx, const Classification& cls) {
  auto e = make_entry("green-intersection-budget");
  // Deep circles crossing the red circle; the deep green circles are among them.
  std::vector<int> deep_neighbors;
  for (int c : cx.crossing[std::size_t(cls.red_index)])
    if (cx.depth.deep(std::size_t(c))) deep_neighbors.push_back(c);
  long inside = 0, total = 0;
  std::vector<Point> pts_inside;
  for (std::size_t k = 0; k < deep_neighbors.size(); ++k)
    for (std::size_t l = k + 1; l < deep_neighbors.size(); ++l) {
      const int a = deep_neighbors[k], b = deep_neighbors[l];
      if (!cx.cross(a, b)) continue;
      for (const Point& p : cx.pair_points(a, b)) {
        ++total;
        if (point_in_circle(p, cx.circle(cls.red_index), cx.tol) == Location::Inside) {
          ++inside;
          pts_inside.push_back(p);
        }
      }
    }
  if (inside > 8) {
    std::vector<std::string> ids{cls.red};
    for (int c : deep_neighbors) ids.push_back(cx.id(c));
    fail(e, std::to_string(inside) + " intersection points of deep circles lie inside the red circle", ids, pts_inside);
  }
  e.counts = {{"deep_neighbors", long(deep_neighbors.size())}, {"points", total}, {"inside_red", inside}};
  return e;
}

AuditEntry check_eight_boundary(const Context& cx, const Classification& cls) {
  auto e = make_entry("eight-boundary");
  const auto doubly = inner_with_two_greens(cx, cls);
  const long b = long(cls.boundary_black.size());
  if (doubly.empty()) {
    e.status = AuditStatus::NotApplicable;
    e.detail = "no inner black circle is crossed by two green circles";
  } else if (b < 8) {
    fail(e, "inner black circle " + cx.id(doubly.front()) + " is crossed by two green circles but only " +
                std::to_string(b) + " black circles are on the boundary",
         {cls.red, cx.id(doubly.front())});
  }
  e.counts = {{"boundary_black", b}, {"inner_two_green", long(doubly.size())}};
  return e;
}

AuditEntry check_small_black_cap(const Context& cx, const Classification& cls) {
  auto e = make_entry("small-black-cap");
  const auto doubly = inner_with_two_greens(cx, cls);
  if (cls.n_black() > 11) {
    e.status = AuditStatus::NotApplicable;
    e.detail = "more than 11 black circles";
  } else if (doubly.size() > 3) {
    std::vector<std::string> ids{cls.red};
    for (int b : doubly) ids.push_back(cx.id(b));
    fail(e, std::to_string(doubly.size()) + " inner black circles are crossed by two green circles", ids);
  }
  e.counts = {{"n_black", long(cls.n_black())}, {"inner_two_green", long(doubly.size())}};
  return e;
}

AuditEntry check_incidence_bound(const Context& cx, const Classification& cls) {
  auto e = make_entry("incidence-bound");
  const long nb = long(cls.n_black());
  std::vector<char> is_black(cx.n, 0);
  for (int b : cls.black) is_black[std::size_t(b)] = 1;
  long incident = 0;
  for (std::size_t i = 0; i < cx.n; ++i)
    for (int j : cx.crossing[i])
      if (std::size_t(j) > i && (is_black[i] || is_black[std::size_t(j)])) ++incident;
  long i_count = 0;
  for (int b : cls.inner_black) {
    int outside = 0;
    for (int c : cx.crossing[std::size_t(b)]) outside += !is_black[std::size_t(c)];
    i_count += outside >= 2;
  }
  const long bound = 4 * nb + i_count - 3;
  e.counts = {{"n_black", nb}, {"inner_two_outside", i_count}, {"incident_edges", incident}, {"bound", bound}};
  // The plane-graph edge bound behind the claim needs at least three vertices.
  if (nb < 3) {
    e.status = AuditStatus::NotApplicable;
    e.detail = "fewer than three black circles";
    return e;
  }
  if (incident > bound) {
    std::vector<std::string> ids{cls.red};
    for (int b : cls.black) ids.push_back(cx.id(b));
    fail(e, std::to_string(incident) + " edges are incident to black circles, bound is " + std::to_string(bound), ids);
  }
  return e;
}

}  // namespace

long AuditEntry::count(const std::string& key) const {
  for (const auto& [k, v] : counts)
    if (k == key) return v;
  throw std::out_of_range("audit entry '" + tag + "' has no count '" + key + "'");
}

bool AuditReport::passed() const {
  return std::none_of(entries.begin(), entries.end(), [](const AuditEntry& e) { return e.status == AuditStatus::Fail; });
}

const AuditEntry& AuditReport::entry(const std::string& tag) const {
  for (const auto& e : entries)
    if (e.tag == tag) return e;
  throw std::out_of_range("no audit entry '" + tag + "'");
}

std::optional<Classification> select_red(const Arrangement& arr) {
  const std::size_t n = arr.size();
  const DepthLabeling depth = depth_labeling(arr);
  if (depth.max_depth() == 0) return std::nullopt;

  int red = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (depth.depth[i] != 1) continue;
    int deep_orthogonal = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && depth.deep(j) && orthogonal(arr[i], arr[j], arr.tolerance())) ++deep_orthogonal;
    if (deep_orthogonal > 7) continue;
    if (red < 0 || arr[i].id < arr[std::size_t(red)].id) red = int(i);
  }
  if (red < 0) throw MissingRedError("no circle of depth 1 is orthogonal to at most seven deep circles");

  Classification cls;
  cls.red = arr[std::size_t(red)].id;
  cls.red_index = red;
  const RelationTable rel(arr);
  for (std::size_t i = 0; i < n; ++i)
    if (rel.inside(i, std::size_t(red))) cls.black.push_back(int(i));
  for (std::size_t i = 0; i < n; ++i) {
    if (!rel.crossing(i, std::size_t(red))) continue;
    if (std::any_of(cls.black.begin(), cls.black.end(), [&](int b) { return rel.crossing(i, std::size_t(b)); }))
      cls.green.push_back(int(i));
  }

  const IntersectionGraph black_graph = build_graph(arr).induced(cls.black);
  std::vector<int> boundary_local = outer_face_vertices(black_graph, arr.tolerance());
  std::vector<char> on_boundary(cls.black.size(), 0);
  for (int v : boundary_local) on_boundary[std::size_t(v)] = 1;
  for (std::size_t k = 0; k < cls.black.size(); ++k)
    (on_boundary[k] ? cls.boundary_black : cls.inner_black).push_back(cls.black[k]);
  return cls;
}

AuditReport audit(const Arrangement& arr) {
  AuditReport report;
  static const std::vector<std::string> kAllTags = {
      "center-containment", "center-segment-clearance", "deep-green", "eight-boundary",
      "green-intersection-budget", "incidence-bound", "nested-pair-orthogonal-neighbors", "one-intersection-point",
      "same-point-nesting", "segment-to-boundary", "small-black-cap", "triangle-coverage"};

  if (validate(arr, ValidationMode::Orthogonal).ok)
    report.mode = ValidationMode::Orthogonal;
  else if (validate(arr, ValidationMode::Acute).ok)
    report.mode = ValidationMode::Acute;
  if (!report.mode) {
    for (const auto& tag : kAllTags) report.entries.push_back(not_applicable(tag, "arrangement does not validate"));
    return report;
  }

  const Context cx(arr);
  report.nonnested = cx.depth.max_depth() == 0;
  auto& out = report.entries;

  if (report.nonnested) {
    out.push_back(check_center_containment(cx));
    out.push_back(check_segment_to_boundary(cx));
    out.push_back(check_center_segment_clearance(cx));
  } else {
    for (const char* tag : {"center-containment", "segment-to-boundary", "center-segment-clearance"})
      out.push_back(not_applicable(tag, "arrangement has nested circles"));
  }

  const bool orthogonal_mode = *report.mode == ValidationMode::Orthogonal;
  if (orthogonal_mode) {
    out.push_back(check_nested_pair_neighbors(cx));
    out.push_back(check_one_intersection_point(cx));
    out.push_back(check_same_point_nesting(cx));
    out.push_back(check_triangle_coverage(cx));
  } else {
    for (const char* tag : {"nested-pair-orthogonal-neighbors", "one-intersection-point", "same-point-nesting",
                            "triangle-coverage"})
      out.push_back(not_applicable(tag, "requires an orthogonal arrangement"));
  }

  const std::vector<const char*> class_tags = {"deep-green", "eight-boundary", "green-intersection-budget",
                                               "incidence-bound", "small-black-cap"};
  std::string why;
  bool failed = false;
  if (!orthogonal_mode) {
    why = "requires an orthogonal arrangement";
  } else if (report.nonnested) {
    why = "no deep circle, so no red circle";
  } else {
    try {
      report.classification = select_red(arr);
    } catch (const MissingRedError& err) {
      why = err.what();
    } catch (const NotPlaneError& err) {
      why = std::string("black-circle drawing is not plane: ") + err.what();
      failed = true;
    }
  }
  if (report.classification) {
    const auto& cls = *report.classification;
    out.push_back(check_deep_green(cx, cls));
    out.push_back(check_eight_boundary(cx, cls));
    out.push_back(check_green_intersection_budget(cx, cls));
    out.push_back(check_incidence_bound(cx, cls));
    out.push_back(check_small_black_cap(cx, cls));
  } else {
    for (const char* tag : class_tags) {
      auto e = not_applicable(tag, why);
      if (failed) e.status = AuditStatus::Fail;
      out.push_back(e);
    }
  }

  std::sort(out.begin(), out.end(), [](const AuditEntry& a, const AuditEntry& b) { return a.tag < b.tag; });
  return report;
}

}  // namespace orthocircles
