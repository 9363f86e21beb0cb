#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "orthocircles/generators.hpp"
#include "orthocircles/graph.hpp"

using namespace orthocircles;

namespace {

std::size_t brute_edge_count(const Arrangement& arr) {
  std::size_t m = 0;
  for (std::size_t i = 0; i < arr.size(); ++i)
    for (std::size_t j = i + 1; j < arr.size(); ++j) {
      const double d = (arr[i].center - arr[j].center).norm();
      if (d < arr[i].radius + arr[j].radius && d > std::abs(arr[i].radius - arr[j].radius)) ++m;
    }
  return m;
}

int vertex(const IntersectionGraph& g, const std::string& id) {
  return int(std::find(g.ids().begin(), g.ids().end(), id) - g.ids().begin());
}

}  // namespace

TEST_CASE("B(3,15) graph") {
  const Arrangement arr = make_B(3, 15);
  const IntersectionGraph g = build_graph(arr);
  CHECK(g.vertex_count() == 48);
  CHECK(g.edge_count() == 150);
  CHECK(g.edge_count() == brute_edge_count(arr));
  // Edges: a hub spokes and a ring edges per wheel, plus two crossings from
  // every satellite to the satellites of the next wheel: 2ax + 2a(x - 1).
  for (const char* hub : {"H1", "H2", "H3"}) CHECK(g.degree(vertex(g, hub)) == 15);
  CHECK(g.degree(vertex(g, "S1.1")) == 5);
  CHECK(g.degree(vertex(g, "S2.1")) == 7);
  CHECK(g.degree(vertex(g, "S3.1")) == 5);
  for (const auto& [u, v] : g.edges()) CHECK(u < v);
}

TEST_CASE("edge counts agree with pairwise brute force") {
  for (const Arrangement& arr : {make_B(2, 7), make_nonnested_B(4), make_random_nonnested(30, 5)})
    CHECK(build_graph(arr).edge_count() == brute_edge_count(arr));
}

TEST_CASE("tangent pairs are rejected") {
  const Arrangement arr({Circle("a", Point(0, 0), 1), Circle("b", Point(2, 0), 1)}, Tolerance{},
                        Arrangement::Strictness::Lenient);
  CHECK_THROWS_AS(build_graph(arr), TangencyError);
}

TEST_CASE("segment crossings") {
  const IntersectionGraph cross({"a", "b", "c", "d"}, {Point(0, 0), Point(1, 1), Point(0, 1), Point(1, 0)},
                                {{0, 1}, {2, 3}});
  const CrossingReport r = crossing_pairs(cross);
  REQUIRE(r.count == 1);
  CHECK(r.crossing_pairs[0].point.x() == doctest::Approx(0.5));
  CHECK(r.crossing_pairs[0].point.y() == doctest::Approx(0.5));
  CHECK_THROWS_AS(outer_face(cross), NotPlaneError);

  const IntersectionGraph square({"a", "b", "c", "d"}, {Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)},
                                 {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(crossing_pairs(square).count == 0);
  CHECK(outer_face(square) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("nonnested construction is plane with a pentagonal outer face") {
  for (int x = 1; x <= 6; ++x) {
    const Arrangement arr = make_nonnested_B(x);
    const IntersectionGraph g = build_graph(arr);
    CHECK(g.edge_count() == 3 * g.vertex_count() - 8);
    CHECK(crossing_pairs(g, arr.tolerance()).count == 0);
    CHECK(outer_face_vertices(g, arr.tolerance()).size() == 5);
  }
}

TEST_CASE("nested construction drawing has crossings") {
  const Arrangement arr = make_B(2, 5);
  CHECK(crossing_pairs(build_graph(arr), arr.tolerance()).count > 0);
}

TEST_CASE("forbidden subgraph witnesses") {
  const IntersectionGraph k4({"a", "b", "c", "d"}, {Point(0, 0), Point(1, 0), Point(0, 1), Point(1, 1)},
                             {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto w = find_forbidden(k4);
  REQUIRE(w);
  CHECK(w->kind == ForbiddenKind::K4);

  const IntersectionGraph c4({"a", "b", "c", "d", "e"},
                             {Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1), Point(5, 5)},
                             {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}});
  w = find_forbidden(c4);
  REQUIRE(w);
  CHECK(w->kind == ForbiddenKind::InducedC4);
  auto vs = w->vertices;
  std::sort(vs.begin(), vs.end());
  CHECK(vs == std::array<int, 4>{0, 1, 2, 3});

  // A chorded 4-cycle is neither.
  const IntersectionGraph chord({"a", "b", "c", "d"}, {Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)},
                                {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  CHECK_FALSE(find_forbidden(chord));

  CHECK_FALSE(find_forbidden(build_graph(make_B(3, 8))));
  CHECK_FALSE(find_forbidden(build_graph(make_random_nonnested(40, 17))));
}

TEST_CASE("induced subgraph") {
  const IntersectionGraph g = build_graph(make_wheel(5));
  const IntersectionGraph sub = g.induced({1, 2, 3});
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.ids()[0] == g.ids()[1]);
  CHECK(sub.edge_count() == std::size_t(g.adjacent(1, 2)) + g.adjacent(1, 3) + g.adjacent(2, 3));
}

TEST_CASE("edge bounds") {
  const BoundReport b = check_bounds(make_nonnested_B(3));
  CHECK(b.orthogonal);
  CHECK(b.nonnested);
  CHECK(b.pass());
  const auto tight = std::find_if(b.entries.begin(), b.entries.end(),
                                  [](const BoundEntry& e) { return e.name == "nonnested_orthogonal"; });
  REQUIRE(tight != b.entries.end());
  CHECK(tight->applicable);
  CHECK(tight->slack == doctest::Approx(0.0));

  const BoundReport nested = check_bounds(make_B(4, 10));
  CHECK_FALSE(nested.nonnested);
  CHECK(nested.pass());
  for (const auto& e : nested.entries)
    if (e.name == "general_orthogonal") {
      CHECK(e.applicable);
      CHECK(e.bound == doctest::Approx((4.0 + 5.0 / 11.0) * 44));
    } else {
      CHECK_FALSE(e.applicable);
    }
}
