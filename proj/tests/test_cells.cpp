#include <cmath>
#include <numbers>

#include "doctest.h"
#include "orthocircles/cells.hpp"
#include "orthocircles/generators.hpp"
#include "orthocircles/graph.hpp"

using namespace orthocircles;

namespace {

const Arrangement& orthogonal_pair() {
  static const Arrangement arr({Circle("A", Point(0, 0), 1), Circle("B", Point(std::sqrt(2.0), 0), 1)});
  return arr;
}

double disk_union_area_sum(const ArcSubdivision& sub) {
  double total = 0;
  for (const auto& c : sub.cycles())
    if (c.signed_area > 0) total += c.signed_area;
  return total;
}

}  // namespace

TEST_CASE("two orthogonal circles") {
  const ArcSubdivision sub = build_subdivision(orthogonal_pair());
  CHECK(sub.vertex_count() == 2);
  CHECK(sub.arc_count() == 4);
  CHECK(sub.face_count() == 4);
  CHECK(sub.euler_holds());
  const FaceCensus c = face_census(sub);
  CHECK(c.bounded_faces == 3);
  CHECK(c.digon_count == 3);
  CHECK(c.triangle_count == 0);
  // Bounded faces tile the union of the two disks: 2 pi - lens area (pi/2 - 1).
  CHECK(disk_union_area_sum(sub) == doctest::Approx(2 * std::numbers::pi - (std::numbers::pi / 2 - 1)));
}

TEST_CASE("single circle and disjoint circles") {
  const ArcSubdivision one = build_subdivision(Arrangement({Circle("A", Point(0, 0), 1)}));
  CHECK(one.vertex_count() == 0);
  CHECK(one.face_count() == 2);
  CHECK(one.euler_holds());

  const ArcSubdivision nested = build_subdivision(
      Arrangement({Circle("A", Point(0, 0), 3), Circle("B", Point(0.5, 0), 1), Circle("C", Point(10, 0), 1)}));
  CHECK(nested.face_count() == 4);
  CHECK(nested.component_count() == 3);
  CHECK(nested.euler_holds());
  // The annulus between A and B has one outer and one hole cycle.
  int annuli = 0;
  for (const auto& f : nested.faces())
    if (!f.unbounded() && f.hole_cycles.size() == 1) ++annuli;
  CHECK(annuli == 1);
}

TEST_CASE("vertex count equals twice the crossing pairs") {
  for (const Arrangement& arr : {make_B(2, 5), make_B(3, 7), make_nonnested_B(3), make_random_nonnested(25, 8)}) {
    const ArcSubdivision sub = build_subdivision(arr);
    CHECK(sub.vertex_count() == 2 * build_graph(arr).edge_count());
    // Every intersection point splits two circles, so arcs = 2 * vertices
    // when every circle has intersection points.
    CHECK(sub.euler_holds());
  }
  CHECK(build_subdivision(make_B(2, 5)).vertex_count() == 60);
}

TEST_CASE("triangle augmentation") {
  const Arrangement aug = augment_triangles(orthogonal_pair());
  CHECK(aug.size() == 4);
  CHECK(validate(aug, ValidationMode::Orthogonal).ok);
  const ArcSubdivision sub = build_subdivision(aug);
  CHECK(sub.euler_holds());
  CHECK(face_census(sub).triangle_count == 8);

  const FaceCensus b1 = face_census(build_subdivision(augment_triangles(make_B(1, 5))));
  CHECK(b1.triangle_count >= 80);
}

TEST_CASE("coincident intersection points are rejected") {
  // Three circles through the points (0, 1) and (0, -1).
  const Arrangement arr({Circle("A", Point(-1, 0), std::sqrt(2.0)), Circle("B", Point(1, 0), std::sqrt(2.0)),
                         Circle("C", Point(0.5, 0), std::sqrt(1.25))});
  CHECK_THROWS_AS(build_subdivision(arr), NonGenericError);
}
