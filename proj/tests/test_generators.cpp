#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "orthocircles/document.hpp"
#include "orthocircles/generators.hpp"
#include "orthocircles/graph.hpp"

using namespace orthocircles;

TEST_CASE("wheel constants for five satellites") {
  const BParameters p = eval_b_parameters(3, 5);
  CHECK(p.alpha == doctest::Approx(5.0376).epsilon(1e-4));
  // 1 / (sqrt(2) sin 36 deg), and h1^2 + s1^2 = d1^2 with s1 = 1.
  CHECK(p.orbit_radii[0] == doctest::Approx(1.2030).epsilon(1e-4));
  CHECK(p.hub_radii[0] * p.hub_radii[0] + 1.0 == doctest::Approx(p.orbit_radii[0] * p.orbit_radii[0]));
  CHECK(p.hub_radii[0] == doctest::Approx(0.6687).epsilon(1e-4));
  CHECK(p.satellite_radii[0] == doctest::Approx(1.0));
}

TEST_CASE("consecutive wheels are similar") {
  for (int a : {5, 8, 13}) {
    const BParameters p = eval_b_parameters(4, a);
    for (int i = 1; i < 4; ++i) {
      CHECK(p.orbit_radii[std::size_t(i)] / p.orbit_radii[std::size_t(i - 1)] == doctest::Approx(p.alpha));
      CHECK(p.satellite_radii[std::size_t(i)] / p.satellite_radii[std::size_t(i - 1)] == doctest::Approx(p.alpha));
      CHECK(p.hub_radii[std::size_t(i)] / p.hub_radii[std::size_t(i - 1)] == doctest::Approx(p.alpha));
    }
    // Odd wheels are rotated by half a step.
    const double t0 = std::atan2(p.centers[0][0].y(), p.centers[0][0].x());
    const double t1 = std::atan2(p.centers[1][0].y(), p.centers[1][0].x());
    CHECK(std::abs(std::remainder(t0 - t1, 2 * std::numbers::pi / a)) ==
          doctest::Approx(std::numbers::pi / a));
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(eval_b_parameters(1, 4), DomainError);
  CHECK_THROWS_AS(eval_b_parameters(0, 5), DomainError);
  CHECK_THROWS_AS(make_B(2, 3), DomainError);
  CHECK_THROWS_AS(make_nonnested_B(0), DomainError);
}

TEST_CASE("ids and order") {
  const Arrangement arr = make_B(2, 5);
  REQUIRE(arr.size() == 12);
  CHECK(arr[0].id == "H1");
  CHECK(arr[1].id == "S1.1");
  CHECK(arr[6].id == "H2");
  CHECK(arr[11].id == "S2.5");
  const Arrangement nn = make_nonnested_B(3);
  CHECK(nn.size() == 16);
  CHECK_FALSE(nn.index_of("H2"));
}

TEST_CASE("wheel") {
  const Arrangement w = make_wheel(7, 2.5, 0.3);
  CHECK(w.size() == 8);
  CHECK(validate(w, ValidationMode::Orthogonal).ok);
  CHECK(w[1].radius == doctest::Approx(2.5));
  CHECK(std::atan2(w[1].center.y(), w[1].center.x()) == doctest::Approx(0.3 + 2 * std::numbers::pi / 7));
  const IntersectionGraph g = build_graph(w);
  CHECK(g.edge_count() == 14);
}

TEST_CASE("hubs cross no circle outside their wheel pair") {
  const Arrangement arr = make_B(4, 6);
  const IntersectionGraph g = build_graph(arr);
  for (int i = 1; i <= 4; ++i) {
    const int h = int(*arr.index_of("H" + std::to_string(i)));
    for (int v : g.neighbors(h)) CHECK(arr[std::size_t(v)].id.rfind("S" + std::to_string(i) + ".", 0) == 0);
  }
}

TEST_CASE("nonnested degree profile") {
  const IntersectionGraph g = build_graph(make_nonnested_B(4));
  const auto deg = degree_sequence(g);
  CHECK(g.degree(0) == 5);
  // The five outermost satellites have degree 4.
  CHECK(std::count(deg.begin(), deg.end(), 4) == 5);
  std::size_t sum = 0;
  for (int d : deg) sum += std::size_t(d);
  CHECK(sum == 2 * (3 * g.vertex_count() - 8));
}

TEST_CASE("random nonnested generator") {
  const Arrangement a = make_random_nonnested(50, 42);
  const Arrangement b = make_random_nonnested(50, 42);
  CHECK(serialize_arrangement(a) == serialize_arrangement(b));
  CHECK(serialize_arrangement(a) != serialize_arrangement(make_random_nonnested(50, 43)));
  CHECK(a.size() == 50);
  CHECK(a[0].id == "C1");
  CHECK(is_nonnested(a));
  CHECK(validate(a, ValidationMode::Orthogonal).ok);
  CHECK_THROWS_AS(make_random_nonnested(0, 1), DomainError);
}

TEST_CASE("acute perturbation") {
  const Arrangement base = make_random_nonnested(30, 9);
  const Arrangement acute = perturb_acute(base, 3);
  CHECK(validate(acute, ValidationMode::Acute).ok);
  CHECK(serialize_arrangement(acute) == serialize_arrangement(perturb_acute(base, 3)));
  CHECK(build_graph(acute).edge_count() == build_graph(base).edge_count());
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(acute[i].radius <= base[i].radius);
    CHECK(acute[i].radius >= 0.97 * base[i].radius);
  }
  // Unit factors keep the orthogonal arrangement, which is acute as well.
  const Arrangement same = scale_radii_acute(base, std::vector<double>(base.size(), 1.0));
  CHECK(serialize_arrangement(same) == serialize_arrangement(base));
  // Growing one radius makes its crossings obtuse.
  std::vector<double> grow(base.size(), 1.0);
  grow[0] = 1.2;
  CHECK_THROWS_AS(scale_radii_acute(base, grow), PerturbationError);
}

TEST_CASE("augmentation keeps orthogonality and requires it") {
  const Arrangement aug = augment_triangles(make_B(1, 5));
  CHECK(aug.size() == 6 + 20);
  CHECK(validate(aug, ValidationMode::Orthogonal).ok);
  CHECK(aug[6].id == "T1");
  const Arrangement acute({Circle("a", Point(0, 0), 1), Circle("b", Point(1.8, 0), 1)});
  CHECK_THROWS_AS(augment_triangles(acute), AugmentationError);
}
