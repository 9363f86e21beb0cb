#include "orthocircles/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace orthocircles {

namespace {

constexpr double kPi = std::numbers::pi;

// Uniform double in [0, 1) from the top 53 bits; portable across standard libraries.
double uniform01(std::mt19937_64& gen) { return double(gen() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& gen, double lo, double hi) { return lo + (hi - lo) * uniform01(gen); }

Point polar(double radius, double angle) { return Point(radius * std::cos(angle), radius * std::sin(angle)); }

}  // namespace

BParameters eval_b_parameters(int x, int a) {
  if (a < 5) throw DomainError("satellite count a must be at least 5 (got " + std::to_string(a) + ")");
  if (x < 1) throw DomainError("wheel count x must be at least 1 (got " + std::to_string(x) + ")");

  BParameters p;
  p.x = x;
  p.a = a;
  const double step = kPi / a;
  const double c1 = std::cos(step), c2 = std::cos(2 * step), c4 = std::cos(4 * step);
  const double sin1 = std::sin(step);
  p.alpha = (std::sqrt(c2 - c4) + std::numbers::sqrt2 * c1) / (std::numbers::sqrt2 * c2);

  const double orbit_factor = 1.0 / (std::numbers::sqrt2 * sin1);
  const double hub_factor = std::sqrt(1.0 / (2.0 * sin1 * sin1) - 1.0);

  // Neighboring satellites of the innermost wheel sit sqrt(2) apart.
  const double d1 = orbit_factor;
  if (std::abs(2.0 * d1 * d1 * (1.0 - std::cos(2 * step)) - 2.0) > 1e-12)
    throw DomainError("satellite spacing identity failed for a = " + std::to_string(a));

  double s = 1.0;
  for (int i = 1; i <= x; ++i) {
    p.satellite_radii.push_back(s);
    p.orbit_radii.push_back(s * orbit_factor);
    p.hub_radii.push_back(s * hub_factor);
    const double offset = (i % 2 == 0) ? 0.0 : step;
    std::vector<Point> ring;
    for (int j = 1; j <= a; ++j) ring.push_back(polar(p.orbit_radii.back(), 2 * kPi * j / a + offset));
    p.centers.push_back(std::move(ring));
    s *= p.alpha;
  }
  return p;
}

Arrangement make_wheel(int a, double scale, double rotation, Tolerance tol) {
  if (!(scale > 0)) throw DomainError("wheel scale must be positive");
  const BParameters p = eval_b_parameters(1, a);
  std::vector<Circle> circles;
  circles.emplace_back("H1", Point::Zero(), p.hub_radii[0] * scale);
  for (int j = 1; j <= a; ++j)
    circles.emplace_back("S1." + std::to_string(j), polar(p.orbit_radii[0] * scale, rotation + 2 * kPi * j / a),
                         scale);
  return Arrangement(std::move(circles), tol);
}

Arrangement make_B(int x, int a, Tolerance tol) {
  const BParameters p = eval_b_parameters(x, a);
  std::vector<Circle> circles;
  for (int i = 1; i <= x; ++i) {
    const auto w = std::size_t(i - 1);
    circles.emplace_back("H" + std::to_string(i), Point::Zero(), p.hub_radii[w]);
    for (int j = 1; j <= a; ++j)
      circles.emplace_back("S" + std::to_string(i) + "." + std::to_string(j), p.centers[w][std::size_t(j - 1)],
                           p.satellite_radii[w]);
  }
  return Arrangement(std::move(circles), tol);
}

Arrangement make_nonnested_B(int x, Tolerance tol) {
  const Arrangement full = make_B(x, 5, tol);
  std::vector<Circle> kept;
  for (const auto& c : full.circles())
    if (c.id.front() != 'H' || c.id == "H1") kept.push_back(c);
  return Arrangement(std::move(kept), tol);
}

Arrangement augment_triangles(const Arrangement& arr) {
  const auto& tol = arr.tolerance();
  if (!validate(arr, ValidationMode::Orthogonal).ok)
    throw AugmentationError("augment_triangles requires a valid orthogonal arrangement");

  double rmax = 0;
  for (const auto& c : arr.circles()) rmax = std::max(rmax, c.radius);
  const double floor_radius = 1e4 * tol.rel_eps * rmax;

  std::vector<Circle> circles = arr.circles();
  std::vector<Circle> added;
  int counter = 0;
  auto fresh_id = [&]() {
    std::string id;
    do {
      id = "T" + std::to_string(++counter);
    } while (arr.index_of(id).has_value());
    return id;
  };

  for (std::size_t i = 0; i < arr.size(); ++i) {
    for (std::size_t j = i + 1; j < arr.size(); ++j) {
      const Circle& A = arr[i];
      const Circle& B = arr[j];
      const auto pts = intersect_points(A, B, tol);
      for (std::size_t k = 0; k < pts.size(); ++k) {
        const Point& p = pts[k];
        const Point& other = pts[1 - k];
        // Inverting in a circle about the other intersection point turns A
        // and B into lines crossing at the image of p. Using the chord as the
        // mirror radius keeps p fixed.
        const Circle mirror("", other, (p - other).norm());
        const Point q = invert_point(p, mirror);

        double clearance = std::numeric_limits<double>::infinity();
        auto consider = [&](const Circle& c) {
          clearance = std::min(clearance, std::abs((p - c.center).norm() - c.radius));
        };
        for (std::size_t l = 0; l < arr.size(); ++l)
          if (l != i && l != j) consider(arr[l]);
        for (const auto& c : added) consider(c);
        // The inversion is an isometry to first order at its fixed point p.
        double rho = std::isfinite(clearance) ? 0.25 * clearance : 0.25 * std::min(A.radius, B.radius);

        while (true) {
          if (rho < floor_radius)
            throw AugmentationError("could not isolate a small circle at an intersection point of '" + A.id +
                                    "' and '" + B.id + "'");
          const auto image = invert(GeneralizedCircle::from_circle(Circle("", q, rho)), mirror, tol);
          if (image.is_line()) {
            rho *= 0.5;
            continue;
          }
          Circle small = image.circle;
          bool ok = orthogonal(small, A, tol) && orthogonal(small, B, tol);
          auto clear_of = [&](const Circle& c) {
            const auto rel = relation(small, c, tol);
            return !(rel.crossing() || rel.kind == RelationKind::Tangent ||
                     rel.kind == RelationKind::NestedSecondInFirst);
          };
          for (std::size_t l = 0; ok && l < arr.size(); ++l)
            if (l != i && l != j) ok = clear_of(arr[l]);
          for (std::size_t l = 0; ok && l < added.size(); ++l) ok = clear_of(added[l]);
          if (ok) {
            small.id = fresh_id();
            added.push_back(std::move(small));
            break;
          }
          rho *= 0.5;
        }
      }
    }
  }
  circles.insert(circles.end(), added.begin(), added.end());
  return Arrangement(std::move(circles), tol);
}

Arrangement scale_radii_acute(const Arrangement& arr, const std::vector<double>& factors) {
  if (factors.size() != arr.size()) throw DomainError("one radius factor per circle required");
  const auto& tol = arr.tolerance();
  std::vector<Circle> circles;
  for (std::size_t i = 0; i < arr.size(); ++i)
    circles.emplace_back(arr[i].id, arr[i].center, arr[i].radius * factors[i]);
  Arrangement out(std::move(circles), tol, Arrangement::Strictness::Lenient);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    for (std::size_t j = i + 1; j < arr.size(); ++j) {
      const auto before = relation(arr[i], arr[j], tol);
      const auto after = relation(out[i], out[j], tol);
      if (after.kind == RelationKind::Tangent)
        throw PerturbationError("pair ('" + arr[i].id + "', '" + arr[j].id + "') became tangent");
      if (after.nested() && after.kind != before.kind)
        throw PerturbationError("pair ('" + arr[i].id + "', '" + arr[j].id + "') became nested");
    }
  }
  if (!validate(out, ValidationMode::Acute).ok) throw PerturbationError("perturbed arrangement is not acute");
  return out;
}

Arrangement perturb_acute(const Arrangement& arr, std::uint64_t seed) {
  if (!validate(arr, ValidationMode::Orthogonal).ok)
    throw PerturbationError("perturb_acute requires a valid orthogonal arrangement");
  std::mt19937_64 gen(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<double> factors(arr.size());
    for (auto& f : factors) f = uniform(gen, 0.97, 1.0);
    try {
      return scale_radii_acute(arr, factors);
    } catch (const PerturbationError&) {
    }
  }
  throw PerturbationError("no acute perturbation found after 100 attempts");
}

Arrangement make_random_nonnested(int n, std::uint64_t seed, Tolerance tol) {
  if (n < 1) throw DomainError("make_random_nonnested: n must be at least 1");
  std::mt19937_64 gen(seed);
  std::vector<Circle> circles;
  circles.emplace_back("C1", Point::Zero(), 1.0);
  std::vector<std::pair<std::size_t, std::size_t>> crossing;

  while (int(circles.size()) < n) {
    const std::string id = "C" + std::to_string(circles.size() + 1);
    int rejections = 0;
    while (true) {
      if (rejections >= 1000)
        throw GenerationError("make_random_nonnested: 1000 consecutive rejections at circle " + id);
      Point center;
      double radius;
      if (!crossing.empty() && uniform01(gen) < 0.5) {
        // Centers on the radical axis of a crossing pair, outside both, are
        // orthogonal to both circles of the pair.
        const auto [ia, ib] = crossing[std::size_t(uniform01(gen) * double(crossing.size()))];
        const auto pts = intersect_points(circles[ia], circles[ib], tol);
        const std::size_t k = uniform01(gen) < 0.5 ? 0 : 1;
        const Point dir = (pts[k] - pts[1 - k]).normalized();
        const double chord = (pts[k] - pts[1 - k]).norm();
        center = pts[k] + uniform(gen, 0.1, 1.5) * chord * dir;
        radius = std::sqrt((center - circles[ia].center).squaredNorm() - circles[ia].radius * circles[ia].radius);
      } else {
        const Circle& parent = circles[std::size_t(uniform01(gen) * double(circles.size()))];
        radius = parent.radius * uniform(gen, 0.3, 2.0);
        const double dist = std::sqrt(parent.radius * parent.radius + radius * radius);
        center = parent.center + polar(dist, uniform(gen, 0.0, 2 * kPi));
      }
      ++rejections;
      if (!(radius > 1e-2 && radius < 1e2)) continue;
      const Circle candidate(id, center, radius);
      bool ok = true;
      std::vector<std::size_t> hits;
      for (std::size_t l = 0; ok && l < circles.size(); ++l) {
        const auto rel = relation(candidate, circles[l], tol);
        if (rel.kind == RelationKind::DisjointOutside) continue;
        ok = rel.crossing() && orthogonal(candidate, circles[l], tol);
        hits.push_back(l);
      }
      if (!ok) continue;
      for (std::size_t l : hits) crossing.emplace_back(l, circles.size());
      circles.push_back(candidate);
      break;
    }
  }
  return Arrangement(std::move(circles), tol);
}

}  // namespace orthocircles
