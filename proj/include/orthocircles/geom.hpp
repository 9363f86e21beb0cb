#pragma once

// Circle predicates, intersections, angles and inversion.
//
// All comparisons are relative: each predicate scales rel_eps by the natural
// magnitude of the compared quantity (radii, squared radii, segment length),
// so outputs are invariant under uniform scaling of the input.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "orthocircles/errors.hpp"

namespace orthocircles {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
struct BasicTolerance {
  Scalar rel_eps = Scalar(1e-9);

  constexpr BasicTolerance() = default;
  explicit BasicTolerance(Scalar eps) : rel_eps(eps) {
    if (!(eps > Scalar(0) && eps < Scalar(1e-3)))
      throw DomainError("tolerance must satisfy 0 < rel_eps < 1e-3");
  }
};

template <typename Scalar>
struct BasicCircle {
  std::string id;
  Point2<Scalar> center = Point2<Scalar>::Zero();
  Scalar radius = Scalar(1);

  BasicCircle() = default;
  BasicCircle(std::string id_, Point2<Scalar> c, Scalar r)
      : id(std::move(id_)), center(std::move(c)), radius(r) {
    if (!(r > Scalar(0)) || !std::isfinite(r))
      throw DomainError("circle '" + id + "': radius must be positive and finite");
    if (!center.allFinite())
      throw DomainError("circle '" + id + "': center must be finite");
  }
};

/// Line given by a point on it and a unit direction.
template <typename Scalar>
struct BasicLine {
  Point2<Scalar> point = Point2<Scalar>::Zero();
  Point2<Scalar> direction = Point2<Scalar>::UnitX();
};

/// Either a circle or a line: the closure of circles under inversion.
template <typename Scalar>
struct BasicGeneralizedCircle {
  enum class Kind { Circle, Line };

  Kind kind = Kind::Circle;
  BasicCircle<Scalar> circle;
  BasicLine<Scalar> line;

  static BasicGeneralizedCircle from_circle(BasicCircle<Scalar> c) {
    BasicGeneralizedCircle g;
    g.kind = Kind::Circle;
    g.circle = std::move(c);
    return g;
  }
  static BasicGeneralizedCircle from_line(const Point2<Scalar>& point,
                                          const Point2<Scalar>& direction);

  bool is_line() const { return kind == Kind::Line; }
};

enum class RelationKind { DisjointOutside, NestedFirstInSecond, NestedSecondInFirst, Tangent, Crossing };

template <typename Scalar>
struct BasicPairRelation {
  RelationKind kind = RelationKind::DisjointOutside;
  /// Intersection angle in (0, pi); set only for Crossing.
  Scalar angle = Scalar(0);

  bool crossing() const { return kind == RelationKind::Crossing; }
  bool nested() const {
    return kind == RelationKind::NestedFirstInSecond || kind == RelationKind::NestedSecondInFirst;
  }
};

enum class Location { Inside, OnBoundary, Outside };

inline const char* to_string(RelationKind k) {
  switch (k) {
    case RelationKind::DisjointOutside: return "DisjointOutside";
    case RelationKind::NestedFirstInSecond: return "NestedFirstInSecond";
    case RelationKind::NestedSecondInFirst: return "NestedSecondInFirst";
    case RelationKind::Tangent: return "Tangent";
    case RelationKind::Crossing: return "Crossing";
  }
  return "?";
}

inline const char* to_string(Location l) {
  switch (l) {
    case Location::Inside: return "Inside";
    case Location::OnBoundary: return "OnBoundary";
    case Location::Outside: return "Outside";
  }
  return "?";
}

using Point = Point2<double>;
using Tolerance = BasicTolerance<double>;
using Circle = BasicCircle<double>;
using Line = BasicLine<double>;
using GeneralizedCircle = BasicGeneralizedCircle<double>;
using PairRelation = BasicPairRelation<double>;

// ---------------------------------------------------------------------------
// implementation

template <typename Scalar>
Scalar cross2(const Point2<Scalar>& a, const Point2<Scalar>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

template <typename Scalar>
Point2<Scalar> perp(const Point2<Scalar>& v) {
  return Point2<Scalar>(-v.y(), v.x());
}

/// Canonical line: direction has positive x (ties: positive y), point is the
/// foot of the perpendicular from the origin.
template <typename Scalar>
BasicLine<Scalar> normalized_line(const Point2<Scalar>& point, const Point2<Scalar>& direction) {
  Point2<Scalar> u = direction.normalized();
  if (u.x() < Scalar(0) || (u.x() == Scalar(0) && u.y() < Scalar(0))) u = -u;
  BasicLine<Scalar> l;
  l.direction = u;
  l.point = point - point.dot(u) * u;
  return l;
}

template <typename Scalar>
BasicGeneralizedCircle<Scalar> BasicGeneralizedCircle<Scalar>::from_line(
    const Point2<Scalar>& point, const Point2<Scalar>& direction) {
  BasicGeneralizedCircle g;
  g.kind = Kind::Line;
  g.line = normalized_line(point, direction);
  return g;
}

/// cos(pi - alpha) from the law of cosines, clamped to [-1, 1].
template <typename Scalar>
Scalar crossing_cosine(Scalar ra, Scalar rb, Scalar d2) {
  Scalar c = (ra * ra + rb * rb - d2) / (Scalar(2) * ra * rb);
  return std::clamp(c, Scalar(-1), Scalar(1));
}

template <typename Scalar>
BasicPairRelation<Scalar> relation(const BasicCircle<Scalar>& a, const BasicCircle<Scalar>& b,
                                   const BasicTolerance<Scalar>& tol = {}) {
  using std::abs;
  const Scalar eps = tol.rel_eps;
  const Scalar d2 = (a.center - b.center).squaredNorm();
  const Scalar d = std::sqrt(d2);
  const Scalar sum = a.radius + b.radius;
  const Scalar rmax = std::max(a.radius, b.radius);
  const Scalar rmin = std::min(a.radius, b.radius);

  BasicPairRelation<Scalar> rel;
  if (abs(d - sum) <= eps * sum) {
    rel.kind = RelationKind::Tangent;
  } else if (d > sum) {
    rel.kind = RelationKind::DisjointOutside;
  } else if (abs(d + rmin - rmax) <= eps * rmax) {
    rel.kind = RelationKind::Tangent;
  } else if (d + rmin < rmax) {
    rel.kind = a.radius < b.radius ? RelationKind::NestedFirstInSecond
                                   : RelationKind::NestedSecondInFirst;
  } else {
    rel.kind = RelationKind::Crossing;
    rel.angle = std::numbers::pi_v<Scalar> - std::acos(crossing_cosine(a.radius, b.radius, d2));
  }
  return rel;
}

template <typename Scalar>
std::optional<Scalar> intersection_angle(const BasicCircle<Scalar>& a, const BasicCircle<Scalar>& b,
                                         const BasicTolerance<Scalar>& tol = {}) {
  auto rel = relation(a, b, tol);
  if (!rel.crossing()) return std::nullopt;
  return rel.angle;
}

/// Crossing pair whose squared center distance equals the sum of squared radii.
template <typename Scalar>
bool orthogonal(const BasicCircle<Scalar>& a, const BasicCircle<Scalar>& b,
                const BasicTolerance<Scalar>& tol = {}) {
  const Scalar s = a.radius * a.radius + b.radius * b.radius;
  const Scalar d2 = (a.center - b.center).squaredNorm();
  if (std::abs(d2 - s) > tol.rel_eps * s) return false;
  return relation(a, b, tol).crossing();
}

/// Crossing pair meeting at an angle of at most pi/2 (within tolerance).
template <typename Scalar>
bool acute_or_right(const BasicCircle<Scalar>& a, const BasicCircle<Scalar>& b,
                    const BasicTolerance<Scalar>& tol = {}) {
  const Scalar s = a.radius * a.radius + b.radius * b.radius;
  const Scalar d2 = (a.center - b.center).squaredNorm();
  return d2 - s >= -tol.rel_eps * s && relation(a, b, tol).crossing();
}

/// Both intersection points of two crossing circles; empty when they do not
/// cross. Throws TangencyError for touching circles.
template <typename Scalar>
std::vector<Point2<Scalar>> intersect_points(const BasicCircle<Scalar>& a, const BasicCircle<Scalar>& b,
                                             const BasicTolerance<Scalar>& tol = {}) {
  auto rel = relation(a, b, tol);
  if (rel.kind == RelationKind::Tangent)
    throw TangencyError("circles '" + a.id + "' and '" + b.id + "' are tangent");
  if (!rel.crossing()) return {};
  const Point2<Scalar> delta = b.center - a.center;
  const Scalar d2 = delta.squaredNorm();
  const Scalar d = std::sqrt(d2);
  const Point2<Scalar> u = delta / d;
  const Scalar along = (d2 + a.radius * a.radius - b.radius * b.radius) / (Scalar(2) * d);
  const Scalar half_chord = std::sqrt(std::max(a.radius * a.radius - along * along, Scalar(0)));
  const Point2<Scalar> base = a.center + along * u;
  return {base + half_chord * perp(u), base - half_chord * perp(u)};
}

template <typename Scalar>
Location point_in_circle(const Point2<Scalar>& p, const BasicCircle<Scalar>& c,
                         const BasicTolerance<Scalar>& tol = {}) {
  const Scalar dist = (p - c.center).norm();
  if (std::abs(dist - c.radius) <= tol.rel_eps * c.radius) return Location::OnBoundary;
  return dist < c.radius ? Location::Inside : Location::Outside;
}

/// Number of points where the closed segment pq meets the boundary of c.
/// A tangent touch counts once.
template <typename Scalar>
int segment_circle_intersections(const Point2<Scalar>& p, const Point2<Scalar>& q,
                                 const BasicCircle<Scalar>& c, const BasicTolerance<Scalar>& tol = {}) {
  const Point2<Scalar> dir = q - p;
  const Scalar len2 = dir.squaredNorm();
  if (!(len2 > Scalar(0))) throw DomainError("segment endpoints coincide");
  const Scalar len = std::sqrt(len2);
  const Scalar r = c.radius;
  const Scalar t_foot = (c.center - p).dot(dir) / len2;
  const Scalar h = std::abs(cross2<Scalar>(dir, c.center - p)) / len;
  const Scalar slack = tol.rel_eps * r / len;
  auto on_segment = [&](Scalar t) { return t >= -slack && t <= Scalar(1) + slack; };

  if (h > r * (Scalar(1) + tol.rel_eps)) return 0;
  if (std::abs(h - r) <= tol.rel_eps * r) return on_segment(t_foot) ? 1 : 0;
  const Scalar half = std::sqrt(r * r - h * h) / len;
  // Roots closer than the tolerance are a single touch at an endpoint.
  if (Scalar(2) * half <= slack) return on_segment(t_foot) ? 1 : 0;
  return int(on_segment(t_foot - half)) + int(on_segment(t_foot + half));
}

/// Image of a point under inversion; the mirror center has no image.
template <typename Scalar>
Point2<Scalar> invert_point(const Point2<Scalar>& p, const BasicCircle<Scalar>& mirror) {
  const Point2<Scalar> v = p - mirror.center;
  const Scalar n2 = v.squaredNorm();
  if (!(n2 > Scalar(0))) throw DegenerateImageError("the mirror center has no image under inversion");
  return mirror.center + (mirror.radius * mirror.radius / n2) * v;
}

template <typename Scalar>
BasicGeneralizedCircle<Scalar> invert(const BasicGeneralizedCircle<Scalar>& obj,
                                      const BasicCircle<Scalar>& mirror,
                                      const BasicTolerance<Scalar>& tol = {}) {
  using G = BasicGeneralizedCircle<Scalar>;
  const Scalar R2 = mirror.radius * mirror.radius;
  const Point2<Scalar>& m = mirror.center;

  if (obj.kind == G::Kind::Circle) {
    const auto& c = obj.circle;
    const Point2<Scalar> v = c.center - m;
    const Scalar delta = v.norm();
    const Scalar r = c.radius;
    if (std::abs(delta - r) <= tol.rel_eps * std::max(r, delta)) {
      // Circle through the mirror center: its farthest point fixes the line.
      const Point2<Scalar> u = v / delta;
      return G::from_line(m + (R2 / (delta + r)) * u, perp(u));
    }
    const Scalar denom = delta * delta - r * r;
    return G::from_circle(BasicCircle<Scalar>(c.id, m + (R2 / denom) * v, R2 * r / std::abs(denom)));
  }

  const Point2<Scalar> u = obj.line.direction;
  const Point2<Scalar> foot = obj.line.point + (m - obj.line.point).dot(u) * u;
  const Point2<Scalar> w = foot - m;
  const Scalar h = w.norm();
  if (h <= tol.rel_eps * mirror.radius) return G::from_line(m, u);
  return G::from_circle(BasicCircle<Scalar>(std::string(), m + (R2 / (Scalar(2) * h * h)) * w,
                                            R2 / (Scalar(2) * h)));
}

}  // namespace orthocircles
