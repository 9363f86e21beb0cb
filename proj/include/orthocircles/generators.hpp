#pragma once

#include <cstdint>
#include <vector>

#include "orthocircles/arrangement.hpp"

namespace orthocircles {

/// Constants of the nested-wheels construction with x wheels of a satellites.
/// Vectors are indexed by wheel, innermost first (wheel i is entry i - 1).
struct BParameters {
  int x = 0;
  int a = 0;
  /// Growth ratio between consecutive wheels.
  double alpha = 0.0;
  std::vector<double> orbit_radii;
  std::vector<double> satellite_radii;
  std::vector<double> hub_radii;
  /// centers[i][j]: satellite j + 1 of wheel i + 1.
  std::vector<std::vector<Point>> centers;
};

/// Throws DomainError unless a >= 5 and x >= 1.
BParameters eval_b_parameters(int x, int a);

/// a satellites of radius `scale` with centers on an orbit, plus a hub
/// centered at the origin, all rotated by `rotation` radians.
/// Ids: hub "H1", satellites "S1.1" ... "S1.a".
Arrangement make_wheel(int a, double scale = 1.0, double rotation = 0.0, Tolerance tol = {});

/// x nested wheels with a satellites each. Ids: hubs "H<i>", satellites "S<i>.<j>".
Arrangement make_B(int x, int a, Tolerance tol = {});

/// make_B(x, 5) keeping only the innermost hub.
Arrangement make_nonnested_B(int x, Tolerance tol = {});

/// Adds a small circle around every intersection point, orthogonal to the
/// two circles through it and clear of every other circle. Added ids are "T1", "T2", ...
Arrangement augment_triangles(const Arrangement& arr);

/// Multiplies every radius by an independent factor uniform in [0.97, 1.0),
/// resampling (at most 100 times) until the result validates Acute and no
/// pair became tangent or nested.
Arrangement perturb_acute(const Arrangement& arr, std::uint64_t seed);

/// Applies fixed radius factors; throws PerturbationError if the result is not
/// a valid acute arrangement with the original nesting.
Arrangement scale_radii_acute(const Arrangement& arr, const std::vector<double>& factors);

/// Random nonnested orthogonal arrangement grown one circle at a time. Ids "C1" ... "Cn".
Arrangement make_random_nonnested(int n, std::uint64_t seed, Tolerance tol = {});

}  // namespace orthocircles
