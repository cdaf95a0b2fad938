#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "slice/geom.hpp"
#include "slice/udg.hpp"

namespace slice {

// Polyline stand-in for a curve on a 2-sphere in R^3; samples lie on the
// sphere, diameter is the max pairwise sample distance.
struct SphereCurve {
  SphereDescriptor sphere;
  std::vector<FloatPoint> samples;
  double diameter = 0.0;
};

SphereCurve make_great_circle(const SphereDescriptor& sphere, int samples,
                              uint64_t seed);

// Reach radius of a 4-step unit-edge path: sin(eps/2) sin(eps/4).
double reach_radius(double eps);

// Diameter threshold sqrt(4 r^2 - 1) / r above which a curve supports the
// odd-cycle construction.
double curve_diameter_threshold(double radius);

// Unit-edge chain u -> v1 -> v2 -> v3 -> target on a 2-sphere of radius
// r > sqrt(1/2); target must lie within reach_radius(eps) of u. `side_hint`
// selects which of the two symmetric solutions the intermediate apex points
// take (any non-degenerate direction works).
std::array<FloatPoint, 4> four_step_path(
    const SphereDescriptor& sphere, const FloatPoint& u,
    const FloatPoint& target, double eps,
    const std::optional<std::vector<double>>& side_hint = {});

struct OddCycleConstruction {
  UnitDistanceGraph graph;
  std::vector<int> cycle;  // vertex indices, closing edge back to cycle[0]
  double max_edge_residual = 0.0;
  double max_sphere_residual = 0.0;
  double max_curve_distance = 0.0;
};

// Walks the curve from its first sample to a point at unit distance in steps
// of 0.9 * reach_radius(eps), expands each step into a 4-step unit path, and
// closes the cycle with the unit edge back to the start. The cycle length is
// 4k+1, hence odd.
OddCycleConstruction odd_cycle_on_curve(const SphereCurve& curve, double eps);

// Regular pentagon displaced into the 4th/5th coordinates:
// w_k = (u1, u2, u3, nu cos(2 pi k / 5), nu sin(2 pi k / 5), 0), k = 1..5.
// Points p, q that differ only in their first three coordinates keep
// |w_{p,k} - w_{q,k}| = |p - q| exactly.
struct PentagonFrame {
  FloatPoint u;
  double nu = 0.0;
  std::array<FloatPoint, 5> w;
};

PentagonFrame pentagon_points(const FloatPoint& u, double nu);

}  // namespace slice
