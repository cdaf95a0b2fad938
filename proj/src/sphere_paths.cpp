#include "slice/sphere_paths.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "slice/kernels.hpp"
#include "slice/linalg.hpp"
#include "slice/rng.hpp"

namespace slice {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 to3(const FloatPoint& p) {
  if (p.dim() != 3)
    throw std::invalid_argument("sphere constructions live in R^3");
  return {p.coords[0], p.coords[1], p.coords[2]};
}

FloatPoint from3(const Vec3& v) {
  return FloatPoint({v[0], v[1], v[2]}, 3, 0);
}

Vec3 sub(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
Vec3 add(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}
Vec3 normalize(const Vec3& a) {
  const double n = norm(a);
  if (n < 1e-300) throw std::domain_error("zero vector");
  return scale(a, 1.0 / n);
}

struct SphereFrame {
  Vec3 center;
  double r;
};

SphereFrame frame_of(const SphereDescriptor& s) {
  if (s.center.dim() != 3 || s.sphere_dim != 2)
    throw std::invalid_argument("expected a 2-sphere in R^3");
  return {to3(s.center), s.radius};
}

Vec3 project_to_sphere(const SphereFrame& f, const Vec3& p) {
  return add(f.center, scale(normalize(sub(p, f.center)), f.r));
}

// Point w on the sphere with |w - p| = |w - q| = 1; of the two solutions the
// one on the side of `hint` (a direction from the sphere center).
Vec3 apex_point(const SphereFrame& f, const Vec3& p, const Vec3& q,
                const Vec3& hint) {
  const Vec3 P = sub(p, f.center);
  const Vec3 Q = sub(q, f.center);
  const double r2 = f.r * f.r;
  const double kappa = r2 - 0.5;
  const Vec3 n = cross(P, Q);
  const double nn = norm(n);
  Vec3 axis;
  double alpha;
  if (nn < 1e-12 * r2) {
    // Coincident (or antipodal) pair: one linear constraint w . P = kappa.
    alpha = kappa / r2;
    // Deterministic tangent direction.
    const Vec3 e = std::fabs(P[0]) <= std::fabs(P[1])
                       ? (std::fabs(P[0]) <= std::fabs(P[2])
                              ? Vec3{1, 0, 0}
                              : Vec3{0, 0, 1})
                       : (std::fabs(P[1]) <= std::fabs(P[2])
                              ? Vec3{0, 1, 0}
                              : Vec3{0, 0, 1});
    axis = normalize(cross(P, e));
    const double gamma2 = r2 - alpha * alpha * r2;
    if (gamma2 < 0) throw std::domain_error("no unit-distance apex exists");
    Vec3 w = add(scale(P, alpha), scale(axis, std::sqrt(gamma2)));
    if (dot(w, hint) < 0)
      w = add(scale(P, alpha), scale(axis, -std::sqrt(gamma2)));
    return add(f.center, w);
  }
  const Vec3 a = add(P, Q);
  alpha = kappa / (r2 + dot(P, Q));
  const double gamma2 = r2 - alpha * alpha * dot(a, a);
  if (gamma2 < 0) throw std::domain_error("no unit-distance apex exists");
  const Vec3 nh = scale(n, 1.0 / nn);
  Vec3 w = add(scale(a, alpha), scale(nh, std::sqrt(gamma2)));
  if (dot(w, hint) < 0)
    w = add(scale(a, alpha), scale(nh, -std::sqrt(gamma2)));
  return add(f.center, w);
}

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
  const Vec3 ab = sub(b, a);
  const double len2 = dot(ab, ab);
  double t = len2 > 0 ? dot(sub(p, a), ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return norm(sub(p, add(a, scale(ab, t))));
}

double distance_to_polyline(const std::vector<FloatPoint>& samples,
                            const Vec3& p) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < samples.size(); ++i)
    best = std::min(best,
                    point_segment_distance(p, to3(samples[i]),
                                           to3(samples[i + 1])));
  return best;
}

}  // namespace

double reach_radius(double eps) {
  return std::sin(eps / 2.0) * std::sin(eps / 4.0);
}

double curve_diameter_threshold(double radius) {
  return std::sqrt(4.0 * radius * radius - 1.0) / radius;
}

SphereCurve make_great_circle(const SphereDescriptor& sphere, int samples,
                              uint64_t seed) {
  if (samples < 3) throw std::invalid_argument("need at least 3 samples");
  const SphereFrame f = frame_of(sphere);
  Rng rng(seed);
  auto g1 = rng.unit_vector(3);
  auto g2 = rng.unit_vector(3);
  auto basis = linalg::gram_schmidt({g1, g2});
  while (basis.size() < 2) {
    basis.push_back(rng.unit_vector(3));
    basis = linalg::gram_schmidt(basis);
  }
  const Vec3 e1{basis[0][0], basis[0][1], basis[0][2]};
  const Vec3 e2{basis[1][0], basis[1][1], basis[1][2]};
  SphereCurve curve;
  curve.sphere = sphere;
  curve.samples.reserve(samples);
  constexpr double two_pi = 6.283185307179586476925286766559;
  for (int i = 0; i < samples; ++i) {
    const double t = two_pi * i / samples;
    curve.samples.push_back(from3(add(
        f.center,
        add(scale(e1, f.r * std::cos(t)), scale(e2, f.r * std::sin(t))))));
  }
  std::vector<double> flat(3 * curve.samples.size());
  for (size_t i = 0; i < curve.samples.size(); ++i)
    std::copy(curve.samples[i].coords.begin(), curve.samples[i].coords.end(),
              flat.begin() + 3 * i);
  curve.diameter =
      kernels::max_pairwise_distance(flat.data(), curve.samples.size(), 3);
  return curve;
}

std::array<FloatPoint, 4> four_step_path(
    const SphereDescriptor& sphere, const FloatPoint& u,
    const FloatPoint& target, double eps,
    const std::optional<std::vector<double>>& side_hint) {
  if (!(eps > 0.0) || eps >= 1.0)
    throw std::invalid_argument("eps must lie in (0, 1)");
  const SphereFrame f = frame_of(sphere);
  if (f.r <= std::sqrt(0.5))
    throw std::invalid_argument("sphere radius must exceed sqrt(1/2)");
  const Vec3 U = to3(u);
  const Vec3 T = to3(target);
  for (const Vec3& p : {U, T})
    if (std::fabs(norm(sub(p, f.center)) - f.r) > 1e-9)
      throw std::invalid_argument("point not on the sphere");
  const double g = norm(sub(T, U));
  const double gamma = reach_radius(eps);
  if (g > gamma * (1.0 + 1e-12))
    throw std::invalid_argument("target outside the reach radius");

  Vec3 hint;
  if (side_hint) {
    if (side_hint->size() != 3)
      throw std::invalid_argument("side hint must be a 3-vector");
    hint = {(*side_hint)[0], (*side_hint)[1], (*side_hint)[2]};
  } else {
    hint = {0, 0, 0};
  }

  const Vec3 uhat = normalize(sub(U, f.center));

  if (g < 1e-13) {
    // Zero-displacement chain: v2 = u, v4 = target = u.
    if (norm(hint) < 1e-12) hint = uhat;
    const Vec3 v1 = apex_point(f, U, U, hint);
    return {from3(v1), from3(U), from3(v1), from3(T)};
  }

  // Tangent frame at u: walking direction and its in-sphere normal.
  Vec3 d = sub(T, U);
  d = sub(d, scale(uhat, dot(d, uhat)));
  const Vec3 dhat = normalize(d);
  const Vec3 nhat = normalize(cross(uhat, dhat));
  if (norm(hint) < 1e-12) hint = dhat;

  // Perpendicular offset dominates the forward step, keeping the apex points
  // close to the unit-distance locus of u.
  const double l1 = 0.95 * 2.0 * std::sin(eps / 4.0);
  const Vec3 v2 = project_to_sphere(f, add(U, scale(nhat, l1)));
  const Vec3 v1 = apex_point(f, U, v2, hint);
  const Vec3 v3 = apex_point(f, v2, T, hint);

  const std::array<Vec3, 4> pts{v1, v2, v3, T};
  double residual = 0.0;
  const Vec3* prev = &U;
  for (const auto& p : pts) {
    residual = std::max(residual, std::fabs(norm(sub(p, *prev)) - 1.0));
    prev = &p;
  }
  if (residual > 1e-11)
    throw std::runtime_error("path construction did not converge; residual " +
                             std::to_string(residual));
  return {from3(v1), from3(v2), from3(v3), from3(T)};
}

OddCycleConstruction odd_cycle_on_curve(const SphereCurve& curve, double eps) {
  if (!(eps > 0.0) || eps >= 1.0)
    throw std::invalid_argument("eps must lie in (0, 1)");
  const SphereFrame f = frame_of(curve.sphere);
  if (f.r <= std::sqrt(0.5))
    throw std::invalid_argument("sphere radius must exceed sqrt(1/2)");
  const double threshold = curve_diameter_threshold(f.r);
  if (!(curve.diameter > threshold))
    throw std::domain_error(
        "curve diameter " + std::to_string(curve.diameter) +
        " does not exceed the odd-cycle threshold sqrt(4r^2-1)/r = " +
        std::to_string(threshold));
  if (curve.samples.size() < 3)
    throw std::invalid_argument("curve needs at least 3 samples");

  // Locate the first point at unit distance from the start, walking the
  // polyline; then pin it onto the sphere exactly.
  const Vec3 u0 = to3(curve.samples[0]);
  size_t seg = 0;
  bool found = false;
  for (size_t i = 1; i < curve.samples.size(); ++i) {
    if (norm(sub(to3(curve.samples[i]), u0)) >= 1.0) {
      seg = i - 1;
      found = true;
      break;
    }
  }
  if (!found)
    throw std::domain_error(
        "curve never reaches unit distance from its start point");
  const Vec3 a = to3(curve.samples[seg]);
  const Vec3 b = to3(curve.samples[seg + 1]);
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    const Vec3 p = project_to_sphere(f, add(a, scale(sub(b, a), mid)));
    (norm(sub(p, u0)) < 1.0 ? lo : hi) = mid;
  }
  const Vec3 vstar =
      project_to_sphere(f, add(a, scale(sub(b, a), 0.5 * (lo + hi))));

  // Arc-length parametrization up to v*.
  std::vector<Vec3> walk;
  walk.push_back(u0);
  for (size_t i = 1; i <= seg; ++i) walk.push_back(to3(curve.samples[i]));
  walk.push_back(vstar);
  std::vector<double> cum(walk.size(), 0.0);
  for (size_t i = 1; i < walk.size(); ++i)
    cum[i] = cum[i - 1] + norm(sub(walk[i], walk[i - 1]));
  const double total = cum.back();

  const double gamma = reach_radius(eps);
  const int steps = std::max(1, static_cast<int>(std::ceil(total / (0.9 * gamma))));
  auto at_arc = [&](double s) -> Vec3 {
    if (s <= 0) return walk.front();
    if (s >= total) return walk.back();
    const auto it = std::upper_bound(cum.begin(), cum.end(), s);
    const size_t i = it - cum.begin();
    const double t = (s - cum[i - 1]) / (cum[i] - cum[i - 1]);
    return project_to_sphere(f, add(walk[i - 1],
                                    scale(sub(walk[i], walk[i - 1]), t)));
  };

  std::vector<FloatPoint> pts;
  pts.reserve(4 * steps + 1);
  pts.push_back(from3(u0));
  Vec3 prev = u0;
  for (int j = 1; j <= steps; ++j) {
    const Vec3 next = j == steps ? vstar : at_arc(total * j / steps);
    const std::vector<double> hint{vstar[0] - prev[0], vstar[1] - prev[1],
                                   vstar[2] - prev[2]};
    auto path = four_step_path(curve.sphere, from3(prev), from3(next), eps,
                               norm({hint[0], hint[1], hint[2]}) > 1e-9
                                   ? std::optional<std::vector<double>>(hint)
                                   : std::nullopt);
    pts.push_back(path[0]);
    pts.push_back(path[1]);
    pts.push_back(path[2]);
    pts.push_back(from3(next));
    prev = next;
  }

  OddCycleConstruction out;
  const size_t cycle_len = pts.size();  // 4*steps + 1, odd
  out.cycle.resize(cycle_len);
  for (size_t i = 0; i < cycle_len; ++i) out.cycle[i] = static_cast<int>(i);

  for (size_t i = 0; i < cycle_len; ++i) {
    const Vec3 p = to3(pts[i]);
    const Vec3 q = to3(pts[(i + 1) % cycle_len]);
    out.max_edge_residual =
        std::max(out.max_edge_residual, std::fabs(norm(sub(p, q)) - 1.0));
    out.max_sphere_residual =
        std::max(out.max_sphere_residual,
                 std::fabs(norm(sub(p, f.center)) - f.r));
    out.max_curve_distance =
        std::max(out.max_curve_distance, distance_to_polyline(curve.samples, p));
  }
  if (out.max_edge_residual > 1e-9)
    throw std::runtime_error("cycle edge residual above tolerance");
  if (out.max_curve_distance > eps)
    throw std::runtime_error(
        "construction left the eps-neighbourhood of the curve");

  out.graph = build_udg(std::move(pts), 1e-9);
  if (out.graph.vertex_count() != cycle_len)
    throw std::runtime_error("cycle points collapsed under deduplication");
  return out;
}

PentagonFrame pentagon_points(const FloatPoint& u, double nu) {
  if (!(nu > 0.0) || nu >= 1.0)
    throw std::invalid_argument("nu must lie in (0, 1)");
  if (u.dim() != 6)
    throw std::invalid_argument("pentagon frame expects 6 coordinates");
  for (int d = 3; d < 6; ++d)
    if (std::fabs(u.coords[d]) > kGeomTol)
      throw std::invalid_argument(
          "point must have a zero block beyond its first three coordinates");
  PentagonFrame out;
  out.u = u;
  out.nu = nu;
  constexpr double two_pi = 6.283185307179586476925286766559;
  for (int k = 1; k <= 5; ++k) {
    std::vector<double> c = u.coords;
    c[3] = nu * std::cos(two_pi * k / 5.0);
    c[4] = nu * std::sin(two_pi * k / 5.0);
    c[5] = 0.0;
    out.w[k - 1] = FloatPoint(std::move(c), u.dim_main, u.dim_slab);
  }
  return out;
}

}  // namespace slice
