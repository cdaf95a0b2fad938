#pragma once

#include <cstdint>
#include <vector>

#include "slice/point.hpp"
#include "slice/rational.hpp"

namespace slice {

// Default float tolerance for "equals" predicates; well above double noise at
// dimension <= 9, well below any construction scale used here.
inline constexpr double kGeomTol = 1e-10;

// A float simplex is degenerate when |det CM| falls below this relative to
// the squared-volume scale max(d^2)^m; an exact simplex when the determinant
// is exactly zero.
inline constexpr double kDegenerateCmTol = 1e-24;

// 2..5 vertices, consistent dimension. Affine independence is checked by the
// operations that need it, not on construction.
struct Simplex {
  std::vector<FloatPoint> vertices;
  explicit Simplex(std::vector<FloatPoint> v);
  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int dim() const { return vertices.empty() ? 0 : vertices[0].dim(); }
};

struct ExactSimplex {
  std::vector<ExactPoint> vertices;
  explicit ExactSimplex(std::vector<ExactPoint> v);
  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int dim() const { return vertices.empty() ? 0 : vertices[0].dim(); }
};

// Sphere inside an affine subspace: center, radius, and an orthonormal basis
// of the supporting subspace directions; sphere_dim = basis.size() - 1.
struct SphereDescriptor {
  FloatPoint center;
  double radius = 0.0;
  std::vector<std::vector<double>> basis;
  int sphere_dim = 0;
};

// det C = vol^2 * cm_det_scale(m) for an m-simplex, i.e. (-1)^{m+1} 2^m (m!)^2.
long cm_det_scale(int m);

// Bordered determinant of squared pairwise distances. The metric variants take
// the (points x points) squared-distance matrix directly and accept any order
// (used for regular simplices beyond five vertices).
double cayley_menger_det(const Simplex& s);
Rat cayley_menger_det(const ExactSimplex& s);
double cayley_menger_det_metric(const std::vector<double>& d2, int points);
Rat cayley_menger_det_metric(const std::vector<Rat>& d2, int points);

double simplex_volume(const Simplex& s);
double simplex_volume_metric(const std::vector<double>& d2, int points);
Rat simplex_volume_sq(const ExactSimplex& s);
Rat simplex_volume_sq_metric(const std::vector<Rat>& d2, int points);

// First diagonal entry of the inverse bordered matrix; equals -2 r^2 where r
// is the circumradius.
double cm_inverse_corner_metric(const std::vector<double>& d2, int points);
Rat cm_inverse_corner_metric(const std::vector<Rat>& d2, int points);

std::vector<double> squared_distance_matrix(const Simplex& s);
std::vector<Rat> squared_distance_matrix(const ExactSimplex& s);

// Circumcenter from the linear equidistance system (primary path); the result
// is cross-checked against the inverse-matrix corner.
struct CircumSolve {
  std::vector<double> center;
  double radius_sq = 0.0;
};
struct CircumSolveExact {
  std::vector<Rat> center;
  Rat radius_sq;
};
CircumSolve circumcenter(const Simplex& s);
CircumSolveExact circumcenter(const ExactSimplex& s);

SphereDescriptor circumsphere(const Simplex& s);

// Points at distance 1 from every vertex: an (ambient - k)-dimensional sphere
// of radius sqrt(1 - r^2) around the circumcenter, supported in the orthogonal
// complement of the affine hull. Requires 3 or 4 vertices and circumradius
// r < 1.
SphereDescriptor attached_sphere(const Simplex& s, int ambient_dim);

// General form: the set of points at distance target_dist from each of the
// given points (any count), or an error when no such point exists.
SphereDescriptor equidistant_sphere(const std::vector<FloatPoint>& pts,
                                    double target_dist);

// n+1 points in R^n with all pairwise distances equal to edge, centroid at the
// origin.
std::vector<FloatPoint> regular_simplex(int n, double edge);
std::vector<Rat> regular_simplex_d2(int n, const Rat& edge_sq);

// Radius of the inscribed sphere, m V / (sum of facet volumes).
double inradius(const std::vector<FloatPoint>& vertices);
// Exact squared inradius of the regular n-simplex with the given squared edge.
Rat regular_inradius_sq(int n, const Rat& edge_sq);

// Angle between two subspaces given by spanning vector triples: arccos of the
// ratio of the projected to the original 3-volume, in [0, pi/2].
double subspace_angle(const std::vector<std::vector<double>>& basis_p,
                      const std::vector<std::vector<double>>& basis_p2);

// t-dimensional subsphere with the same center and radius, supported in a
// seeded deterministic (t+1)-subspace of the input's supporting subspace.
SphereDescriptor equator(const SphereDescriptor& sph, int t,
                         uint64_t orientation_seed);

std::vector<FloatPoint> sample_sphere_points(const SphereDescriptor& sph,
                                             int count, uint64_t seed);

FloatPoint embed(const FloatPoint& p, int ambient_dim);

}  // namespace slice
