#include "slice/geom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "slice/linalg.hpp"
#include "slice/rng.hpp"

namespace slice {

namespace {

template <class S>
void check_simplex_shape(const S& s) {
  const int m = s.vertex_count();
  if (m < 2 || m > 5)
    throw std::invalid_argument("simplex requires 2..5 vertices");
  for (const auto& v : s.vertices)
    if (v.dim() != s.vertices[0].dim())
      throw std::invalid_argument("simplex vertices of mismatched dimension");
}

// Bordered matrix [[0, 1...],[1, D]] for a (points x points) squared-distance
// matrix D.
template <class T>
std::vector<T> bordered(const std::vector<T>& d2, int points) {
  const int n = points + 1;
  std::vector<T> c(static_cast<size_t>(n) * n, T(0));
  for (int i = 1; i < n; ++i) {
    c[i] = T(1);
    c[i * n] = T(1);
  }
  for (int i = 0; i < points; ++i)
    for (int j = 0; j < points; ++j)
      c[(i + 1) * n + (j + 1)] = d2[i * points + j];
  return c;
}

template <class T>
T cm_det_impl(const std::vector<T>& d2, int points) {
  if (points < 2)
    throw std::invalid_argument("squared-distance matrix needs >= 2 points");
  if (static_cast<int>(d2.size()) != points * points)
    throw std::invalid_argument("squared-distance matrix shape mismatch");
  return linalg::determinant(bordered(d2, points), points + 1);
}

// (C^{-1})_00 = det(D) / det(C); follows from solving C z = e0, whose
// distance-block component is the circumcenter in barycentric form, giving
// z0 = -2 r^2.
template <class T>
T cm_corner_impl(const std::vector<T>& d2, int points) {
  const T det_c = cm_det_impl(d2, points);
  if (det_c == T(0)) throw std::domain_error("degenerate simplex");
  const T det_d = linalg::determinant(d2, points);
  return det_d / det_c;
}

std::vector<double> diff(const FloatPoint& a, const FloatPoint& b) {
  std::vector<double> d(a.dim());
  for (int i = 0; i < a.dim(); ++i) d[i] = a.coords[i] - b.coords[i];
  return d;
}

template <class T>
struct PointTraits;

template <>
struct PointTraits<FloatPoint> {
  using Scalar = double;
};
template <>
struct PointTraits<ExactPoint> {
  using Scalar = Rat;
};

template <class P>
auto coord_of(const P& p, int i) {
  if constexpr (std::is_same_v<P, FloatPoint>) {
    return p.coords[i];
  } else {
    return p.coord(i);
  }
}

// Circumcenter via the equidistance system 2 (p_i - p_0) . (c - p_0) =
// |p_i - p_0|^2 solved in the affine-hull coordinates lambda.
template <class P>
std::pair<std::vector<typename PointTraits<P>::Scalar>,
          typename PointTraits<P>::Scalar>
circumcenter_impl(const std::vector<P>& verts) {
  using S = typename PointTraits<P>::Scalar;
  const int m = static_cast<int>(verts.size()) - 1;
  const int dim = verts[0].dim();
  // Gram matrix of edge vectors from vertex 0.
  std::vector<S> gram(static_cast<size_t>(m) * m, S(0));
  std::vector<S> rhs(m, S(0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      S dot{};
      for (int d = 0; d < dim; ++d)
        dot += (coord_of(verts[i + 1], d) - coord_of(verts[0], d)) *
               (coord_of(verts[j + 1], d) - coord_of(verts[0], d));
      gram[i * m + j] = S(2) * dot;
    }
    S n2{};
    for (int d = 0; d < dim; ++d) {
      S e = coord_of(verts[i + 1], d) - coord_of(verts[0], d);
      n2 += e * e;
    }
    rhs[i] = n2;
  }
  std::vector<S> lambda;
  try {
    lambda = linalg::solve(gram, rhs, m);
  } catch (const std::domain_error&) {
    throw std::domain_error("degenerate simplex");
  }
  std::vector<S> center(dim, S(0));
  for (int d = 0; d < dim; ++d) {
    S x = coord_of(verts[0], d);
    for (int i = 0; i < m; ++i)
      x += lambda[i] * (coord_of(verts[i + 1], d) - coord_of(verts[0], d));
    center[d] = x;
  }
  S r2{};
  for (int d = 0; d < dim; ++d) {
    S e = center[d] - coord_of(verts[0], d);
    r2 += e * e;
  }
  return {center, r2};
}

std::vector<std::vector<double>> hull_basis(
    const std::vector<FloatPoint>& verts) {
  std::vector<std::vector<double>> dirs;
  for (size_t i = 1; i < verts.size(); ++i)
    dirs.push_back(diff(verts[i], verts[0]));
  return linalg::gram_schmidt(dirs);
}

// Degeneracy is scale-relative: |det| against the squared-volume scale
// max(d^2)^m, so small simplices are not misread as flat.
bool cm_degenerate(double det, const std::vector<double>& d2, int points) {
  double mx = 0.0;
  for (double v : d2) mx = std::max(mx, std::fabs(v));
  return std::fabs(det) <= kDegenerateCmTol * std::pow(mx, points - 1);
}

}  // namespace

Simplex::Simplex(std::vector<FloatPoint> v) : vertices(std::move(v)) {
  check_simplex_shape(*this);
}

ExactSimplex::ExactSimplex(std::vector<ExactPoint> v) : vertices(std::move(v)) {
  check_simplex_shape(*this);
  for (const auto& p : vertices)
    if (p.main.size() != vertices[0].main.size())
      throw std::invalid_argument("simplex vertices of mismatched shape");
}

long cm_det_scale(int m) {
  long f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  long s = (1L << m) * f * f;
  return (m % 2 == 0) ? -s : s;
}

std::vector<double> squared_distance_matrix(const Simplex& s) {
  const int n = s.vertex_count();
  std::vector<double> d2(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      d2[i * n + j] = d2[j * n + i] = dist_sq(s.vertices[i], s.vertices[j]);
  return d2;
}

std::vector<Rat> squared_distance_matrix(const ExactSimplex& s) {
  const int n = s.vertex_count();
  std::vector<Rat> d2(static_cast<size_t>(n) * n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      d2[i * n + j] = d2[j * n + i] = dist_sq(s.vertices[i], s.vertices[j]);
  return d2;
}

double cayley_menger_det(const Simplex& s) {
  return cm_det_impl(squared_distance_matrix(s), s.vertex_count());
}

Rat cayley_menger_det(const ExactSimplex& s) {
  return cm_det_impl(squared_distance_matrix(s), s.vertex_count());
}

double cayley_menger_det_metric(const std::vector<double>& d2, int points) {
  return cm_det_impl(d2, points);
}

Rat cayley_menger_det_metric(const std::vector<Rat>& d2, int points) {
  return cm_det_impl(d2, points);
}

double simplex_volume_metric(const std::vector<double>& d2, int points) {
  const int m = points - 1;
  const double v2 = cm_det_impl(d2, points) / static_cast<double>(cm_det_scale(m));
  return v2 <= 0.0 ? 0.0 : std::sqrt(v2);
}

double simplex_volume(const Simplex& s) {
  if (s.vertex_count() < 3)
    throw std::invalid_argument("volume requires 3..5 vertices");
  return simplex_volume_metric(squared_distance_matrix(s), s.vertex_count());
}

Rat simplex_volume_sq_metric(const std::vector<Rat>& d2, int points) {
  const int m = points - 1;
  return cm_det_impl(d2, points) / Rat(cm_det_scale(m));
}

Rat simplex_volume_sq(const ExactSimplex& s) {
  if (s.vertex_count() < 3)
    throw std::invalid_argument("volume requires 3..5 vertices");
  return simplex_volume_sq_metric(squared_distance_matrix(s),
                                  s.vertex_count());
}

double cm_inverse_corner_metric(const std::vector<double>& d2, int points) {
  return cm_corner_impl(d2, points);
}

Rat cm_inverse_corner_metric(const std::vector<Rat>& d2, int points) {
  return cm_corner_impl(d2, points);
}

CircumSolve circumcenter(const Simplex& s) {
  const auto d2 = squared_distance_matrix(s);
  const double det_c = cm_det_impl(d2, s.vertex_count());
  if (cm_degenerate(det_c, d2, s.vertex_count()))
    throw std::domain_error("degenerate simplex");
  auto [center, r2] = circumcenter_impl(s.vertices);
  // Cross-check against the inverse-matrix corner identity 2 r^2 = -(C^-1)_00.
  // The corner route loses precision on near-flat simplices, so the check is
  // enforced only in the well-conditioned regime; the direct solve is the
  // primary path either way.
  double max_d2 = 0.0;
  for (double v : d2) max_d2 = std::max(max_d2, std::fabs(v));
  const double flatness =
      std::fabs(det_c) / std::pow(std::max(1.0, max_d2), s.vertex_count() - 1);
  if (flatness > 1e-2) {
    const double corner = cm_corner_impl(d2, s.vertex_count());
    if (std::fabs(2.0 * r2 + corner) > 1e-9 * std::max(1.0, 2.0 * r2))
      throw std::runtime_error("circumcenter cross-check failed");
  }
  return {std::move(center), r2};
}

CircumSolveExact circumcenter(const ExactSimplex& s) {
  const auto d2 = squared_distance_matrix(s);
  if (cm_det_impl(d2, s.vertex_count()) == 0)
    throw std::domain_error("degenerate simplex");
  auto [center, r2] = circumcenter_impl(s.vertices);
  const Rat corner = cm_corner_impl(d2, s.vertex_count());
  if (Rat(2) * r2 != -corner)
    throw std::runtime_error("circumcenter cross-check failed");
  return {std::move(center), r2};
}

SphereDescriptor circumsphere(const Simplex& s) {
  auto cs = circumcenter(s);
  auto basis = hull_basis(s.vertices);
  if (static_cast<int>(basis.size()) != s.vertex_count() - 1)
    throw std::domain_error("degenerate simplex");
  SphereDescriptor out;
  out.center = FloatPoint(std::move(cs.center), s.vertices[0].dim_main,
                          s.vertices[0].dim_slab);
  out.radius = std::sqrt(cs.radius_sq);
  out.sphere_dim = static_cast<int>(basis.size()) - 1;
  out.basis = std::move(basis);
  return out;
}

SphereDescriptor attached_sphere(const Simplex& s, int ambient_dim) {
  const int k = s.vertex_count();
  if (k < 3 || k > 4)
    throw std::invalid_argument("attached sphere requires 3 or 4 vertices");
  if (s.dim() != ambient_dim)
    throw std::invalid_argument(
        "vertices must be embedded in the ambient dimension");
  if (ambient_dim < k)
    throw std::invalid_argument("ambient dimension too small");
  auto cs = circumcenter(s);
  if (cs.radius_sq >= 1.0) throw std::domain_error("empty attached sphere");
  auto hb = hull_basis(s.vertices);
  if (static_cast<int>(hb.size()) != k - 1)
    throw std::domain_error("degenerate simplex");
  SphereDescriptor out;
  out.center = FloatPoint(std::move(cs.center), s.vertices[0].dim_main,
                          s.vertices[0].dim_slab);
  out.radius = std::sqrt(1.0 - cs.radius_sq);
  out.basis = linalg::orthonormal_complement(hb, ambient_dim);
  out.sphere_dim = static_cast<int>(out.basis.size()) - 1;
  if (out.sphere_dim != ambient_dim - k)
    throw std::runtime_error("attached sphere dimension mismatch");
  return out;
}

SphereDescriptor equidistant_sphere(const std::vector<FloatPoint>& pts,
                                    double target_dist) {
  if (pts.size() < 2)
    throw std::invalid_argument("equidistant sphere needs >= 2 points");
  const int dim = pts[0].dim();
  for (const auto& p : pts)
    if (p.dim() != dim)
      throw std::invalid_argument("points of mismatched dimension");

  std::vector<std::vector<double>> dirs;
  for (size_t i = 1; i < pts.size(); ++i) dirs.push_back(diff(pts[i], pts[0]));
  auto hb = linalg::gram_schmidt(dirs);
  const int p = static_cast<int>(hb.size());

  // Solve 2 d_i . (H y) = |d_i|^2 by normal equations in hull coordinates.
  const int m = static_cast<int>(dirs.size());
  std::vector<double> M(static_cast<size_t>(m) * p), rhs(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < p; ++j)
      M[i * p + j] = 2.0 * linalg::dot(dirs[i], hb[j]);
    rhs[i] = linalg::dot(dirs[i], dirs[i]);
  }
  std::vector<double> ata(static_cast<size_t>(p) * p, 0.0), atb(p, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < p; ++j) {
      atb[j] += M[i * p + j] * rhs[i];
      for (int l = 0; l < p; ++l) ata[j * p + l] += M[i * p + j] * M[i * p + l];
    }
  }
  std::vector<double> y = linalg::solve(ata, atb, p);
  double max_res = 0.0;
  for (int i = 0; i < m; ++i) {
    double r = -rhs[i];
    for (int j = 0; j < p; ++j) r += M[i * p + j] * y[j];
    max_res = std::max(max_res, std::fabs(r));
  }
  if (max_res > 1e-8)
    throw std::domain_error("no common equidistant point (inconsistent set)");

  std::vector<double> center(dim);
  for (int d = 0; d < dim; ++d) {
    double x = pts[0].coords[d];
    for (int j = 0; j < p; ++j) x += y[j] * hb[j][d];
    center[d] = x;
  }
  double r2 = 0.0;
  for (double c : y) r2 += c * c;
  const double t2 = target_dist * target_dist;
  if (r2 >= t2) throw std::domain_error("empty equidistant sphere");

  SphereDescriptor out;
  out.center = FloatPoint(std::move(center), pts[0].dim_main, pts[0].dim_slab);
  out.radius = std::sqrt(t2 - r2);
  out.basis = linalg::orthonormal_complement(hb, dim);
  out.sphere_dim = static_cast<int>(out.basis.size()) - 1;
  return out;
}

std::vector<FloatPoint> regular_simplex(int n, double edge) {
  if (n < 1) throw std::invalid_argument("regular simplex requires n >= 1");
  if (edge <= 0) throw std::invalid_argument("edge must be positive");
  // Scaled standard-basis construction expressed in the Helmert basis of the
  // sum-zero subspace; centroid lands at the origin by construction.
  const double scale = edge / std::sqrt(2.0);
  std::vector<FloatPoint> out;
  out.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    std::vector<double> x(n, 0.0);
    for (int k = 1; k <= n; ++k) {
      const double denom = std::sqrt(static_cast<double>(k) * (k + 1));
      double h;
      if (i < k)
        h = 1.0 / denom;
      else if (i == k)
        h = -static_cast<double>(k) / denom;
      else
        h = 0.0;
      x[k - 1] = scale * h;
    }
    out.emplace_back(std::move(x), n, 0);
  }
  return out;
}

std::vector<Rat> regular_simplex_d2(int n, const Rat& edge_sq) {
  const int pts = n + 1;
  std::vector<Rat> d2(static_cast<size_t>(pts) * pts, Rat(0));
  for (int i = 0; i < pts; ++i)
    for (int j = 0; j < pts; ++j)
      if (i != j) d2[i * pts + j] = edge_sq;
  return d2;
}

double inradius(const std::vector<FloatPoint>& vertices) {
  const int points = static_cast<int>(vertices.size());
  if (points < 2) throw std::invalid_argument("inradius requires >= 2 vertices");
  const int m = points - 1;
  const int dim = vertices[0].dim();
  std::vector<double> d2(static_cast<size_t>(points) * points, 0.0);
  for (int i = 0; i < points; ++i)
    for (int j = i + 1; j < points; ++j) {
      double s = 0;
      for (int d = 0; d < dim; ++d) {
        const double e = vertices[i].coords[d] - vertices[j].coords[d];
        s += e * e;
      }
      d2[i * points + j] = d2[j * points + i] = s;
    }
  if (cm_degenerate(cm_det_impl(d2, points), d2, points))
    throw std::domain_error("degenerate simplex");
  const double vol = simplex_volume_metric(d2, points);
  if (vol <= 0.0) throw std::domain_error("degenerate simplex");
  double facet_sum = 0.0;
  for (int drop = 0; drop < points; ++drop) {
    if (m == 1) {
      facet_sum += 1.0;  // 0-volume of a vertex
      continue;
    }
    std::vector<double> f2(static_cast<size_t>(m) * m, 0.0);
    int r = 0;
    for (int i = 0; i < points; ++i) {
      if (i == drop) continue;
      int c = 0;
      for (int j = 0; j < points; ++j) {
        if (j == drop) continue;
        f2[r * m + c] = d2[i * points + j];
        ++c;
      }
      ++r;
    }
    facet_sum += simplex_volume_metric(f2, m);
  }
  return static_cast<double>(m) * vol / facet_sum;
}

Rat regular_inradius_sq(int n, const Rat& edge_sq) {
  if (n < 1) throw std::invalid_argument("regular simplex requires n >= 1");
  // All facets of a regular simplex are congruent, so
  // r^2 = m^2 V_m^2 / ((m+1)^2 V_{m-1}^2); both squared volumes are rational.
  const Rat vm2 = simplex_volume_sq_metric(regular_simplex_d2(n, edge_sq), n + 1);
  Rat vf2;
  if (n == 1) {
    vf2 = 1;  // 0-simplex
  } else {
    vf2 = simplex_volume_sq_metric(regular_simplex_d2(n - 1, edge_sq), n);
  }
  return Rat(n) * Rat(n) * vm2 / (Rat(n + 1) * Rat(n + 1) * vf2);
}

double subspace_angle(const std::vector<std::vector<double>>& basis_p,
                      const std::vector<std::vector<double>>& basis_p2) {
  if (basis_p.empty() || basis_p.size() != basis_p2.size())
    throw std::invalid_argument("subspace bases of mismatched rank");
  const int k = static_cast<int>(basis_p.size());
  auto gram_det = [&](const std::vector<std::vector<double>>& v) {
    std::vector<double> g(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) g[i * k + j] = linalg::dot(v[i], v[j]);
    return linalg::determinant(g, k);
  };
  const double vol2 = gram_det(basis_p);
  if (vol2 < 1e-24) throw std::domain_error("degenerate basis");

  auto q = linalg::gram_schmidt(basis_p2);
  if (q.size() != basis_p2.size()) throw std::domain_error("degenerate basis");
  std::vector<std::vector<double>> proj;
  for (const auto& e : basis_p) {
    std::vector<double> pe(e.size(), 0.0);
    for (const auto& b : q) linalg::add_scaled(pe, linalg::dot(e, b), b);
    proj.push_back(std::move(pe));
  }
  const double pvol2 = std::max(0.0, gram_det(proj));
  const double ratio = std::clamp(std::sqrt(pvol2 / vol2), 0.0, 1.0);
  return std::acos(ratio);
}

SphereDescriptor equator(const SphereDescriptor& sph, int t,
                         uint64_t orientation_seed) {
  if (t < 0 || t >= sph.sphere_dim)
    throw std::invalid_argument("equator dimension must satisfy 0 <= t < sphere_dim");
  const int s1 = static_cast<int>(sph.basis.size());
  // Seeded rotation of the supporting-subspace coordinates, then keep the
  // first t+1 directions.
  Rng rng(orientation_seed);
  std::vector<std::vector<double>> coeffs;
  for (int i = 0; i < s1; ++i) coeffs.push_back(rng.gaussian_vector(s1));
  auto rot = linalg::gram_schmidt(coeffs);
  while (static_cast<int>(rot.size()) < s1) {
    coeffs.push_back(rng.gaussian_vector(s1));
    rot = linalg::gram_schmidt(coeffs);
  }
  const int dim = sph.center.dim();
  std::vector<std::vector<double>> nb;
  for (int i = 0; i <= t; ++i) {
    std::vector<double> v(dim, 0.0);
    for (int j = 0; j < s1; ++j)
      for (int d = 0; d < dim; ++d) v[d] += rot[i][j] * sph.basis[j][d];
    nb.push_back(std::move(v));
  }
  nb = linalg::gram_schmidt(nb);
  if (static_cast<int>(nb.size()) != t + 1)
    throw std::runtime_error("equator basis collapse");
  SphereDescriptor out;
  out.center = sph.center;
  out.radius = sph.radius;
  out.basis = std::move(nb);
  out.sphere_dim = t;
  return out;
}

std::vector<FloatPoint> sample_sphere_points(const SphereDescriptor& sph,
                                             int count, uint64_t seed) {
  Rng rng(seed);
  const int s1 = static_cast<int>(sph.basis.size());
  const int dim = sph.center.dim();
  std::vector<FloatPoint> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    auto c = rng.unit_vector(s1);
    std::vector<double> x = sph.center.coords;
    for (int j = 0; j < s1; ++j)
      for (int d = 0; d < dim; ++d) x[d] += sph.radius * c[j] * sph.basis[j][d];
    out.emplace_back(std::move(x), sph.center.dim_main, sph.center.dim_slab);
  }
  return out;
}

FloatPoint embed(const FloatPoint& p, int ambient_dim) {
  if (ambient_dim < p.dim())
    throw std::invalid_argument("cannot embed into a smaller dimension");
  std::vector<double> c = p.coords;
  c.resize(ambient_dim, 0.0);
  return FloatPoint(std::move(c), p.dim_main, ambient_dim - p.dim_main);
}

}  // namespace slice
