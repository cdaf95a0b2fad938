#include "slice/replay.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "slice/linalg.hpp"
#include "slice/rng.hpp"

namespace slice {

namespace {

constexpr double kSqrt3Half = 0.86602540378443864676;

std::vector<double> combine(const std::vector<double>& main3,
                            const std::vector<double>& slab6) {
  std::vector<double> c(9);
  std::copy(main3.begin(), main3.end(), c.begin());
  std::copy(slab6.begin(), slab6.end(), c.begin() + 3);
  return c;
}

}  // namespace

ConstructionReport replay_construction(double eps, double eps1, double delta,
                                       uint64_t seed) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  if (!(eps1 > 0) || !(eps1 < eps / 2))
    throw std::invalid_argument("eps1 must satisfy 0 < eps1 < eps/2");
  if (!(delta > 0) || delta > 1)
    throw std::invalid_argument("delta must lie in (0, 1]");

  ConstructionReport rep;
  Rng rng(seed);
  const double h = std::pow(delta, 1.5);

  // Reference tetrahedron with unit inradius; its mesh cell anchors the main
  // blocks.
  const auto tetra = regular_simplex(3, 2.0 * std::sqrt(6.0));
  rep.residuals["tetra_inradius"] = std::fabs(inradius(tetra) - 1.0);

  // Seeded point inside the tetrahedron, snapped to the h-mesh.
  std::vector<double> cell_center(3, 0.0);
  {
    // Barycentric membership test against the 4 vertices.
    auto inside = [&](const std::vector<double>& p) {
      std::vector<double> a(9), b(3);
      for (int c = 0; c < 3; ++c) {
        for (int r = 0; r < 3; ++r)
          a[r * 3 + c] = tetra[c + 1].coords[r] - tetra[0].coords[r];
        b[c] = p[c] - tetra[0].coords[c];
      }
      std::vector<double> lam;
      try {
        lam = linalg::solve(a, b, 3);
      } catch (const std::domain_error&) {
        return false;
      }
      double s = 0;
      for (double l : lam) {
        if (l < 0) return false;
        s += l;
      }
      return s <= 1.0;
    };
    const double R = 3.0;  // circumradius of the reference tetrahedron
    std::vector<double> p(3);
    for (int attempt = 0; attempt < 100000; ++attempt) {
      for (auto& x : p) x = rng.uniform(-R, R);
      if (inside(p)) break;
    }
    for (int d = 0; d < 3; ++d)
      cell_center[d] = (std::floor(p[d] / h) + 0.5) * h;
  }
  rep.residuals["cell_side"] = h;

  // Slab frame: equilateral triangle on a great circle of the 5-sphere of
  // radius eps1 centered mid-slab, plus the pole direction for v4.
  std::vector<double> s0(6, eps / 2.0);
  auto fr = linalg::gram_schmidt(
      {rng.gaussian_vector(6), rng.gaussian_vector(6), rng.gaussian_vector(6)});
  while (fr.size() < 3) {
    fr.push_back(rng.gaussian_vector(6));
    fr = linalg::gram_schmidt(fr);
  }
  const auto& f1 = fr[0];
  const auto& f2 = fr[1];

  std::vector<std::vector<double>> slab(4, std::vector<double>(6));
  constexpr double two_pi = 6.283185307179586476925286766559;
  for (int j = 0; j < 3; ++j)
    for (int d = 0; d < 6; ++d)
      slab[j][d] = s0[d] + eps1 * (std::cos(two_pi * j / 3.0) * f1[d] +
                                   std::sin(two_pi * j / 3.0) * f2[d]);

  // v4: sampled point of the sphere farthest from the plane of the first
  // three slab blocks.
  {
    auto plane_basis = linalg::gram_schmidt({
        [&] {
          std::vector<double> v(6);
          for (int d = 0; d < 6; ++d) v[d] = slab[1][d] - slab[0][d];
          return v;
        }(),
        [&] {
          std::vector<double> v(6);
          for (int d = 0; d < 6; ++d) v[d] = slab[2][d] - slab[0][d];
          return v;
        }(),
    });
    double best = -1.0;
    std::vector<double> best_point;
    for (int i = 0; i < 4096; ++i) {
      auto dir = rng.unit_vector(6);
      std::vector<double> cand(6);
      for (int d = 0; d < 6; ++d) cand[d] = s0[d] + eps1 * dir[d];
      std::vector<double> rel(6);
      for (int d = 0; d < 6; ++d) rel[d] = cand[d] - slab[0][d];
      for (const auto& b : plane_basis)
        linalg::subtract_projection(rel, b);
      const double dist = linalg::norm(rel);
      if (dist > best) {
        best = dist;
        best_point = cand;
      }
    }
    slab[3] = best_point;
    rep.residuals["v4_plane_distance"] = best;
    if (best < 0.5 * eps1)
      throw std::runtime_error("v4 placement failed; plane distance " +
                               std::to_string(best));
  }

  rep.v.clear();
  for (int j = 0; j < 4; ++j)
    rep.v.emplace_back(combine(cell_center, slab[j]), 3, 6);

  const Simplex s4(rep.v);
  const auto cs = circumcenter(s4);
  rep.r_circum = std::sqrt(cs.radius_sq);
  rep.residuals["circumradius_minus_eps1"] = std::fabs(rep.r_circum - eps1);
  if (!(rep.r_circum < 1.0))
    throw std::runtime_error("circumradius of v1..v4 not below 1");

  const auto attached = attached_sphere(s4, 9);
  rep.r_attached_4 = attached.radius;
  rep.residuals["attached_radius_formula"] =
      std::fabs(attached.radius - std::sqrt(1.0 - cs.radius_sq));
  {
    double worst = 0.0;
    for (const auto& p : sample_sphere_points(attached, 64, rng.next_u64()))
      for (const auto& vi : rep.v)
        worst = std::max(worst, std::fabs(dist(p, vi) - 1.0));
    rep.residuals["attached_unit_distance"] = worst;
  }

  // Slice-aligned 2-equator: the projections of the main axes onto the
  // supporting subspace of the attached sphere.
  SphereDescriptor equator_2;
  {
    std::vector<std::vector<double>> proj;
    for (int i = 0; i < 3; ++i) {
      std::vector<double> e(9, 0.0);
      e[i] = 1.0;
      std::vector<double> pe(9, 0.0);
      for (const auto& b : attached.basis)
        linalg::add_scaled(pe, linalg::dot(e, b), b);
      proj.push_back(std::move(pe));
    }
    auto basis = linalg::gram_schmidt(proj);
    if (basis.size() != 3)
      throw std::runtime_error("slice-aligned equator collapsed");
    equator_2.center = attached.center;
    equator_2.radius = attached.radius;
    equator_2.basis = std::move(basis);
    equator_2.sphere_dim = 2;
  }
  {
    double violation = 0.0;
    for (const auto& p : sample_sphere_points(equator_2, 256, rng.next_u64()))
      for (int d = 3; d < 9; ++d) {
        violation = std::max(violation, -p.coords[d]);
        violation = std::max(violation, p.coords[d] - eps);
      }
    rep.residuals["equator_slab_violation"] = std::max(violation, 0.0);
    rep.equator_in_slice = violation <= 1e-12;
  }

  // Pentagon triple on the attached sphere around a sampled equator point;
  // the radial rescaling keeps the points on the sphere.
  rep.nu = eps1;
  {
    const auto u = sample_sphere_points(equator_2, 1, rng.next_u64())[0];
    // Complement of the equator inside the attached sphere's subspace.
    std::vector<std::vector<double>> rest;
    for (const auto& b : attached.basis) {
      std::vector<double> w = b;
      for (const auto& e : equator_2.basis)
        linalg::subtract_projection(w, e);
      rest.push_back(std::move(w));
    }
    rest = linalg::gram_schmidt(rest);
    if (rest.size() != 3)
      throw std::runtime_error("pentagon frame collapsed");
    const double rho = attached.radius;
    const double scale = std::sqrt(rho * rho - rep.nu * rep.nu) / rho;
    for (int k = 1; k <= 3; ++k) {
      std::vector<double> c(9);
      for (int d = 0; d < 9; ++d)
        c[d] = attached.center.coords[d] +
               scale * (u.coords[d] - attached.center.coords[d]) +
               rep.nu * (std::cos(two_pi * k / 5.0) * rest[0][d] +
                         std::sin(two_pi * k / 5.0) * rest[1][d]);
      rep.v.emplace_back(std::move(c), 3, 6);
    }
  }
  {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 4; j < 7; ++j)
        worst = std::max(worst, std::fabs(dist(rep.v[i], rep.v[j]) - 1.0));
    rep.residuals["pairwise_unit_14_567"] = worst;
    double min_side = std::numeric_limits<double>::infinity();
    for (int i = 4; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j)
        min_side = std::min(min_side, dist(rep.v[i], rep.v[j]));
    rep.residuals["pentagon_min_side"] = min_side;
    if (min_side < rep.nu)
      throw std::runtime_error("pentagon triple closer than nu");
    double slab_violation = 0.0;
    for (int j = 4; j < 7; ++j)
      for (int d = 3; d < 9; ++d) {
        slab_violation = std::max(slab_violation, -rep.v[j].coords[d]);
        slab_violation = std::max(slab_violation, rep.v[j].coords[d] - eps);
      }
    rep.residuals["pentagon_slab_violation"] = std::max(slab_violation, 0.0);
  }

  rep.r_attached_7 = equidistant_sphere(rep.v, 1.0).radius;
  rep.residuals["r7_gap"] = std::fabs(rep.r_attached_7 - kSqrt3Half);

  rep.pass = rep.equator_in_slice &&
             rep.residuals["attached_unit_distance"] <= 1e-9 &&
             rep.residuals["pairwise_unit_14_567"] <= 1e-9 &&
             rep.residuals["attached_radius_formula"] <= 1e-10 &&
             rep.residuals["pentagon_slab_violation"] <= 1e-12 &&
             rep.residuals["tetra_inradius"] <= 1e-9;
  return rep;
}

int isbell_color(double x, double y, double s) {
  if (!(s > 0.0) || s >= 1.0)
    throw std::invalid_argument("hexagon side must lie in (0, 1)");
  // Axial coordinates of the hexagon centers (circumradius s), nearest
  // center via cube rounding.
  const double q = (std::sqrt(3.0) / 3.0 * x - y / 3.0) / s;
  const double r = (2.0 / 3.0 * y) / s;
  double rq = std::round(q);
  double rr = std::round(r);
  const double rs = std::round(-q - r);
  const double dq = std::fabs(rq - q);
  const double dr = std::fabs(rr - r);
  const double ds = std::fabs(rs + q + r);
  if (dq > dr && dq > ds)
    rq = -rr - rs;
  else if (dr > ds)
    rr = -rq - rs;
  const long long a = static_cast<long long>(rq);
  const long long b = static_cast<long long>(rr);
  // Period-7 pattern constant on the sublattice generated by (1,2), (3,-1).
  return static_cast<int>((((a + 3 * b) % 7) + 7) % 7);
}

double isbell_threshold() { return 1.0 - 4.0 / std::sqrt(21.0); }

IsbellCheck isbell_band_check(double eps, long long pairs, uint64_t seed) {
  if (!(eps > 0.0) || eps >= isbell_threshold())
    throw std::invalid_argument("eps must lie in (0, 1 - 4/sqrt(21))");
  if (pairs < 1) throw std::invalid_argument("pair count must be >= 1");
  IsbellCheck chk;
  chk.eps = eps;
  chk.s = (1.0 - eps) / 2.0;
  chk.threshold = isbell_threshold();
  chk.pairs = pairs;
  Rng rng(seed);
  constexpr double two_pi = 6.283185307179586476925286766559;
  for (long long i = 0; i < pairs; ++i) {
    const double x = rng.uniform(-10.0, 10.0);
    const double y = rng.uniform(-10.0, 10.0);
    const double d = rng.uniform(1.0 - eps, 1.0 + eps);
    const double t = rng.uniform(0.0, two_pi);
    const double x2 = x + d * std::cos(t);
    const double y2 = y + d * std::sin(t);
    if (isbell_color(x, y, chk.s) == isbell_color(x2, y2, chk.s))
      ++chk.monochromatic;
  }
  return chk;
}

}  // namespace slice
