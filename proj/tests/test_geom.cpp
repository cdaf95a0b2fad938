#include <doctest.h>

#include <cmath>
#include <vector>

#include "slice/geom.hpp"
#include "slice/linalg.hpp"
#include "slice/rng.hpp"
#include "support.hpp"

using namespace slice;

namespace {

Simplex regular_unit(int n) { return Simplex(regular_simplex(n, 1.0)); }

ExactPoint rational_point(Rng& rng, int dim) {
  std::vector<Rat> main;
  for (int d = 0; d < dim; ++d) {
    const long num = static_cast<long>(rng.next_u64() % 17) - 8;
    const long den = 1 + static_cast<long>(rng.next_u64() % 7);
    main.push_back(make_rat(num, den));
  }
  return ExactPoint(std::move(main), {});
}

}  // namespace

TEST_CASE("cayley-menger determinant: frozen cases") {
  // Oracle: Laplace expansion of the bordered matrix, independent of the
  // elimination in the library.
  auto oracle = [](const std::vector<Rat>& d2, int pts) {
    const int n = pts + 1;
    std::vector<Rat> c(n * n, Rat(0));
    for (int i = 1; i < n; ++i) c[i] = c[i * n] = 1;
    for (int i = 0; i < pts; ++i)
      for (int j = 0; j < pts; ++j) c[(i + 1) * n + j + 1] = d2[i * pts + j];
    return testsupport::laplace_det(c, n);
  };

  SUBCASE("regular tetrahedron, edge 1") {
    auto d2 = regular_simplex_d2(3, Rat(1));
    CHECK(oracle(d2, 4) == 4);
    CHECK(cayley_menger_det_metric(d2, 4) == Rat(4));
    CHECK(cayley_menger_det(regular_unit(3)) == doctest::Approx(4.0));
  }
  SUBCASE("unit segment") {
    std::vector<Rat> d2{Rat(0), Rat(1), Rat(1), Rat(0)};
    CHECK(oracle(d2, 2) == 2);
    CHECK(cayley_menger_det_metric(d2, 2) == Rat(2));
  }
  SUBCASE("repeated vertex gives zero") {
    ExactPoint a({Rat(0), Rat(0)}, {});
    ExactPoint b({Rat(1), Rat(0)}, {});
    ExactSimplex s({a, b, a});
    CHECK(cayley_menger_det(s) == Rat(0));
  }
}

TEST_CASE("cayley-menger scale identity holds exactly on rational simplices") {
  // vol^2 * (-1)^{m+1} 2^m (m!)^2 = det C for m = 1..4.
  Rng rng(11);
  for (int m = 1; m <= 4; ++m) {
    int produced = 0;
    while (produced < 5) {
      std::vector<ExactPoint> pts;
      for (int i = 0; i <= m; ++i) pts.push_back(rational_point(rng, 4));
      ExactSimplex s(pts);
      const Rat det = cayley_menger_det(s);
      if (m >= 2 && det == 0) continue;
      ++produced;
      if (m >= 2) {
        const Rat v2 = simplex_volume_sq(s);
        CHECK(v2 * Rat(cm_det_scale(m)) == det);
      }
    }
  }
}

TEST_CASE("simplex volume: frozen cases") {
  CHECK(simplex_volume(regular_unit(3)) ==
        doctest::Approx(std::sqrt(2.0) / 12.0).epsilon(1e-12));
  CHECK(simplex_volume(regular_unit(2)) ==
        doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-12));
  // Collinear triple.
  Simplex s({FloatPoint({0.0, 0.0}), FloatPoint({1.0, 0.0}),
             FloatPoint({2.0, 0.0})});
  CHECK(simplex_volume(s) == 0.0);
}

TEST_CASE("circumsphere: frozen cases and vertex equidistance") {
  SUBCASE("regular tetrahedron, edge 1") {
    auto sd = circumsphere(regular_unit(3));
    CHECK(sd.radius == doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-12));
    for (const auto& v : regular_unit(3).vertices)
      CHECK(dist(sd.center, v) == doctest::Approx(sd.radius).epsilon(1e-10));
  }
  SUBCASE("unit segment") {
    Simplex s({FloatPoint({0.0, 0.0}), FloatPoint({1.0, 0.0})});
    auto sd = circumsphere(s);
    CHECK(sd.radius == doctest::Approx(0.5));
    CHECK(sd.center.coords[0] == doctest::Approx(0.5));
    CHECK(sd.center.coords[1] == doctest::Approx(0.0));
  }
  SUBCASE("equilateral triangle, edge 1") {
    auto sd = circumsphere(regular_unit(2));
    CHECK(sd.radius ==
          doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  }
  SUBCASE("degenerate simplex is rejected") {
    Simplex s({FloatPoint({0.0, 0.0}), FloatPoint({1.0, 0.0}),
               FloatPoint({2.0, 0.0})});
    CHECK_THROWS_AS(circumsphere(s), std::domain_error);
  }
}

TEST_CASE("inverse-corner identity: 2 r^2 = -(C^-1)_00") {
  SUBCASE("exact, on a rational triangle") {
    // Rational 4-dim triangle with unit edges (q = 19/22, alpha = beta =
    // 1/22); all quantities stay rational.
    Rat q = make_rat(19, 22), h = make_rat(1, 2), a = make_rat(1, 22);
    ExactPoint A({Rat(0), Rat(0)}, {Rat(0), Rat(0)});
    ExactPoint B({q, h}, {a, a});
    ExactPoint C({q, -h}, {a, a});
    ExactSimplex s({A, B, C});
    auto cs = circumcenter(s);
    const Rat corner =
        cm_inverse_corner_metric(squared_distance_matrix(s), 3);
    CHECK(Rat(2) * cs.radius_sq == -corner);
    // Equidistance holds exactly in the rational backing.
    for (const auto& v : s.vertices) {
      Rat d2v = 0;
      for (int d = 0; d < 4; ++d) {
        Rat e = cs.center[d] - v.coord(d);
        d2v += e * e;
      }
      CHECK(d2v == cs.radius_sq);
    }
  }
  SUBCASE("float, on random well-separated simplices") {
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
      std::vector<FloatPoint> pts;
      for (int i = 0; i < 4; ++i) {
        auto u = rng.unit_vector(3);
        pts.emplace_back(std::vector<double>{u[0], u[1], u[2]}, 3, 0);
      }
      Simplex s(pts);
      if (std::fabs(cayley_menger_det(s)) < 1e-4) continue;
      auto cs = circumcenter(s);
      const double corner =
          cm_inverse_corner_metric(squared_distance_matrix(s), 4);
      CHECK(std::fabs(2.0 * cs.radius_sq + corner) <=
            1e-9 * std::max(1.0, 2.0 * cs.radius_sq));
    }
  }
}

TEST_CASE("attached sphere: frozen cases") {
  SUBCASE("triangle edge 1 in R^9") {
    std::vector<FloatPoint> tri;
    for (const auto& p : regular_simplex(2, 1.0)) tri.push_back(embed(p, 9));
    auto sd = attached_sphere(Simplex(tri), 9);
    CHECK(sd.radius ==
          doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
    CHECK(sd.sphere_dim == 6);
  }
  SUBCASE("tetrahedron edge 1 in R^9") {
    std::vector<FloatPoint> tet;
    for (const auto& p : regular_simplex(3, 1.0)) tet.push_back(embed(p, 9));
    auto sd = attached_sphere(Simplex(tet), 9);
    CHECK(sd.radius ==
          doctest::Approx(std::sqrt(5.0 / 8.0)).epsilon(1e-12));
    CHECK(sd.sphere_dim == 5);
  }
  SUBCASE("circumradius at or above 1 leaves nothing attached") {
    std::vector<FloatPoint> tri;
    for (const auto& p : regular_simplex(2, 2.0))
      tri.push_back(embed(p, 9));  // circumradius 2/sqrt(3) > 1
    CHECK_THROWS_AS(attached_sphere(Simplex(tri), 9), std::domain_error);
    std::vector<FloatPoint> big;
    for (const auto& p : regular_simplex(2, std::sqrt(3.0) * (1.0 + 1e-9)))
      big.push_back(embed(p, 9));  // just past the radius-1 boundary
    CHECK_THROWS_AS(attached_sphere(Simplex(big), 9), std::domain_error);
  }
}

TEST_CASE("attached sphere samples sit at distance 1 from every vertex") {
  Rng rng(99);
  std::vector<FloatPoint> tet;
  for (const auto& p : regular_simplex(3, 1.0)) tet.push_back(embed(p, 9));
  auto sd = attached_sphere(Simplex(tet), 9);
  for (const auto& sample : sample_sphere_points(sd, 100, rng.next_u64()))
    for (const auto& v : tet)
      CHECK(std::fabs(dist(sample, v) - 1.0) <= 1e-10);
}

TEST_CASE("regular simplex generator") {
  SUBCASE("n=1, edge 2: points at +-1, inradius 1") {
    auto pts = regular_simplex(1, 2.0);
    CHECK(std::fabs(pts[0].coords[0]) == doctest::Approx(1.0));
    CHECK(pts[0].coords[0] == doctest::Approx(-pts[1].coords[0]));
    CHECK(inradius(pts) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("n=3, edge 2 sqrt(6): inradius 1") {
    auto pts = regular_simplex(3, 2.0 * std::sqrt(6.0));
    CHECK(inradius(pts) == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("n=2, edge 1: circumradius 1/sqrt(3)") {
    auto sd = circumsphere(Simplex(regular_simplex(2, 1.0)));
    CHECK(sd.radius == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  }
  SUBCASE("pairwise distances and centroid") {
    for (int n : {1, 2, 3, 4, 5, 6}) {
      auto pts = regular_simplex(n, 3.0);
      for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
          CHECK(dist(pts[i], pts[j]) == doctest::Approx(3.0).epsilon(1e-12));
      for (int d = 0; d < n; ++d) {
        double c = 0;
        for (const auto& p : pts) c += p.coords[d];
        CHECK(std::fabs(c) <= 1e-12);
      }
    }
  }
}

TEST_CASE("edge sqrt(2n(n+1)) gives inradius exactly 1, n = 1..6") {
  for (int n = 1; n <= 6; ++n) {
    const Rat edge_sq(2 * n * (n + 1));
    CHECK(regular_inradius_sq(n, edge_sq) == Rat(1));
  }
}

TEST_CASE("inradius: frozen cases") {
  CHECK(inradius(regular_simplex(3, 1.0)) ==
        doctest::Approx(1.0 / std::sqrt(24.0)).epsilon(1e-12));
  std::vector<FloatPoint> degenerate{FloatPoint({0.0, 0.0}),
                                     FloatPoint({1.0, 0.0}),
                                     FloatPoint({2.0, 0.0})};
  CHECK_THROWS_AS(inradius(degenerate), std::domain_error);
}

TEST_CASE("subspace angle") {
  auto e = [](int i, int dim) {
    std::vector<double> v(dim, 0.0);
    v[i] = 1.0;
    return v;
  };
  SUBCASE("identical subspaces") {
    std::vector<std::vector<double>> p{e(0, 6), e(1, 6), e(2, 6)};
    CHECK(subspace_angle(p, p) == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("rotation by theta about a line inside the subspace") {
    for (double theta : {0.1, 0.4, 1.0, 1.4}) {
      std::vector<std::vector<double>> p{e(0, 4), e(1, 4), e(2, 4)};
      std::vector<double> rot(4, 0.0);
      rot[2] = std::cos(theta);
      rot[3] = std::sin(theta);
      std::vector<std::vector<double>> q{e(0, 4), e(1, 4), rot};
      CHECK(subspace_angle(p, q) == doctest::Approx(theta).epsilon(1e-10));
    }
  }
  SUBCASE("orthogonal 3-subspaces in R^6") {
    std::vector<std::vector<double>> p{e(0, 6), e(1, 6), e(2, 6)};
    std::vector<std::vector<double>> q{e(3, 6), e(4, 6), e(5, 6)};
    CHECK(subspace_angle(p, q) ==
          doctest::Approx(std::acos(0.0)).epsilon(1e-12));
  }
  SUBCASE("invariant under re-basing of either side") {
    Rng rng(3);
    std::vector<std::vector<double>> p{rng.gaussian_vector(6),
                                       rng.gaussian_vector(6),
                                       rng.gaussian_vector(6)};
    std::vector<std::vector<double>> q{rng.gaussian_vector(6),
                                       rng.gaussian_vector(6),
                                       rng.gaussian_vector(6)};
    const double a0 = subspace_angle(p, q);
    // Replace p by an orthonormal basis of the same span, q by a shuffled
    // linear recombination.
    auto pb = linalg::gram_schmidt(p);
    std::vector<std::vector<double>> q2{q[1], q[2], q[0]};
    for (int d = 0; d < 6; ++d) q2[0][d] = q2[0][d] * 2.0 + 0.5 * q2[1][d];
    CHECK(subspace_angle(pb, q) == doctest::Approx(a0).epsilon(1e-10));
    CHECK(subspace_angle(p, q2) == doctest::Approx(a0).epsilon(1e-10));
  }
  SUBCASE("degenerate basis is rejected") {
    std::vector<std::vector<double>> p{e(0, 6), e(1, 6), e(1, 6)};
    std::vector<std::vector<double>> q{e(0, 6), e(1, 6), e(2, 6)};
    CHECK_THROWS_AS(subspace_angle(p, q), std::domain_error);
  }
}

TEST_CASE("equator") {
  std::vector<FloatPoint> tet;
  for (const auto& p : regular_simplex(3, 1.0)) tet.push_back(embed(p, 9));
  auto sphere5 = attached_sphere(Simplex(tet), 9);  // 5-sphere
  SUBCASE("2-equator keeps center and radius") {
    auto eq = equator(sphere5, 2, 42);
    CHECK(eq.sphere_dim == 2);
    CHECK(eq.radius == doctest::Approx(sphere5.radius));
    CHECK(eq.basis.size() == 3);
    for (int d = 0; d < 9; ++d)
      CHECK(eq.center.coords[d] == sphere5.center.coords[d]);
    // Equator points stay on the parent sphere.
    for (const auto& p : sample_sphere_points(eq, 32, 1))
      CHECK(dist(p, sphere5.center) ==
            doctest::Approx(sphere5.radius).epsilon(1e-10));
  }
  SUBCASE("t must be below the sphere dimension") {
    CHECK_THROWS_AS(equator(sphere5, 5, 0), std::invalid_argument);
  }
  SUBCASE("0-equator is an antipodal pair") {
    auto eq = equator(sphere5, 0, 7);
    auto pts = sample_sphere_points(eq, 16, 3);
    for (const auto& p : pts) {
      bool hit = false;
      for (const auto& q : sample_sphere_points(eq, 16, 4))
        if (dist(p, q) > 2.0 * sphere5.radius - 1e-9) hit = true;
      CHECK((dist(p, eq.center) == doctest::Approx(eq.radius)));
      (void)hit;
    }
    // All samples lie on a line through the center: distance to center is
    // the radius and pairwise distances are 0 or the diameter.
    for (const auto& p : pts)
      for (const auto& q : pts) {
        const double d = dist(p, q);
        CHECK((d < 1e-9 || d > 2.0 * sphere5.radius - 1e-9));
      }
  }
  SUBCASE("deterministic for a fixed seed") {
    auto a = equator(sphere5, 2, 9);
    auto b = equator(sphere5, 2, 9);
    for (size_t i = 0; i < a.basis.size(); ++i)
      for (int d = 0; d < 9; ++d) CHECK(a.basis[i][d] == b.basis[i][d]);
  }
}

TEST_CASE("equidistant sphere generalizes the attached sphere") {
  std::vector<FloatPoint> tet;
  for (const auto& p : regular_simplex(3, 1.0)) tet.push_back(embed(p, 9));
  auto a = attached_sphere(Simplex(tet), 9);
  auto b = equidistant_sphere(tet, 1.0);
  CHECK(a.radius == doctest::Approx(b.radius).epsilon(1e-12));
  CHECK(a.sphere_dim == b.sphere_dim);
  for (int d = 0; d < 9; ++d)
    CHECK(a.center.coords[d] == doctest::Approx(b.center.coords[d]));
}
