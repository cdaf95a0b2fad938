#include "slice/stability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "slice/rng.hpp"

namespace slice {

namespace {

constexpr int kRejectionBudget = 100000;

std::vector<double> sphere_point(Rng& rng, double r0) {
  auto u = rng.unit_vector(3);
  return {r0 * u[0], r0 * u[1], r0 * u[2]};
}

double d2(const FloatPoint& a, const FloatPoint& b) { return dist_sq(a, b); }

}  // namespace

PerturbationSample sample_perturbation(double r0, double delta, double h,
                                       uint64_t seed, int ambient_k) {
  if (!(r0 > 0)) throw std::invalid_argument("r0 must be positive");
  if (!(h >= 0) || !(delta > 0) || h > delta || delta > 1.0)
    throw std::invalid_argument("parameters must satisfy 0 <= h <= delta <= 1");
  if (delta > 2 * r0)
    throw std::invalid_argument(
        "no delta-separated quadruple fits on a sphere of this radius");
  if (ambient_k < 1) throw std::invalid_argument("ambient_k must be >= 1");

  Rng rng(seed);
  const int dim = 3 + ambient_k;
  PerturbationSample out;
  out.r0 = r0;
  out.delta = delta;
  out.h = h;
  out.ambient_k = ambient_k;
  out.seed = seed;

  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    std::vector<std::vector<double>> ys;
    for (int i = 0; i < 4; ++i) ys.push_back(sphere_point(rng, r0));
    bool separated = true;
    for (int i = 0; i < 4 && separated; ++i)
      for (int j = i + 1; j < 4; ++j) {
        double s = 0;
        for (int d = 0; d < 3; ++d) {
          const double e = ys[i][d] - ys[j][d];
          s += e * e;
        }
        if (s < delta * delta) {
          separated = false;
          break;
        }
      }
    if (!separated) continue;

    std::vector<FloatPoint> base, pert;
    for (int i = 0; i < 4; ++i) {
      std::vector<double> y(dim, 0.0);
      std::copy(ys[i].begin(), ys[i].end(), y.begin());
      std::vector<double> z = y;
      if (h > 0) {
        auto dir = rng.unit_vector(ambient_k);
        const double mag =
            h * std::pow(rng.uniform(), 1.0 / ambient_k);  // uniform in ball
        for (int d = 0; d < ambient_k; ++d) z[3 + d] = mag * dir[d];
      }
      base.emplace_back(std::move(y), 3, ambient_k);
      pert.emplace_back(std::move(z), 3, ambient_k);
    }

    // Reject flat simplices; the radius and angle responses divide by the
    // squared volume, which the separation bounds only down to Omega(delta^6).
    // Below ~0.1 delta^3 the angle saturates within the working h range and
    // no grid can see the scaling.
    const double vol_floor = std::max(1e-12, 0.4 * delta * delta * delta);
    const auto vol = [&](const std::vector<FloatPoint>& v) {
      std::vector<double> m(16, 0.0);
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          m[i * 4 + j] = m[j * 4 + i] = d2(v[i], v[j]);
      return simplex_volume_metric(m, 4);
    };
    if (vol(base) < vol_floor || vol(pert) < vol_floor) continue;

    out.base = std::move(base);
    out.perturbed = std::move(pert);
    return out;
  }
  throw std::runtime_error(
      "rejection budget exhausted; delta too large for this radius");
}

StabilityMeasurement measure_stability(const PerturbationSample& s) {
  if (s.base.size() != 4 || s.perturbed.size() != 4)
    throw std::invalid_argument("sample must hold two 4-point simplices");
  StabilityMeasurement m;

  std::vector<double> d0(16, 0.0), d1(16, 0.0);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      d0[i * 4 + j] = d0[j * 4 + i] = d2(s.base[i], s.base[j]);
      d1[i * 4 + j] = d1[j * 4 + i] = d2(s.perturbed[i], s.perturbed[j]);
      m.max_pair_d2_shift = std::max(
          m.max_pair_d2_shift, std::fabs(d1[i * 4 + j] - d0[i * 4 + j]));
    }

  const double det0 = cayley_menger_det_metric(d0, 4);
  const double det1 = cayley_menger_det_metric(d1, 4);
  if (det0 <= 0.0 || det1 <= 0.0)
    throw std::domain_error("degenerate simplex");
  m.dV2 = std::fabs(det0 - det1) / 288.0;

  const Simplex t0(s.base), t1(s.perturbed);
  const auto c0 = circumcenter(t0);
  const auto c1 = circumcenter(t1);
  m.dR2 = std::fabs(2.0 * c1.radius_sq - 2.0 * c0.radius_sq);
  m.dR2_corner = std::fabs(cm_inverse_corner_metric(d1, 4) -
                           cm_inverse_corner_metric(d0, 4));

  const int dim = s.base[0].dim();
  std::vector<std::vector<double>> main_basis;
  for (int i = 0; i < 3; ++i) {
    std::vector<double> e(dim, 0.0);
    e[i] = 1.0;
    main_basis.push_back(std::move(e));
  }
  std::vector<std::vector<double>> hull;
  for (int i = 1; i < 4; ++i) {
    std::vector<double> v(dim);
    for (int d = 0; d < dim; ++d)
      v[d] = s.perturbed[i].coords[d] - s.perturbed[0].coords[d];
    hull.push_back(std::move(v));
  }
  m.dPhi = subspace_angle(main_basis, hull);
  return m;
}

ScalingFit fit_scaling_exponents(double r0, double delta,
                                 const std::vector<double>& h_grid,
                                 int trials_per_h, uint64_t seed, int ambient_k,
                                 int threads) {
  if (h_grid.size() < 5)
    throw std::invalid_argument("h grid needs at least 5 points");
  for (double h : h_grid)
    if (!(h > 0) || h > delta)
      throw std::invalid_argument("h grid values must lie in (0, delta]");
  if (trials_per_h < 1) throw std::invalid_argument("trials must be >= 1");

  ScalingFit fit;
  fit.h_grid = h_grid;
  fit.rows.resize(h_grid.size() * trials_per_h);

  // One seed per trial index, shared across the h grid: the base simplex and
  // offset directions are common random numbers, so only the offset magnitude
  // scales with h and per-trial shape constants cancel out of the slope.
  auto run_trial = [&](size_t hi, int trial) {
    const uint64_t s = Rng::mix(seed, trial);
    auto sample = sample_perturbation(r0, delta, h_grid[hi], s, ambient_k);
    auto meas = measure_stability(sample);
    fit.rows[hi * trials_per_h + trial] =
        ScalingRow{h_grid[hi], trial, meas.dV2, meas.dR2, meas.dPhi};
  };
  const int nthreads = std::max(1, threads);
  if (nthreads == 1) {
    for (size_t hi = 0; hi < h_grid.size(); ++hi)
      for (int t = 0; t < trials_per_h; ++t) run_trial(hi, t);
  } else {
    // Per-trial seeding makes the result independent of the partition.
    std::vector<std::thread> pool;
    const size_t total = h_grid.size() * trials_per_h;
    for (int tid = 0; tid < nthreads; ++tid)
      pool.emplace_back([&, tid] {
        for (size_t i = tid; i < total; i += nthreads)
          run_trial(i / trials_per_h, static_cast<int>(i % trials_per_h));
      });
    for (auto& th : pool) th.join();
  }

  const size_t H = h_grid.size();
  fit.envV2.assign(H, 0.0);
  fit.envR2.assign(H, 0.0);
  fit.envPhi.assign(H, 0.0);
  for (const auto& r : fit.rows) {
    const size_t hi =
        std::find(h_grid.begin(), h_grid.end(), r.h) - h_grid.begin();
    fit.envV2[hi] = std::max(fit.envV2[hi], r.dV2);
    fit.envR2[hi] = std::max(fit.envR2[hi], r.dR2);
    fit.envPhi[hi] = std::max(fit.envPhi[hi], r.dPhi);
  }

  auto slope = [&](const std::vector<double>& env, double& ci) {
    for (double v : env)
      if (!(v > 0.0))
        throw std::domain_error("degenerate fit: zero envelope measurement");
    const size_t n = env.size();
    double mx = 0, my = 0;
    std::vector<double> xs(n), ys(n);
    for (size_t i = 0; i < n; ++i) {
      xs[i] = std::log(h_grid[i]);
      ys[i] = std::log(env[i]);
      mx += xs[i];
      my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
      sxx += (xs[i] - mx) * (xs[i] - mx);
      sxy += (xs[i] - mx) * (ys[i] - my);
    }
    const double b = sxy / sxx;
    double ss = 0;
    for (size_t i = 0; i < n; ++i) {
      const double r = ys[i] - my - b * (xs[i] - mx);
      ss += r * r;
    }
    const double se = n > 2 ? std::sqrt(ss / ((n - 2) * sxx)) : 0.0;
    ci = 2.0 * se;
    return b;
  };
  fit.sV2 = slope(fit.envV2, fit.ciV2);
  fit.sR2 = slope(fit.envR2, fit.ciR2);
  fit.sPhi = slope(fit.envPhi, fit.ciPhi);
  return fit;
}

std::string scaling_rows_csv(const ScalingFit& fit) {
  std::ostringstream os;
  os.precision(17);
  os << "h,trial,dV2,dR2,dPhi\n";
  for (const auto& r : fit.rows)
    os << r.h << "," << r.trial << "," << r.dV2 << "," << r.dR2 << ","
       << r.dPhi << "\n";
  return os.str();
}

}  // namespace slice
