#pragma once

#include <cstdint>
#include <vector>

#include "slice/geom.hpp"

namespace slice {

// Base simplex T0 of four points on a 2-sphere of radius r0 in the first
// three coordinates, pairwise separated by at least delta; T displaces each
// vertex into the remaining ambient_k coordinates by at most h.
struct PerturbationSample {
  std::vector<FloatPoint> base;       // y_i, offsets zero
  std::vector<FloatPoint> perturbed;  // z_i
  double r0 = 0.0;
  double delta = 0.0;
  double h = 0.0;
  int ambient_k = 6;
  uint64_t seed = 0;
};

PerturbationSample sample_perturbation(double r0, double delta, double h,
                                       uint64_t seed, int ambient_k = 6);

struct StabilityMeasurement {
  double dV2 = 0.0;   // |V0^2 - V^2|
  double dR2 = 0.0;   // |2 r^2 - 2 r0^2|, direct circumradii
  double dR2_corner = 0.0;  // same via the inverse-matrix corner difference
  double dPhi = 0.0;  // hull angle against the first-three-coordinate subspace
  double max_pair_d2_shift = 0.0;  // max |d_ij^2 - d0_ij^2|
};

StabilityMeasurement measure_stability(const PerturbationSample& s);

struct ScalingRow {
  double h;
  int trial;
  double dV2, dR2, dPhi;
};

struct ScalingFit {
  double sV2 = 0.0, sR2 = 0.0, sPhi = 0.0;   // log-log envelope slopes
  double ciV2 = 0.0, ciR2 = 0.0, ciPhi = 0.0;  // +-2 stderr
  std::vector<ScalingRow> rows;
  std::vector<double> h_grid;
  std::vector<double> envV2, envR2, envPhi;  // max per h
};

// Envelope slopes of the three measurements over a geometric h grid; the max
// per h is fitted (an O(.) bound caps envelopes, not averages).
ScalingFit fit_scaling_exponents(double r0, double delta,
                                 const std::vector<double>& h_grid,
                                 int trials_per_h, uint64_t seed,
                                 int ambient_k = 6, int threads = 1);

std::string scaling_rows_csv(const ScalingFit& fit);

}  // namespace slice
