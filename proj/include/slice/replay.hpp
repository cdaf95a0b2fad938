#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "slice/geom.hpp"

namespace slice {

// Geometric skeleton of the rainbow-point construction in the slice
// R^3 x [0, eps]^6: a 4-point simplex with slab blocks on a small 5-sphere,
// its attached sphere, a slice-aligned 2-equator, and a pentagon triple on
// the attached sphere; the 7-point equidistant radius approaches sqrt(3)/2.
struct ConstructionReport {
  std::vector<FloatPoint> v;  // v1..v7
  double r_circum = 0.0;      // circumradius of v1..v4
  double r_attached_4 = 0.0;  // radius of the attached sphere of v1..v4
  bool equator_in_slice = false;
  double r_attached_7 = 0.0;  // radius of the 7-point equidistant sphere
  double nu = 0.0;
  std::map<std::string, double> residuals;
  bool pass = false;
};

ConstructionReport replay_construction(double eps, double eps1, double delta,
                                       uint64_t seed);

// 7-color hexagonal super-tiling with hexagon circumradius s: within-tile
// diameter 2s, nearest same-color tiles (sqrt(21) - 2) s apart.
int isbell_color(double x, double y, double s);

// Largest band half-width the tiling tolerates with s = (1 - eps) / 2:
// solving 2s = 1 - eps, (sqrt(21) - 2) s = 1 + eps gives 1 - 4/sqrt(21).
double isbell_threshold();

struct IsbellCheck {
  double eps = 0.0;
  double s = 0.0;
  double threshold = 0.0;
  long long pairs = 0;
  long long monochromatic = 0;
};

// Samples point pairs at distances uniform in [1-eps, 1+eps] and counts
// same-color pairs under the tiling with s = (1-eps)/2.
IsbellCheck isbell_band_check(double eps, long long pairs, uint64_t seed);

}  // namespace slice
