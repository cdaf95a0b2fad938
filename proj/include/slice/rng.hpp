#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace slice {

// Deterministic splitmix64 generator. All randomness in the library funnels
// through this class so that a run is reproducible from its seed on any
// platform; std::random distributions are implementation-defined and would
// break byte-identical artifacts.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double m = std::sqrt(-2.0 * std::log(u1));
    constexpr double two_pi = 6.283185307179586476925286766559;
    spare_ = m * std::sin(two_pi * u2);
    has_spare_ = true;
    return m * std::cos(two_pi * u2);
  }

  std::vector<double> gaussian_vector(size_t dim) {
    std::vector<double> v(dim);
    for (auto& x : v) x = normal();
    return v;
  }

  std::vector<double> unit_vector(size_t dim) {
    for (;;) {
      std::vector<double> v = gaussian_vector(dim);
      double n2 = 0.0;
      for (double x : v) n2 += x * x;
      if (n2 > 1e-12) {
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& x : v) x *= inv;
        return v;
      }
    }
  }

  // Stable sub-stream derivation (per-trial seeds etc.).
  static uint64_t mix(uint64_t a, uint64_t b) {
    uint64_t z = a ^ (0x9e3779b97f4a7c15ULL * (b + 0x632be59bd9b4e019ULL));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace slice
