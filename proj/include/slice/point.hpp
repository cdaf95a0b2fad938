#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slice/rational.hpp"

namespace slice {

// Widths of the two coordinate blocks: n free coordinates followed by k
// coordinates confined to [0, eps].
struct SliceSpec {
  int n = 1;
  int k = 0;
  Rat eps = 1;

  SliceSpec() = default;
  SliceSpec(int n_, int k_, Rat eps_) : n(n_), k(k_), eps(std::move(eps_)) {
    if (n < 1 || k < 0 || eps <= 0)
      throw std::invalid_argument("slice spec requires n >= 1, k >= 0, eps > 0");
  }
  int dim() const { return n + k; }
};

// Exact-backed point: rationals, canonical representation.
struct ExactPoint {
  std::vector<Rat> main;
  std::vector<Rat> slab;

  ExactPoint() = default;
  ExactPoint(std::vector<Rat> main_, std::vector<Rat> slab_)
      : main(std::move(main_)), slab(std::move(slab_)) {}

  int dim() const { return static_cast<int>(main.size() + slab.size()); }

  const Rat& coord(int i) const {
    return i < static_cast<int>(main.size()) ? main[i]
                                             : slab[i - main.size()];
  }

  bool operator==(const ExactPoint& o) const {
    return main == o.main && slab == o.slab;
  }

  // Lexicographic order, used for canonical deduplication.
  bool operator<(const ExactPoint& o) const {
    if (main.size() != o.main.size()) return main.size() < o.main.size();
    if (slab.size() != o.slab.size()) return slab.size() < o.slab.size();
    for (size_t i = 0; i < main.size(); ++i) {
      int c = cmp(main[i], o.main[i]);
      if (c != 0) return c < 0;
    }
    for (size_t i = 0; i < slab.size(); ++i) {
      int c = cmp(slab[i], o.slab[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  bool in_slice(const SliceSpec& spec) const {
    if (static_cast<int>(main.size()) != spec.n ||
        static_cast<int>(slab.size()) != spec.k)
      return false;
    for (const Rat& y : slab)
      if (y < 0 || y > spec.eps) return false;
    return true;
  }
};

inline Rat dist_sq(const ExactPoint& a, const ExactPoint& b) {
  if (a.dim() != b.dim() || a.main.size() != b.main.size())
    throw std::invalid_argument("exact points of mismatched shape");
  Rat s = 0;
  for (int i = 0; i < a.dim(); ++i) {
    Rat d = a.coord(i) - b.coord(i);
    s += d * d;
  }
  return s;
}

// Float-backed point; coordinates must be finite.
struct FloatPoint {
  std::vector<double> coords;
  int dim_main = 0;
  int dim_slab = 0;

  FloatPoint() = default;
  FloatPoint(std::vector<double> c, int n, int k)
      : coords(std::move(c)), dim_main(n), dim_slab(k) {
    if (static_cast<int>(coords.size()) != n + k)
      throw std::invalid_argument("point dimension mismatch");
    for (double x : coords)
      if (!std::isfinite(x))
        throw std::invalid_argument("non-finite coordinate");
  }
  explicit FloatPoint(std::vector<double> c) {
    dim_main = static_cast<int>(c.size());
    dim_slab = 0;
    coords = std::move(c);
    for (double x : coords)
      if (!std::isfinite(x))
        throw std::invalid_argument("non-finite coordinate");
  }

  int dim() const { return static_cast<int>(coords.size()); }
  double operator[](int i) const { return coords[i]; }
  double& operator[](int i) { return coords[i]; }
};

inline double dist_sq(const FloatPoint& a, const FloatPoint& b) {
  double s = 0;
  for (int i = 0; i < a.dim(); ++i) {
    const double d = a.coords[i] - b.coords[i];
    s += d * d;
  }
  return s;
}

inline double dist(const FloatPoint& a, const FloatPoint& b) {
  return std::sqrt(dist_sq(a, b));
}

inline FloatPoint to_float(const ExactPoint& p) {
  std::vector<double> c;
  c.reserve(p.dim());
  for (const Rat& q : p.main) c.push_back(q.get_d());
  for (const Rat& q : p.slab) c.push_back(q.get_d());
  return FloatPoint(std::move(c), static_cast<int>(p.main.size()),
                    static_cast<int>(p.slab.size()));
}

}  // namespace slice
