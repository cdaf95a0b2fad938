#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "slice/rational.hpp"

namespace slice::linalg {

// Dense row-major utilities for the small systems that arise from simplices
// (order <= 8). One code path serves double and Rat; pivoting by largest
// magnitude is valid for both.

template <class T>
T mag(const T& x) {
  if constexpr (std::is_same_v<T, Rat>) {
    return abs(x);
  } else {
    return std::fabs(x);
  }
}

template <class T>
T determinant(std::vector<T> a, int n) {
  T det = 1;
  int sign = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    T best{};
    for (int r = col; r < n; ++r) {
      T m = mag(a[r * n + col]);
      if (pivot < 0 || m > best) {
        pivot = r;
        best = m;
      }
    }
    if (best == T(0)) return T(0);
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
      sign = -sign;
    }
    const T p = a[col * n + col];
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      if (a[r * n + col] == T(0)) continue;
      const T f = a[r * n + col] / p;
      for (int c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
    }
  }
  return sign > 0 ? det : -det;
}

template <class T>
std::vector<T> solve(std::vector<T> a, std::vector<T> b, int n) {
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    T best{};
    for (int r = col; r < n; ++r) {
      T m = mag(a[r * n + col]);
      if (pivot < 0 || m > best) {
        pivot = r;
        best = m;
      }
    }
    if (best == T(0)) throw std::domain_error("singular linear system");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
      std::swap(b[pivot], b[col]);
    }
    const T p = a[col * n + col];
    for (int r = col + 1; r < n; ++r) {
      if (a[r * n + col] == T(0)) continue;
      const T f = a[r * n + col] / p;
      for (int c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      b[r] -= f * b[col];
    }
  }
  std::vector<T> x(n);
  for (int r = n - 1; r >= 0; --r) {
    T s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r * n + c] * x[c];
    x[r] = s / a[r * n + r];
  }
  return x;
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

inline void add_scaled(std::vector<double>& y, double alpha,
                       const std::vector<double>& x) {
  for (size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

inline void subtract_projection(std::vector<double>& w,
                                const std::vector<double>& b) {
  const double alpha = dot(w, b);
  add_scaled(w, -alpha, b);
}

// Modified Gram-Schmidt; drops vectors whose residual falls below drop_tol
// relative to their original norm. Returns an orthonormal set.
inline std::vector<std::vector<double>> gram_schmidt(
    const std::vector<std::vector<double>>& vecs, double drop_tol = 1e-10) {
  std::vector<std::vector<double>> basis;
  for (const auto& v : vecs) {
    std::vector<double> w = v;
    const double n0 = norm(w);
    if (n0 == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) subtract_projection(w, b);
    const double n1 = norm(w);
    if (n1 <= drop_tol * n0) continue;
    for (auto& x : w) x /= n1;
    basis.push_back(std::move(w));
  }
  return basis;
}

// Extends an orthonormal set to a full orthonormal basis of R^ambient and
// returns only the new (complementary) vectors.
inline std::vector<std::vector<double>> orthonormal_complement(
    const std::vector<std::vector<double>>& basis, int ambient) {
  std::vector<std::vector<double>> comp;
  std::vector<std::vector<double>> all = basis;
  for (int i = 0; i < ambient; ++i) {
    std::vector<double> e(ambient, 0.0);
    e[i] = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : all) subtract_projection(e, b);
    const double n = norm(e);
    if (n <= 1e-8) continue;
    for (auto& x : e) x /= n;
    comp.push_back(e);
    all.push_back(std::move(e));
  }
  return comp;
}

}  // namespace slice::linalg
