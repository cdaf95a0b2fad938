#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "slice/point.hpp"

namespace testsupport {

// Determinant by Laplace expansion; exponential, fine for order <= 8.
template <class T>
T laplace_det(const std::vector<T>& m, int n) {
  if (n == 1) return m[0];
  T acc = T(0);
  std::vector<T> minor((n - 1) * (n - 1));
  for (int c = 0; c < n; ++c) {
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int k = 0; k < n; ++k) {
        if (k == c) continue;
        minor[(r - 1) * (n - 1) + cc] = m[r * n + k];
        ++cc;
      }
    }
    T term = m[c] * laplace_det(minor, n - 1);
    if (c % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// Complete enumeration of all c^V assignments.
inline bool brute_force_colorable(const std::vector<std::vector<int>>& adj,
                                  int c) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> col(n, 0);
  for (;;) {
    bool proper = true;
    for (int u = 0; u < n && proper; ++u)
      for (int v : adj[u])
        if (v > u && col[u] == col[v]) {
          proper = false;
          break;
        }
    if (proper) return true;
    int i = 0;
    while (i < n && ++col[i] == c) col[i++] = 0;
    if (i == n) return false;
  }
}

inline int brute_force_chromatic(const std::vector<std::vector<int>>& adj) {
  bool has_edge = false;
  for (const auto& a : adj)
    if (!a.empty()) has_edge = true;
  if (!has_edge) return adj.empty() ? 0 : 1;
  for (int c = 2;; ++c)
    if (brute_force_colorable(adj, c)) return c;
}

inline std::vector<std::vector<int>> adjacency_from_edges(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

// Two unit rhombi sharing a vertex, tips joined: 7 points, 11 unit edges,
// chromatic number 4.
inline std::vector<slice::FloatPoint> moser_spindle_points() {
  const double s3 = std::sqrt(3.0) / 2.0;
  std::vector<std::array<double, 2>> base = {
      {0.0, 0.0}, {1.0, 0.0}, {0.5, s3}, {1.5, s3}};
  const double alpha = 2.0 * std::asin(1.0 / (2.0 * std::sqrt(3.0)));
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  std::vector<slice::FloatPoint> pts;
  pts.emplace_back(std::vector<double>{0.0, 0.0}, 2, 0);
  for (size_t i = 1; i < base.size(); ++i)
    pts.emplace_back(std::vector<double>{base[i][0], base[i][1]}, 2, 0);
  for (size_t i = 1; i < base.size(); ++i)
    pts.emplace_back(std::vector<double>{ca * base[i][0] - sa * base[i][1],
                                         sa * base[i][0] + ca * base[i][1]},
                     2, 0);
  return pts;
}

// C5 Mycielskian (Groetzsch graph): 11 vertices, triangle-free, chromatic
// number 4. Exercises the search path that has no clique or contraction help.
inline std::vector<std::vector<int>> groetzsch_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(5 + i, (i + 1) % 5);
    edges.emplace_back(5 + i, (i + 4) % 5);
    edges.emplace_back(5 + i, 10);
  }
  return adjacency_from_edges(11, edges);
}

// Minimal complete DPLL over DIMACS CNF text; independent of the library.
struct DimacsCnf {
  int vars = 0;
  std::vector<std::vector<int>> clauses;
};

inline DimacsCnf parse_dimacs_cnf(const std::string& text) {
  DimacsCnf cnf;
  std::istringstream is(text);
  std::string tok;
  int clause_count = 0;
  while (is >> tok) {
    if (tok == "c") {
      std::string rest;
      std::getline(is, rest);
    } else if (tok == "p") {
      std::string fmt;
      is >> fmt >> cnf.vars >> clause_count;
    } else {
      int lit = std::stoi(tok);
      if (cnf.clauses.empty()) cnf.clauses.emplace_back();
      if (lit == 0) {
        cnf.clauses.emplace_back();
      } else {
        cnf.clauses.back().push_back(lit);
      }
    }
  }
  while (!cnf.clauses.empty() && cnf.clauses.back().empty())
    cnf.clauses.pop_back();
  return cnf;
}

inline bool dpll(std::vector<std::vector<int>> clauses, std::vector<int> assign,
                 int vars) {
  for (;;) {
    bool changed = false;
    for (const auto& cl : clauses) {
      int unassigned = 0, last = 0;
      bool sat = false;
      for (int lit : cl) {
        const int v = std::abs(lit);
        if (assign[v] == 0) {
          ++unassigned;
          last = lit;
        } else if (assign[v] == (lit > 0 ? 1 : -1)) {
          sat = true;
          break;
        }
      }
      if (sat) continue;
      if (unassigned == 0) return false;
      if (unassigned == 1) {
        assign[std::abs(last)] = last > 0 ? 1 : -1;
        changed = true;
      }
    }
    if (!changed) break;
  }
  int branch = 0;
  for (int v = 1; v <= vars; ++v)
    if (assign[v] == 0) {
      branch = v;
      break;
    }
  if (branch == 0) {
    for (const auto& cl : clauses) {
      bool sat = false;
      for (int lit : cl)
        if (assign[std::abs(lit)] == (lit > 0 ? 1 : -1)) {
          sat = true;
          break;
        }
      if (!sat) return false;
    }
    return true;
  }
  auto a1 = assign;
  a1[branch] = 1;
  if (dpll(clauses, a1, vars)) return true;
  assign[branch] = -1;
  return dpll(clauses, assign, vars);
}

inline bool dimacs_cnf_satisfiable(const std::string& text) {
  auto cnf = parse_dimacs_cnf(text);
  return dpll(cnf.clauses, std::vector<int>(cnf.vars + 1, 0), cnf.vars);
}

}  // namespace testsupport
