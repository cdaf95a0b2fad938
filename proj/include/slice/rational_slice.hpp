#pragma once

#include <array>
#include <utility>
#include <vector>

#include "slice/point.hpp"
#include "slice/udg.hpp"

namespace slice {

// Integer solution of 3b^2 - a^2 = 2; both coordinates odd, b strictly
// increasing with the generation index.
struct PellPair {
  Int a;
  Int b;
  int index = 0;
};

// First `count` solutions from (1,1) under
// (a,b) -> (7a + 12b, 4a + 7b); every pair is asserted to solve the equation.
std::vector<PellPair> pell_solutions(int count);

// Four points A, B, C, D in Q^2 x [0,eps]^2 with the five unit distances
// AB, AC, BC, BD, CD exact and D - A = (2q, 0, 0, 0):
//   A = t, B = t + (q, 1/2, alpha, beta), C = t + (q, -1/2, alpha, beta),
//   D = t + (2q, 0, 0, 0), with q = a/(2b) and alpha = beta = 1/(2b).
struct RhombusGadget {
  ExactPoint A, B, C, D;
  Rat q, alpha, beta;
};

// Requires 1/(2 b^2) < eps (the slab feasibility condition of the
// construction); throws otherwise.
RhombusGadget rhombus_gadget(const PellPair& p, const Rat& eps,
                             const std::array<Rat, 4>& translate = {});

// Integers (x, y) with x * a_n/b_n + y * a_{n+1}/b_{n+1} = 1, i.e.
// x a_n b_{n+1} + y a_{n+1} b_n = b_n b_{n+1}; x is canonicalized into
// [0, a_{n+1} b_n).
std::pair<Int, Int> bezout_combination(int n);

// Chain of |x| gadgets of span a_n/b_n and |y| gadgets of span
// a_{n+1}/b_{n+1} along the first axis, reaching x-coordinate 1; the unit
// predicate then supplies the closing edge {origin, (1,0,0,0)}. The result is
// not 3-colorable.
UnitDistanceGraph witness_graph(int n, const Rat& eps);

// Field norm of a + b*sqrt(3) over Z[sqrt(3)]: a^2 - 3 b^2.
Int z_sqrt3_norm(const Int& a, const Int& b);

}  // namespace slice
