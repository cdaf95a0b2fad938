#include "slice/rational_slice.hpp"

#include <stdexcept>

namespace slice {

namespace {

constexpr long kWitnessVertexCap = 100000;

Rat rat_int(const Int& z) { return Rat(z); }

}  // namespace

std::vector<PellPair> pell_solutions(int count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  std::vector<PellPair> out;
  out.reserve(count);
  Int a = 1, b = 1;
  for (int i = 0; i < count; ++i) {
    if (3 * b * b - a * a != 2)
      throw std::logic_error("recurrence left the solution set");
    out.push_back({a, b, i});
    const Int a2 = 7 * a + 12 * b;
    const Int b2 = 4 * a + 7 * b;
    a = a2;
    b = b2;
  }
  return out;
}

RhombusGadget rhombus_gadget(const PellPair& p, const Rat& eps,
                             const std::array<Rat, 4>& translate) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  const Rat b2(p.b * p.b);
  if (Rat(1) / (2 * b2) >= eps)
    throw std::invalid_argument(
        "slab constraint 1/(2 b^2) < eps violated for this pair");
  RhombusGadget g;
  g.q = rat_int(p.a) / (2 * rat_int(p.b));
  g.alpha = Rat(1) / (2 * rat_int(p.b));
  g.beta = g.alpha;
  const Rat half(1, 2);
  auto mk = [&](Rat x, Rat y, Rat s1, Rat s2) {
    return ExactPoint({translate[0] + x, translate[1] + y},
                      {translate[2] + s1, translate[3] + s2});
  };
  g.A = mk(0, 0, 0, 0);
  g.B = mk(g.q, half, g.alpha, g.beta);
  g.C = mk(g.q, -half, g.alpha, g.beta);
  g.D = mk(2 * g.q, 0, 0, 0);
  // All five construction distances must be exactly one.
  const Rat one(1);
  if (dist_sq(g.A, g.B) != one || dist_sq(g.A, g.C) != one ||
      dist_sq(g.B, g.C) != one || dist_sq(g.B, g.D) != one ||
      dist_sq(g.C, g.D) != one)
    throw std::logic_error("gadget distance identity failed");
  return g;
}

std::pair<Int, Int> bezout_combination(int n) {
  if (n < 0) throw std::invalid_argument("index must be >= 0");
  auto pairs = pell_solutions(n + 2);
  const Int& an = pairs[n].a;
  const Int& bn = pairs[n].b;
  const Int& an1 = pairs[n + 1].a;
  const Int& bn1 = pairs[n + 1].b;

  const Int A = an * bn1;
  const Int B = an1 * bn;
  Int g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), A.get_mpz_t(),
             B.get_mpz_t());
  if (g != 1)
    throw std::logic_error("gcd(a_n b_{n+1}, a_{n+1} b_n) != 1");
  const Int target = bn * bn1;
  Int x = u * target;
  // Canonical representative with x in [0, B).
  Int r = x % B;
  if (r < 0) r += B;
  x = r;
  Int y = (target - x * A) / B;
  if (x * A + y * B != target)
    throw std::logic_error("combination identity failed");
  return {x, y};
}

UnitDistanceGraph witness_graph(int n, const Rat& eps) {
  if (n < 0) throw std::invalid_argument("index must be >= 0");
  auto pairs = pell_solutions(n + 2);
  const PellPair& p0 = pairs[n];
  const PellPair& p1 = pairs[n + 1];
  for (const PellPair* p : {&p0, &p1}) {
    const Rat b2(p->b * p->b);
    if (Rat(1) / (2 * b2) >= eps)
      throw std::invalid_argument(
          "slab constraint 1/(2 b^2) < eps violated for this pair");
  }
  auto [x, y] = bezout_combination(n);

  struct StepKind {
    const PellPair* pair;
    Rat span;     // a/b
    int sign;     // +1 right, -1 left
    long remaining;
  };
  auto count_of = [](const Int& v) {
    Int a = abs(v);
    if (!a.fits_slong_p()) throw std::runtime_error("step count overflow");
    return a.get_si();
  };
  StepKind s0{&p0, rat_int(p0.a) / rat_int(p0.b), sgn(x) >= 0 ? 1 : -1,
              count_of(x)};
  StepKind s1{&p1, rat_int(p1.a) / rat_int(p1.b), sgn(y) >= 0 ? 1 : -1,
              count_of(y)};
  const long gadgets = s0.remaining + s1.remaining;
  if (1 + 3 * gadgets > kWitnessVertexCap)
    throw std::runtime_error("witness graph exceeds the vertex cap of 100000");

  std::vector<ExactPoint> points;
  points.reserve(1 + 3 * gadgets);
  points.push_back(ExactPoint({Rat(0), Rat(0)}, {Rat(0), Rat(0)}));
  Rat cur(0);
  // Interleave the two step kinds, always picking the one that keeps the
  // running coordinate closest to zero; keeps all numerators small.
  while (s0.remaining > 0 || s1.remaining > 0) {
    StepKind* pick = nullptr;
    Rat best;
    for (StepKind* s : {&s0, &s1}) {
      if (s->remaining == 0) continue;
      Rat cand = abs(cur + s->sign * s->span);
      if (pick == nullptr || cand < best) {
        pick = s;
        best = cand;
      }
    }
    const Rat lo = pick->sign > 0 ? cur : cur - pick->span;
    auto g = rhombus_gadget(*pick->pair, eps, {lo, Rat(0), Rat(0), Rat(0)});
    // Anchors A and D are shared with neighbouring gadgets; deduplication
    // collapses the copies.
    points.push_back(g.A);
    points.push_back(g.B);
    points.push_back(g.C);
    points.push_back(g.D);
    cur += pick->sign * pick->span;
    --pick->remaining;
  }
  if (cur != 1)
    throw std::logic_error("gadget chain does not reach x = 1");
  return build_udg(std::move(points));
}

Int z_sqrt3_norm(const Int& a, const Int& b) { return a * a - 3 * b * b; }

}  // namespace slice
