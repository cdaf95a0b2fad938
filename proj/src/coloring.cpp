#include "slice/coloring.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace slice {

namespace {

using Clock = std::chrono::steady_clock;

bool adjacent(const std::vector<std::vector<int>>& adj, int u, int v) {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

// First k-clique (lexicographic) inside `cands`, or empty.
std::vector<int> find_clique_among(const std::vector<std::vector<int>>& adj,
                                   const std::vector<int>& cands, int k) {
  if (k <= 0) return {};
  std::vector<int> current;
  std::vector<int> result;
  auto rec = [&](auto&& self, const std::vector<int>& pool, size_t from) -> bool {
    if (static_cast<int>(current.size()) == k) {
      result = current;
      return true;
    }
    if (current.size() + (pool.size() - from) < static_cast<size_t>(k))
      return false;
    for (size_t i = from; i < pool.size(); ++i) {
      const int v = pool[i];
      bool ok = true;
      for (int c : current)
        if (!adjacent(adj, c, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(v);
      if (self(self, pool, i + 1)) return true;
      current.pop_back();
    }
    return false;
  };
  rec(rec, cands, 0);
  return result;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Smaller index becomes the representative (deterministic transcripts).
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

struct ContractionOutcome {
  // Representative adjacency (indices are original vertex ids of class reps).
  std::vector<int> rep_of;              // original vertex -> representative id
  std::vector<int> reps;                // representative ids in ascending order
  std::vector<std::vector<int>> radj;   // adjacency over rep ids (original ids)
  std::vector<MergeStep> merges;
  bool self_loop = false;
  std::array<int, 2> conflict_edge{-1, -1};
};

// Same-color contraction closure for c colors. Sound because the (c-1)-clique
// in the common neighborhood uses c-1 distinct colors, leaving one color for
// both endpoints.
ContractionOutcome contraction_closure(const std::vector<std::vector<int>>& adj,
                                       int c) {
  const int n = static_cast<int>(adj.size());
  Dsu dsu(n);
  ContractionOutcome out;

  // Class-level adjacency, maintained over representatives.
  auto build_radj = [&](std::vector<int>& reps,
                        std::vector<std::vector<int>>& radj,
                        std::array<int, 2>& loop_edge) -> bool {
    std::vector<std::vector<int>> members(n);
    reps.clear();
    for (int v = 0; v < n; ++v) members[dsu.find(v)].push_back(v);
    for (int v = 0; v < n; ++v)
      if (!members[v].empty()) reps.push_back(v);
    radj.assign(n, {});
    for (int u = 0; u < n; ++u)
      for (int v : adj[u]) {
        if (v <= u) continue;
        const int ru = dsu.find(u), rv = dsu.find(v);
        if (ru == rv) {
          loop_edge = {u, v};
          return false;
        }
        radj[ru].push_back(rv);
        radj[rv].push_back(ru);
      }
    for (int r : reps) {
      std::sort(radj[r].begin(), radj[r].end());
      radj[r].erase(std::unique(radj[r].begin(), radj[r].end()),
                    radj[r].end());
    }
    return true;
  };

  std::vector<int> reps;
  std::vector<std::vector<int>> radj;
  for (;;) {
    std::array<int, 2> loop_edge{-1, -1};
    if (!build_radj(reps, radj, loop_edge)) {
      out.self_loop = true;
      out.conflict_edge = loop_edge;
      break;
    }
    bool merged = false;
    std::vector<int> common;
    for (size_t a = 0; a < reps.size() && !merged; ++a) {
      const int u = reps[a];
      for (size_t b = a + 1; b < reps.size(); ++b) {
        const int w = reps[b];
        if (std::binary_search(radj[u].begin(), radj[u].end(), w)) continue;
        common.clear();
        {
          const auto& au = radj[u];
          const auto& aw = radj[w];
          size_t i = 0, j = 0;
          while (i < au.size() && j < aw.size()) {
            if (au[i] < aw[j])
              ++i;
            else if (au[i] > aw[j])
              ++j;
            else {
              common.push_back(au[i]);
              ++i;
              ++j;
            }
          }
        }
        if (static_cast<int>(common.size()) < c - 1) continue;
        auto clique = find_clique_among(radj, common, c - 1);
        if (clique.empty()) continue;
        out.merges.push_back({u, w, clique});
        dsu.unite(u, w);
        merged = true;
        break;
      }
    }
    if (!merged) break;
  }
  out.rep_of.resize(n);
  for (int v = 0; v < n; ++v) out.rep_of[v] = dsu.find(v);
  out.reps = reps;
  out.radj = std::move(radj);
  return out;
}

// DSATUR-ordered branch and bound deciding c-colorability of the graph given
// by `verts`/`adj` (adjacency over original ids). Colors of `seed` vertices
// are fixed upfront (symmetry breaking).
struct BnB {
  const std::vector<std::vector<int>>& adj;
  const std::vector<int>& verts;
  int c;
  long long node_limit;
  Clock::time_point deadline;
  long long nodes = 0;
  bool out_of_budget = false;
  std::vector<int> color;        // by original id; -1 = uncolored
  std::vector<uint64_t> forbid;  // bitmask of colors seen in the neighborhood
  std::vector<int> order_index;  // position of each vertex in `verts`

  BnB(const std::vector<std::vector<int>>& a, const std::vector<int>& vs,
      int colors, long long max_nodes, Clock::time_point dl)
      : adj(a), verts(vs), c(colors), node_limit(max_nodes), deadline(dl) {
    const int n = static_cast<int>(adj.size());
    color.assign(n, -1);
    forbid.assign(n, 0);
  }

  bool budget_ok() {
    if (out_of_budget) return false;
    if (nodes > node_limit ||
        (nodes % 4096 == 0 && Clock::now() > deadline)) {
      out_of_budget = true;
      return false;
    }
    return true;
  }

  int saturation(int v) const { return __builtin_popcountll(forbid[v]); }

  // Highest saturation, ties by lowest vertex index.
  int pick() const {
    int best = -1, best_sat = -1;
    for (int v : verts) {
      if (color[v] >= 0) continue;
      const int s = saturation(v);
      if (s > best_sat) {
        best_sat = s;
        best = v;
      }
    }
    return best;
  }

  bool assign(int v, int col, std::vector<int>& trail) {
    color[v] = col;
    trail.push_back(v);
    for (int w : adj[v]) {
      if (color[w] >= 0) continue;
      forbid[w] |= (1ULL << col);
      if (__builtin_popcountll(forbid[w]) >= c) return false;
    }
    return true;
  }

  void recompute_forbid(int w) {
    uint64_t mask = 0;
    for (int x : adj[w])
      if (color[x] >= 0) mask |= (1ULL << color[x]);
    forbid[w] = mask;
  }

  void undo(std::vector<int>& trail, size_t mark) {
    while (trail.size() > mark) {
      const int v = trail.back();
      trail.pop_back();
      color[v] = -1;
      recompute_forbid(v);
      for (int w : adj[v])
        if (color[w] < 0) recompute_forbid(w);
    }
  }

  // max_used: colors 0..max_used-1 are in use; a branch may open at most one
  // new color.
  bool search(int colored, int max_used, std::vector<int>& trail) {
    if (!budget_ok()) return false;
    if (colored == static_cast<int>(verts.size())) return true;
    const int v = pick();
    const int limit = std::min(c, max_used + 1);
    for (int col = 0; col < limit; ++col) {
      if (forbid[v] & (1ULL << col)) continue;
      ++nodes;
      if (!budget_ok()) return false;
      const size_t mark = trail.size();
      if (assign(v, col, trail) &&
          search(colored + 1, std::max(max_used, col + 1), trail))
        return true;
      undo(trail, mark);
      if (out_of_budget) return false;
    }
    return false;
  }
};

std::vector<int> max_clique_on(const std::vector<std::vector<int>>& adj,
                               const std::vector<int>& verts, int cap) {
  std::vector<int> best;
  std::vector<int> current;
  auto extend = [&](auto&& self, const std::vector<int>& cands) -> void {
    if (current.size() > best.size()) best = current;
    if (static_cast<int>(best.size()) >= cap) return;
    if (current.size() + cands.size() <= best.size()) return;
    for (size_t i = 0; i < cands.size(); ++i) {
      if (static_cast<int>(best.size()) >= cap) return;
      const int v = cands[i];
      std::vector<int> next;
      for (size_t k = i + 1; k < cands.size(); ++k)
        if (adjacent(adj, v, cands[k])) next.push_back(cands[k]);
      current.push_back(v);
      self(self, next);
      current.pop_back();
    }
  };
  extend(extend, verts);
  return best;
}

}  // namespace

std::vector<int> max_clique_upto5(const std::vector<std::vector<int>>& adj) {
  std::vector<int> all(adj.size());
  std::iota(all.begin(), all.end(), 0);
  return max_clique_on(adj, all, 5);
}

std::vector<int> greedy_dsatur(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(n, -1);
  std::vector<uint64_t> forbid(n, 0);
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].size());
  for (int step = 0; step < n; ++step) {
    int best = -1, best_sat = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      const int s = __builtin_popcountll(forbid[v]);
      if (s > best_sat) {
        best_sat = s;
        best = v;
      }
    }
    int col = 0;
    while (col < 63 && (forbid[best] & (1ULL << col))) ++col;
    if (col >= 63)
      throw std::invalid_argument(
          "graphs requiring more than 63 colors are unsupported");
    color[best] = col;
    for (int w : adj[best])
      if (color[w] < 0) forbid[w] |= (1ULL << col);
  }
  return color;
}

bool verify_coloring(const std::vector<std::vector<int>>& adj,
                     const std::vector<int>& colors) {
  if (colors.size() != adj.size())
    throw std::invalid_argument("coloring does not cover every vertex");
  for (int c : colors)
    if (c < 0) throw std::invalid_argument("vertex without a color");
  for (size_t u = 0; u < adj.size(); ++u)
    for (int v : adj[u])
      if (colors[u] == colors[v]) return false;
  return true;
}

bool verify_coloring(const UnitDistanceGraph& g,
                     const std::vector<int>& colors) {
  return verify_coloring(adjacency_lists(g), colors);
}

std::optional<std::vector<int>> find_odd_cycle(
    const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> depth(n, -1), parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (depth[v] < 0) {
          depth[v] = depth[u] + 1;
          parent[v] = u;
          q.push(v);
          continue;
        }
        if ((depth[v] ^ depth[u]) & 1) continue;  // even cycle through u,v
        // Same parity: walk both chains to the meeting point.
        std::vector<int> pu{u}, pv{v};
        int a = u, b = v;
        while (depth[a] > depth[b]) pu.push_back(a = parent[a]);
        while (depth[b] > depth[a]) pv.push_back(b = parent[b]);
        while (a != b) {
          pu.push_back(a = parent[a]);
          pv.push_back(b = parent[b]);
        }
        std::vector<int> cycle(pu.begin(), pu.end());
        for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it)
          cycle.push_back(*it);
        return cycle;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_odd_cycle(const UnitDistanceGraph& g) {
  return find_odd_cycle(adjacency_lists(g));
}

DecideResult decide_k_colorable(const std::vector<std::vector<int>>& adj, int c,
                                const SearchBudget& budget) {
  if (c < 1) throw std::invalid_argument("color count must be >= 1");
  if (c > 63) throw std::invalid_argument("color count above 63 unsupported");
  DecideResult res;
  res.transcript.kind = CertKind::exhaustive_unsat;
  res.transcript.colors_tested = c;

  auto contraction = contraction_closure(adj, c);
  res.transcript.merges = contraction.merges;
  if (contraction.self_loop) {
    res.status = DecideStatus::unsat;
    res.transcript.contradiction = "merged_edge";
    res.transcript.conflict_edge = contraction.conflict_edge;
    return res;
  }

  auto clique = max_clique_on(contraction.radj, contraction.reps,
                              std::min(63, c + 1));
  if (static_cast<int>(clique.size()) > c) {
    res.status = DecideStatus::unsat;
    res.transcript.contradiction = "merged_clique";
    res.transcript.conflict_clique = clique;
    return res;
  }

  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(budget.max_seconds));
  BnB bnb(contraction.radj, contraction.reps, c, budget.max_nodes, deadline);
  std::vector<int> trail;
  bool seed_consistent = true;
  for (size_t i = 0; i < clique.size(); ++i)
    if (!bnb.assign(clique[i], static_cast<int>(i), trail)) {
      seed_consistent = false;
      break;
    }
  bool sat = false;
  if (seed_consistent)
    sat = bnb.search(static_cast<int>(clique.size()),
                     static_cast<int>(clique.size()), trail);
  res.nodes = bnb.nodes;
  res.transcript.nodes = bnb.nodes;
  if (sat) {
    res.status = DecideStatus::sat;
    res.coloring.resize(adj.size());
    for (size_t v = 0; v < adj.size(); ++v)
      res.coloring[v] = bnb.color[contraction.rep_of[v]];
    return res;
  }
  if (bnb.out_of_budget) {
    res.status = DecideStatus::inconclusive;
    return res;
  }
  res.status = DecideStatus::unsat;
  res.transcript.contradiction = "search_exhausted";
  return res;
}

namespace {

// Replays a contraction transcript against the original adjacency; each step
// must be structurally justified at the time it is applied.
bool replay_merges(const std::vector<std::vector<int>>& adj,
                   const ColoringCertificate& cert, Dsu& dsu) {
  const int n = static_cast<int>(adj.size());
  const int c = cert.colors_tested;
  auto class_adjacent = [&](int x, int y) {
    x = dsu.find(x);
    y = dsu.find(y);
    for (int u = 0; u < n; ++u) {
      if (dsu.find(u) != x) continue;
      for (int v : adj[u])
        if (dsu.find(v) == y) return true;
    }
    return false;
  };
  for (const auto& step : cert.merges) {
    if (step.u < 0 || step.u >= n || step.w < 0 || step.w >= n) return false;
    if (dsu.find(step.u) == dsu.find(step.w)) return false;
    if (class_adjacent(step.u, step.w)) return false;
    if (static_cast<int>(step.clique.size()) != c - 1) return false;
    for (size_t i = 0; i < step.clique.size(); ++i) {
      if (!class_adjacent(step.clique[i], step.u)) return false;
      if (!class_adjacent(step.clique[i], step.w)) return false;
      for (size_t j = i + 1; j < step.clique.size(); ++j)
        if (!class_adjacent(step.clique[i], step.clique[j])) return false;
    }
    dsu.unite(step.u, step.w);
  }
  return true;
}

}  // namespace

bool verify_certificate(const std::vector<std::vector<int>>& adj,
                        const ColoringCertificate& cert, int chi) {
  switch (cert.kind) {
    case CertKind::proper_coloring: {
      if (!verify_coloring(adj, cert.colors)) return false;
      int used = 0;
      std::vector<bool> seen(64, false);
      for (int c : cert.colors)
        if (c >= 0 && c < 64 && !seen[c]) {
          seen[c] = true;
          ++used;
        }
      return used == cert.colors_used && used == chi;
    }
    case CertKind::clique_witness: {
      const auto& w = cert.witness_vertices;
      if (static_cast<int>(w.size()) != chi) return false;
      for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
          if (!adjacent(adj, w[i], w[j])) return false;
      return true;
    }
    case CertKind::odd_cycle_witness: {
      const auto& w = cert.witness_vertices;
      if (w.size() < 3 || w.size() % 2 == 0) return false;
      if (chi != 3) return false;
      std::vector<int> sorted = w;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
      for (size_t i = 0; i < w.size(); ++i)
        if (!adjacent(adj, w[i], w[(i + 1) % w.size()])) return false;
      return true;
    }
    case CertKind::exhaustive_unsat: {
      if (cert.colors_tested != chi - 1) return false;
      Dsu dsu(static_cast<int>(adj.size()));
      if (!replay_merges(adj, cert, dsu)) return false;
      if (cert.contradiction == "merged_edge") {
        auto [u, v] = cert.conflict_edge;
        return u >= 0 && v >= 0 && adjacent(adj, u, v) &&
               dsu.find(u) == dsu.find(v);
      }
      if (cert.contradiction == "merged_clique") {
        const auto& q = cert.conflict_clique;
        if (static_cast<int>(q.size()) != cert.colors_tested + 1) return false;
        // Classes must be pairwise distinct and pairwise adjacent.
        for (size_t i = 0; i < q.size(); ++i)
          for (size_t j = i + 1; j < q.size(); ++j) {
            if (dsu.find(q[i]) == dsu.find(q[j])) return false;
            bool adj_ij = false;
            const int n = static_cast<int>(adj.size());
            for (int u = 0; u < n && !adj_ij; ++u) {
              if (dsu.find(u) != dsu.find(q[i])) continue;
              for (int v : adj[u])
                if (dsu.find(v) == dsu.find(q[j])) {
                  adj_ij = true;
                  break;
                }
            }
            if (!adj_ij) return false;
          }
        return true;
      }
      if (cert.contradiction == "search_exhausted") {
        // Deterministic re-run of the decision procedure.
        SearchBudget b;
        b.max_nodes = std::max<long long>(cert.nodes * 2 + 1024, 1 << 20);
        auto rerun = decide_k_colorable(adj, cert.colors_tested, b);
        return rerun.status == DecideStatus::unsat;
      }
      return false;
    }
  }
  return false;
}

ChromaticResult chromatic_number(const std::vector<std::vector<int>>& adj,
                                 const SearchBudget& budget) {
  if (adj.empty()) throw std::invalid_argument("empty graph");
  if (budget.max_nodes <= 0 || budget.max_seconds <= 0)
    throw std::invalid_argument("budget must be positive");
  const auto t0 = Clock::now();
  ChromaticResult res;

  auto clique = max_clique_upto5(adj);
  auto greedy = greedy_dsatur(adj);
  int upper = 1 + *std::max_element(greedy.begin(), greedy.end());
  std::vector<int> best_coloring = greedy;

  res.lower_bound = static_cast<int>(clique.size());
  res.upper_bound = upper;

  auto elapsed = [&] {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  };

  ColoringCertificate lower;
  bool have_lower = false;

  while (upper > static_cast<int>(clique.size())) {
    const int c = upper - 1;
    SearchBudget remaining;
    remaining.max_nodes = budget.max_nodes - res.nodes;
    remaining.max_seconds = budget.max_seconds - elapsed();
    if (remaining.max_nodes <= 0 || remaining.max_seconds <= 0) {
      res.exact = false;
      res.upper_bound = upper;
      res.upper = ColoringCertificate{};
      res.upper.kind = CertKind::proper_coloring;
      res.upper.colors = best_coloring;
      res.upper.colors_used = upper;
      res.lower = ColoringCertificate{};
      res.lower.kind = CertKind::clique_witness;
      res.lower.witness_vertices = clique;
      res.lower.colors_used = static_cast<int>(clique.size());
      res.seconds = elapsed();
      return res;
    }
    auto decision = decide_k_colorable(adj, c, remaining);
    res.nodes += decision.nodes;
    if (decision.status == DecideStatus::sat) {
      best_coloring = decision.coloring;
      upper = c;
      res.upper_bound = upper;
      continue;
    }
    if (decision.status == DecideStatus::unsat) {
      res.lower_bound = c + 1;
      // Lower-bound preference: clique, then odd cycle, then the transcript.
      if (c + 1 == 3) {
        if (auto cyc = find_odd_cycle(adj)) {
          lower.kind = CertKind::odd_cycle_witness;
          lower.witness_vertices = *cyc;
          lower.colors_used = 3;
          have_lower = true;
        }
      }
      if (!have_lower) {
        lower = decision.transcript;
        lower.colors_used = c + 1;
        have_lower = true;
      }
      break;
    }
    // Budget ran out mid-decision.
    res.exact = false;
    res.upper = ColoringCertificate{};
    res.upper.kind = CertKind::proper_coloring;
    res.upper.colors = best_coloring;
    res.upper.colors_used = upper;
    res.lower = ColoringCertificate{};
    res.lower.kind = CertKind::clique_witness;
    res.lower.witness_vertices = clique;
    res.lower.colors_used = static_cast<int>(clique.size());
    res.seconds = elapsed();
    return res;
  }

  const int chi = upper;
  if (!have_lower) {
    lower.kind = CertKind::clique_witness;
    lower.witness_vertices = clique;
    lower.colors_used = chi;
  }
  ColoringCertificate upper_cert;
  upper_cert.kind = CertKind::proper_coloring;
  upper_cert.colors = best_coloring;
  upper_cert.colors_used = chi;

  if (!verify_certificate(adj, upper_cert, chi))
    throw std::runtime_error("upper certificate failed re-verification");
  if (!verify_certificate(adj, lower, chi))
    throw std::runtime_error("lower certificate failed re-verification");

  res.exact = true;
  res.chi = chi;
  res.lower_bound = chi;
  res.upper_bound = chi;
  res.upper = std::move(upper_cert);
  res.lower = std::move(lower);
  res.seconds = elapsed();
  return res;
}

ChromaticResult chromatic_number(const UnitDistanceGraph& g,
                                 const SearchBudget& budget) {
  if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
  return chromatic_number(adjacency_lists(g), budget);
}

std::string export_dimacs_cnf(size_t vertices,
                              const std::vector<std::pair<int, int>>& edges,
                              int c) {
  if (c < 1) throw std::invalid_argument("color count must be >= 1");
  std::ostringstream os;
  os << "p cnf " << vertices * c << " " << vertices + edges.size() * c << "\n";
  for (size_t v = 0; v < vertices; ++v) {
    for (int t = 0; t < c; ++t) os << v * c + t + 1 << " ";
    os << "0\n";
  }
  for (auto [u, v] : edges)
    for (int t = 0; t < c; ++t)
      os << "-" << u * c + t + 1 << " -" << v * c + t + 1 << " 0\n";
  return os.str();
}

std::string export_dimacs_cnf(const UnitDistanceGraph& g, int c) {
  return export_dimacs_cnf(g.vertex_count(), g.edges, c);
}

}  // namespace slice
