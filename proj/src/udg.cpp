#include "slice/udg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "slice/geom.hpp"
#include "slice/kernels.hpp"

namespace slice {

namespace {

std::vector<ExactPoint> dedup_exact(std::vector<ExactPoint> pts) {
  std::vector<int> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return pts[a] < pts[b]; });
  std::vector<bool> drop(pts.size(), false);
  for (size_t i = 1; i < order.size(); ++i)
    if (pts[order[i]] == pts[order[i - 1]]) drop[order[i]] = true;
  std::vector<ExactPoint> out;
  out.reserve(pts.size());
  for (size_t i = 0; i < pts.size(); ++i)
    if (!drop[i]) out.push_back(std::move(pts[i]));
  return out;
}

std::vector<FloatPoint> dedup_float(const std::vector<FloatPoint>& pts) {
  const size_t n = pts.size();
  if (n == 0) return {};
  const size_t dim = pts[0].dim();
  std::vector<double> flat(n * dim);
  for (size_t i = 0; i < n; ++i)
    std::copy(pts[i].coords.begin(), pts[i].coords.end(),
              flat.begin() + i * dim);
  const auto fn = kernels::dist_sq_one_to_many();
  std::vector<bool> drop(n, false);
  std::vector<double> row(n);
  const double tol2 = kGeomTol * kGeomTol;
  for (size_t i = 0; i + 1 < n; ++i) {
    if (drop[i]) continue;
    const size_t rest = n - i - 1;
    fn(flat.data() + i * dim, flat.data() + (i + 1) * dim, rest, dim,
       row.data());
    for (size_t j = 0; j < rest; ++j)
      if (row[j] < tol2) drop[i + 1 + j] = true;
  }
  std::vector<FloatPoint> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i)
    if (!drop[i]) out.push_back(pts[i]);
  return out;
}

}  // namespace

UnitDistanceGraph build_udg(std::vector<ExactPoint> pts,
                            std::optional<SliceSpec> slice) {
  for (const auto& p : pts) {
    if (p.dim() != pts[0].dim() || p.main.size() != pts[0].main.size())
      throw std::invalid_argument("points of mismatched shape");
    if (slice && !p.in_slice(*slice))
      throw std::invalid_argument("point outside the slice slab");
  }
  UnitDistanceGraph g;
  g.exact = true;
  g.epoints = dedup_exact(std::move(pts));
  g.predicate = {AdjacencyPredicate::Kind::exact, 0.0};
  g.slice = std::move(slice);
  const int n = static_cast<int>(g.epoints.size());
  const Rat one(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist_sq(g.epoints[i], g.epoints[j]) == one) g.edges.emplace_back(i, j);
  return g;
}

UnitDistanceGraph build_udg(std::vector<FloatPoint> pts, double tau,
                            std::optional<SliceSpec> slice, int threads) {
  if (tau < 0.0 || tau > 0.1)
    throw std::invalid_argument("tolerance must lie in [0, 0.1]");
  for (const auto& p : pts) {
    if (p.dim() != pts[0].dim())
      throw std::invalid_argument("points of mismatched dimension");
    if (slice) {
      if (p.dim_main != slice->n || p.dim_slab != slice->k)
        throw std::invalid_argument("point shape does not match the slice");
      const double eps = slice->eps.get_d();
      for (int d = p.dim_main; d < p.dim(); ++d)
        if (p.coords[d] < -1e-12 || p.coords[d] > eps + 1e-12)
          throw std::invalid_argument("point outside the slice slab");
    }
  }
  UnitDistanceGraph g;
  g.exact = false;
  g.fpoints = dedup_float(pts);
  g.predicate = {AdjacencyPredicate::Kind::tolerance, tau};
  g.slice = std::move(slice);

  const size_t n = g.fpoints.size();
  if (n < 2) return g;
  const size_t dim = g.fpoints[0].dim();
  std::vector<double> flat(n * dim);
  for (size_t i = 0; i < n; ++i)
    std::copy(g.fpoints[i].coords.begin(), g.fpoints[i].coords.end(),
              flat.begin() + i * dim);

  // Band test on squared distances: 1-tau <= d <= 1+tau for nonnegative d.
  const double lo = (1.0 - tau) * (1.0 - tau);
  const double hi = (1.0 + tau) * (1.0 + tau);
  const auto fn = kernels::dist_sq_one_to_many();
  std::vector<std::vector<std::pair<int, int>>> rows(n);
  auto work = [&](size_t begin, size_t step) {
    std::vector<double> row(n);
    for (size_t i = begin; i + 1 < n; i += step) {
      const size_t rest = n - i - 1;
      fn(flat.data() + i * dim, flat.data() + (i + 1) * dim, rest, dim,
         row.data());
      for (size_t j = 0; j < rest; ++j)
        if (row[j] >= lo && row[j] <= hi)
          rows[i].emplace_back(static_cast<int>(i),
                               static_cast<int>(i + 1 + j));
    }
  };
  const int nthreads = std::max(1, threads);
  if (nthreads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t, nthreads);
    for (auto& th : pool) th.join();
  }
  // Row-ordered merge keeps the result independent of the thread count.
  for (auto& r : rows)
    g.edges.insert(g.edges.end(), r.begin(), r.end());
  return g;
}

std::vector<std::vector<int>> adjacency_lists(const UnitDistanceGraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (auto [i, j] : g.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

namespace {

// Exhaustive max-clique search capped at the given size.
int clique_search(const std::vector<std::vector<int>>& adj, int cap) {
  const int n = static_cast<int>(adj.size());
  int best = n > 0 ? 1 : 0;
  std::vector<int> current;
  std::vector<std::vector<int>> cand_stack;

  auto extend = [&](auto&& self, const std::vector<int>& cands) -> void {
    if (static_cast<int>(current.size()) > best)
      best = static_cast<int>(current.size());
    if (best >= cap) return;
    if (current.size() + cands.size() <= static_cast<size_t>(best)) return;
    for (size_t idx = 0; idx < cands.size(); ++idx) {
      if (best >= cap) return;
      const int v = cands[idx];
      std::vector<int> next;
      for (size_t k = idx + 1; k < cands.size(); ++k)
        if (std::binary_search(adj[v].begin(), adj[v].end(), cands[k]))
          next.push_back(cands[k]);
      current.push_back(v);
      self(self, next);
      current.pop_back();
    }
  };
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  extend(extend, all);
  return std::min(best, cap);
}

}  // namespace

GraphStats graph_stats(const UnitDistanceGraph& g) {
  GraphStats st;
  st.vertices = static_cast<int>(g.vertex_count());
  st.edge_count = static_cast<long long>(g.edges.size());
  auto adj = adjacency_lists(g);
  for (const auto& a : adj)
    st.max_degree = std::max(st.max_degree, static_cast<int>(a.size()));
  st.clique_number = clique_search(adj, 5);
  return st;
}

std::string to_dimacs_graph(const UnitDistanceGraph& g) {
  std::ostringstream os;
  os << "p edge " << g.vertex_count() << " " << g.edges.size() << "\n";
  for (auto [i, j] : g.edges) os << "e " << i + 1 << " " << j + 1 << "\n";
  return os.str();
}

}  // namespace slice
