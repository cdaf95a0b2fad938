#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slice/point.hpp"

namespace slice {

struct AdjacencyPredicate {
  enum class Kind { exact, tolerance };
  Kind kind = Kind::exact;
  double tau = 0.0;
};

// Vertices are points; edges connect pairs at Euclidean distance 1, either
// exactly (squared distance 1 in rational arithmetic) or within tolerance tau.
// Exactly one backing is populated.
struct UnitDistanceGraph {
  bool exact = true;
  std::vector<ExactPoint> epoints;
  std::vector<FloatPoint> fpoints;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted, no duplicates
  AdjacencyPredicate predicate;
  std::optional<SliceSpec> slice;

  size_t vertex_count() const {
    return exact ? epoints.size() : fpoints.size();
  }
};

// Duplicate points are collapsed before edge building (equal exactly, or
// within the geometry tolerance for floats).
UnitDistanceGraph build_udg(std::vector<ExactPoint> pts,
                            std::optional<SliceSpec> slice = {});
UnitDistanceGraph build_udg(std::vector<FloatPoint> pts, double tau = 1e-9,
                            std::optional<SliceSpec> slice = {},
                            int threads = 1);

struct GraphStats {
  int vertices = 0;
  long long edge_count = 0;
  int max_degree = 0;
  int clique_number = 0;  // exhaustive search capped at 5
};
GraphStats graph_stats(const UnitDistanceGraph& g);

std::vector<std::vector<int>> adjacency_lists(const UnitDistanceGraph& g);

// "p edge V E" header plus 1-indexed "e i j" lines.
std::string to_dimacs_graph(const UnitDistanceGraph& g);

}  // namespace slice
