#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "slice/udg.hpp"

namespace slice {

enum class CertKind {
  proper_coloring,
  clique_witness,
  odd_cycle_witness,
  exhaustive_unsat
};

// One same-color contraction step: non-adjacent u, w whose common
// neighborhood contains a (c-1)-clique must share a color in any proper
// c-coloring.
struct MergeStep {
  int u = -1, w = -1;
  std::vector<int> clique;
};

struct ColoringCertificate {
  CertKind kind = CertKind::proper_coloring;
  std::vector<int> colors;            // proper_coloring
  std::vector<int> witness_vertices;  // clique / odd cycle
  int colors_used = 0;

  // exhaustive_unsat payload
  int colors_tested = 0;
  std::vector<MergeStep> merges;
  // "merged_edge": an edge ended up inside one same-color class.
  // "merged_clique": contraction produced a (c+1)-clique of classes.
  // "search_exhausted": the branch-and-bound completed with no coloring.
  std::string contradiction;
  std::array<int, 2> conflict_edge{-1, -1};
  std::vector<int> conflict_clique;
  long long nodes = 0;
};

struct SearchBudget {
  long long max_nodes = 100'000'000;
  double max_seconds = 60.0;
};

struct ChromaticResult {
  bool exact = false;
  int chi = 0;  // meaningful when exact
  int lower_bound = 0;
  int upper_bound = 0;
  ColoringCertificate upper;
  ColoringCertificate lower;
  long long nodes = 0;
  double seconds = 0.0;
};

ChromaticResult chromatic_number(const std::vector<std::vector<int>>& adj,
                                 const SearchBudget& budget = {});
ChromaticResult chromatic_number(const UnitDistanceGraph& g,
                                 const SearchBudget& budget = {});

// True iff no edge is monochromatic; throws when a vertex has no color.
bool verify_coloring(const std::vector<std::vector<int>>& adj,
                     const std::vector<int>& colors);
bool verify_coloring(const UnitDistanceGraph& g,
                     const std::vector<int>& colors);

// Structural re-verification of a certificate against the graph it came from.
bool verify_certificate(const std::vector<std::vector<int>>& adj,
                        const ColoringCertificate& cert, int chi);

// An odd cycle (vertex sequence) if the graph is non-bipartite.
std::optional<std::vector<int>> find_odd_cycle(
    const std::vector<std::vector<int>>& adj);
std::optional<std::vector<int>> find_odd_cycle(const UnitDistanceGraph& g);

// CNF encoding of c-colorability: variables x_{v,t} = v*c + t + 1, one
// at-least-one-color clause per vertex and c difference clauses per edge.
std::string export_dimacs_cnf(const UnitDistanceGraph& g, int c);
std::string export_dimacs_cnf(size_t vertices,
                              const std::vector<std::pair<int, int>>& edges,
                              int c);

std::vector<int> greedy_dsatur(const std::vector<std::vector<int>>& adj);
std::vector<int> max_clique_upto5(const std::vector<std::vector<int>>& adj);

enum class DecideStatus { sat, unsat, inconclusive };
struct DecideResult {
  DecideStatus status = DecideStatus::inconclusive;
  std::vector<int> coloring;
  ColoringCertificate transcript;
  long long nodes = 0;
};
// Is the graph c-colorable? Contraction closure plus DSATUR branch-and-bound
// with clique seeding; deterministic.
DecideResult decide_k_colorable(const std::vector<std::vector<int>>& adj, int c,
                                const SearchBudget& budget = {});

}  // namespace slice
