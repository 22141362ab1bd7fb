#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rbp/rational.hpp"

namespace rbp {

// A complete metric-weighted graph on n pairs of nodes. Node 2i is p_i and
// node 2i+1 is q_i (canonical pairing), so a red/blue coloring of pairs is a
// plain bit per pair.
struct MetricInstance {
  int n_pairs = 0;
  // Full (2n)x(2n) symmetric matrix, zero diagonal.
  std::vector<std::vector<Rat>> weights;
  // Optional generator coordinates, provenance metadata only.
  std::optional<std::vector<std::array<Rat, 2>>> points;

  int node_count() const { return 2 * n_pairs; }
  const Rat& w(int u, int v) const { return weights[u][v]; }

  static int pair_of(int node) { return node / 2; }
  static int partner(int node) { return node ^ 1; }
  static int p_node(int pair) { return 2 * pair; }
  static int q_node(int pair) { return 2 * pair + 1; }
};

// Structural problems found before any metric reasoning applies.
struct StructuralViolation {
  enum Kind { NonSquare, Asymmetric, NegativeWeight, NonzeroDiagonal } kind;
  int i = -1, j = -1;
  std::string describe() const;
};

// Triple u,v,w with weights[u][w] > weights[u][v] + weights[v][w].
struct TriangleViolation {
  int u, v, w;
  std::string describe() const;
};

std::vector<StructuralViolation> validate_structure(const MetricInstance& inst);

// Every triangle-inequality violation, by exact comparison. Empty means the
// instance is a valid metric. Requires a structurally sound matrix.
std::vector<TriangleViolation> validate_metric(const MetricInstance& inst);

// Completes a partially defined weight matrix: missing entries take the
// default weight, then all-pairs shortest paths enforce the metric. Throws
// DomainError if a defined entry exceeds the shortest-path distance through
// defined entries alone.
MetricInstance metric_closure(
    int n_pairs, const std::vector<std::vector<std::optional<Rat>>>& partial,
    const Rat& default_weight);

// Shortest-path closure of an arbitrary non-negative matrix (helper shared
// with the generators).
std::vector<std::vector<Rat>> all_pairs_shortest(
    std::vector<std::vector<Rat>> dist);

}  // namespace rbp
