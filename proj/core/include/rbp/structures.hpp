#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rbp/coloring.hpp"
#include "rbp/instance.hpp"
#include "rbp/rational.hpp"

namespace rbp {

using Edge = std::pair<int, int>;

enum class StructureKind { SpanningTree, Tour, PerfectMatching };
enum class Objective { MinSum, MinMax, Bottleneck };

std::string kind_name(StructureKind k);       // "mst" | "tsp" | "matching"
std::string objective_name(Objective o);      // "min-sum" | "min-max" | "bottleneck"
StructureKind kind_from_name(const std::string& s);
Objective objective_from_name(const std::string& s);

// A pair of disjoint node-covering structures, one per color class. Edge
// lists are literal: a 2-node tour stores its edge twice, a 1-node tour is
// empty.
struct StructurePair {
  Coloring coloring;
  std::vector<Edge> blue_edges;
  std::vector<Edge> red_edges;
  StructureKind kind = StructureKind::SpanningTree;
};

Rat edges_cost(const MetricInstance& inst, const std::vector<Edge>& edges);
Rat edges_bottleneck(const MetricInstance& inst, const std::vector<Edge>& edges);

// MinSum: c(B)+c(R); MinMax: max of the two class sums; Bottleneck: heaviest
// edge used in either structure (0 when both are empty).
Rat cost(const MetricInstance& inst, const StructurePair& pair, Objective obj);

// Checks coloring shape, color purity of the edge lists, and the
// kind-specific covering property. Each violation names the broken rule and
// the offending nodes or edges. Empty result = valid.
std::vector<std::string> validate_solution(const MetricInstance& inst,
                                           const StructurePair& pair);

// Edge list of a tour given as a visiting order (doubled edge for 2 nodes,
// empty for fewer).
std::vector<Edge> tour_edges(const std::vector<int>& order);

}  // namespace rbp
