#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rbp/instance.hpp"
#include "rbp/structures.hpp"

namespace rbp {

struct Tree {
  std::vector<int> nodes;   // sorted member list
  std::vector<Edge> edges;  // |nodes|-1 edges, Kruskal acceptance order
};

struct Tour {
  std::vector<int> order;  // visiting order; <=1 node means an empty tour
};

Rat tree_cost(const MetricInstance& inst, const Tree& tree);
Rat tour_cost(const MetricInstance& inst, const Tour& tour);

// Child-visit order for Euler walks. Explicit lists a preferred neighbor
// order per node; unlisted neighbors follow in ascending index order.
struct OrderPolicy {
  enum class Kind { IndexAscending, IndexDescending, Explicit };
  Kind kind = Kind::IndexAscending;
  std::map<int, std::vector<int>> explicit_order;
};

struct SolverCaps {
  int tsp_nodes = 18;
  int matching_nodes = 20;
};

// All edges of the complete graph, sorted by (weight, min endpoint, max
// endpoint). This fixed tie-break makes every solver below deterministic.
std::vector<Edge> sorted_edges(const MetricInstance& inst);

// Minimum spanning tree of the given nodes (Kruskal). Throws DomainError on
// an empty node set.
Tree mst(const MetricInstance& inst, const std::vector<int>& nodes);

// Kruskal against a pre-sorted full edge list; `member` marks class nodes.
Tree mst_presorted(const MetricInstance& inst,
                   const std::vector<Edge>& sorted_full,
                   const std::vector<char>& member, int member_count);

// Lightest forest with exactly |nodes|-k edges (Kruskal stopped early);
// k=1 equals mst.
std::vector<Edge> min_forest(const MetricInstance& inst,
                             const std::vector<int>& nodes, int k);

// Minimum-cost Hamiltonian cycle by Held-Karp. Degenerate sizes follow the
// tour conventions (1 node: empty tour; 2 nodes: doubled edge).
Tour exact_tsp(const MetricInstance& inst, const std::vector<int>& nodes,
               int cap = SolverCaps{}.tsp_nodes);

// Minimum-weight perfect matching by DP over node subsets.
std::vector<Edge> min_perfect_matching(const MetricInstance& inst,
                                       const std::vector<int>& nodes,
                                       int cap = SolverCaps{}.matching_nodes);

// Doubles every tree edge, walks the Euler circuit from `start` with child
// order given by the policy, and records first visits restricted to
// `subset`. Cost is at most twice the tree cost when subset covers the tree.
Tour euler_shortcut(const MetricInstance& inst, const Tree& tree, int start,
                    const std::vector<int>& subset, const OrderPolicy& policy);

// Feasibility probes on the subgraph of edges with weight <= limit, used by
// the bottleneck oracle's threshold search.
bool hamiltonian_cycle_within(const MetricInstance& inst,
                              const std::vector<int>& nodes, const Rat& limit);
bool perfect_matching_within(const MetricInstance& inst,
                             const std::vector<int>& nodes, const Rat& limit);

// Reconstructions at a fixed bottleneck threshold (smallest-first search
// helpers for the oracle).
std::optional<Tour> tour_with_bottleneck(const MetricInstance& inst,
                                         const std::vector<int>& nodes,
                                         const Rat& limit);
std::optional<std::vector<Edge>> matching_with_bottleneck(
    const MetricInstance& inst, const std::vector<int>& nodes,
    const Rat& limit);

}  // namespace rbp
