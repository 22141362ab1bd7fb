#pragma once

#include <optional>
#include <vector>

#include "rbp/instance.hpp"
#include "rbp/solvers.hpp"
#include "rbp/structures.hpp"

namespace rbp {

// Everything the decomposition argument reads off a global MST after
// deleting a max-weight edge e_x: the two components, the three heavy-edge
// weights, and which pairs are split across the cut.
struct SplitReport {
  Tree tree;                 // global MST
  Edge cross_edge;           // e_x, lexicographically smallest max-weight edge
  Rat c_T, w_cross, w_L, w_R;
  std::vector<int> nodes_L, nodes_R;    // V_L contains cross_edge.first
  std::vector<Edge> edges_L, edges_R;
  std::vector<int> lone_pairs;   // pairs with one member per side
  std::vector<int> free_pairs;   // pairs entirely inside one side
  bool pair_in_L = false;        // some pair lies fully inside V_L
  bool pair_in_R = false;

  Rat c_TL() const { return w_sum_L; }
  Rat c_TR() const { return w_sum_R; }
  Rat w_sum_L, w_sum_R;
};

SplitReport split_mst(const MetricInstance& inst);

// Slacks of the two-tree decomposition bounds for an arbitrary node
// coloring (pairs need not be split). slack_c/slack_d apply only when one
// side of the split is monochromatic; with both sides monochromatic the
// tighter side is reported.
struct DecompositionReport {
  Rat c_T, c_Tb, c_Tr;
  Rat w_L, w_cross, w_R;
  Rat slack_a, slack_b;
  std::optional<Rat> slack_c, slack_d;
};

DecompositionReport decomposition_report(const MetricInstance& inst,
                                         const std::vector<bool>& node_red);

}  // namespace rbp
