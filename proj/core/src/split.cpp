#include "rbp/split.hpp"

#include <algorithm>
#include <numeric>

#include "rbp/errors.hpp"

namespace rbp {

SplitReport split_mst(const MetricInstance& inst) {
  const int n = inst.node_count();
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);

  SplitReport rep;
  rep.tree = mst(inst, all);
  rep.c_T = tree_cost(inst, rep.tree);

  // Max-weight edge, ties by (min endpoint, max endpoint).
  int best = 0;
  for (size_t i = 1; i < rep.tree.edges.size(); ++i) {
    const Edge& e = rep.tree.edges[i];
    const Edge& b = rep.tree.edges[best];
    int c = cmp(inst.w(e.first, e.second), inst.w(b.first, b.second));
    if (c > 0 || (c == 0 && e < b)) best = static_cast<int>(i);
  }
  if (rep.tree.edges.empty()) {
    // Single-pair instance still has one edge; an empty tree cannot occur
    // for n_pairs >= 1 since both nodes of the pair are present.
    throw DomainError("split_mst: tree has no edges");
  }
  rep.cross_edge = rep.tree.edges[best];
  rep.w_cross = inst.w(rep.cross_edge.first, rep.cross_edge.second);

  // Flood the side containing cross_edge.first.
  std::vector<std::vector<int>> adj(n);
  for (size_t i = 0; i < rep.tree.edges.size(); ++i) {
    if (static_cast<int>(i) == best) continue;
    adj[rep.tree.edges[i].first].push_back(rep.tree.edges[i].second);
    adj[rep.tree.edges[i].second].push_back(rep.tree.edges[i].first);
  }
  std::vector<char> in_L(n, 0);
  std::vector<int> stack{rep.cross_edge.first};
  in_L[rep.cross_edge.first] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!in_L[v]) {
        in_L[v] = 1;
        stack.push_back(v);
      }
  }
  for (int v = 0; v < n; ++v)
    (in_L[v] ? rep.nodes_L : rep.nodes_R).push_back(v);

  rep.w_L = 0;
  rep.w_R = 0;
  rep.w_sum_L = 0;
  rep.w_sum_R = 0;
  for (size_t i = 0; i < rep.tree.edges.size(); ++i) {
    if (static_cast<int>(i) == best) continue;
    const Edge& e = rep.tree.edges[i];
    const Rat& w = inst.w(e.first, e.second);
    if (in_L[e.first]) {
      rep.edges_L.push_back(e);
      rep.w_sum_L += w;
      if (w > rep.w_L) rep.w_L = w;
    } else {
      rep.edges_R.push_back(e);
      rep.w_sum_R += w;
      if (w > rep.w_R) rep.w_R = w;
    }
  }

  for (int i = 0; i < inst.n_pairs; ++i) {
    bool pL = in_L[MetricInstance::p_node(i)];
    bool qL = in_L[MetricInstance::q_node(i)];
    if (pL != qL) {
      rep.lone_pairs.push_back(i);
    } else {
      rep.free_pairs.push_back(i);
      (pL ? rep.pair_in_L : rep.pair_in_R) = true;
    }
  }
  return rep;
}

DecompositionReport decomposition_report(const MetricInstance& inst,
                                         const std::vector<bool>& node_red) {
  if (static_cast<int>(node_red.size()) != inst.node_count())
    throw DomainError("decomposition_report: coloring length mismatch");

  SplitReport split = split_mst(inst);
  DecompositionReport rep;
  rep.c_T = split.c_T;
  rep.w_L = split.w_L;
  rep.w_cross = split.w_cross;
  rep.w_R = split.w_R;

  std::vector<int> blue, red;
  for (int v = 0; v < inst.node_count(); ++v)
    (node_red[v] ? red : blue).push_back(v);
  rep.c_Tb = blue.empty() ? Rat(0) : tree_cost(inst, mst(inst, blue));
  rep.c_Tr = red.empty() ? Rat(0) : tree_cost(inst, mst(inst, red));

  Rat total = rep.c_Tb + rep.c_Tr;
  Rat heavier = rep.c_Tb > rep.c_Tr ? rep.c_Tb : rep.c_Tr;
  Rat heavy3 = rep.w_L + rep.w_cross + rep.w_R;
  rep.slack_a = 3 * rep.c_T - heavy3 - total;
  rep.slack_b = 2 * rep.c_T - heavy3 - heavier;

  auto monochrome = [&](const std::vector<int>& side) {
    for (size_t i = 1; i < side.size(); ++i)
      if (node_red[side[i]] != node_red[side[0]]) return false;
    return true;
  };
  bool mono_L = monochrome(split.nodes_L);
  bool mono_R = monochrome(split.nodes_R);
  auto apply_cd = [&](const Rat& c_mono, const Rat& c_other,
                      const Rat& w_other) {
    Rat c = c_mono + rep.w_cross + 3 * c_other - w_other - total;
    Rat d = c_mono + rep.w_cross + 2 * c_other - w_other - heavier;
    if (!rep.slack_c || c < *rep.slack_c) rep.slack_c = c;
    if (!rep.slack_d || d < *rep.slack_d) rep.slack_d = d;
  };
  if (mono_L) apply_cd(split.c_TL(), split.c_TR(), rep.w_R);
  if (mono_R) apply_cd(split.c_TR(), split.c_TL(), rep.w_L);
  return rep;
}

}  // namespace rbp
