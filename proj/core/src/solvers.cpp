#include "rbp/solvers.hpp"

#include <algorithm>
#include <numeric>

#include "rbp/errors.hpp"

namespace rbp {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a); b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

std::vector<Edge> class_edges_sorted(const MetricInstance& inst,
                                     const std::vector<int>& nodes) {
  std::vector<Edge> edges;
  edges.reserve(nodes.size() * (nodes.size() - 1) / 2);
  for (size_t a = 0; a < nodes.size(); ++a)
    for (size_t b = a + 1; b < nodes.size(); ++b) {
      int u = nodes[a], v = nodes[b];
      if (u > v) std::swap(u, v);
      edges.push_back({u, v});
    }
  std::stable_sort(edges.begin(), edges.end(),
                   [&](const Edge& x, const Edge& y) {
                     int c = cmp(inst.w(x.first, x.second),
                                 inst.w(y.first, y.second));
                     if (c != 0) return c < 0;
                     return x < y;
                   });
  return edges;
}

std::vector<Edge> kruskal(const MetricInstance& inst,
                          const std::vector<int>& nodes, int target_edges) {
  auto edges = class_edges_sorted(inst, nodes);
  Dsu dsu(inst.node_count());
  std::vector<Edge> out;
  out.reserve(target_edges);
  for (const auto& e : edges) {
    if (static_cast<int>(out.size()) == target_edges) break;
    if (dsu.unite(e.first, e.second)) out.push_back(e);
  }
  return out;
}

}  // namespace

Rat tree_cost(const MetricInstance& inst, const Tree& tree) {
  return edges_cost(inst, tree.edges);
}

Rat tour_cost(const MetricInstance& inst, const Tour& tour) {
  return edges_cost(inst, tour_edges(tour.order));
}

std::vector<Edge> sorted_edges(const MetricInstance& inst) {
  std::vector<int> all(inst.node_count());
  std::iota(all.begin(), all.end(), 0);
  return class_edges_sorted(inst, all);
}

Tree mst(const MetricInstance& inst, const std::vector<int>& nodes) {
  if (nodes.empty()) throw DomainError("mst: empty node set");
  Tree t;
  t.nodes = nodes;
  std::sort(t.nodes.begin(), t.nodes.end());
  t.edges = kruskal(inst, t.nodes, static_cast<int>(nodes.size()) - 1);
  return t;
}

Tree mst_presorted(const MetricInstance& inst,
                   const std::vector<Edge>& sorted_full,
                   const std::vector<char>& member, int member_count) {
  if (member_count == 0) throw DomainError("mst: empty node set");
  Tree t;
  t.nodes.reserve(member_count);
  for (int v = 0; v < inst.node_count(); ++v)
    if (member[v]) t.nodes.push_back(v);
  Dsu dsu(inst.node_count());
  int need = member_count - 1;
  for (const auto& e : sorted_full) {
    if (need == 0) break;
    if (!member[e.first] || !member[e.second]) continue;
    if (dsu.unite(e.first, e.second)) {
      t.edges.push_back(e);
      --need;
    }
  }
  return t;
}

std::vector<Edge> min_forest(const MetricInstance& inst,
                             const std::vector<int>& nodes, int k) {
  if (nodes.empty()) throw DomainError("min_forest: empty node set");
  if (k < 1 || k > static_cast<int>(nodes.size()))
    throw DomainError("min_forest: bad k=" + std::to_string(k) + " for " +
                      std::to_string(nodes.size()) + " nodes");
  return kruskal(inst, nodes, static_cast<int>(nodes.size()) - k);
}

Tour exact_tsp(const MetricInstance& inst, const std::vector<int>& nodes,
               int cap) {
  const int m = static_cast<int>(nodes.size());
  if (m < 1) throw DomainError("exact_tsp: empty node set");
  if (m > cap) throw TooLargeError("exact_tsp", m, cap);
  Tour tour;
  if (m <= 3) {
    tour.order = nodes;
    std::sort(tour.order.begin(), tour.order.end());
    return tour;
  }

  // Held-Karp over subsets of nodes[1..m-1], paths anchored at nodes[0].
  std::vector<int> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  const int r = m - 1;
  const size_t full = size_t{1} << r;
  const Rat none(-1);
  std::vector<std::vector<Rat>> dp(full, std::vector<Rat>(r, none));
  std::vector<std::vector<int>> parent(full, std::vector<int>(r, -1));
  for (int j = 0; j < r; ++j) {
    dp[size_t{1} << j][j] = inst.w(sorted[0], sorted[j + 1]);
    parent[size_t{1} << j][j] = -1;
  }
  for (size_t mask = 1; mask < full; ++mask) {
    for (int j = 0; j < r; ++j) {
      if (!(mask & (size_t{1} << j)) || dp[mask][j] == none) continue;
      const Rat& base = dp[mask][j];
      for (int k = 0; k < r; ++k) {
        if (mask & (size_t{1} << k)) continue;
        size_t next = mask | (size_t{1} << k);
        Rat cand = base + inst.w(sorted[j + 1], sorted[k + 1]);
        if (dp[next][k] == none || cand < dp[next][k]) {
          dp[next][k] = cand;
          parent[next][k] = j;
        }
      }
    }
  }
  int best_j = -1;
  Rat best = none;
  for (int j = 0; j < r; ++j) {
    if (dp[full - 1][j] == none) continue;
    Rat cand = dp[full - 1][j] + inst.w(sorted[j + 1], sorted[0]);
    if (best == none || cand < best) {
      best = cand;
      best_j = j;
    }
  }
  std::vector<int> rev;
  size_t mask = full - 1;
  int j = best_j;
  while (j != -1) {
    rev.push_back(sorted[j + 1]);
    int pj = parent[mask][j];
    mask &= ~(size_t{1} << j);
    j = pj;
  }
  tour.order.push_back(sorted[0]);
  tour.order.insert(tour.order.end(), rev.rbegin(), rev.rend());
  return tour;
}

std::vector<Edge> min_perfect_matching(const MetricInstance& inst,
                                       const std::vector<int>& nodes,
                                       int cap) {
  const int m = static_cast<int>(nodes.size());
  if (m % 2 != 0) throw DomainError("min_perfect_matching: odd node set");
  if (m > cap) throw TooLargeError("min_perfect_matching", m, cap);
  if (m == 0) return {};
  std::vector<int> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());

  const size_t full = size_t{1} << m;
  const Rat none(-1);
  std::vector<Rat> dp(full, none);
  std::vector<int> choice(full, -1);
  dp[0] = 0;
  for (size_t mask = 0; mask < full; ++mask) {
    if (dp[mask] == none) continue;
    int i = 0;
    while (i < m && (mask & (size_t{1} << i))) ++i;
    if (i == m) continue;
    for (int j = i + 1; j < m; ++j) {
      if (mask & (size_t{1} << j)) continue;
      size_t next = mask | (size_t{1} << i) | (size_t{1} << j);
      Rat cand = dp[mask] + inst.w(sorted[i], sorted[j]);
      if (dp[next] == none || cand < dp[next]) {
        dp[next] = cand;
        choice[next] = j;
      }
    }
  }
  std::vector<Edge> out;
  size_t mask = full - 1;
  while (mask) {
    int i = 0;
    // Lowest bit that was matched first is recovered by peeling the mate.
    while (!(mask & (size_t{1} << i))) ++i;
    int j = choice[mask];
    out.push_back({sorted[i], sorted[j]});
    mask &= ~(size_t{1} << i);
    mask &= ~(size_t{1} << j);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Tour euler_shortcut(const MetricInstance& inst, const Tree& tree, int start,
                    const std::vector<int>& subset,
                    const OrderPolicy& policy) {
  (void)inst;
  if (!std::binary_search(tree.nodes.begin(), tree.nodes.end(), start))
    throw DomainError("euler_shortcut: start node not in tree");

  std::vector<std::vector<int>> adj(tree.nodes.empty()
                                        ? 0
                                        : tree.nodes.back() + 1);
  for (const auto& [u, v] : tree.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  auto ordered_neighbors = [&](int u) {
    std::vector<int> ns = adj[u];
    std::sort(ns.begin(), ns.end());
    if (policy.kind == OrderPolicy::Kind::IndexDescending) {
      std::reverse(ns.begin(), ns.end());
    } else if (policy.kind == OrderPolicy::Kind::Explicit) {
      auto it = policy.explicit_order.find(u);
      if (it != policy.explicit_order.end()) {
        std::vector<int> pref;
        std::vector<char> taken(ns.size(), 0);
        for (int want : it->second)
          for (size_t i = 0; i < ns.size(); ++i)
            if (!taken[i] && ns[i] == want) {
              pref.push_back(want);
              taken[i] = 1;
              break;
            }
        for (size_t i = 0; i < ns.size(); ++i)
          if (!taken[i]) pref.push_back(ns[i]);
        ns = std::move(pref);
      }
    }
    return ns;
  };

  // First visits of the doubled-edge Euler circuit = preorder DFS.
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> preorder;
  std::vector<std::pair<int, int>> stack;  // (node, next-neighbor cursor)
  std::vector<std::vector<int>> order_cache(adj.size());
  seen[start] = 1;
  preorder.push_back(start);
  order_cache[start] = ordered_neighbors(start);
  stack.push_back({start, 0});
  while (!stack.empty()) {
    auto& [u, cursor] = stack.back();
    const auto& ns = order_cache[u];
    if (cursor >= static_cast<int>(ns.size())) {
      stack.pop_back();
      continue;
    }
    int v = ns[cursor++];
    if (seen[v]) continue;
    seen[v] = 1;
    preorder.push_back(v);
    order_cache[v] = ordered_neighbors(v);
    stack.push_back({v, 0});
  }

  std::vector<char> keep(adj.size(), 0);
  for (int v : subset) {
    if (v < 0 || v >= static_cast<int>(adj.size()) || !seen[v])
      throw DomainError("euler_shortcut: subset node " + std::to_string(v) +
                        " not in tree");
    keep[v] = 1;
  }
  Tour tour;
  for (int v : preorder)
    if (keep[v]) tour.order.push_back(v);
  return tour;
}

namespace {

bool allowed(const MetricInstance& inst, int u, int v, const Rat& limit) {
  return inst.w(u, v) <= limit;
}

}  // namespace

bool hamiltonian_cycle_within(const MetricInstance& inst,
                              const std::vector<int>& nodes,
                              const Rat& limit) {
  const int m = static_cast<int>(nodes.size());
  if (m <= 1) return true;
  if (m == 2) return allowed(inst, nodes[0], nodes[1], limit);
  const int r = m - 1;
  const size_t full = size_t{1} << r;
  std::vector<std::vector<char>> dp(full, std::vector<char>(r, 0));
  for (int j = 0; j < r; ++j)
    if (allowed(inst, nodes[0], nodes[j + 1], limit))
      dp[size_t{1} << j][j] = 1;
  for (size_t mask = 1; mask < full; ++mask)
    for (int j = 0; j < r; ++j) {
      if (!dp[mask][j]) continue;
      for (int k = 0; k < r; ++k) {
        if (mask & (size_t{1} << k)) continue;
        if (allowed(inst, nodes[j + 1], nodes[k + 1], limit))
          dp[mask | (size_t{1} << k)][k] = 1;
      }
    }
  for (int j = 0; j < r; ++j)
    if (dp[full - 1][j] && allowed(inst, nodes[j + 1], nodes[0], limit))
      return true;
  return false;
}

bool perfect_matching_within(const MetricInstance& inst,
                             const std::vector<int>& nodes, const Rat& limit) {
  const int m = static_cast<int>(nodes.size());
  if (m % 2 != 0) return false;
  if (m == 0) return true;
  const size_t full = size_t{1} << m;
  std::vector<char> dp(full, 0);
  dp[0] = 1;
  for (size_t mask = 0; mask < full; ++mask) {
    if (!dp[mask]) continue;
    int i = 0;
    while (i < m && (mask & (size_t{1} << i))) ++i;
    if (i == m) continue;
    for (int j = i + 1; j < m; ++j) {
      if (mask & (size_t{1} << j)) continue;
      if (allowed(inst, nodes[i], nodes[j], limit))
        dp[mask | (size_t{1} << i) | (size_t{1} << j)] = 1;
    }
  }
  return dp[full - 1];
}

std::optional<Tour> tour_with_bottleneck(const MetricInstance& inst,
                                         const std::vector<int>& nodes,
                                         const Rat& limit) {
  const int m = static_cast<int>(nodes.size());
  std::vector<int> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  if (m <= 1) return Tour{sorted};
  if (m == 2) {
    if (!allowed(inst, sorted[0], sorted[1], limit)) return std::nullopt;
    return Tour{sorted};
  }
  if (!hamiltonian_cycle_within(inst, sorted, limit)) return std::nullopt;

  // Rebuild one witness cycle greedily over the DP table.
  const int r = m - 1;
  const size_t full = size_t{1} << r;
  std::vector<std::vector<char>> dp(full, std::vector<char>(r, 0));
  std::vector<std::vector<int>> parent(full, std::vector<int>(r, -2));
  for (int j = 0; j < r; ++j)
    if (allowed(inst, sorted[0], sorted[j + 1], limit)) {
      dp[size_t{1} << j][j] = 1;
      parent[size_t{1} << j][j] = -1;
    }
  for (size_t mask = 1; mask < full; ++mask)
    for (int j = 0; j < r; ++j) {
      if (!dp[mask][j]) continue;
      for (int k = 0; k < r; ++k) {
        if (mask & (size_t{1} << k)) continue;
        size_t next = mask | (size_t{1} << k);
        if (!dp[next][k] && allowed(inst, sorted[j + 1], sorted[k + 1], limit)) {
          dp[next][k] = 1;
          parent[next][k] = j;
        }
      }
    }
  for (int j = 0; j < r; ++j) {
    if (!dp[full - 1][j] || !allowed(inst, sorted[j + 1], sorted[0], limit))
      continue;
    std::vector<int> rev;
    size_t mask = full - 1;
    int cur = j;
    while (cur != -1) {
      rev.push_back(sorted[cur + 1]);
      int p = parent[mask][cur];
      mask &= ~(size_t{1} << cur);
      cur = p;
    }
    Tour t;
    t.order.push_back(sorted[0]);
    t.order.insert(t.order.end(), rev.rbegin(), rev.rend());
    return t;
  }
  return std::nullopt;
}

std::optional<std::vector<Edge>> matching_with_bottleneck(
    const MetricInstance& inst, const std::vector<int>& nodes,
    const Rat& limit) {
  std::vector<int> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  if (!perfect_matching_within(inst, sorted, limit)) return std::nullopt;
  // Peel pairs: always match the lowest free node with the smallest partner
  // that keeps the rest feasible.
  std::vector<int> rest = sorted;
  std::vector<Edge> out;
  while (!rest.empty()) {
    int u = rest.front();
    bool done = false;
    for (size_t j = 1; j < rest.size() && !done; ++j) {
      if (!allowed(inst, u, rest[j], limit)) continue;
      std::vector<int> next;
      for (size_t t = 1; t < rest.size(); ++t)
        if (t != j) next.push_back(rest[t]);
      if (perfect_matching_within(inst, next, limit)) {
        out.push_back({u, rest[j]});
        rest = std::move(next);
        done = true;
      }
    }
    if (!done) return std::nullopt;  // unreachable if the probe passed
  }
  return out;
}

}  // namespace rbp
