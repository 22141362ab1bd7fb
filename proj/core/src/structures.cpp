#include "rbp/structures.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rbp/errors.hpp"

namespace rbp {

std::string kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::SpanningTree: return "mst";
    case StructureKind::Tour: return "tsp";
    case StructureKind::PerfectMatching: return "matching";
  }
  return "?";
}

std::string objective_name(Objective o) {
  switch (o) {
    case Objective::MinSum: return "min-sum";
    case Objective::MinMax: return "min-max";
    case Objective::Bottleneck: return "bottleneck";
  }
  return "?";
}

StructureKind kind_from_name(const std::string& s) {
  if (s == "mst") return StructureKind::SpanningTree;
  if (s == "tsp") return StructureKind::Tour;
  if (s == "matching") return StructureKind::PerfectMatching;
  throw ParseError("unknown structure kind: " + s);
}

Objective objective_from_name(const std::string& s) {
  if (s == "min-sum") return Objective::MinSum;
  if (s == "min-max") return Objective::MinMax;
  if (s == "bottleneck") return Objective::Bottleneck;
  throw ParseError("unknown objective: " + s);
}

Rat edges_cost(const MetricInstance& inst, const std::vector<Edge>& edges) {
  Rat total = 0;
  for (const auto& [u, v] : edges) total += inst.w(u, v);
  return total;
}

Rat edges_bottleneck(const MetricInstance& inst,
                     const std::vector<Edge>& edges) {
  Rat best = 0;
  for (const auto& [u, v] : edges)
    if (inst.w(u, v) > best) best = inst.w(u, v);
  return best;
}

Rat cost(const MetricInstance& inst, const StructurePair& pair, Objective obj) {
  switch (obj) {
    case Objective::MinSum:
      return edges_cost(inst, pair.blue_edges) +
             edges_cost(inst, pair.red_edges);
    case Objective::MinMax: {
      Rat b = edges_cost(inst, pair.blue_edges);
      Rat r = edges_cost(inst, pair.red_edges);
      return b > r ? b : r;
    }
    case Objective::Bottleneck: {
      Rat b = edges_bottleneck(inst, pair.blue_edges);
      Rat r = edges_bottleneck(inst, pair.red_edges);
      return b > r ? b : r;
    }
  }
  return Rat(0);
}

std::vector<Edge> tour_edges(const std::vector<int>& order) {
  std::vector<Edge> out;
  const int m = static_cast<int>(order.size());
  if (m <= 1) return out;
  if (m == 2) {
    out.push_back({order[0], order[1]});
    out.push_back({order[0], order[1]});
    return out;
  }
  for (int i = 0; i < m; ++i) out.push_back({order[i], order[(i + 1) % m]});
  return out;
}

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

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

void validate_class(const MetricInstance& inst, StructureKind kind,
                    const std::vector<int>& members,
                    const std::vector<Edge>& edges, const char* color,
                    const Coloring& coloring, bool red,
                    std::vector<std::string>& out) {
  const int n = inst.node_count();
  std::vector<bool> in_class(n, false);
  for (int v : members) in_class[v] = true;

  for (const auto& e : edges) {
    if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n) {
      out.push_back(std::string(color) + " edge " + edge_str(e) +
                    " out of range");
      return;
    }
    if (e.first == e.second)
      out.push_back(std::string(color) + " self-loop " + edge_str(e));
    if (!in_class[e.first] || !in_class[e.second])
      out.push_back(std::string(color) + " edge " + edge_str(e) +
                    " touches a node of the other color");
  }

  std::vector<int> degree(n, 0);
  for (const auto& e : edges) {
    ++degree[e.first];
    ++degree[e.second];
  }

  const int k = static_cast<int>(members.size());
  switch (kind) {
    case StructureKind::SpanningTree: {
      if (static_cast<int>(edges.size()) != std::max(0, k - 1)) {
        out.push_back(std::string(color) + " tree: expected " +
                      std::to_string(std::max(0, k - 1)) + " edges, got " +
                      std::to_string(edges.size()));
        return;
      }
      Dsu dsu(n);
      for (const auto& e : edges)
        if (!dsu.unite(e.first, e.second)) {
          out.push_back(std::string(color) + " tree: acyclic violated at " +
                        edge_str(e));
          return;
        }
      for (int v : members)
        if (dsu.find(v) != dsu.find(members[0])) {
          out.push_back(std::string(color) + " tree: node " +
                        std::to_string(v) + " not spanned");
          return;
        }
      break;
    }
    case StructureKind::Tour: {
      if (k <= 1) {
        if (!edges.empty())
          out.push_back(std::string(color) +
                        " tour: a class of at most one node must be empty");
        return;
      }
      if (k == 2) {
        if (edges.size() != 2 || edges[0] != edges[1] ||
            !in_class[edges[0].first] || !in_class[edges[0].second] ||
            edges[0].first == edges[0].second)
          out.push_back(std::string(color) +
                        " tour: a 2-node class must double its edge");
        return;
      }
      if (static_cast<int>(edges.size()) != k) {
        out.push_back(std::string(color) + " tour: expected " +
                      std::to_string(k) + " edges, got " +
                      std::to_string(edges.size()));
        return;
      }
      for (int v : members)
        if (degree[v] != 2) {
          out.push_back(std::string(color) + " tour: node " +
                        std::to_string(v) + " has degree " +
                        std::to_string(degree[v]));
          return;
        }
      Dsu dsu(n);
      int merges = 0;
      for (const auto& e : edges)
        if (dsu.unite(e.first, e.second)) ++merges;
      if (merges != k - 1) {
        out.push_back(std::string(color) + " tour: not a single cycle");
        return;
      }
      break;
    }
    case StructureKind::PerfectMatching: {
      if (k % 2 != 0) {
        out.push_back(std::string(color) +
                      " matching: odd class size " + std::to_string(k));
        return;
      }
      if (static_cast<int>(edges.size()) != k / 2) {
        out.push_back(std::string(color) + " matching: expected " +
                      std::to_string(k / 2) + " edges, got " +
                      std::to_string(edges.size()));
        return;
      }
      for (int v : members)
        if (degree[v] != 1) {
          out.push_back(std::string(color) + " matching: perfect violated at " +
                        std::to_string(v) + " (degree " +
                        std::to_string(degree[v]) + ")");
          return;
        }
      break;
    }
  }
  (void)coloring;
  (void)red;
}

}  // namespace

std::vector<std::string> validate_solution(const MetricInstance& inst,
                                           const StructurePair& pair) {
  std::vector<std::string> out;
  if (pair.coloring.n_pairs() != inst.n_pairs) {
    out.push_back("coloring length " + std::to_string(pair.coloring.n_pairs()) +
                  " does not match n_pairs " + std::to_string(inst.n_pairs));
    return out;
  }
  validate_class(inst, pair.kind, pair.coloring.class_nodes(false),
                 pair.blue_edges, "blue", pair.coloring, false, out);
  validate_class(inst, pair.kind, pair.coloring.class_nodes(true),
                 pair.red_edges, "red", pair.coloring, true, out);
  return out;
}

}  // namespace rbp
