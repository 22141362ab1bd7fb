#include "rbp/instance.hpp"

#include <limits>

#include "rbp/errors.hpp"

namespace rbp {

std::string StructuralViolation::describe() const {
  switch (kind) {
    case NonSquare:
      return "matrix is not (2n)x(2n)";
    case Asymmetric:
      return "asymmetric entry at (" + std::to_string(i) + "," +
             std::to_string(j) + ")";
    case NegativeWeight:
      return "negative weight at (" + std::to_string(i) + "," +
             std::to_string(j) + ")";
    case NonzeroDiagonal:
      return "nonzero diagonal at (" + std::to_string(i) + "," +
             std::to_string(i) + ")";
  }
  return "?";
}

std::string TriangleViolation::describe() const {
  return "w(" + std::to_string(u) + "," + std::to_string(w) + ") > w(" +
         std::to_string(u) + "," + std::to_string(v) + ") + w(" +
         std::to_string(v) + "," + std::to_string(w) + ")";
}

std::vector<StructuralViolation> validate_structure(const MetricInstance& inst) {
  std::vector<StructuralViolation> out;
  const int n = inst.node_count();
  if (static_cast<int>(inst.weights.size()) != n) {
    out.push_back({StructuralViolation::NonSquare, -1, -1});
    return out;
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(inst.weights[i].size()) != n) {
      out.push_back({StructuralViolation::NonSquare, i, -1});
      return out;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (inst.weights[i][i] != 0)
      out.push_back({StructuralViolation::NonzeroDiagonal, i, i});
    for (int j = i + 1; j < n; ++j) {
      if (inst.weights[i][j] < 0)
        out.push_back({StructuralViolation::NegativeWeight, i, j});
      if (inst.weights[i][j] != inst.weights[j][i])
        out.push_back({StructuralViolation::Asymmetric, i, j});
    }
  }
  return out;
}

std::vector<TriangleViolation> validate_metric(const MetricInstance& inst) {
  std::vector<TriangleViolation> out;
  const int n = inst.node_count();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (v == u) continue;
      for (int w = u + 1; w < n; ++w) {
        if (w == v) continue;
        if (inst.weights[u][w] > inst.weights[u][v] + inst.weights[v][w])
          out.push_back({u, v, w});
      }
    }
  return out;
}

std::vector<std::vector<Rat>> all_pairs_shortest(
    std::vector<std::vector<Rat>> dist) {
  const int n = static_cast<int>(dist.size());
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      for (int j = 0; j < n; ++j) {
        if (j == k || j == i) continue;
        Rat via = dist[i][k] + dist[k][j];
        if (via < dist[i][j]) dist[i][j] = via;
      }
    }
  return dist;
}

MetricInstance metric_closure(
    int n_pairs, const std::vector<std::vector<std::optional<Rat>>>& partial,
    const Rat& default_weight) {
  const int n = 2 * n_pairs;
  if (static_cast<int>(partial.size()) != n)
    throw DomainError("metric_closure: matrix size does not match n_pairs");
  for (const auto& row : partial)
    if (static_cast<int>(row.size()) != n)
      throw DomainError("metric_closure: ragged matrix");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (partial[i][j] && *partial[i][j] < 0)
        throw DomainError("metric_closure: negative defined entry");

  // Shortest paths through defined entries only; a defined entry that some
  // defined path undercuts is inconsistent input.
  // "Infinity" = 1 + n * (max defined entry or default), unreachable by any
  // simple path.
  Rat big = default_weight;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (partial[i][j] && *partial[i][j] > big) big = *partial[i][j];
  big = big * (n + 1) + 1;

  std::vector<std::vector<Rat>> defined(n, std::vector<Rat>(n, big));
  for (int i = 0; i < n; ++i) defined[i][i] = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && partial[i][j]) {
        const Rat& v = *partial[i][j];
        if (v < defined[i][j]) defined[i][j] = v;
        if (v < defined[j][i]) defined[j][i] = v;
      }
  auto defined_sp = all_pairs_shortest(defined);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && partial[i][j] && *partial[i][j] > defined_sp[i][j])
        throw DomainError("metric_closure: inconsistent entry (" +
                          std::to_string(i) + "," + std::to_string(j) +
                          ") exceeds defined shortest path");

  std::vector<std::vector<Rat>> full(n, std::vector<Rat>(n, default_weight));
  for (int i = 0; i < n; ++i) full[i][i] = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && partial[i][j]) {
        full[i][j] = *partial[i][j];
        full[j][i] = *partial[i][j];
      }

  MetricInstance out;
  out.n_pairs = n_pairs;
  out.weights = all_pairs_shortest(std::move(full));
  return out;
}

}  // namespace rbp
