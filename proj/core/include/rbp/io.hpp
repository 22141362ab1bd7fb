#pragma once

#include <string>

#include "rbp/coloring.hpp"
#include "rbp/instance.hpp"
#include "rbp/structures.hpp"

namespace rbp {

// Instance file: {"n_pairs": n, "weights": [[...]], "pairs": "canonical",
// optional "points", optional "meta"}. Weights are JSON integers or "a/b"
// strings; write→read round-trips are bit-exact.
MetricInstance read_instance(const std::string& path);
void write_instance(const MetricInstance& inst, const std::string& path);

std::string instance_to_json(const MetricInstance& inst);
MetricInstance instance_from_json(const std::string& text);

// Coloring file: {"bits": "0101..."}, position i = pair i.
Coloring read_coloring(const std::string& path);
void write_coloring(const Coloring& coloring, const std::string& path);

// Solution file: {"coloring": bits, "blue": [[u,v],...], "red": [[u,v],...],
// "kind": "mst|tsp|matching"}.
StructurePair read_solution(const std::string& path);
void write_solution(const StructurePair& pair, const std::string& path);

}  // namespace rbp
