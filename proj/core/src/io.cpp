#include "rbp/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "rbp/errors.hpp"

namespace rbp {

using nlohmann::json;

namespace {

json rat_to_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p())
    return json(r.get_num().get_si());
  return json(rat_to_string(r));
}

Rat rat_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) {
    try {
      return rat_from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": weight must be an integer or an \"a/b\" string");
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

void store_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << j.dump(1) << "\n";
}

json instance_json(const MetricInstance& inst) {
  json j;
  j["n_pairs"] = inst.n_pairs;
  j["pairs"] = "canonical";
  json rows = json::array();
  for (const auto& row : inst.weights) {
    json r = json::array();
    for (const auto& w : row) r.push_back(rat_to_json(w));
    rows.push_back(std::move(r));
  }
  j["weights"] = std::move(rows);
  if (inst.points) {
    json pts = json::array();
    for (const auto& p : *inst.points)
      pts.push_back(json::array({rat_to_json(p[0]), rat_to_json(p[1])}));
    j["points"] = std::move(pts);
  }
  return j;
}

MetricInstance instance_parse(const json& j, const std::string& ctx) {
  if (!j.is_object()) throw ParseError(ctx + ": expected an object");
  if (!j.contains("n_pairs") || !j["n_pairs"].is_number_integer())
    throw ParseError(ctx + ": missing integer field n_pairs");
  MetricInstance inst;
  inst.n_pairs = j["n_pairs"].get<int>();
  if (inst.n_pairs <= 0) throw ParseError(ctx + ": n_pairs must be positive");
  if (j.contains("pairs") && j["pairs"] != "canonical")
    throw ParseError(ctx + ": only canonical pairing is supported");
  if (!j.contains("weights") || !j["weights"].is_array())
    throw ParseError(ctx + ": missing weights matrix");
  const auto& rows = j["weights"];
  const int n = 2 * inst.n_pairs;
  if (static_cast<int>(rows.size()) != n)
    throw ParseError(ctx + ": weights has " + std::to_string(rows.size()) +
                     " rows, expected " + std::to_string(n));
  inst.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
      throw ParseError(ctx + ": weights row " + std::to_string(i) +
                       " has wrong length");
    inst.weights[i].reserve(n);
    for (int k = 0; k < n; ++k)
      inst.weights[i].push_back(rat_from_json(
          rows[i][k],
          ctx + ": weights[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
  }
  auto structural = validate_structure(inst);
  if (!structural.empty())
    throw ParseError(ctx + ": " + structural.front().describe());
  if (j.contains("points")) {
    std::vector<std::array<Rat, 2>> pts;
    for (size_t i = 0; i < j["points"].size(); ++i) {
      const auto& p = j["points"][i];
      if (!p.is_array() || p.size() != 2)
        throw ParseError(ctx + ": points[" + std::to_string(i) +
                         "] must be [x,y]");
      pts.push_back({rat_from_json(p[0], ctx + ": point x"),
                     rat_from_json(p[1], ctx + ": point y")});
    }
    inst.points = std::move(pts);
  }
  return inst;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& [u, v] : edges) out.push_back(json::array({u, v}));
  return out;
}

std::vector<Edge> edges_parse(const json& j, const std::string& ctx) {
  if (!j.is_array()) throw ParseError(ctx + ": expected an edge array");
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw ParseError(ctx + ": edges must be [u,v] integer pairs");
    out.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return out;
}

}  // namespace

MetricInstance read_instance(const std::string& path) {
  return instance_parse(load_json(path), path);
}

void write_instance(const MetricInstance& inst, const std::string& path) {
  store_json(instance_json(inst), path);
}

std::string instance_to_json(const MetricInstance& inst) {
  return instance_json(inst).dump(1);
}

MetricInstance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance json: ") + e.what());
  }
  return instance_parse(j, "instance json");
}

Coloring read_coloring(const std::string& path) {
  json j = load_json(path);
  if (!j.is_object() || !j.contains("bits") || !j["bits"].is_string())
    throw ParseError(path + ": expected {\"bits\": \"01...\"}");
  return Coloring::from_bits(j["bits"].get<std::string>());
}

void write_coloring(const Coloring& coloring, const std::string& path) {
  store_json(json{{"bits", coloring.to_bits()}}, path);
}

StructurePair read_solution(const std::string& path) {
  json j = load_json(path);
  if (!j.is_object()) throw ParseError(path + ": expected an object");
  for (const char* field : {"coloring", "blue", "red", "kind"})
    if (!j.contains(field))
      throw ParseError(path + ": missing field " + std::string(field));
  StructurePair pair;
  pair.coloring = Coloring::from_bits(j["coloring"].get<std::string>());
  pair.blue_edges = edges_parse(j["blue"], path + ": blue");
  pair.red_edges = edges_parse(j["red"], path + ": red");
  pair.kind = kind_from_name(j["kind"].get<std::string>());
  return pair;
}

void write_solution(const StructurePair& pair, const std::string& path) {
  json j;
  j["coloring"] = pair.coloring.to_bits();
  j["blue"] = edges_json(pair.blue_edges);
  j["red"] = edges_json(pair.red_edges);
  j["kind"] = kind_name(pair.kind);
  store_json(j, path);
}

}  // namespace rbp
