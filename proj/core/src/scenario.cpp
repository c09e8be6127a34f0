#include "frpoisson/scenario.hpp"

#include <fstream>
#include <set>

#include "frpoisson/checks.hpp"

namespace frp {

std::map<std::string, RMatrix> Scenario::resolved_assignment() const {
  std::map<std::string, RMatrix> out;
  for (const auto& [vertex, rname] : assignment) out.emplace(vertex, rmatrices.at(rname));
  return out;
}

Scenario scenario_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("", "scenario must be an object");
  Scenario s;
  if (j.contains("schema_version")) {
    if (!j["schema_version"].is_string() || j["schema_version"] != "1")
      throw SchemaError("/schema_version", "unsupported schema version");
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw SchemaError("/name", "expected a string");
    s.name = j["name"];
  }
  if (!j.contains("algebra")) throw SchemaError("/algebra", "missing field");
  s.algebra = algebra_from_json(j["algebra"]);

  if (j.contains("r_matrices")) {
    if (!j["r_matrices"].is_object()) throw SchemaError("/r_matrices", "expected an object");
    for (const auto& [name, rec] : j["r_matrices"].items())
      s.rmatrices.emplace(name, rmatrix_from_json(rec, s.algebra, "/r_matrices/" + name));
  }

  if (j.contains("graph")) s.graph = graph_from_json(j["graph"]);

  if (j.contains("assignment")) {
    if (!j["assignment"].is_object()) throw SchemaError("/assignment", "expected an object");
    for (const auto& [vertex, rname] : j["assignment"].items()) {
      if (!rname.is_string())
        throw SchemaError("/assignment/" + vertex, "expected an r-matrix name");
      if (!s.rmatrices.count(rname.get<std::string>()))
        throw SchemaError("/assignment/" + vertex,
                          "unknown r-matrix '" + rname.get<std::string>() + "'");
      if (!s.graph || !s.graph->graph.has_vertex(vertex))
        throw SchemaError("/assignment/" + vertex, "vertex not in the graph");
      s.assignment[vertex] = rname;
    }
  }

  if (j.contains("checks")) {
    if (!j["checks"].is_array()) throw SchemaError("/checks", "expected an array");
    const auto& registry = check_registry();
    for (size_t i = 0; i < j["checks"].size(); ++i) {
      const Json& c = j["checks"][i];
      std::string path = "/checks/" + std::to_string(i);
      if (!c.is_string()) throw SchemaError(path, "expected a check name");
      std::string name = c;
      if (std::find(registry.begin(), registry.end(), name) == registry.end())
        throw SchemaError(path, "unknown check '" + name + "'");
      s.checks.push_back(name);
    }
  }

  auto number = [&](const char* key, double& into) {
    if (!j.contains(key)) return;
    if (!j[key].is_number()) throw SchemaError(std::string("/") + key, "expected a number");
    into = j[key].get<double>();
  };
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
      throw SchemaError("/seed", "expected an integer");
    s.seed = j["seed"].get<std::uint64_t>();
  }
  number("tol", s.tol);
  number("scale", s.scale);
  if (j.contains("samples")) {
    if (!j["samples"].is_number_integer() || j["samples"].get<int>() < 1)
      throw SchemaError("/samples", "expected a positive integer");
    s.samples = j["samples"].get<int>();
  }
  if (j.contains("n_max")) {
    if (!j["n_max"].is_number_integer() || j["n_max"].get<int>() < 1)
      throw SchemaError("/n_max", "expected a positive integer");
    s.n_max = j["n_max"].get<int>();
  }
  if (j.contains("fuse")) {
    if (!j["fuse"].is_array() || j["fuse"].size() != 2)
      throw SchemaError("/fuse", "expected a pair of vertices");
    for (size_t i = 0; i < 2; ++i) {
      const Json& v = j["fuse"][i];
      std::string path = "/fuse/" + std::to_string(i);
      if (!v.is_string()) throw SchemaError(path, "expected a vertex id");
      if (!s.graph || !s.graph->graph.has_vertex(v.get<std::string>()))
        throw SchemaError(path, "vertex not in the graph");
      s.fuse.push_back(v);
    }
  }
  if (j.contains("pivot")) {
    const Json& p = j["pivot"];
    if (!p.is_object() || !p.contains("moved") || !p.contains("via") ||
        !p["moved"].is_string() || !p["via"].is_string())
      throw SchemaError("/pivot", "expected {\"moved\": edge, \"via\": edge}");
    s.pivot = {p["moved"].get<std::string>(), p["via"].get<std::string>()};
  }

  validate_scenario(s);
  return s;
}

void validate_scenario(const Scenario& s) {
  // graph checks need a graph and a full assignment
  static const std::set<std::string> needs_graph = {
      "rgamma_cyb",     "sgamma_symmetric_part",    "jacobi",
      "gauge_poisson",  "quasi",                    "qs_lambda_independence",
      "orientation_independence", "local_move_independence", "fusion_theorem",
      "polyuble_multiplicativity", "gauge_equivariance"};
  static const std::set<std::string> needs_rep = {
      "sgamma_symmetric_part", "jacobi",          "gauge_poisson",
      "quasi",                 "orientation_independence", "local_move_independence",
      "polyuble_multiplicativity", "gauge_equivariance"};
  for (const auto& c : s.checks) {
    if (needs_rep.count(c) && !s.algebra->has_rep())
      throw SchemaError("/algebra", "check '" + c + "' needs a matrix representation");
    if (!needs_graph.count(c)) continue;
    if (!s.graph) throw SchemaError("/checks", "check '" + c + "' requires a graph");
    if (c == "gauge_equivariance") continue;  // needs no r-matrices
    for (const auto& v : s.graph->graph.vertices())
      if (!s.graph->graph.order_at(v).empty() && !s.assignment.count(v))
        throw SchemaError("/assignment", "vertex '" + v + "' has no r-matrix but check '" + c +
                                             "' needs one");
  }
  if ((std::find(s.checks.begin(), s.checks.end(), "cyb") != s.checks.end() ||
       std::find(s.checks.begin(), s.checks.end(), "section2") != s.checks.end()) &&
      s.rmatrices.empty())
    throw SchemaError("/r_matrices", "cyb/section2 checks need at least one r-matrix");
}

Json scenario_to_json(const Scenario& s) {
  Json j;
  j["schema_version"] = s.schema_version;
  if (!s.name.empty()) j["name"] = s.name;
  j["algebra"] = algebra_to_json(*s.algebra);
  Json rms = Json::object();
  for (const auto& [name, r] : s.rmatrices) rms[name] = rmatrix_to_json(r);
  j["r_matrices"] = std::move(rms);
  if (s.graph) j["graph"] = graph_to_json(s.graph->graph, s.graph->orientation);
  if (!s.assignment.empty()) j["assignment"] = s.assignment;
  j["checks"] = s.checks;
  j["seed"] = s.seed;
  j["tol"] = s.tol;
  j["samples"] = s.samples;
  j["n_max"] = s.n_max;
  j["scale"] = s.scale;
  if (!s.fuse.empty()) j["fuse"] = s.fuse;
  if (s.pivot) j["pivot"] = Json{{"moved", s.pivot->first}, {"via", s.pivot->second}};
  return j;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return scenario_from_json(j);
}

}  // namespace frp
