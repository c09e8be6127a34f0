// Scenario files: one algebra, named r-matrices, an optional oriented graph
// with a vertex assignment, a list of checks, and the sampling configuration.
#pragma once

#include <cstdint>
#include <optional>

#include "frpoisson/json_io.hpp"

namespace frp {

struct Scenario {
  std::string schema_version = "1";
  std::string name;
  AlgebraPtr algebra;
  std::map<std::string, RMatrix> rmatrices;        // by name, e.g. {"r": sl2_standard}
  std::optional<OrientedGraph> graph;
  std::map<std::string, std::string> assignment;   // vertex -> r-matrix name
  std::vector<std::string> checks;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  int samples = 8;
  int n_max = 3;
  double scale = 0.5;
  std::vector<std::string> fuse;  // two vertices, for the fusion check
  std::optional<std::pair<std::string, std::string>> pivot;  // (moved, via) edges

  // Resolved assignment as vertex -> RMatrix.
  std::map<std::string, RMatrix> resolved_assignment() const;
};

Scenario scenario_from_json(const Json& j);
Json scenario_to_json(const Scenario& s);
// Cross-field validation (checks vs. graph/assignment/representation); called
// by scenario_from_json and again after flag overrides. Throws SchemaError.
void validate_scenario(const Scenario& s);
// Reads and validates a scenario file. Throws SchemaError with a JSON-pointer
// path on malformed input, std::runtime_error on I/O failure.
Scenario load_scenario(const std::string& path);

}  // namespace frp
