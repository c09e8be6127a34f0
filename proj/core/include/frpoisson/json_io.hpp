// JSON records for algebras, r-matrices, and ciliated graphs. Rationals are
// carried as "p/q" strings (plain integers also accepted on input).
#pragma once

#include <json.hpp>

#include "frpoisson/graph.hpp"
#include "frpoisson/r_matrix.hpp"

namespace frp {

using Json = nlohmann::json;

// Thrown on malformed records; `where` is a JSON-pointer-style path.
struct SchemaError : std::runtime_error {
  std::string where;
  SchemaError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), where(std::move(path)) {}
};

// {"name", "dim", "basis", "brackets": [[i, j, [[k, "p/q"], ...]], ...],
//  "rep": optional list of row-major square matrices}
Json algebra_to_json(const LieAlgebra& g);
// Accepts a name string ("sl2", "abelian(2)", ...) or an inline record.
AlgebraPtr algebra_from_json(const Json& j, const std::string& path = "/algebra");

// {"algebra": name-or-inline, "s": [[i, j, "p/q"], ...],
//  "lambda": [[i, j, "p/q"], ...]} with i < j in lambda entries.
Json rmatrix_to_json(const RMatrix& r);
// Accepts a built-in name ("sl2_standard", ...) or an inline record. When
// `algebra` is non-null an inline record may omit its "algebra" field; a
// present field must agree structurally.
RMatrix rmatrix_from_json(const Json& j, const AlgebraPtr& algebra = nullptr,
                          const std::string& path = "/r");

// {"vertices", "half_edges", "involution", "incidence", "orders",
//  "orientation": {edge_id: source half-edge}}; edge ids are the sorted
// half-edge pair joined by ":".
Json graph_to_json(const CiliatedGraph& g, const Orientation& o);
// Accepts a builder string ("disk2", "annulus_marked(1)", "sigma_n(3)",
// "polygon_path(2)") or an inline record.
OrientedGraph graph_from_json(const Json& j, const std::string& path = "/graph");

}  // namespace frp
