#include "frpoisson/json_io.hpp"

#include <regex>

namespace frp {

namespace {

Rat rat_from_json(const Json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return rat(j.get<long>());
    if (j.is_string()) return rat_parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(path, e.what());
  }
  throw SchemaError(path, "expected an integer or a \"p/q\" string");
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "/" + key, "missing field");
  return *it;
}

int int_field(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<int>();
}

std::string str_field(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

}  // namespace

Json algebra_to_json(const LieAlgebra& g) {
  Json j;
  j["name"] = g.name();
  j["dim"] = g.dim();
  j["basis"] = g.basis();
  Json brackets = Json::array();
  for (const auto& [i, k] : g.nonzero_pairs()) {
    Json entries = Json::array();
    for (const auto& [t, c] : g.bracket(i, k)) entries.push_back(Json::array({t, rat_str(c)}));
    brackets.push_back(Json::array({i, k, entries}));
  }
  j["brackets"] = std::move(brackets);
  if (g.has_rep()) {
    Json rep = Json::array();
    for (const auto& m : g.rep()) {
      Json mat = Json::array();
      for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(rat_str(v));
        mat.push_back(std::move(r));
      }
      rep.push_back(std::move(mat));
    }
    j["rep"] = std::move(rep);
  }
  return j;
}

AlgebraPtr algebra_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return builtin_algebra(j.get<std::string>());
    } catch (const std::exception& e) {
      throw SchemaError(path, e.what());
    }
  }
  if (!j.is_object()) throw SchemaError(path, "expected a name or an inline record");
  int dim = int_field(field(j, "dim", path), path + "/dim");
  const Json& basis = field(j, "basis", path);
  if (!basis.is_array() || static_cast<int>(basis.size()) != dim)
    throw SchemaError(path + "/basis", "expected an array of dim labels");
  std::vector<std::string> labels;
  for (size_t i = 0; i < basis.size(); ++i)
    labels.push_back(str_field(basis[i], path + "/basis/" + std::to_string(i)));

  std::map<std::pair<int, int>, SparseVec> brackets;
  const Json& br = field(j, "brackets", path);
  if (!br.is_array()) throw SchemaError(path + "/brackets", "expected an array");
  for (size_t e = 0; e < br.size(); ++e) {
    std::string p = path + "/brackets/" + std::to_string(e);
    const Json& entry = br[e];
    if (!entry.is_array() || entry.size() != 3) throw SchemaError(p, "expected [i, j, entries]");
    int i = int_field(entry[0], p + "/0"), k = int_field(entry[1], p + "/1");
    SparseVec v;
    if (!entry[2].is_array()) throw SchemaError(p + "/2", "expected an array of [k, coeff]");
    for (size_t t = 0; t < entry[2].size(); ++t) {
      std::string pt = p + "/2/" + std::to_string(t);
      const Json& term = entry[2][t];
      if (!term.is_array() || term.size() != 2) throw SchemaError(pt, "expected [k, coeff]");
      v.emplace_back(int_field(term[0], pt + "/0"), rat_from_json(term[1], pt + "/1"));
    }
    brackets[{i, k}] = std::move(v);
  }

  std::optional<std::vector<RatMatrix>> rep;
  if (j.contains("rep") && !j["rep"].is_null()) {
    const Json& jr = j["rep"];
    if (!jr.is_array() || static_cast<int>(jr.size()) != dim)
      throw SchemaError(path + "/rep", "expected one matrix per basis vector");
    std::vector<RatMatrix> mats;
    for (size_t i = 0; i < jr.size(); ++i) {
      std::string pm = path + "/rep/" + std::to_string(i);
      if (!jr[i].is_array()) throw SchemaError(pm, "expected a matrix (array of rows)");
      RatMatrix m;
      for (size_t r = 0; r < jr[i].size(); ++r) {
        std::string pr = pm + "/" + std::to_string(r);
        if (!jr[i][r].is_array()) throw SchemaError(pr, "expected a row");
        std::vector<Rat> row;
        for (size_t c = 0; c < jr[i][r].size(); ++c)
          row.push_back(rat_from_json(jr[i][r][c], pr + "/" + std::to_string(c)));
        m.push_back(std::move(row));
      }
      mats.push_back(std::move(m));
    }
    rep = std::move(mats);
  }

  std::string name = j.contains("name") ? str_field(j["name"], path + "/name") : "anonymous";
  try {
    return std::make_shared<LieAlgebra>(name, labels, brackets, std::move(rep));
  } catch (const std::exception& e) {
    throw SchemaError(path, e.what());
  }
}

namespace {

Json pairs_to_json(const std::map<MultiIndex, Rat>& coeffs) {
  Json out = Json::array();
  for (const auto& [m, v] : coeffs) out.push_back(Json::array({m[0], m[1], rat_str(v)}));
  return out;
}

}  // namespace

Json rmatrix_to_json(const RMatrix& r) {
  Json j;
  j["algebra"] = r.alg->name();
  j["s"] = pairs_to_json(r.sym.coeff);
  j["lambda"] = pairs_to_json(r.antisym.coeff);
  return j;
}

RMatrix rmatrix_from_json(const Json& j, const AlgebraPtr& algebra, const std::string& path) {
  if (j.is_string()) {
    try {
      RMatrix r = builtin_rmatrix(j.get<std::string>());
      if (algebra) detail::require_same_algebra(r.alg, algebra);
      return r;
    } catch (const std::exception& e) {
      throw SchemaError(path, e.what());
    }
  }
  if (!j.is_object()) throw SchemaError(path, "expected a name or an inline record");
  AlgebraPtr g = algebra;
  if (j.contains("algebra")) {
    AlgebraPtr declared = algebra_from_json(j["algebra"], path + "/algebra");
    if (g && !g->structurally_equal(*declared))
      throw SchemaError(path + "/algebra", "does not match the scenario algebra");
    g = declared;
  }
  if (!g) throw SchemaError(path, "no algebra given for inline r-matrix");

  auto read_pairs = [&](const char* key, auto&& sink) {
    const Json& arr = field(j, key, path);
    std::string p = path + "/" + key;
    if (!arr.is_array()) throw SchemaError(p, "expected an array of [i, j, coeff]");
    for (size_t t = 0; t < arr.size(); ++t) {
      std::string pt = p + "/" + std::to_string(t);
      const Json& term = arr[t];
      if (!term.is_array() || term.size() != 3) throw SchemaError(pt, "expected [i, j, coeff]");
      int a = int_field(term[0], pt + "/0"), b = int_field(term[1], pt + "/1");
      if (a < 0 || a >= g->dim() || b < 0 || b >= g->dim())
        throw SchemaError(pt, "basis index out of range");
      sink(a, b, rat_from_json(term[2], pt + "/2"), pt);
    }
  };

  Tensor<Rat> s(g, 2);
  read_pairs("s", [&](int a, int b, const Rat& v, const std::string&) {
    s.add(MultiIndex{a, b}, v);
  });
  AltTensor<Rat> lam(g, 2);
  read_pairs("lambda", [&](int a, int b, const Rat& v, const std::string& pt) {
    if (a >= b) throw SchemaError(pt, "lambda entries need i < j");
    lam.add(MultiIndex{a, b}, v);
  });
  try {
    return RMatrix::from_parts(s, lam);
  } catch (const std::exception& e) {
    throw SchemaError(path, e.what());
  }
}

Json graph_to_json(const CiliatedGraph& g, const Orientation& o) {
  Json j;
  j["vertices"] = g.vertices();
  j["half_edges"] = g.half_edges();
  j["involution"] = g.involution();
  j["incidence"] = g.incidence();
  j["orders"] = g.orders();
  j["orientation"] = o.source;
  return j;
}

OrientedGraph graph_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    std::string text = j.get<std::string>();
    static const std::regex builder(R"(^(disk2|annulus_marked|sigma_n|polygon_path)(?:\((\d+)\))?$)");
    std::smatch m;
    if (!std::regex_match(text, m, builder))
      throw SchemaError(path, "unknown graph builder: '" + text + "'");
    std::string which = m[1];
    try {
      if (which == "disk2") {
        if (m[2].matched) throw std::invalid_argument("disk2 takes no argument");
        return disk2();
      }
      if (!m[2].matched) throw std::invalid_argument(which + " needs an argument");
      int n = std::stoi(m[2]);
      if (which == "annulus_marked") return annulus_marked(n);
      if (which == "sigma_n") return sigma_n(n);
      return polygon_path(n);
    } catch (const std::exception& e) {
      throw SchemaError(path, e.what());
    }
  }
  if (!j.is_object()) throw SchemaError(path, "expected a builder name or an inline record");

  auto str_list = [&](const char* key) {
    const Json& arr = field(j, key, path);
    std::string p = path + "/" + key;
    if (!arr.is_array()) throw SchemaError(p, "expected an array of strings");
    std::vector<std::string> out;
    for (size_t i = 0; i < arr.size(); ++i)
      out.push_back(str_field(arr[i], p + "/" + std::to_string(i)));
    return out;
  };
  auto str_map = [&](const char* key) {
    const Json& obj = field(j, key, path);
    std::string p = path + "/" + key;
    if (!obj.is_object()) throw SchemaError(p, "expected an object");
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : obj.items()) out[k] = str_field(v, p + "/" + k);
    return out;
  };

  std::map<std::string, std::vector<std::string>> orders;
  {
    const Json& obj = field(j, "orders", path);
    std::string p = path + "/orders";
    if (!obj.is_object()) throw SchemaError(p, "expected an object");
    for (const auto& [k, v] : obj.items()) {
      if (!v.is_array()) throw SchemaError(p + "/" + k, "expected an array");
      std::vector<std::string> list;
      for (size_t i = 0; i < v.size(); ++i)
        list.push_back(str_field(v[i], p + "/" + k + "/" + std::to_string(i)));
      orders[k] = std::move(list);
    }
  }

  try {
    CiliatedGraph g(str_list("vertices"), str_list("half_edges"), str_map("involution"),
                    str_map("incidence"), orders);
    Orientation o{str_map("orientation")};
    validate_orientation(g, o);
    return {std::move(g), std::move(o)};
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(path, e.what());
  }
}

}  // namespace frp
