#include "gkmlab/serialize.hpp"

#include "gkmlab/error.hpp"

namespace gkm {

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw InputError("expected a rational string, got " + j.dump());
}

json to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vec vec_from_json(const json& j, int expected_dim, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  if (expected_dim >= 0 && static_cast<int>(j.size()) != expected_dim)
    throw InputError(where + ": expected " + std::to_string(expected_dim) + " entries, got " + std::to_string(j.size()));
  Vec out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    try {
      out.push_back(rational_from_json(j[i]));
    } catch (const InputError& e) {
      throw InputError(where + "[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return out;
}

json to_json(const MultiPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::array();
    for (int i = 0; i < p.nvars(); ++i) exps.push_back(static_cast<int>(m.exp[i]));
    out.push_back({{"exponents", exps}, {"coeff", to_json(c)}});
  }
  return out;
}

MultiPoly poly_from_json(const json& j, int nvars, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": polynomial must be a list of terms");
  MultiPoly p(nvars);
  for (std::size_t t = 0; t < j.size(); ++t) {
    std::string at = where + "[" + std::to_string(t) + "]";
    const auto& term = j[t];
    if (!term.is_object() || !term.contains("exponents") || !term.contains("coeff"))
      throw InputError(at + ": term needs 'exponents' and 'coeff'");
    const auto& e = term["exponents"];
    if (!e.is_array() || static_cast<int>(e.size()) != nvars)
      throw InputError(at + ": 'exponents' must have " + std::to_string(nvars) + " entries");
    Monomial m;
    for (int i = 0; i < nvars; ++i) {
      if (!e[i].is_number_integer() || e[i].get<int>() < 0 || e[i].get<int>() > 255)
        throw InputError(at + ": bad exponent");
      m.exp[i] = static_cast<std::uint8_t>(e[i].get<int>());
    }
    p.add_term(m, rational_from_json(term["coeff"]));
  }
  return p;
}

json class_to_json(const Skeleton& s, const std::vector<MultiPoly>& values, int degree) {
  json vals = json::object();
  for (int v = 0; v < s.num_vertices(); ++v) vals[s.id(v)] = to_json(values[v]);
  return {{"degree", degree}, {"values", vals}};
}

std::vector<MultiPoly> class_from_json(const Skeleton& s, const json& j, int* degree_out) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_object())
    throw InputError("class: expected {\"degree\": m, \"values\": {...}}");
  std::vector<MultiPoly> out(s.num_vertices(), MultiPoly(s.dim()));
  for (const auto& [id, poly] : j["values"].items()) out[s.index_of(id)] = poly_from_json(poly, s.dim(), "values." + id);
  if (degree_out) *degree_out = j.value("degree", 0);
  return out;
}

json skeleton_to_json(const Skeleton& s) {
  json edges = json::array();
  for (int e : s.unoriented()) {
    const auto& ed = s.edge(e);
    edges.push_back({{"src", s.id(ed.src)}, {"dst", s.id(ed.dst)}, {"alpha", to_json(ed.alpha)}});
  }
  return {{"dim", s.dim()}, {"basis", s.ctx().labels()}, {"vertices", s.ids()}, {"edges", edges}};
}

Skeleton skeleton_from_json(const json& j) {
  if (!j.is_object()) throw InputError("graph: top level must be an object");
  for (const char* key : {"dim", "basis", "vertices", "edges"})
    if (!j.contains(key)) throw InputError(std::string("graph: missing field '") + key + "'");
  if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 1) throw InputError("graph.dim: positive integer expected");
  int n = j["dim"].get<int>();
  if (!j["basis"].is_array() || static_cast<int>(j["basis"].size()) != n)
    throw InputError("graph.basis: expected " + std::to_string(n) + " labels");
  std::vector<std::string> labels;
  for (const auto& l : j["basis"]) {
    if (!l.is_string()) throw InputError("graph.basis: labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::vector<std::string> ids;
  if (!j["vertices"].is_array()) throw InputError("graph.vertices: array expected");
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw InputError("graph.vertices: ids must be strings");
    ids.push_back(v.get<std::string>());
  }
  if (!j["edges"].is_array()) throw InputError("graph.edges: array expected");
  std::vector<UnorientedEdge> edges;
  for (std::size_t k = 0; k < j["edges"].size(); ++k) {
    std::string at = "graph.edges[" + std::to_string(k) + "]";
    const auto& e = j["edges"][k];
    if (!e.is_object()) throw InputError(at + ": object expected");
    for (const char* key : {"src", "dst", "alpha"})
      if (!e.contains(key)) throw InputError(at + ": missing field '" + key + "'");
    if (!e["src"].is_string() || !e["dst"].is_string()) throw InputError(at + ": src/dst must be strings");
    edges.push_back({e["src"].get<std::string>(), e["dst"].get<std::string>(), vec_from_json(e["alpha"], n, at + ".alpha")});
  }
  return Skeleton::from_unoriented(SpaceCtx(labels), ids, edges);
}

}  // namespace gkm
