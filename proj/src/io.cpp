#include "singlink/io.hpp"

#include <sstream>

#include "singlink/errors.hpp"

namespace singlink {

namespace {

[[noreturn]] void schema(const std::string& msg) { fail(ErrorCode::SchemaError, msg); }

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) schema(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::string get_string(const Json& j, const std::string& where) {
  if (!j.is_string()) schema(where + " must be a string");
  return j.get<std::string>();
}

std::int64_t get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where + " must be an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    fail(ErrorCode::Overflow, where + " does not fit in 64 bits");
  return j.get<std::int64_t>();
}

std::optional<std::int64_t> get_opt_int(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return get_int(obj.at(key), where + "." + key);
}

std::optional<std::string> get_opt_string(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return get_string(obj.at(key), where + "." + key);
}

bool get_bool(const Json& obj, const char* key, bool fallback, const std::string& where) {
  if (!obj.contains(key) || obj.at(key).is_null()) return fallback;
  if (!obj.at(key).is_boolean()) schema(where + "." + key + " must be a boolean");
  return obj.at(key).get<bool>();
}

const Json& get_array(const Json& obj, const char* key, const std::string& where, bool required) {
  static const Json empty = Json::array();
  if (!obj.contains(key)) {
    if (required) schema(where + ": missing \"" + key + "\"");
    return empty;
  }
  if (!obj.at(key).is_array()) schema(where + "." + key + " must be an array");
  return obj.at(key);
}

Json opt(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }
Json opt(const std::optional<std::string>& v) { return v ? Json(*v) : Json(nullptr); }

Json hj_json(const std::optional<HJParams>& hj) { return hj ? Json::array({hj->n, hj->q}) : Json(nullptr); }

std::optional<HJParams> hj_from(const Json& obj, const std::string& where) {
  if (!obj.contains("hj") || obj.at("hj").is_null()) return std::nullopt;
  const Json& h = obj.at("hj");
  if (!h.is_array() || h.size() != 2) schema(where + ".hj must be [n, q] or null");
  return HJParams{get_int(h[0], where + ".hj[0]"), get_int(h[1], where + ".hj[1]")};
}

std::vector<std::int64_t> int_list(const Json& obj, const char* key, const std::string& where) {
  std::vector<std::int64_t> out;
  for (const auto& x : get_array(obj, key, where, false)) out.push_back(get_int(x, where + "." + key));
  return out;
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

}  // namespace

Json big_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const PlumbingGraph& g) {
  Json vertices = Json::array();
  for (const auto& [id, v] : g.vertices()) {
    Json jv;
    jv["id"] = v.id;
    jv["genus"] = v.genus;
    jv["euler"] = opt(v.euler);
    jv["mult"] = opt(v.mult);
    jv["name"] = v.name.empty() ? Json(nullptr) : Json(v.name);
    vertices.push_back(std::move(jv));
  }
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.a, e.b}));
  Json arrows = Json::array();
  for (const auto& a : g.arrows()) {
    Json ja;
    ja["at"] = opt(a.at);
    ja["label"] = a.label;
    ja["mult"] = opt(a.mult);
    arrows.push_back(std::move(ja));
  }
  Json out;
  out["vertices"] = std::move(vertices);
  out["edges"] = std::move(edges);
  out["arrows"] = std::move(arrows);
  return out;
}

PlumbingGraph graph_from_json(const Json& j) {
  if (!j.is_object()) schema("graph must be a JSON object");
  PlumbingGraph g;
  std::size_t i = 0;
  for (const auto& jv : get_array(j, "vertices", "graph", true)) {
    const std::string where = "vertices[" + std::to_string(i++) + "]";
    if (!jv.is_object()) schema(where + " must be an object");
    Vertex v;
    v.id = get_string(member(jv, "id", where), where + ".id");
    v.genus = jv.contains("genus") ? static_cast<int>(get_int(jv.at("genus"), where + ".genus")) : 0;
    v.euler = get_opt_int(jv, "euler", where);
    v.mult = get_opt_int(jv, "mult", where);
    v.name = get_opt_string(jv, "name", where).value_or("");
    g.add_vertex(std::move(v));
  }
  i = 0;
  for (const auto& je : get_array(j, "edges", "graph", false)) {
    const std::string where = "edges[" + std::to_string(i++) + "]";
    if (!je.is_array() || je.size() != 2) schema(where + " must be a pair of vertex ids");
    g.add_edge(get_string(je[0], where), get_string(je[1], where));
  }
  i = 0;
  for (const auto& ja : get_array(j, "arrows", "graph", false)) {
    const std::string where = "arrows[" + std::to_string(i++) + "]";
    if (!ja.is_object()) schema(where + " must be an object");
    Arrow a;
    a.at = get_opt_string(ja, "at", where);
    a.label = get_opt_string(ja, "label", where).value_or("");
    a.mult = get_opt_int(ja, "mult", where);
    g.add_arrow(std::move(a));
  }
  return g;
}

Json to_json(const BlowDownCertificate& c) {
  Json updates = Json::array();
  for (const auto& [id, e] : c.neighbor_updates) updates.push_back(Json::array({id, e}));
  Json out;
  out["removed"] = c.removed;
  out["neighbor_updates"] = std::move(updates);
  out["added_edge"] = c.added_edge ? Json::array({c.added_edge->a, c.added_edge->b}) : Json(nullptr);
  return out;
}

BlowDownCertificate certificate_from_json(const Json& j) {
  BlowDownCertificate c;
  c.removed = get_string(member(j, "removed", "certificate"), "certificate.removed");
  for (const auto& u : get_array(j, "neighbor_updates", "certificate", true)) {
    if (!u.is_array() || u.size() != 2) schema("certificate.neighbor_updates entries must be [id, euler]");
    c.neighbor_updates.emplace_back(get_string(u[0], "neighbor id"), get_int(u[1], "neighbor euler"));
  }
  if (j.contains("added_edge") && !j.at("added_edge").is_null()) {
    const Json& e = j.at("added_edge");
    if (!e.is_array() || e.size() != 2) schema("certificate.added_edge must be a pair");
    c.added_edge = Edge(get_string(e[0], "added_edge"), get_string(e[1], "added_edge"));
  }
  return c;
}

mpq_class rational_from_json(const Json& j) {
  if (j.is_number_integer()) return mpq_class(static_cast<long>(get_int(j, "rational")));
  if (!j.is_string()) schema("rationals must be integers or strings like \"34/13\"");
  std::string s = j.get<std::string>();
  if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos)
    fail(ErrorCode::ParseError, "bad rational '" + s + "'");
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) fail(ErrorCode::ParseError, "bad rational '" + s + "'");
  if (q.get_den() == 0) fail(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Json to_json(const PuiseuxBranch& b) {
  Json out;
  if (b.kind == PuiseuxBranch::Kind::Series) {
    Json terms = Json::array();
    for (const auto& t : b.terms)
      terms.push_back(Json::array({rational_string(t.exponent), rational_string(t.coefficient)}));
    out["terms"] = std::move(terms);
  } else {
    out["axis"] = b.kind == PuiseuxBranch::Kind::AxisX ? "x" : "y";
  }
  out["weight"] = b.weight;
  out["label"] = b.label;
  out["tracked"] = b.tracked;
  out["exact"] = b.exact;
  return out;
}

Json branches_to_json(const std::vector<PuiseuxBranch>& bs) {
  Json arr = Json::array();
  for (const auto& b : bs) arr.push_back(to_json(b));
  Json out;
  out["branches"] = std::move(arr);
  return out;
}

std::vector<PuiseuxBranch> branches_from_json(const Json& j) {
  const Json& list = j.is_array() ? j : get_array(j, "branches", "curve", true);
  std::vector<PuiseuxBranch> out;
  std::size_t i = 0;
  for (const auto& jb : list) {
    const std::string where = "branches[" + std::to_string(i++) + "]";
    if (!jb.is_object()) schema(where + " must be an object");
    PuiseuxBranch b;
    if (jb.contains("axis")) {
      const std::string axis = get_string(jb.at("axis"), where + ".axis");
      if (axis == "x") b.kind = PuiseuxBranch::Kind::AxisX;
      else if (axis == "y") b.kind = PuiseuxBranch::Kind::AxisY;
      else schema(where + ".axis must be \"x\" or \"y\"");
      if (jb.contains("terms")) schema(where + ": an axis branch takes no terms");
    } else {
      for (const auto& t : get_array(jb, "terms", where, true)) {
        if (!t.is_array() || t.size() != 2) schema(where + ".terms entries must be [exponent, coefficient]");
        b.terms.push_back({rational_from_json(t[0]), rational_from_json(t[1])});
      }
    }
    if (jb.contains("weight")) b.weight = get_int(jb.at("weight"), where + ".weight");
    b.label = get_opt_string(jb, "label", where).value_or("");
    b.tracked = get_bool(jb, "tracked", false, where);
    b.exact = get_bool(jb, "exact", false, where);
    out.push_back(std::move(b));
  }
  return out;
}

Json to_json(const CurveResolution& r) {
  Json placements = Json::array();
  for (const auto& p : r.placements) {
    Json jp;
    jp["label"] = p.label;
    jp["vertex"] = opt(p.vertex);
    jp["tracked"] = p.tracked;
    jp["transverse"] = p.transverse;
    placements.push_back(std::move(jp));
  }
  Json out;
  out["graph"] = to_json(r.graph);
  out["placements"] = std::move(placements);
  out["blowups"] = r.blowups;
  return out;
}

CurveResolution curve_resolution_from_json(const Json& j) {
  CurveResolution r;
  r.graph = graph_from_json(member(j, "graph", "curve resolution"));
  for (const auto& jp : get_array(j, "placements", "curve resolution", false)) {
    ArrowPlacement p;
    p.label = get_opt_string(jp, "label", "placement").value_or("");
    p.vertex = get_opt_string(jp, "vertex", "placement");
    p.tracked = get_bool(jp, "tracked", false, "placement");
    p.transverse = get_bool(jp, "transverse", false, "placement");
    r.placements.push_back(std::move(p));
  }
  if (j.contains("blowups")) r.blowups = static_cast<std::size_t>(get_int(j.at("blowups"), "blowups"));
  return r;
}

Json to_json(const CoveringGraph& c) {
  Json vertices = Json::array();
  for (const auto& v : c.vertices) {
    Json jv;
    jv["id"] = v.id;
    jv["base"] = v.base;
    jv["genus"] = v.genus;
    jv["degree"] = v.degree;
    jv["euler"] = opt(v.euler);
    jv["mult"] = opt(v.mult);
    vertices.push_back(std::move(jv));
  }
  Json edges = Json::array();
  for (const auto& e : c.edges) {
    Json je;
    je["a"] = e.a;
    je["b"] = e.b;
    je["hj"] = hj_json(e.hj);
    je["bamboo_mults"] = e.bamboo_mults;
    edges.push_back(std::move(je));
  }
  Json arrows = Json::array();
  for (const auto& a : c.arrows) {
    Json ja;
    ja["at"] = opt(a.at);
    ja["label"] = a.label;
    ja["mult"] = opt(a.mult);
    ja["hj"] = hj_json(a.hj);
    ja["bamboo_mults"] = a.bamboo_mults;
    arrows.push_back(std::move(ja));
  }
  Json out;
  out["d"] = c.d;
  out["base"] = to_json(c.base);
  out["vertices"] = std::move(vertices);
  out["edges"] = std::move(edges);
  out["arrows"] = std::move(arrows);
  return out;
}

CoveringGraph covering_from_json(const Json& j) {
  if (!j.is_object()) schema("covering must be a JSON object");
  CoveringGraph c;
  c.d = j.contains("d") && !j.at("d").is_null() ? get_int(j.at("d"), "covering.d") : 0;
  if (c.d < 0) fail(ErrorCode::NonPositiveDegree, "covering.d must be non-negative");
  c.base = graph_from_json(member(j, "base", "covering"));
  std::size_t i = 0;
  for (const auto& jv : get_array(j, "vertices", "covering", true)) {
    const std::string where = "covering.vertices[" + std::to_string(i++) + "]";
    CoverVertex v;
    v.id = get_string(member(jv, "id", where), where + ".id");
    v.base = get_string(member(jv, "base", where), where + ".base");
    v.genus = jv.contains("genus") ? static_cast<int>(get_int(jv.at("genus"), where + ".genus")) : 0;
    v.degree = jv.contains("degree") ? get_int(jv.at("degree"), where + ".degree") : 1;
    v.euler = get_opt_int(jv, "euler", where);
    v.mult = get_opt_int(jv, "mult", where);
    c.vertices.push_back(std::move(v));
  }
  i = 0;
  for (const auto& je : get_array(j, "edges", "covering", false)) {
    const std::string where = "covering.edges[" + std::to_string(i++) + "]";
    CoverEdge e;
    e.a = get_string(member(je, "a", where), where + ".a");
    e.b = get_string(member(je, "b", where), where + ".b");
    e.hj = hj_from(je, where);
    e.bamboo_mults = int_list(je, "bamboo_mults", where);
    c.edges.push_back(std::move(e));
  }
  i = 0;
  for (const auto& ja : get_array(j, "arrows", "covering", false)) {
    const std::string where = "covering.arrows[" + std::to_string(i++) + "]";
    CoverArrow a;
    a.at = get_opt_string(ja, "at", where);
    a.label = get_opt_string(ja, "label", where).value_or("");
    a.mult = get_opt_int(ja, "mult", where);
    a.hj = hj_from(ja, where);
    a.bamboo_mults = int_list(ja, "bamboo_mults", where);
    c.arrows.push_back(std::move(a));
  }
  return c;
}

namespace {

Json summary(const PlumbingGraph& g) {
  Json s;
  s["vertices"] = g.vertex_count();
  s["edges"] = g.edge_count();
  s["cycle_rank"] = cycle_rank(g);
  bool known = true;
  for (const auto& [id, v] : g.vertices()) known = known && v.euler.has_value();
  s["determinant"] = known ? big_to_json(determinant(g)) : Json(nullptr);
  s["negative_definite"] = known ? Json(is_negative_definite(g)) : Json(nullptr);
  return s;
}

}  // namespace

Json to_json(const PipelineReport& r) {
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  Json out;
  out["base_resolution"] = r.base_resolution ? to_json(*r.base_resolution) : Json(nullptr);
  out["covering"] = to_json(r.covering);
  out["resolved"] = to_json(r.resolved);
  out["minimal"] = to_json(r.minimal);
  out["certificates"] = std::move(certs);
  out["summary"] = {{"resolved", summary(r.resolved)}, {"minimal", summary(r.minimal)}};
  return out;
}

Json to_json(const BranchCoverData& data) {
  const PinchedTorusModel m = pinched_model(data);
  const QuotientDescription q = compose_curlings_and_identifications(data);
  Json steps = Json::array();
  for (const auto& s : q.steps) steps.push_back(to_string(s));
  Json out;
  out["degrees"] = data.degrees;
  out["k"] = m.k;
  out["cycle_type"] = m.cycle_type;
  out["steps"] = std::move(steps);
  return out;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const PlumbingGraph& g, const std::string& title) {
  std::ostringstream os;
  os << "// Rendering aid only: layout and labels may change between versions; use the JSON output for data.\n";
  os << "graph " << quoted(title) << " {\n";
  os << "  node [shape=circle];\n";
  for (const auto& [id, v] : g.vertices()) {
    std::string label = id + " (" + (v.euler ? std::to_string(*v.euler) : std::string("?"));
    if (v.genus != 0) label += "," + std::to_string(v.genus);
    label += ")";
    os << "  " << quoted(id) << " [label=" << quoted(label) << "];\n";
  }
  for (const auto& e : g.edges()) os << "  " << quoted(e.a) << " -- " << quoted(e.b) << ";\n";
  for (std::size_t i = 0; i < g.arrows().size(); ++i) {
    const Arrow& a = g.arrows()[i];
    const std::string node = "arrow" + std::to_string(i + 1);
    os << "  " << quoted(node) << " [shape=box,label=" << quoted(a.label.empty() ? node : a.label) << "];\n";
    if (a.at) os << "  " << quoted(*a.at) << " -- " << quoted(node) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace singlink
