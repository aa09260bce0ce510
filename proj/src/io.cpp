#include "skeleta/io.hpp"

#include <fstream>

#include "skeleta/parse.hpp"

namespace skeleta {
namespace {

const Json& field(const Json& j, const char* key, const char* where) {
  if (!j.is_object()) throw FormatError(std::string(where) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw FormatError(std::string(where) + ": missing field '" + key + "'");
  return *it;
}

long integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw FormatError(what + ": expected an integer");
  return j.get<long>();
}

std::string text(const Json& j, const std::string& what) {
  if (!j.is_string()) throw FormatError(what + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

std::string rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw FormatError("rationals are strings \"p/q\" or integers");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  }
}

// ------------------------------------------------------------------ model

Json to_json(const ModelDescription& m) {
  Json comps = Json::array();
  for (const auto& c : m.components) comps.push_back({{"id", c.id}, {"multiplicity", c.multiplicity}});
  Json strata = Json::array();
  for (const auto& s : m.strata) {
    Json js = {{"id", s.id}, {"components", s.components}};
    if (!s.faces.empty()) js["faces"] = s.faces;
    strata.push_back(std::move(js));
  }
  return {{"components", std::move(comps)}, {"strata", std::move(strata)}};
}

ModelDescription model_from_json(const Json& j) {
  ModelDescription m;
  const Json& comps = field(j, "components", "model");
  if (!comps.is_array()) throw FormatError("model: 'components' must be an array");
  for (const auto& c : comps)
    m.components.push_back({text(field(c, "id", "component"), "component id"),
                            integer(field(c, "multiplicity", "component"), "multiplicity")});
  const Json& strata = field(j, "strata", "model");
  if (!strata.is_array()) throw FormatError("model: 'strata' must be an array");
  for (const auto& s : strata) {
    Stratum st;
    st.id = text(field(s, "id", "stratum"), "stratum id");
    const Json& cs = field(s, "components", "stratum");
    if (!cs.is_array()) throw FormatError("stratum '" + st.id + "': components must be an array");
    for (const auto& c : cs) st.components.push_back(text(c, "stratum component"));
    if (auto f = s.find("faces"); f != s.end()) {
      if (!f->is_object()) throw FormatError("stratum '" + st.id + "': faces must be an object");
      for (const auto& [k, v] : f->items()) st.faces[k] = text(v, "face target");
    }
    m.strata.push_back(std::move(st));
  }
  return m;
}

// ------------------------------------------------------------------- form

Json to_json(const PluricanonicalForm& f) {
  return {{"m", f.m}, {"vertical", f.vertical}, {"horizontal", f.horizontal}};
}

PluricanonicalForm form_from_json(const Json& j) {
  PluricanonicalForm f;
  f.m = integer(field(j, "m", "form"), "m");
  const Json& v = field(j, "vertical", "form");
  if (!v.is_object()) throw FormatError("form: 'vertical' must be an object");
  for (const auto& [k, nu] : v.items()) f.vertical[k] = integer(nu, "vertical multiplicity");
  if (auto h = j.find("horizontal"); h != j.end()) {
    if (!h->is_array()) throw FormatError("form: 'horizontal' must be an array");
    for (const auto& s : *h) f.horizontal.insert(text(s, "horizontal stratum"));
  }
  return f;
}

// ----------------------------------------------------------------- points

Json to_json(const SkeletonPoint& p) {
  Json b = Json::object();
  for (const auto& [k, v] : p.barycentric) b[k] = rational_json(v);
  return {{"stratum", p.stratum}, {"barycentric", std::move(b)}};
}

SkeletonPoint point_from_json(const Json& j) {
  SkeletonPoint p;
  p.stratum = text(field(j, "stratum", "point"), "stratum");
  const Json& b = field(j, "barycentric", "point");
  if (!b.is_object()) throw FormatError("point: 'barycentric' must be an object");
  for (const auto& [k, v] : b.items()) p.barycentric[k] = rational_from_json(v);
  return p;
}

Json to_json(const MonomialPointData& d) {
  Json a = Json::object();
  for (const auto& [k, v] : d.alpha) a[k] = rational_json(v);
  return {{"stratum", d.stratum}, {"alpha", std::move(a)}};
}

RigidPointSpec rigid_point_from_json(const Json& j) {
  RigidPointSpec r;
  r.n1 = integer(field(j, "N1", "rigid point"), "N1");
  r.n2 = integer(field(j, "N2", "rigid point"), "N2");
  if (auto e = j.find("ramification"); e != j.end())
    r.point.ramification = integer(*e, "ramification");
  r.x1_text = text(field(j, "x1", "rigid point"), "x1");
  r.x2_text = text(field(j, "x2", "rigid point"), "x2");
  const std::string var = r.point.ramification == 1 ? "t" : "u";
  try {
    r.point.x1 = parse_element(r.x1_text, var);
    r.point.x2 = parse_element(r.x2_text, var);
  } catch (const DomainError& e) {
    throw FormatError(std::string("rigid point: ") + e.what());
  }
  return r;
}

Json to_json(const RigidPointSpec& p) {
  Json j = {{"N1", p.n1}, {"N2", p.n2}, {"x1", p.x1_text}, {"x2", p.x2_text}};
  if (p.point.ramification != 1) j["ramification"] = p.point.ramification;
  return j;
}

// ---------------------------------------------------------------- results

Json to_json(const DualComplex& dc) {
  Json simplices = Json::array();
  for (const auto& [id, s] : dc.simplices()) {
    Json js = {{"id", id}, {"dimension", s.dimension}, {"vertices", s.vertices}};
    if (!s.facets.empty()) js["faces"] = s.facets;
    simplices.push_back(std::move(js));
  }
  Json counts = Json::array();
  for (long d = 0; d <= dc.dimension(); ++d) counts.push_back(dc.count(d));
  return {{"vertexCount", dc.vertex_count()},
          {"dimension", dc.dimension()},
          {"faceCounts", std::move(counts)},
          {"connectedComponents", connected_components(dc).size()},
          {"simplices", std::move(simplices)}};
}

Json to_json(const Subcomplex& s) { return {{"strata", s.strata}}; }

Subcomplex subcomplex_from_json(const Json& j) {
  Subcomplex s;
  const Json& st = field(j, "strata", "subcomplex");
  if (!st.is_array()) throw FormatError("subcomplex: 'strata' must be an array");
  for (const auto& id : st) s.strata.insert(text(id, "stratum"));
  return s;
}

Json to_json(const FlowExpansion& e) {
  Json terms = Json::array();
  for (const auto& t : e.terms) terms.push_back({{"i", t.i}, {"vK", t.v.str()}});
  return {{"value", e.value.str()}, {"terms", std::move(terms)}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError("'" + path.string() + "': " + e.what());
  }
}

}  // namespace skeleta
