#include "core/serialize.hpp"

#include <fstream>
#include <sstream>

namespace polyhardy {

namespace {

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(std::string(what) + ": expected [re, im]");
  return cplx(j[0].get<double>(), j[1].get<double>());
}

int node_count_from_json(const json& j) {
  if (!j.contains("N") || !j["N"].is_number_integer())
    throw ParseError("curve: missing integer field \"N\"");
  return j["N"].get<int>();
}

double number_field(const json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j[key].is_number())
    throw ParseError(std::string(what) + ": missing numeric field \"" + key + "\"");
  return j[key].get<double>();
}

}  // namespace

json curve_to_json(const CurveDiscretization& curve) {
  json j;
  if (const auto* c = std::get_if<CircleDesc>(&curve.descriptor())) {
    j["kind"] = "circle";
    j["center"] = complex_to_json(c->center);
    j["radius"] = c->radius;
  } else if (const auto* e = std::get_if<EllipseDesc>(&curve.descriptor())) {
    j["kind"] = "ellipse";
    j["a"] = e->a;
    j["b"] = e->b;
  } else {
    const auto& t = std::get<TrigDesc>(curve.descriptor());
    json coeffs = json::array();
    for (const auto& [m, c] : t.coeffs) coeffs.push_back(json::array({m, c.real(), c.imag()}));
    j["kind"] = "trig";
    j["coeffs"] = std::move(coeffs);
  }
  j["N"] = curve.size();
  return j;
}

CurvePtr curve_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("curve: expected an object with a \"kind\" field");
  const std::string kind = j["kind"].get<std::string>();
  const int n = node_count_from_json(j);
  if (kind == "circle") {
    if (!j.contains("center")) throw ParseError("circle: missing \"center\"");
    return make_circle(complex_from_json(j["center"], "circle center"),
                       number_field(j, "radius", "circle"), n);
  }
  if (kind == "ellipse")
    return make_ellipse(number_field(j, "a", "ellipse"), number_field(j, "b", "ellipse"), n);
  if (kind == "trig") {
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
      throw ParseError("trig curve: missing \"coeffs\" array");
    std::map<int, cplx> coeffs;
    for (const auto& triple : j["coeffs"]) {
      if (!triple.is_array() || triple.size() != 3)
        throw ParseError("trig curve: coefficients are [m, re, im] triples");
      coeffs[triple[0].get<int>()] += cplx(triple[1].get<double>(), triple[2].get<double>());
    }
    return make_trig_curve(coeffs, n);
  }
  throw ParseError("curve: unknown kind \"" + kind + "\"");
}

json jet_to_json(const WhitneyJet& f) {
  json rows = json::array();
  for (const auto& row : f.rows) {
    json r = json::array();
    for (const auto& v : row) r.push_back(complex_to_json(v));
    rows.push_back(std::move(r));
  }
  return json{{"k", f.k}, {"alpha", f.alpha}, {"curve", curve_to_json(*f.curve)},
              {"components", std::move(rows)}};
}

WhitneyJet jet_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("jet: expected an object");
  if (!j.contains("k") || !j["k"].is_number_integer()) throw ParseError("jet: missing \"k\"");
  if (!j.contains("curve")) throw ParseError("jet: missing \"curve\"");
  if (!j.contains("components") || !j["components"].is_array())
    throw ParseError("jet: missing \"components\" array");
  const int k = j["k"].get<int>();
  const double alpha = j.contains("alpha") ? number_field(j, "alpha", "jet") : 1.0;
  CurvePtr curve = curve_from_json(j["curve"]);
  std::vector<std::vector<cplx>> rows;
  for (const auto& r : j["components"]) {
    if (!r.is_array()) throw ParseError("jet: component rows are arrays");
    std::vector<cplx> row;
    row.reserve(r.size());
    for (const auto& v : r) row.push_back(complex_from_json(v, "jet value"));
    rows.push_back(std::move(row));
  }
  try {
    return make_jet(std::move(curve), k, alpha, std::move(rows));
  } catch (const ConfigError& e) {
    throw ParseError(std::string("jet: ") + e.what());
  }
}

json laurent_to_json(const LaurentPoly& p) {
  json triples = json::array();
  for (const auto& [n, c] : p.coeffs()) triples.push_back(json::array({n, c.real(), c.imag()}));
  return triples;
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("laurent: expected an array of [exp, re, im] triples");
  LaurentPoly p;
  for (const auto& triple : j) {
    if (!triple.is_array() || triple.size() != 3)
      throw ParseError("laurent: expected [exp, re, im] triples");
    p.add_term(triple[0].get<int>(), cplx(triple[1].get<double>(), triple[2].get<double>()));
  }
  return p;
}

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path);
  out << text;
}

}  // namespace polyhardy
