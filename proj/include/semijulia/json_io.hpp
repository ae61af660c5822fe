#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "semijulia/constructions.hpp"
#include "semijulia/topology.hpp"

namespace semijulia {

using Json = nlohmann::ordered_json;

// ---- files ----------------------------------------------------------------

inline Json parse_json_text(const std::string& text, const std::string& where = "input") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, where + ": " + e.what(), static_cast<double>(e.byte));
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

// ---- polynomials and generators -------------------------------------------

inline Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorKind::Parse, where + ": expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

/// Ascending-degree list of [re, im] pairs.
inline Json polynomial_to_json(const Polynomial& p) {
  Json a = Json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(complex_to_json(p.coeff(i)));
  return a;
}

inline Polynomial polynomial_from_json(const Json& j, const std::string& where = "coeffs") {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::Parse, where + ": expected a nonempty array");
  std::vector<Complex> c;
  for (std::size_t i = 0; i < j.size(); ++i)
    c.push_back(complex_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return Polynomial(std::move(c));
}

inline Json generators_to_json(const GeneratorSet& gens) {
  Json list = Json::array();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Generator& g = gens[i];
    Json e{{"name", g.name}, {"coeffs", polynomial_to_json(g.base)}};
    if (g.iterate != 1) e["iterate"] = g.iterate;
    list.push_back(std::move(e));
  }
  return Json{{"generators", std::move(list)}};
}

/// Accepts a bare generator document or any document with a "generators" key.
inline GeneratorSet generators_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
    throw Error(ErrorKind::Parse, "expected an object with a \"generators\" array");
  std::vector<Generator> out;
  const Json& list = j["generators"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "generators[" + std::to_string(i) + "]";
    const Json& e = list[i];
    if (!e.is_object() || !e.contains("coeffs"))
      throw Error(ErrorKind::Parse, where + ": missing \"coeffs\"");
    Generator g;
    g.name = e.value("name", "h" + std::to_string(i + 1));
    g.base = polynomial_from_json(e["coeffs"], where + ".coeffs");
    if (e.contains("iterate")) {
      if (!e["iterate"].is_number_integer() || e["iterate"].get<int>() < 1)
        throw Error(ErrorKind::Parse, where + ".iterate: expected a positive integer");
      g.iterate = e["iterate"].get<int>();
    }
    out.push_back(std::move(g));
  }
  return GeneratorSet(std::move(out));
}

inline Json construction_to_json(const ConstructionResult& c) {
  Json j = generators_to_json(c.gens);
  j["construction"] = c.name;
  Json consts = Json::object();
  for (const auto& [k, v] : c.derived_constants) consts[k] = v;
  j["derived_constants"] = std::move(consts);
  Json checks = Json::array();
  for (const auto& a : c.assumption_checks)
    checks.push_back({{"description", a.description}, {"pass", a.pass}, {"margin", a.margin}});
  j["assumption_checks"] = std::move(checks);
  j["view"] = {{"center", complex_to_json(c.view_center)}, {"half", c.view_half}};
  return j;
}

// ---- component reports ----------------------------------------------------

inline Json bbox_to_json(const BBox& b) { return Json::array({b.col0, b.row0, b.col1, b.row1}); }

inline Json components_to_json(const ComponentLabels& l, const OrderResult* order = nullptr,
                               const ExtremeComponents* ext = nullptr) {
  Json comps = Json::array();
  for (int id = 1; id <= l.count; ++id)
    comps.push_back({{"id", id}, {"pixels", l.pixels[id - 1]}, {"bbox", bbox_to_json(l.bbox[id - 1])}});
  Json j{{"grid", format_grid(l.grid)}, {"count", l.count}, {"components", std::move(comps)}};
  if (order) {
    j["order"] = order->order;
    j["total_order"] = order->total;
    if (order->violation)
      j["violation"] = {{"pair", Json::array({order->violation->first, order->violation->second})},
                        {"relation", to_string(*order->violation_relation)}};
  }
  if (ext) {
    j["jmin"] = ext->jmin;
    j["jmax"] = ext->jmax;
  }
  return j;
}

// ---- constructions by name ------------------------------------------------

/// {"name": "cantor" | "figure1" | "hmin-not" | "k-components" | "nothyp", ...params}.
/// Missing exponents of hmin-not and k-components are found by sweeping.
inline ConstructionResult construction_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("name") || !j["name"].is_string())
    throw Error(ErrorKind::Parse, "construction: expected an object with a \"name\" string");
  const std::string name = j["name"];
  auto num = [&](const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw Error(ErrorKind::Parse, "construction." + std::string(key) + ": expected a number");
    return j[key].get<double>();
  };
  auto integer = [&](const char* key, int fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer())
      throw Error(ErrorKind::Parse, "construction." + std::string(key) + ": expected an integer");
    return j[key].get<int>();
  };
  auto coeff = [&](const char* key, Complex fallback) {
    return j.contains(key) ? complex_from_json(j[key], "construction." + std::string(key)) : fallback;
  };
  if (name == "cantor")
    return cantor_circles(coeff("a", 1.0), coeff("b", 0.25), integer("k", 2), integer("j", 2),
                          integer("m1", 2), integer("m2", 2));
  if (name == "figure1") return figure1_semigroup(integer("depth", 12));
  if (name == "hmin-not") {
    const int m2 = integer("m2", 5);
    return hmin_not(m2, j.contains("m3") ? integer("m3", 0) : minimal_m3(m2));
  }
  if (name == "k-components") {
    const int k = integer("k", 2), m2 = integer("m2", 5);
    if (j.contains("m3") && j.contains("m4"))
      return k_components(k, m2, integer("m3", 0), integer("m4", 0));
    return k_components_auto(k, m2);
  }
  if (name == "nothyp") return nothyp_pair(num("c", 0.1), integer("m1", 1), integer("m2", 1));
  throw Error(ErrorKind::Parse, "construction: unknown name '" + name + "'");
}

}  // namespace semijulia
