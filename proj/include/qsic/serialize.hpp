#pragma once

// JSON encodings. Every rational is written as [num, den]; keys come out
// sorted (nlohmann::json objects are ordered maps), so output is stable.

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "qsic/combinat.hpp"
#include "qsic/error.hpp"
#include "qsic/fraccolor.hpp"
#include "qsic/rational.hpp"
#include "qsic/rays.hpp"
#include "qsic/sicval.hpp"
#include "qsic/xgraph.hpp"

namespace qsic {

using json = nlohmann::json;

namespace detail {
inline json integer_json(const BigInt& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}
inline BigInt integer_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  fail(ErrorKind::invalid_parameter, "expected an integer");
}
}  // namespace detail

inline json to_json(const Rational& r) { return json::array({detail::integer_json(r.get_num()), detail::integer_json(r.get_den())}); }

inline Rational rational_from_json(const json& j) {
  require(j.is_array() && j.size() == 2, "rational must be [num, den]");
  BigInt den = detail::integer_from_json(j[1]);
  require(den != 0, "zero denominator");
  Rational r(detail::integer_from_json(j[0]), den);
  r.canonicalize();
  return r;
}

inline json to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(to_json(r));
  return a;
}

/// Sparse map exponent -> [num, den] for one component.
inline json to_json(const CycNum& c) {
  json m = json::object();
  for (std::size_t t = 0; t < c.coeffs().size(); ++t)
    if (sgn(c.coeffs()[t]) != 0) m[std::to_string(t)] = to_json(c.coeffs()[t]);
  return m;
}

inline json to_json(const Ray& r) {
  json comps = json::array();
  for (const auto& c : r.components) comps.push_back(to_json(c));
  return {{"k", r.order},     {"class", to_string(r.cls)}, {"family", r.family},
          {"i", r.exp_i},     {"j", r.exp_j},              {"components", comps}};
}

inline Ray ray_from_json(const json& j) {
  Ray r;
  r.order = j.at("k").get<int>();
  require(r.order >= 1, "ray order must be >= 1");
  auto cls = parse_ray_class(j.at("class").get<std::string>());
  require(cls.has_value(), "unknown ray class");
  r.cls = *cls;
  r.family = j.at("family").get<int>();
  r.exp_i = j.at("i").get<int>();
  r.exp_j = j.at("j").get<int>();
  const auto& comps = j.at("components");
  require(comps.is_array() && comps.size() == 3, "ray needs 3 components");
  for (std::size_t a = 0; a < 3; ++a) {
    CycNum c(r.order);
    for (const auto& [exp, coeff] : comps[a].items()) c += CycNum::monomial(r.order, std::stol(exp), rational_from_json(coeff));
    r.components[a] = c;
  }
  return r;
}

inline json to_json(const RaySet& rs) {
  json rays = json::array();
  for (const auto& r : rs) rays.push_back(to_json(r));
  return {{"k", rs.order()}, {"n", rs.size()}, {"rays", rays}};
}

inline json to_json(const ExclusivityGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  json labels = json::array();
  for (const auto& l : g.labels()) labels.push_back(l.to_string());
  return {{"n", g.size()}, {"edges", edges}, {"labels", labels}};
}

inline VertexLabel label_from_string(const std::string& s) {
  VertexLabel l;
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t pos; (pos = s.find(':', start)) != std::string::npos; start = pos + 1) parts.push_back(s.substr(start, pos - start));
  parts.push_back(s.substr(start));
  require(parts.size() == 4, "label must be class:family:i:j");
  l.cls = parse_ray_class(parts[0]);
  l.family = std::stoi(parts[1]);
  l.i = std::stoi(parts[2]);
  l.j = std::stoi(parts[3]);
  return l;
}

inline ExclusivityGraph graph_from_json(const json& j) {
  const auto n = j.at("n").get<std::size_t>();
  ExclusivityGraph g(n);
  for (const auto& e : j.at("edges")) {
    require(e.is_array() && e.size() == 2, "edge must be [u, v]");
    const int u = e[0].get<int>(), v = e[1].get<int>();
    require(u >= 0 && v >= 0 && static_cast<std::size_t>(u) < n && static_cast<std::size_t>(v) < n, "edge endpoint out of range");
    g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  if (j.contains("labels")) {
    const auto& labels = j.at("labels");
    require(labels.size() == n, "label count does not match n");
    for (std::size_t v = 0; v < n; ++v) g.set_label(v, label_from_string(labels[v].get<std::string>()));
  }
  return g;
}

inline json to_json(const IndependenceResult& r) {
  return {{"value", to_json(r.value)},
          {"witness", r.witness},
          {"status", to_string(r.status)},
          {"upper_bound", to_json(r.upper_bound)},
          {"nodes_explored", r.nodes_explored}};
}

inline json to_json(const ColoringResult& r) {
  return {{"value", r.value}, {"assignment", r.assignment}, {"exact", r.exact}, {"lower_bound", r.lower_bound}};
}

/// Certificate: value, primal sets with weights, dual per vertex.
inline json to_json(const FractionalColoring& fc) {
  json primal = json::array();
  for (const auto& ws : fc.primal) primal.push_back({{"set", ws.set}, {"weight", to_json(ws.weight)}});
  return {{"value", to_json(fc.value)}, {"primal", primal},           {"dual", to_json(fc.dual)},
          {"status", to_string(fc.status)}, {"lower", to_json(fc.lower)}, {"upper", to_json(fc.upper)}};
}

inline FractionalColoring fractional_coloring_from_json(const json& j) {
  FractionalColoring fc;
  fc.value = rational_from_json(j.at("value"));
  for (const auto& p : j.at("primal")) fc.primal.push_back({p.at("set").get<std::vector<int>>(), rational_from_json(p.at("weight"))});
  for (const auto& d : j.at("dual")) fc.dual.push_back(rational_from_json(d));
  const std::string status = j.value("status", "exact");
  fc.status = status == "exact" ? ChifStatus::exact : ChifStatus::bounds;
  fc.lower = j.contains("lower") ? rational_from_json(j.at("lower")) : fc.value;
  fc.upper = j.contains("upper") ? rational_from_json(j.at("upper")) : fc.value;
  return fc;
}

inline json to_json(const AbColoring& ab) { return {{"a", ab.a}, {"b", ab.b}, {"colors", ab.colors}}; }

inline json to_json(const StructuralReport& rep) {
  json items = json::array();
  for (const auto& c : rep.checks)
    items.push_back({{"item", c.item}, {"description", c.description}, {"passed", c.passed}, {"counterexample", c.counterexample}});
  return items;
}

inline json to_json(const WeightedInequality& wi) {
  json j = {{"classical_bound", to_json(wi.classical)},
            {"quantum_numeric", wi.quantum_numeric},
            {"state_independent", wi.state_independent},
            {"violated", wi.violated}};
  j["quantum_value"] = wi.quantum_exact ? to_json(*wi.quantum_exact) : json(nullptr);
  j["violation_ratio"] = wi.violation_ratio ? to_json(*wi.violation_ratio) : json(nullptr);
  return j;
}

inline json to_json(const SicReport& rep) {
  json j;
  j["k"] = rep.k;
  j["n"] = rep.n;
  j["edges"] = rep.edges;
  j["n_over_3"] = to_json(Rational(Rational(static_cast<long>(rep.n)) / Rational(3)));
  j["alpha"] = to_json(rep.alpha);
  j["alpha_conjecture"] = to_json(rep.alpha_conjecture);
  j["constructed_set"] = rep.constructed_set;
  j["chif"] = rep.chif ? to_json(*rep.chif) : json(nullptr);
  j["chif_bounds"] = json::array({to_json(rep.chif_lower), to_json(rep.chif_upper)});
  j["quantum_value"] = rep.quantum_value ? to_json(*rep.quantum_value) : json(nullptr);
  j["rh_verdict"] = to_string(rep.rh_verdict);
  j["ineq_verdict"] = to_string(rep.ineq_verdict);
  j["verdict"] = to_string(rep.verdict);
  if (rep.weighted) {
    j["weighted"] = to_json(*rep.weighted);
    j["weighted"]["class_weights"] = json::array(
        {to_json(rep.weighted_class_weights[0]), to_json(rep.weighted_class_weights[1]), to_json(rep.weighted_class_weights[2])});
  } else {
    j["weighted"] = nullptr;
  }
  j["structure"] = to_json(rep.structure);
  json vt = json::array();
  for (auto [a, b] : rep.vanishing) vt.push_back({a, b});
  j["vanishing_triples"] = vt;
  j["notes"] = rep.notes;
  return j;
}

inline json to_json(const Tables& t) {
  json one = json::array(), two = json::array();
  for (const auto& r : t.table1)
    one.push_back({{"k", r.k}, {"n", r.n}, {"chi_f", to_json(r.chif.value)}, {"status", to_string(r.chif.status)},
                   {"lower", to_json(r.chif.lower)}, {"upper", to_json(r.chif.upper)}, {"certified", r.certified}});
  for (const auto& r : t.table2)
    two.push_back({{"k", r.k},
                   {"n", r.n},
                   {"alpha", to_json(r.alpha.value)},
                   {"alpha_upper", to_json(r.alpha.upper_bound)},
                   {"status", to_string(r.alpha.status)},
                   {"constructed", r.constructed_set.size()},
                   {"alpha_conjecture", to_json(r.alpha_conjecture)},
                   {"n_over_3", to_json(r.n_over_3)}});
  return {{"table1", one}, {"table2", two}};
}

}  // namespace qsic
