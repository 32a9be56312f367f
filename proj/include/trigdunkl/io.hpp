#pragma once

// JSON forms of the engine's values. Coefficients travel as RatFunc strings,
// so every serialized element parses back to an equal value.

#include <string>
#include <vector>

#include <json.hpp>

#include "coeff.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "rootsys.hpp"
#include "special.hpp"

namespace trigdunkl::io {

using json = nlohmann::ordered_json;

inline std::string rational_string(const Rational& q) { return q.get_str(); }

inline json to_json(const RatFunc& f) { return f.to_string(); }

inline json to_json(const HStarElement& v) {
  json a = json::array();
  for (const auto& c : v.c) a.push_back(c.to_string());
  return a;
}

inline json to_json(const LaurentElement& f) {
  json a = json::array();
  for (const auto& [w, c] : f.terms()) a.push_back({{"weight", w.c}, {"coeff", c.to_string()}});
  return a;
}

inline json to_json(const LocalizedElement& f) {
  json d = json::array();
  const auto& m = f.denom_exponents();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) d.push_back({{"root_index", i}, {"exponent", m[i]}});
  return {{"numerator", to_json(f.numerator())}, {"denom", d}};
}

inline json to_json(const RootSystem& rs) {
  json j;
  j["family"] = family_name(rs.spec().family);
  j["rank"] = rs.rank();
  j["cartan"] = rs.cartan();
  json roots = json::array();
  for (const auto& r : rs.positive_roots()) roots.push_back(r.simple);
  j["positive_roots"] = roots;
  json fw = json::array();
  for (const auto& v : rs.fundamental_weights()) {
    json row = json::array();
    for (const auto& q : v) row.push_back(rational_string(q));
    fw.push_back(row);
  }
  j["fundamental_weights"] = fw;
  return j;
}

inline json to_json(const SymTwoDual& s) {
  json a = json::array();
  for (const auto& row : s.m) {
    json r = json::array();
    for (const auto& c : row) r.push_back(c.to_string());
    a.push_back(r);
  }
  return a;
}

inline json to_json(const SpecialExponentReport& rep, const QuadraticVerdict* quad = nullptr,
                    const RelationsVerdict* rel = nullptr) {
  json j;
  j["type"] = family_name(rep.spec.family);
  j["rank"] = rep.spec.rank;
  json ex = json::array();
  for (const auto& mu : rep.exponents) ex.push_back(to_json(mu));
  j["exponents"] = ex;
  j["x"] = rep.x ? json(rep.x->to_string()) : json(nullptr);
  j["y"] = rep.y ? json(rep.y->to_string()) : json(nullptr);
  j["a"] = rep.a_value.to_string();
  if (quad || rel) {
    json v;
    if (quad) {
      v["quadratic"] = quad->per_exponent;
      v["exactness"] = quad->exactness;
    }
    if (rel) v["relations"] = rel->all();
    j["verdicts"] = v;
  }
  return j;
}

// --- parsing ------------------------------------------------------------------

inline LaurentElement laurent_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("Laurent element must be a JSON array");
  LaurentElement f;
  std::size_t rank = 0;
  for (const auto& t : j) {
    if (!t.contains("weight") || !t.contains("coeff")) throw ParseError("Laurent term needs weight and coeff");
    Weight w(t.at("weight").get<std::vector<long>>());
    if (rank == 0) rank = w.size();
    if (w.size() != rank) throw ParseError("Laurent terms of mixed rank");
    f.add_term(w, parse_ratfunc(t.at("coeff").get<std::string>()));
  }
  return f;
}

inline LocalizedElement localized_from_json(const RootSystem& rs, const json& j) {
  std::vector<int> m(rs.positive_roots().size(), 0);
  for (const auto& d : j.at("denom")) {
    auto idx = d.at("root_index").get<std::size_t>();
    if (idx >= m.size()) throw ParseError("root_index out of range");
    m[idx] = d.at("exponent").get<int>();
  }
  return LocalizedElement(rs, laurent_from_json(j.at("numerator")), m);
}

inline HStarElement hstar_from_json(const json& j) {
  std::vector<RatFunc> c;
  for (const auto& s : j) c.push_back(parse_ratfunc(s.get<std::string>()));
  return HStarElement(std::move(c));
}

/// Rebuilds exponents, x, y and a from a serialized report (spectral values are recomputed).
inline SpecialExponentReport report_from_json(const json& j, const CouplingVector& kvec) {
  RootSystemSpec spec = parse_type(j.at("type").get<std::string>() + std::to_string(j.at("rank").get<int>()));
  SpecialExponentReport rep;
  rep.spec = spec;
  for (const auto& e : j.at("exponents")) rep.exponents.push_back(hstar_from_json(e));
  if (!j.at("x").is_null()) rep.x = parse_ratfunc(j.at("x").get<std::string>());
  if (!j.at("y").is_null()) rep.y = parse_ratfunc(j.at("y").get<std::string>());
  rep.a_value = parse_ratfunc(j.at("a").get<std::string>());
  RootSystem rs = build_root_system(spec);
  HStarElement r = rho(rs, kvec);
  for (const auto& mu : rep.exponents) rep.spectral.push_back(mu + r);
  return rep;
}

inline bool same_report(const SpecialExponentReport& a, const SpecialExponentReport& b) {
  return a.spec == b.spec && a.exponents == b.exponents && a.x == b.x && a.y == b.y && a.a_value == b.a_value &&
         a.spectral == b.spectral;
}

}  // namespace trigdunkl::io
