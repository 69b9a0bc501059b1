#pragma once

// Structured output: one JSON document per line. The first line is a schema
// header naming the command and its parameters; every further line is one
// record. Scalars carry their exact coefficient vector over Q(z_N) and a
// floating approximation.

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "brsym/characters.hpp"
#include "brsym/harness.hpp"
#include "brsym/obasis.hpp"

namespace brsym::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "brsym.report";
inline constexpr int kSchemaVersion = 1;

inline Json scalar(const Cyclotomic& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(c.get_str());
  const auto z = x.to_complex();
  return {{"order", x.order()}, {"coeffs", coeffs}, {"approx", {z.real(), z.imag()}}, {"text", x.to_string()}};
}

inline Json element(const DicyclicElement& g) { return to_string(g); }

inline Json elements(const std::vector<DicyclicElement>& gs) {
  Json out = Json::array();
  for (const auto& g : gs) out.push_back(to_string(g));
  return out;
}

inline Json character(const CharacterFn& phi) {
  Json out = {{"label", phi.label()}, {"hat", phi.brauer()}, {"degree", phi.degree()}};
  if (phi.brauer()) out["prime"] = phi.prime();
  return out;
}

inline Json header(const std::string& command, Json params) {
  return {{"schema", kSchema}, {"version", kSchemaVersion}, {"command", command}, {"params", std::move(params)}};
}

/// Character values on the class representatives in its domain.
inline Json character_row(const DicyclicGroup& G, const CharacterFn& phi,
                          const std::vector<std::vector<DicyclicElement>>& classes) {
  Json row = character(phi);
  Json values = Json::array();
  for (const auto& cls : classes) {
    const int x = G.index(cls.front());
    if (!phi.in_domain(x)) continue;
    values.push_back({{"class", to_string(cls.front())}, {"size", cls.size()}, {"value", scalar(phi(x))}});
  }
  row["values"] = values;
  return row;
}

inline Json orbit_record(const OrbitRecord& rec) {
  Json out = {{"representative", rec.representative},
              {"orbit_size", rec.orbit_size},
              {"stabilizer_size", rec.stabilizer_size},
              {"rank", rec.rank},
              {"has_obasis", rec.has_obasis},
              {"witness", elements(rec.witness)},
              {"search_nodes", rec.search_nodes},
              {"vertices", rec.vertex_count},
              {"edges", rec.edge_count}};
  out["formula_dimension"] = rec.formula_dimension ? Json(*rec.formula_dimension) : Json(nullptr);
  return out;
}

inline Json obasis_summary(const ObasisReport& r) {
  return {{"kind", to_string(r.kind)},     {"n", r.n},
          {"parameter", r.parameter},      {"character", r.character},
          {"hat", r.prime != 0},           {"prime", r.prime},
          {"verdict", r.verdict},          {"dimension", r.total_dimension},
          {"orbits", r.orbits.size()},     {"complete", r.complete}};
}

inline Json gram_matrix(const std::vector<std::vector<Cyclotomic>>& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(scalar(x));
    rows.push_back(r);
  }
  return rows;
}

inline Json point(const ParameterPoint& pt) {
  Json out = {{"n", pt.n}};
  if (pt.p) out["p"] = pt.p;
  out[pt.tensor ? "dimV" : "d"] = pt.space;
  out["index"] = pt.index;
  return out;
}

inline Json verification(const VerificationRecord& rec) {
  Json out = {{"theorem", to_string(rec.theorem)},
              {"point", point(rec.point)},
              {"character", rec.character},
              {"hat", rec.brauer},
              {"predicted", rec.predicted},
              {"computed", rec.computed},
              {"agree", rec.agree},
              {"detail", rec.detail}};
  if (rec.witness_orbit) out["witness_orbit"] = orbit_record(*rec.witness_orbit);
  if (rec.counterexample) {
    const auto& ce = *rec.counterexample;
    out["counterexample"] = {{"representative", ce.representative},
                             {"translates", elements(ce.translates)},
                             {"rank", ce.rank},
                             {"has_obasis", ce.has_obasis},
                             {"search_nodes", ce.search_nodes},
                             {"gram", gram_matrix(ce.gram)}};
  }
  return out;
}

inline void write_line(std::ostream& os, const Json& j) { os << j.dump() << '\n'; }

}  // namespace brsym::report
