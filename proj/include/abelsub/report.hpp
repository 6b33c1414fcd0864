#pragma once

// JSON and TSV serialization of analysis results. Every JSON document carries
// "schema": "abelsub/1".

#include <sstream>
#include <string>

#include <json.hpp>

#include "abelsub/abelian.hpp"
#include "abelsub/family.hpp"
#include "abelsub/structure.hpp"
#include "abelsub/transforms.hpp"

namespace abelsub::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "abelsub/1";

inline json document(const std::string& kind) { return json{{"schema", kSchema}, {"kind", kind}}; }

inline std::string corridor_tsv(const CorridorProfile& p) {
  std::ostringstream out;
  out << "n\tmin\tmax\n";
  for (std::size_t n = 1; n <= p.max_length(); ++n) out << n << '\t' << p.min_weight[n] << '\t' << p.max_weight[n] << '\n';
  return out.str();
}

inline json to_json(const CorridorProfile& p) {
  json rows = json::array();
  for (std::size_t n = 1; n <= p.max_length(); ++n) rows.push_back({n, p.min_weight[n], p.max_weight[n]});
  json j = document("corridor");
  j["provenance"] = to_string(p.provenance);
  if (!p.method.empty()) j["method"] = p.method;
  j["sample"] = p.sample_length;
  j["rows"] = rows;
  return j;
}

inline json to_json(const MembershipCertificate& c) {
  json j = document("membership");
  j["verdict"] = to_string(c.verdict);
  j["window"] = c.window;
  j["sample"] = c.sample;
  j["reference"] = to_string(c.reference);
  j["sound"] = c.sound;
  if (c.witness) {
    j["witness"] = {{"factor", c.witness->factor.str()}, {"position", c.witness->position}, {"length", c.witness->length},
                    {"weight", c.witness->weight}, {"allowed", {c.witness->allowed_min, c.witness->allowed_max}}};
  }
  return j;
}

inline json to_json(const FrequencyBounds& fb) {
  json j = document("frequency");
  j["provenance"] = to_string(fb.provenance);
  j["upper"] = to_string(fb.final_upper());
  j["lower"] = to_string(fb.final_lower());
  j["tolerance"] = to_string(fb.tolerance);
  j["uniform_frequency_plausible"] = fb.uniform_frequency_plausible;
  return j;
}

inline json to_json(const RauzyGraph& g) {
  json j = document("rauzy");
  j["order"] = g.order;
  json vs = json::array();
  for (const auto& v : g.vertices) vs.push_back(v.str());
  j["vertices"] = vs;
  json es = json::array();
  for (const auto& e : g.edges) es.push_back({g.vertices[e.from].str(), g.vertices[e.to].str(), e.factor.str()});
  j["edges"] = es;
  return j;
}

inline json to_json(const ShiftFactorization& sf) {
  json j = document("shift-factorization");
  j["pair"] = {sf.pair.x.str(), sf.pair.y.str()};
  j["middle"] = sf.middle.str();
  j["unbalanced_length"] = sf.unbalanced_length;
  j["shift_offset"] = sf.shift_offset;
  j["tokens"] = sf.tokenization.tokens.size();
  j["covered"] = sf.tokenization.covered;
  j["has_xx"] = sf.has_xx;
  j["has_yy"] = sf.has_yy;
  j["roundtrip"] = sf.roundtrip;
  return j;
}

/// Short digest of a window: length, weight and its first letters.
inline json digest(const FiniteWord& w) {
  return {{"length", w.size()}, {"weight", w.weight()}, {"head", w.prefix(32).str()}};
}

inline json to_json(const FamilyResult& r, const DistinctnessReport* dist = nullptr) {
  json j = document("family");
  j["seed"] = r.seed;
  j["seed_exchanged"] = r.seed_exchanged;
  j["seed_isolation_steps"] = r.seed_isolation_steps;
  json stages = json::array();
  for (const auto& s : r.stages) {
    json st;
    st["n"] = s.index;
    st["x"] = digest(s.x_window);
    st["y"] = digest(s.y_window);
    st["z"] = digest(s.z_window);
    st["psi"] = s.psi.render();
    st["phi"] = s.phi.render();
    st["pair"] = {s.pair.x.str(), s.pair.y.str()};
    st["unbalanced_middle"] = s.unbalanced_middle.str();
    st["exchanged"] = s.exchanged;
    st["isolation_steps"] = s.isolation_steps;
    st["pair_length"] = s.pair_length;
    st["composition_identity"] = s.composition_identity;
    st["preimage_has_00_11"] = s.preimage_has_00_11;
    st["ones_isolated"] = s.ones_isolated;
    if (s.image_vs_previous) st["image_vs_previous"] = to_string(s.image_vs_previous->verdict);
    stages.push_back(st);
  }
  j["stages"] = stages;
  if (r.failure) j["failure"] = *r.failure;
  if (dist) {
    json pairs = json::array();
    for (const auto& p : dist->pairs) {
      json pj{{"m", p.m}, {"n", p.n}, {"verdict", to_string(p.verdict)}, {"pair_length_grows", p.pair_length_grows},
              {"differ_at_min", p.differ_at_min}, {"differ_at_max", p.differ_at_max}};
      if (p.unbalanced_m) pj["unbalanced_m"] = *p.unbalanced_m;
      if (p.unbalanced_n) pj["unbalanced_n"] = *p.unbalanced_n;
      if (p.required_window) pj["required_window"] = p.required_window;
      if (!p.note.empty()) pj["note"] = p.note;
      pairs.push_back(pj);
    }
    j["distinctness"] = {{"all_distinct", dist->all_distinct}, {"pairs", pairs}};
  }
  return j;
}

inline json error_json(const std::string& category, const std::string& message) {
  json j = document("error");
  j["category"] = category;
  j["message"] = message;
  return j;
}

}  // namespace abelsub::report
