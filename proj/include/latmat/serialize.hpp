#pragma once

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latmat/builders.hpp"
#include "latmat/drsubmod.hpp"
#include "latmat/exchange.hpp"
#include "latmat/lattice.hpp"
#include "latmat/optimize.hpp"
#include "latmat/report.hpp"
#include "latmat/supermatroid.hpp"
#include "latmat/theorems.hpp"

namespace latmat {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Lattice: {"elements": [...], "covers": [[lower, upper], ...]}

inline json lattice_to_json(const lattice& L) {
  json j;
  j["elements"] = json::array();
  for (const auto& name : L.names()) j["elements"].push_back(name);
  j["covers"] = json::array();
  for (const auto& [lo, hi] : L.cover_pairs())
    j["covers"].push_back(json::array({L.name(lo), L.name(hi)}));
  return j;
}

inline lattice lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    throw error(errc::parse_error, "lattice JSON needs \"elements\" and \"covers\"");
  std::vector<std::string> elements;
  for (const auto& e : j.at("elements")) {
    if (!e.is_string()) throw error(errc::parse_error, "element identifiers must be strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw error(errc::parse_error, "each cover must be a [lower, upper] string pair");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return lattice::build(std::move(elements), covers);
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::io_error, "cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw error(errc::parse_error, "malformed JSON in " + path);
  return j;
}

inline void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw error(errc::io_error, "cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

inline lattice load_lattice(const std::string& path) {
  return lattice_from_json(load_json_file(path));
}

inline void save_lattice(const lattice& L, const std::string& path) {
  save_json_file(path, lattice_to_json(L));
}

// ---------------------------------------------------------------------------
// Element sets and functions

inline json members_to_json(const lattice& L, const std::vector<elem>& xs) {
  json j = json::array();
  for (elem x : xs) j.push_back(L.name(x));
  return j;
}

inline std::vector<elem> members_from_json(const lattice& L, const json& j) {
  if (!j.is_array()) throw error(errc::parse_error, "expected a JSON array of element names");
  std::vector<elem> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw error(errc::parse_error, "element names must be strings");
    out.push_back(L.index_of(e.get<std::string>()));
  }
  return out;
}

inline json rank_to_json(const rank_fn& r) {
  json j = json::object();
  for (elem x = 0; x < r.lat().size(); ++x) j[r.lat().name(x)] = r.at(x);
  return j;
}

inline rank_fn rank_from_json(const lattice& L, const json& j) {
  if (!j.is_object()) throw error(errc::parse_error, "rank JSON must be an object");
  std::vector<int> values(L.size(), 0);
  std::vector<char> seen(L.size(), 0);
  for (const auto& [key, val] : j.items()) {
    elem x = L.index_of(key);
    values[x] = val.get<int>();
    seen[x] = 1;
  }
  for (elem x = 0; x < L.size(); ++x)
    if (!seen[x]) throw error(errc::parse_error, "rank value missing for " + L.name(x));
  return rank_fn(L, std::move(values));
}

inline json fn_to_json(const lattice_fn& f) {
  json vals = json::object();
  for (elem x = 0; x < f.lat().size(); ++x) vals[f.lat().name(x)] = to_string(f.at(x));
  return json{{"values", vals}};
}

inline lattice_fn fn_from_json(const lattice& L, const json& j) {
  const json& vals = (j.is_object() && j.contains("values")) ? j.at("values") : j;
  if (!vals.is_object()) throw error(errc::parse_error, "function JSON must map elements to values");
  std::vector<rat> values(L.size());
  std::vector<char> seen(L.size(), 0);
  for (const auto& [key, val] : vals.items()) {
    elem x = L.index_of(key);
    if (val.is_string())
      values[x] = parse_rat(val.get<std::string>());
    else if (val.is_number_integer())
      values[x] = rat(val.get<long long>());
    else
      throw error(errc::parse_error, "function values must be \"p/q\" strings or integers");
    seen[x] = 1;
  }
  for (elem x = 0; x < L.size(); ++x)
    if (!seen[x]) throw error(errc::parse_error, "function value missing for " + L.name(x));
  return lattice_fn(L, std::move(values));
}

// ---------------------------------------------------------------------------
// Reports

inline json report_to_json(const axiom_report& rep) {
  json j;
  j["axiom"] = rep.axiom;
  j["verdict"] = rep.verdict;
  j["clauses"] = json::array();
  for (const auto& c : rep.clauses) {
    json cj;
    cj["id"] = c.id;
    cj["verdict"] = c.verdict;
    cj["witness"] = json::object();
    for (const auto& [k, v] : c.witness) cj["witness"][k] = v;
    j["clauses"].push_back(std::move(cj));
  }
  return j;
}

inline json trace_to_json(const lattice& L, const greedy_trace& t) {
  json j;
  j["steps"] = json::array();
  for (const auto& s : t.steps)
    j["steps"].push_back(json{{"chosen", L.name(s.chosen)},
                              {"candidates", s.candidates},
                              {"value", to_string(s.value)}});
  j["final"] = L.name(t.final_elem);
  j["final_value"] = to_string(t.final_value);
  return j;
}

inline json approximation_to_json(const lattice& L, const approximation_record& rec) {
  json j;
  j["trace"] = trace_to_json(L, rec.trace);
  j["greedy_value"] = to_string(rec.greedy_value);
  j["optimum_elem"] = L.name(rec.optimum_elem);
  j["optimum"] = to_string(rec.optimum);
  j["ratio"] = to_string(rec.ratio);
  if (rec.curvature_value) j["curvature"] = to_string(*rec.curvature_value);
  return j;
}

inline json exchange_witness_to_json(const lattice& L, const exchange_witness& w) {
  json j;
  j["w"] = L.name(w.w);
  j["per_w_under"] = json::array();
  for (const auto& pu : w.per_w_under) {
    json pj;
    pj["w_under"] = L.name(pu.w_under);
    pj["Y_prime"] = L.name(pu.y_prime);
    pj["per_y"] = json::array();
    for (const auto& py : pu.per_y) {
      json yj;
      yj["y"] = L.name(py.y);
      yj["y_under"] = L.name(py.y_under);
      yj["v"] = L.name(py.v);
      yj["v_under_set"] = members_to_json(L, py.v_under_set);
      pj["per_y"].push_back(std::move(yj));
    }
    j["per_w_under"].push_back(std::move(pj));
  }
  return j;
}

inline json suite_to_json(const suite_result& s) {
  json j;
  j["suite"] = s.suite;
  j["cases"] = s.cases;
  j["ok"] = s.ok();
  j["discrepancies"] = json::array();
  for (const auto& d : s.discrepancies) j["discrepancies"].push_back(d);
  return j;
}

// ---------------------------------------------------------------------------
// Corpus entries: {"name": ..., "lattice": {...}, "ideal": [...],
// "rank": {...}, "claims": {...}}

inline json corpus_to_json(const corpus_entry& e) {
  json j;
  j["name"] = e.name;
  j["lattice"] = lattice_to_json(e.lat);
  if (!e.ideal.empty()) {
    j["ideal"] = json::array();
    for (const auto& s : e.ideal) j["ideal"].push_back(s);
  }
  if (!e.rank_values.empty()) {
    j["rank"] = json::object();
    for (const auto& [k, v] : e.rank_values) j["rank"][k] = v;
  }
  j["claims"] = json::object();
  for (const auto& [k, v] : e.claims) j["claims"][k] = v;
  return j;
}

inline corpus_entry corpus_from_json(const json& j) {
  corpus_entry e{j.at("name").get<std::string>(), lattice_from_json(j.at("lattice")), {}, {}, {}};
  if (j.contains("ideal"))
    for (const auto& s : j.at("ideal")) e.ideal.push_back(s.get<std::string>());
  if (j.contains("rank"))
    for (const auto& [k, v] : j.at("rank").items()) e.rank_values[k] = v.get<int>();
  if (j.contains("claims"))
    for (const auto& [k, v] : j.at("claims").items()) e.claims.emplace_back(k, v.get<bool>());
  return e;
}

}  // namespace latmat
