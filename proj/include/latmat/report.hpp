#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "latmat/lattice.hpp"

namespace latmat {

/// One named element binding of a witness or counterexample.
using witness_binding = std::pair<std::string, std::string>;

struct clause_report {
  std::string id;
  bool verdict = true;
  std::vector<witness_binding> witness;  // element names, replayable
};

/// Structured verdict for one axiom: per-clause results, failing clauses
/// carry a concrete counterexample.
struct axiom_report {
  std::string axiom;
  bool verdict = true;
  std::vector<clause_report> clauses;

  clause_report& add(std::string id) {
    clauses.push_back({std::move(id), true, {}});
    return clauses.back();
  }

  void fail(clause_report& c, std::vector<witness_binding> w) {
    c.verdict = false;
    c.witness = std::move(w);
    verdict = false;
  }

  const clause_report* find(const std::string& id) const {
    for (const auto& c : clauses)
      if (c.id == id) return &c;
    return nullptr;
  }

  bool clause_ok(const std::string& id) const {
    const clause_report* c = find(id);
    return c != nullptr && c->verdict;
  }
};

inline std::vector<witness_binding> bind(const lattice& L,
                                         std::initializer_list<std::pair<const char*, elem>> xs) {
  std::vector<witness_binding> out;
  out.reserve(xs.size());
  for (const auto& [k, v] : xs) out.emplace_back(k, L.name(v));
  return out;
}

}  // namespace latmat
