#pragma once

#include <stdexcept>
#include <string>

namespace latmat {

enum class errc {
  duplicate_element,
  unknown_element,
  cycle_detected,
  not_a_lattice,
  no_unique_bottom,
  no_unique_top,
  redundant_cover,
  not_comparable,
  not_modular,
  too_large,
  not_prime_power,
  unknown_corpus_entry,
  parse_error,
  io_error,
  invalid_ideal,
  rank_axiom_violated,
  not_order_reversing,
  precondition_violated,
  no_witness,
  construction_failed,
  empty_feasible_set,
  not_monotone,
};

inline const char* to_string(errc c) {
  switch (c) {
    case errc::duplicate_element: return "DuplicateElement";
    case errc::unknown_element: return "UnknownElement";
    case errc::cycle_detected: return "CycleDetected";
    case errc::not_a_lattice: return "NotALattice";
    case errc::no_unique_bottom: return "NoUniqueBottom";
    case errc::no_unique_top: return "NoUniqueTop";
    case errc::redundant_cover: return "RedundantCover";
    case errc::not_comparable: return "NotComparable";
    case errc::not_modular: return "NotModular";
    case errc::too_large: return "TooLarge";
    case errc::not_prime_power: return "NotPrimePower";
    case errc::unknown_corpus_entry: return "UnknownCorpusEntry";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
    case errc::invalid_ideal: return "InvalidIdeal";
    case errc::rank_axiom_violated: return "RankAxiomViolated";
    case errc::not_order_reversing: return "NotOrderReversing";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::no_witness: return "NoWitness";
    case errc::construction_failed: return "ConstructionFailed";
    case errc::empty_feasible_set: return "EmptyFeasibleSet";
    case errc::not_monotone: return "NotMonotone";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace latmat
