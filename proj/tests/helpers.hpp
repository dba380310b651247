#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latmat/builders.hpp"
#include "latmat/lattice.hpp"

namespace testing {

using namespace latmat;

struct named_lattice {
  std::string name;
  lattice lat;
};

/// The small lattices every exhaustive property test runs over.
inline const std::vector<named_lattice>& corpus_lattices() {
  static const std::vector<named_lattice> all = [] {
    std::vector<named_lattice> v;
    v.push_back({"chain_3", chain(3)});
    v.push_back({"boolean_2", boolean_lattice(2)});
    v.push_back({"boolean_3", boolean_lattice(3)});
    v.push_back({"diamond_3", diamond(3)});
    v.push_back({"diamond_4", diamond(4)});
    v.push_back({"subspace_2_2", subspace_lattice(2, 2)});
    v.push_back({"subspace_2_3", subspace_lattice(2, 3)});
    v.push_back({"subspace_3_2", subspace_lattice(3, 2)});
    v.push_back({"m3_x_chain2", product(diamond(3), chain(2))});
    v.push_back({"m3_x_chain3", product(diamond(3), chain(3))});
    v.push_back({"fig3", corpus("fig3_i2l_gap").lat});
    v.push_back({"fig4", corpus("fig4_lld_rank_gap").lat});
    v.push_back({"fig6", corpus("fig6_upward_gap").lat});
    v.push_back({"fig4_dual", dualize(corpus("fig4_lld_rank_gap").lat)});
    return v;
  }();
  return all;
}

inline std::vector<elem> by_names(const lattice& L, const std::vector<std::string>& names) {
  std::vector<elem> out;
  for (const auto& n : names) out.push_back(L.index_of(n));
  return out;
}

}  // namespace testing
