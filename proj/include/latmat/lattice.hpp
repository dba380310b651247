#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latmat/error.hpp"

namespace latmat {

using elem = int;

/// A finite lattice given by its elements and cover relation.
///
/// Elements are opaque strings; their position in the input list is the
/// canonical total order used for all tie-breaking. The full order, join,
/// meet and height tables are precomputed at construction, so every query
/// is a table lookup. Instances are immutable after construction and safe
/// to share between concurrent readers.
class lattice {
 public:
  /// Builds and validates a lattice from an element list and cover pairs
  /// (lower, upper). Throws latmat::error when the input has duplicate or
  /// unknown identifiers, is cyclic, lists a non-cover pair, lacks a unique
  /// bottom or top, or has a pair without a unique join or meet.
  static lattice build(std::vector<std::string> elements,
                       const std::vector<std::pair<std::string, std::string>>& covers) {
    lattice L;
    L.names_ = std::move(elements);
    const int n = static_cast<int>(L.names_.size());
    if (n == 0) throw error(errc::not_a_lattice, "empty element list");
    for (int i = 0; i < n; ++i) {
      if (!L.index_.emplace(L.names_[i], i).second)
        throw error(errc::duplicate_element, L.names_[i]);
    }
    std::vector<std::pair<elem, elem>> cov;
    cov.reserve(covers.size());
    for (const auto& [lo, hi] : covers)
      cov.emplace_back(L.index_of(lo), L.index_of(hi));
    L.init(cov);
    return L;
  }

  static lattice build_indexed(std::vector<std::string> names,
                               const std::vector<std::pair<elem, elem>>& covers) {
    lattice L;
    L.names_ = std::move(names);
    const int n = static_cast<int>(L.names_.size());
    if (n == 0) throw error(errc::not_a_lattice, "empty element list");
    for (int i = 0; i < n; ++i) {
      if (!L.index_.emplace(L.names_[i], i).second)
        throw error(errc::duplicate_element, L.names_[i]);
    }
    for (const auto& [lo, hi] : covers)
      if (lo < 0 || lo >= n || hi < 0 || hi >= n)
        throw error(errc::unknown_element, "cover index out of range");
    L.init(covers);
    return L;
  }

  int size() const { return static_cast<int>(names_.size()); }

  elem index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw error(errc::unknown_element, std::string(name));
    return it->second;
  }

  const std::string& name(elem x) const {
    check(x);
    return names_[x];
  }

  const std::vector<std::string>& names() const { return names_; }

  bool leq(elem x, elem y) const { return leq_[static_cast<size_t>(x) * size() + y] != 0; }
  bool lt(elem x, elem y) const { return x != y && leq(x, y); }
  bool comparable(elem x, elem y) const { return leq(x, y) || leq(y, x); }

  /// x is covered by y (x precedes y with nothing strictly between).
  bool covers(elem x, elem y) const { return cover_[static_cast<size_t>(x) * size() + y] != 0; }

  elem join(elem x, elem y) const {
    check(x);
    check(y);
    return join_[static_cast<size_t>(x) * size() + y];
  }

  elem meet(elem x, elem y) const {
    check(x);
    check(y);
    return meet_[static_cast<size_t>(x) * size() + y];
  }

  /// Height: length of the longest chain from bottom to x.
  int height(elem x) const {
    check(x);
    return height_[x];
  }

  elem bottom() const { return bottom_; }
  elem top() const { return top_; }

  const std::vector<elem>& join_irreducibles() const { return ji_; }
  bool is_join_irreducible(elem x) const { return ji_mask_[x] != 0; }

  /// adm(x): join-irreducible a with x ∧ a covered by a.
  const std::vector<elem>& admissibles(elem x) const {
    check(x);
    return adm_[x];
  }

  /// coex(x): join-irreducible p with x ∨ p covering x.
  const std::vector<elem>& coextremes(elem x) const {
    check(x);
    return coex_[x];
  }

  const std::vector<elem>& upper_covers(elem x) const {
    check(x);
    return up_cov_[x];
  }

  const std::vector<elem>& lower_covers(elem x) const {
    check(x);
    return low_cov_[x];
  }

  const std::vector<std::pair<elem, elem>>& cover_pairs() const { return cover_pairs_; }

  /// x1 and x2 are congruent mod y when x1 ∨ y = x2 ∨ y.
  bool congruent_mod(elem x1, elem x2, elem y) const { return join(x1, y) == join(x2, y); }

  std::vector<elem> downset(elem x) const {
    std::vector<elem> out;
    for (elem z = 0; z < size(); ++z)
      if (leq(z, x)) out.push_back(z);
    return out;
  }

  std::vector<elem> upset(elem x) const {
    std::vector<elem> out;
    for (elem z = 0; z < size(); ++z)
      if (leq(x, z)) out.push_back(z);
    return out;
  }

  /// Longest/shortest maximal-chain lengths from x to every z ≥ x.
  /// Entries for z with z ≥ x not holding are -1.
  void chain_lengths_from(elem x, std::vector<int>& longest, std::vector<int>& shortest) const {
    const int n = size();
    longest.assign(n, -1);
    shortest.assign(n, -1);
    longest[x] = shortest[x] = 0;
    for (elem z : topo_) {
      if (longest[z] < 0) continue;
      for (elem u : up_cov_[z]) {
        if (longest[u] < longest[z] + 1) longest[u] = longest[z] + 1;
        if (shortest[u] < 0 || shortest[u] > shortest[z] + 1) shortest[u] = shortest[z] + 1;
      }
    }
  }

 private:
  void check(elem x) const {
    if (x < 0 || x >= size()) throw error(errc::unknown_element, "index " + std::to_string(x));
  }

  void init(const std::vector<std::pair<elem, elem>>& cover_input) {
    const int n = size();
    const size_t nn = static_cast<size_t>(n) * n;
    cover_.assign(nn, 0);
    for (const auto& [lo, hi] : cover_input) {
      if (lo == hi) throw error(errc::cycle_detected, names_[lo] + " covers itself");
      auto& slot = cover_[static_cast<size_t>(lo) * n + hi];
      if (slot) throw error(errc::redundant_cover, "duplicate cover " + names_[lo] + " < " + names_[hi]);
      slot = 1;
    }
    up_cov_.assign(n, {});
    low_cov_.assign(n, {});
    std::vector<int> indeg(n, 0);
    for (const auto& [lo, hi] : cover_input) {
      up_cov_[lo].push_back(hi);
      low_cov_[hi].push_back(lo);
      ++indeg[hi];
    }
    for (auto& v : up_cov_) std::sort(v.begin(), v.end());
    for (auto& v : low_cov_) std::sort(v.begin(), v.end());

    // Topological order (Kahn); detects cycles.
    topo_.clear();
    topo_.reserve(n);
    std::vector<int> deg = indeg;
    std::vector<elem> queue;
    for (elem x = 0; x < n; ++x)
      if (deg[x] == 0) queue.push_back(x);
    for (size_t head = 0; head < queue.size(); ++head) {
      elem x = queue[head];
      topo_.push_back(x);
      for (elem u : up_cov_[x])
        if (--deg[u] == 0) queue.push_back(u);
    }
    if (static_cast<int>(topo_.size()) != n)
      throw error(errc::cycle_detected, "cover relation contains a cycle");

    // Reflexive-transitive closure of the covers.
    leq_.assign(nn, 0);
    for (elem x = 0; x < n; ++x) leq_[static_cast<size_t>(x) * n + x] = 1;
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
      elem x = *it;
      auto* row = &leq_[static_cast<size_t>(x) * n];
      for (elem u : up_cov_[x]) {
        const auto* urow = &leq_[static_cast<size_t>(u) * n];
        for (elem z = 0; z < n; ++z) row[z] |= urow[z];
      }
    }

    // The covers must be the transitive reduction of the order they generate.
    for (const auto& [lo, hi] : cover_input)
      for (elem z = 0; z < n; ++z)
        if (z != lo && z != hi && leq(lo, z) && leq(z, hi))
          throw error(errc::redundant_cover,
                      names_[lo] + " < " + names_[z] + " < " + names_[hi]);

    // Unique bottom and top.
    bottom_ = top_ = -1;
    for (elem x = 0; x < n; ++x) {
      if (low_cov_[x].empty()) {
        if (bottom_ >= 0) throw error(errc::no_unique_bottom, names_[bottom_] + ", " + names_[x]);
        bottom_ = x;
      }
      if (up_cov_[x].empty()) {
        if (top_ >= 0) throw error(errc::no_unique_top, names_[top_] + ", " + names_[x]);
        top_ = x;
      }
    }

    // Heights: longest chain from bottom.
    height_.assign(n, -1);
    height_[bottom_] = 0;
    for (elem x : topo_) {
      if (height_[x] < 0) continue;
      for (elem u : up_cov_[x]) height_[u] = std::max(height_[u], height_[x] + 1);
    }
    for (elem x = 0; x < n; ++x)
      if (height_[x] < 0)
        throw error(errc::no_unique_bottom, names_[x] + " not above bottom");

    // Join and meet tables. The least upper bound, when it exists, is the
    // unique minimum-height element of the upper-bound set.
    join_.assign(nn, -1);
    meet_.assign(nn, -1);
    std::vector<elem> bounds;
    for (elem x = 0; x < n; ++x) {
      for (elem y = x; y < n; ++y) {
        bounds.clear();
        for (elem z = 0; z < n; ++z)
          if (leq(x, z) && leq(y, z)) bounds.push_back(z);
        elem cand = least_of(bounds);
        if (cand < 0)
          throw error(errc::not_a_lattice,
                      "(" + names_[x] + ", " + names_[y] + ") no unique join");
        join_[static_cast<size_t>(x) * n + y] = join_[static_cast<size_t>(y) * n + x] = cand;

        bounds.clear();
        for (elem z = 0; z < n; ++z)
          if (leq(z, x) && leq(z, y)) bounds.push_back(z);
        cand = greatest_of(bounds);
        if (cand < 0)
          throw error(errc::not_a_lattice,
                      "(" + names_[x] + ", " + names_[y] + ") no unique meet");
        meet_[static_cast<size_t>(x) * n + y] = meet_[static_cast<size_t>(y) * n + x] = cand;
      }
    }

    cover_pairs_.assign(cover_input.begin(), cover_input.end());
    std::sort(cover_pairs_.begin(), cover_pairs_.end());

    // Join-irreducibles: exactly one lower cover (bottom excluded).
    ji_.clear();
    ji_mask_.assign(n, 0);
    for (elem x = 0; x < n; ++x)
      if (x != bottom_ && low_cov_[x].size() == 1) {
        ji_.push_back(x);
        ji_mask_[x] = 1;
      }

    adm_.assign(n, {});
    coex_.assign(n, {});
    for (elem x = 0; x < n; ++x) {
      for (elem a : ji_) {
        if (covers(meet(x, a), a)) adm_[x].push_back(a);
        if (covers(x, join(x, a))) coex_[x].push_back(a);
      }
    }
  }

  elem least_of(const std::vector<elem>& set) const {
    if (set.empty()) return -1;
    elem best = set[0];
    for (elem z : set)
      if (height_[z] < height_[best]) best = z;
    for (elem z : set)
      if (!leq(best, z)) return -1;
    return best;
  }

  elem greatest_of(const std::vector<elem>& set) const {
    if (set.empty()) return -1;
    elem best = set[0];
    for (elem z : set)
      if (height_[z] > height_[best]) best = z;
    for (elem z : set)
      if (!leq(z, best)) return -1;
    return best;
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, elem> index_;
  std::vector<char> leq_;
  std::vector<char> cover_;
  std::vector<elem> join_;
  std::vector<elem> meet_;
  std::vector<int> height_;
  std::vector<elem> topo_;
  std::vector<std::vector<elem>> up_cov_;
  std::vector<std::vector<elem>> low_cov_;
  std::vector<std::pair<elem, elem>> cover_pairs_;
  std::vector<elem> ji_;
  std::vector<char> ji_mask_;
  std::vector<std::vector<elem>> adm_;
  std::vector<std::vector<elem>> coex_;
  elem bottom_ = -1;
  elem top_ = -1;
};

struct classification_flags {
  bool distributive = false;
  bool modular = false;
  bool lower_semimodular = false;
  bool upper_semimodular = false;
  bool lower_locally_modular = false;
  bool lower_locally_distributive = false;
  bool atomic = false;
  bool graded = false;
};

namespace detail {

inline bool is_lower_semimodular(const lattice& L) {
  const int n = L.size();
  for (elem x = 0; x < n; ++x)
    for (elem y = 0; y < n; ++y)
      if (L.covers(x, L.join(x, y)) && !L.covers(L.meet(x, y), y)) return false;
  return true;
}

inline bool is_upper_semimodular(const lattice& L) {
  const int n = L.size();
  for (elem x = 0; x < n; ++x)
    for (elem y = 0; y < n; ++y)
      if (L.covers(L.meet(x, y), x) && !L.covers(y, L.join(x, y))) return false;
  return true;
}

inline bool is_distributive(const lattice& L) {
  const int n = L.size();
  for (elem x = 0; x < n; ++x)
    for (elem y = 0; y < n; ++y)
      for (elem z = y; z < n; ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return false;
  return true;
}

inline bool is_graded(const lattice& L) {
  const int n = L.size();
  std::vector<int> longest, shortest;
  for (elem x = 0; x < n; ++x) {
    L.chain_lengths_from(x, longest, shortest);
    for (elem y = 0; y < n; ++y)
      if (longest[y] >= 0 && longest[y] != shortest[y]) return false;
  }
  return true;
}

}  // namespace detail

/// Sublattice {z : a ≤ z ≤ b} with the induced covers.
inline lattice interval(const lattice& L, elem a, elem b) {
  if (!L.leq(a, b))
    throw error(errc::not_comparable, L.name(a) + " is not below " + L.name(b));
  std::vector<elem> members;
  std::vector<int> pos(L.size(), -1);
  for (elem z = 0; z < L.size(); ++z)
    if (L.leq(a, z) && L.leq(z, b)) {
      pos[z] = static_cast<int>(members.size());
      members.push_back(z);
    }
  std::vector<std::string> names;
  names.reserve(members.size());
  for (elem z : members) names.push_back(L.name(z));
  std::vector<std::pair<elem, elem>> covers;
  for (const auto& [lo, hi] : L.cover_pairs())
    if (pos[lo] >= 0 && pos[hi] >= 0) covers.emplace_back(pos[lo], pos[hi]);
  return lattice::build_indexed(std::move(names), covers);
}

inline classification_flags classify(const lattice& L) {
  classification_flags f;
  f.lower_semimodular = detail::is_lower_semimodular(L);
  f.upper_semimodular = detail::is_upper_semimodular(L);
  f.modular = f.lower_semimodular && f.upper_semimodular;
  f.distributive = detail::is_distributive(L);
  f.graded = detail::is_graded(L);

  f.atomic = true;
  const auto& ji = L.join_irreducibles();
  for (size_t i = 0; i < ji.size() && f.atomic; ++i)
    for (size_t j = i + 1; j < ji.size(); ++j)
      if (L.comparable(ji[i], ji[j])) {
        f.atomic = false;
        break;
      }

  // Lower-local flags: X⁻ is the meet of the lower covers of X; the
  // interval [X⁻, X] must be modular (resp. distributive) for every X.
  f.lower_locally_modular = true;
  f.lower_locally_distributive = true;
  for (elem x = 0; x < L.size(); ++x) {
    const auto& lows = L.lower_covers(x);
    if (lows.empty()) continue;  // bottom: one-element interval
    elem lo = lows[0];
    for (elem c : lows) lo = L.meet(lo, c);
    lattice iv = interval(L, lo, x);
    if (f.lower_locally_modular &&
        !(detail::is_lower_semimodular(iv) && detail::is_upper_semimodular(iv)))
      f.lower_locally_modular = false;
    if (f.lower_locally_distributive && !detail::is_distributive(iv))
      f.lower_locally_distributive = false;
    if (!f.lower_locally_modular && !f.lower_locally_distributive) break;
  }
  return f;
}

inline bool is_modular(const lattice& L) {
  return detail::is_lower_semimodular(L) && detail::is_upper_semimodular(L);
}

/// Order reversal: covers flipped, join and meet swapped, heights recomputed.
/// Element identifiers and their canonical order are kept.
inline lattice dualize(const lattice& L) {
  std::vector<std::pair<elem, elem>> covers;
  covers.reserve(L.cover_pairs().size());
  for (const auto& [lo, hi] : L.cover_pairs()) covers.emplace_back(hi, lo);
  return lattice::build_indexed(L.names(), covers);
}

/// Direct product with componentwise order. Element (x, y) is named
/// "(x,y)"; heights are additive.
inline lattice product(const lattice& A, const lattice& B) {
  const int nb = B.size();
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(A.size()) * nb);
  for (elem x = 0; x < A.size(); ++x)
    for (elem y = 0; y < nb; ++y)
      names.push_back("(" + A.name(x) + "," + B.name(y) + ")");
  std::vector<std::pair<elem, elem>> covers;
  for (elem x = 0; x < A.size(); ++x)
    for (elem y = 0; y < nb; ++y) {
      for (elem u : A.upper_covers(x)) covers.emplace_back(x * nb + y, u * nb + y);
      for (elem v : B.upper_covers(y)) covers.emplace_back(x * nb + y, x * nb + v);
    }
  return lattice::build_indexed(std::move(names), covers);
}

/// All unordered triples of pairwise-incomparable join-irreducibles with
/// equal pairwise joins. Requires a modular lattice.
inline std::vector<std::array<elem, 3>> collinearity_triples(const lattice& L) {
  if (!is_modular(L)) throw error(errc::not_modular, "collinearity needs a modular lattice");
  const auto& ji = L.join_irreducibles();
  std::vector<std::array<elem, 3>> out;
  for (size_t i = 0; i < ji.size(); ++i)
    for (size_t j = i + 1; j < ji.size(); ++j) {
      if (L.comparable(ji[i], ji[j])) continue;
      elem pq = L.join(ji[i], ji[j]);
      for (size_t k = j + 1; k < ji.size(); ++k) {
        if (L.comparable(ji[i], ji[k]) || L.comparable(ji[j], ji[k])) continue;
        if (L.join(ji[j], ji[k]) == pq && L.join(ji[i], ji[k]) == pq)
          out.push_back({ji[i], ji[j], ji[k]});
      }
    }
  return out;
}

}  // namespace latmat
