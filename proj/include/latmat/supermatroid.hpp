#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "latmat/drsubmod.hpp"
#include "latmat/lattice.hpp"
#include "latmat/report.hpp"

namespace latmat {

/// A downward-closed, non-empty subset of a lattice; the candidate
/// independent sets of a supermatroid. Closure is validated at construction.
class ideal_set {
 public:
  ideal_set(const lattice& L, std::vector<elem> members) : lat_(&L) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    members_ = std::move(members);
    if (members_.empty()) throw error(errc::invalid_ideal, "ideal must be non-empty");
    mask_.assign(L.size(), 0);
    for (elem x : members_) {
      L.name(x);  // bounds check
      mask_[x] = 1;
    }
    for (elem x : members_)
      for (elem z = 0; z < L.size(); ++z)
        if (L.leq(z, x) && !mask_[z])
          throw error(errc::invalid_ideal,
                      "not downward closed: " + L.name(z) + " below " + L.name(x));
  }

  static ideal_set from_predicate(const lattice& L, const std::function<bool(elem)>& pred) {
    std::vector<elem> m;
    for (elem x = 0; x < L.size(); ++x)
      if (pred(x)) m.push_back(x);
    return ideal_set(L, std::move(m));
  }

  const lattice& lat() const { return *lat_; }
  const std::vector<elem>& members() const { return members_; }
  bool contains(elem x) const { return mask_[x] != 0; }
  int size() const { return static_cast<int>(members_.size()); }

  /// Elements of the ideal that are ≤ x and maximal among those.
  std::vector<elem> maximal_below(elem x) const {
    std::vector<elem> below;
    for (elem m : members_)
      if (lat_->leq(m, x)) below.push_back(m);
    std::vector<elem> out;
    for (elem m : below) {
      bool maximal = true;
      for (elem other : below)
        if (other != m && lat_->leq(m, other)) {
          maximal = false;
          break;
        }
      if (maximal) out.push_back(m);
    }
    return out;
  }

  std::vector<elem> maximal_members() const { return maximal_below(lat_->top()); }

  bool operator==(const ideal_set& o) const { return members_ == o.members_; }

 private:
  const lattice* lat_;
  std::vector<elem> members_;
  std::vector<char> mask_;
};

/// Candidate base family: a plain element set; the antichain property is
/// what check_base decides.
class base_family {
 public:
  base_family(const lattice& L, std::vector<elem> members) : lat_(&L) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    members_ = std::move(members);
    mask_.assign(L.size(), 0);
    for (elem x : members_) {
      L.name(x);
      mask_[x] = 1;
    }
  }

  const lattice& lat() const { return *lat_; }
  const std::vector<elem>& members() const { return members_; }
  bool contains(elem x) const { return mask_[x] != 0; }

 private:
  const lattice* lat_;
  std::vector<elem> members_;
  std::vector<char> mask_;
};

/// Candidate dependent-set filter (complement of an ideal). Upward closure
/// and properness are what check_dependence decides; the empty filter is a
/// valid input.
class dependent_set {
 public:
  dependent_set(const lattice& L, std::vector<elem> members) : lat_(&L) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    members_ = std::move(members);
    mask_.assign(L.size(), 0);
    for (elem x : members_) {
      L.name(x);
      mask_[x] = 1;
    }
  }

  const lattice& lat() const { return *lat_; }
  const std::vector<elem>& members() const { return members_; }
  bool contains(elem x) const { return mask_[x] != 0; }

 private:
  const lattice* lat_;
  std::vector<elem> members_;
  std::vector<char> mask_;
};

/// Integer rank function, total over the lattice.
class rank_fn {
 public:
  rank_fn(const lattice& L, std::vector<int> values) : lat_(&L), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != L.size())
      throw error(errc::precondition_violated, "rank function not total");
  }

  const lattice& lat() const { return *lat_; }
  int at(elem x) const { return values_[x]; }
  const std::vector<int>& values() const { return values_; }

  lattice_fn as_lattice_fn() const {
    std::vector<rat> v(values_.size());
    for (size_t i = 0; i < values_.size(); ++i) v[i] = rat(values_[i]);
    return lattice_fn(*lat_, std::move(v));
  }

  bool operator==(const rank_fn& o) const { return values_ == o.values_; }

 private:
  const lattice* lat_;
  std::vector<int> values_;
};

// ---------------------------------------------------------------------------
// Height axiom

/// (H1) non-empty ideal (structural); (H2) for every X the maximal members
/// below X share one height.
inline axiom_report check_height(const lattice& L, const ideal_set& I) {
  axiom_report rep;
  rep.axiom = "height";
  rep.add("H1");  // holds by construction of ideal_set
  auto& h2 = rep.add("H2");
  for (elem x = 0; x < L.size() && h2.verdict; ++x) {
    std::vector<elem> maxs = I.maximal_below(x);
    for (size_t i = 1; i < maxs.size(); ++i)
      if (L.height(maxs[i]) != L.height(maxs[0])) {
        rep.fail(h2, bind(L, {{"X", x}, {"I1", maxs[0]}, {"I2", maxs[i]}}));
        break;
      }
  }
  return rep;
}

inline bool is_supermatroid(const lattice& L, const ideal_set& I) {
  return check_height(L, I).verdict;
}

// ---------------------------------------------------------------------------
// Independence axiom

enum class independence_variant { I2, I2l, I2w };

/// (I1) plus the chosen augmentation clause:
///   I2  — |I1| < |I2| admits J in the ideal with I1 < J ≤ I1 ∨ I2;
///   I2l — localized to |I1| + 1 = |I2| with I2 ≺ I1 ∨ I2;
///   I2w — I2 restricted to maximal I2.
inline axiom_report check_independence(const lattice& L, const ideal_set& I,
                                       independence_variant variant) {
  axiom_report rep;
  rep.axiom = "independence";
  rep.add("I1");
  const char* id = variant == independence_variant::I2    ? "I2"
                   : variant == independence_variant::I2l ? "I2l"
                                                          : "I2w";
  auto& c = rep.add(id);

  std::vector<char> is_max(L.size(), 0);
  if (variant == independence_variant::I2w)
    for (elem m : I.maximal_members()) is_max[m] = 1;

  auto has_augment = [&](elem i1, elem i2) {
    elem up = L.join(i1, i2);
    for (elem j : I.members())
      if (j != i1 && L.leq(i1, j) && L.leq(j, up)) return true;
    return false;
  };

  for (elem i1 : I.members()) {
    for (elem i2 : I.members()) {
      bool applies = false;
      switch (variant) {
        case independence_variant::I2:
          applies = L.height(i1) < L.height(i2);
          break;
        case independence_variant::I2l:
          applies = L.height(i1) + 1 == L.height(i2) && L.covers(i2, L.join(i1, i2));
          break;
        case independence_variant::I2w:
          applies = is_max[i2] && L.height(i1) < L.height(i2);
          break;
      }
      if (applies && !has_augment(i1, i2)) {
        rep.fail(c, bind(L, {{"I1", i1}, {"I2", i2}}));
        return rep;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Rank axiom

/// r(X) = max { |I| : I in the ideal, I ≤ X }.
inline rank_fn rank_of(const lattice& L, const ideal_set& I) {
  std::vector<int> values(L.size(), 0);
  for (elem x = 0; x < L.size(); ++x) {
    int best = 0;
    for (elem m : I.members())
      if (L.leq(m, x)) best = std::max(best, L.height(m));
    values[x] = best;
  }
  return rank_fn(L, std::move(values));
}

enum class rank_variant { R3_downward, R3u_upward, R3b_bidirectional, R3s_prime, R3p_sano };

inline const char* rank_variant_id(rank_variant v) {
  switch (v) {
    case rank_variant::R3_downward: return "R3";
    case rank_variant::R3u_upward: return "R3u";
    case rank_variant::R3b_bidirectional: return "R3b";
    case rank_variant::R3s_prime: return "R3s";
    case rank_variant::R3p_sano: return "R3'";
  }
  return "?";
}

/// (R1) r(⊥) = 0, (R2) cover increments in {0, 1}, plus the selected third
/// clause. The DR clauses delegate to the submodularity checkers; R3' is the
/// co-extreme augmentation search.
inline axiom_report check_rank(const lattice& L, const rank_fn& r, rank_variant variant,
                               const lattice* Ldual = nullptr) {
  axiom_report rep;
  rep.axiom = "rank";
  auto& r1 = rep.add("R1");
  if (r.at(L.bottom()) != 0) rep.fail(r1, bind(L, {{"bottom", L.bottom()}}));
  auto& r2 = rep.add("R2");
  for (const auto& [lo, hi] : L.cover_pairs()) {
    int d = r.at(hi) - r.at(lo);
    if (d != 0 && d != 1) {
      rep.fail(r2, bind(L, {{"Xlow", lo}, {"X", hi}}));
      break;
    }
  }

  auto& r3 = rep.add(rank_variant_id(variant));
  if (variant == rank_variant::R3p_sano) {
    for (elem x = 0; x < L.size() && r3.verdict; ++x) {
      if (r.at(x) != L.height(x)) continue;
      for (elem y = 0; y < L.size(); ++y) {
        if (!L.leq(x, y) || r.at(x) >= r.at(y)) continue;
        bool found = false;
        for (elem e : L.coextremes(x))
          if (L.leq(e, y) && r.at(L.join(x, e)) == r.at(x) + 1) {
            found = true;
            break;
          }
        if (!found) {
          rep.fail(r3, bind(L, {{"X", x}, {"Y", y}}));
          break;
        }
      }
    }
    return rep;
  }

  lattice_fn f = r.as_lattice_fn();
  axiom_report sub;
  switch (variant) {
    case rank_variant::R3_downward:
      sub = check_downward_dr(L, f);
      break;
    case rank_variant::R3u_upward:
      sub = Ldual ? check_upward_dr(L, *Ldual, f) : check_upward_dr(L, f);
      break;
    case rank_variant::R3b_bidirectional:
      sub = check_bidirectional_dr(L, f);
      break;
    case rank_variant::R3s_prime:
      sub = check_downward_dr_prime(L, f);
      break;
    default:
      break;
  }
  if (!sub.verdict) {
    for (const auto& c : sub.clauses)
      if (!c.verdict) {
        rep.fail(r3, c.witness);
        break;
      }
  }
  return rep;
}

/// The ideal {X : r(X) = |X|}; requires (R1) and (R2), under which it is
/// downward closed.
inline ideal_set ideal_from_rank(const lattice& L, const rank_fn& r) {
  axiom_report rep;
  rep.axiom = "rank";
  if (r.at(L.bottom()) != 0)
    throw error(errc::rank_axiom_violated, "(R1) fails");
  for (const auto& [lo, hi] : L.cover_pairs()) {
    int d = r.at(hi) - r.at(lo);
    if (d != 0 && d != 1)
      throw error(errc::rank_axiom_violated,
                  "(R2) fails at " + L.name(lo) + " < " + L.name(hi));
  }
  return ideal_set::from_predicate(L, [&](elem x) { return r.at(x) == L.height(x); });
}

// ---------------------------------------------------------------------------
// Bases

inline base_family bases_of(const lattice& L, const ideal_set& I) {
  return base_family(L, I.maximal_members());
}

inline ideal_set ideal_from_bases(const lattice& L, const base_family& B) {
  if (B.members().empty()) throw error(errc::invalid_ideal, "empty base family");
  return ideal_set::from_predicate(L, [&](elem x) {
    for (elem b : B.members())
      if (L.leq(x, b)) return true;
    return false;
  });
}

/// (B1) pairwise incomparability and (B2) the middle property: for all
/// comparable X ≤ Y with X below some base and Y above some base, a base
/// lies between them. On lower semimodular lattices also the same-height
/// consequence.
inline axiom_report check_base(const lattice& L, const base_family& B) {
  axiom_report rep;
  rep.axiom = "base";
  auto& b1 = rep.add("B1");
  const auto& M = B.members();
  for (size_t i = 0; i < M.size() && b1.verdict; ++i)
    for (size_t j = i + 1; j < M.size(); ++j)
      if (L.comparable(M[i], M[j])) {
        rep.fail(b1, bind(L, {{"B1", M[i]}, {"B2", M[j]}}));
        break;
      }

  auto& b2 = rep.add("B2");
  for (elem bb1 : M) {
    for (elem bb2 : M) {
      for (elem x = 0; x < L.size() && b2.verdict; ++x) {
        if (!L.leq(x, bb1)) continue;
        for (elem y = 0; y < L.size(); ++y) {
          if (!L.leq(bb2, y) || !L.leq(x, y)) continue;
          bool found = false;
          for (elem b : M)
            if (L.leq(x, b) && L.leq(b, y)) {
              found = true;
              break;
            }
          if (!found) {
            rep.fail(b2, bind(L, {{"B1", bb1}, {"B2", bb2}, {"X", x}, {"Y", y}}));
            break;
          }
        }
      }
      if (!b2.verdict) break;
    }
    if (!b2.verdict) break;
  }

  if (detail::is_lower_semimodular(L)) {
    auto& sh = rep.add("same_height");
    for (size_t i = 1; i < M.size(); ++i)
      if (L.height(M[i]) != L.height(M[0])) {
        rep.fail(sh, bind(L, {{"B1", M[0]}, {"B2", M[i]}}));
        break;
      }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Dependence axiom

/// (D1) proper filter; (D2) elimination; (D3) replacement. (D3) applies when
/// the open interval (X, X ∨ W) is a single element and that element is
/// dependent.
inline axiom_report check_dependence(const lattice& L, const dependent_set& D) {
  axiom_report rep;
  rep.axiom = "dependence";
  auto& d1 = rep.add("D1");
  if (static_cast<int>(D.members().size()) == L.size()) {
    rep.fail(d1, {});  // not proper
  } else {
    for (elem x : D.members()) {
      for (elem u : L.upper_covers(x))
        if (!D.contains(u)) {
          rep.fail(d1, bind(L, {{"D", x}, {"above", u}}));
          break;
        }
      if (!d1.verdict) break;
    }
  }

  auto& d2 = rep.add("D2");
  for (elem da : D.members()) {
    for (elem db : D.members()) {
      elem up = L.join(da, db);
      if (!L.covers(da, up) || !L.covers(db, up)) continue;
      elem lo = L.meet(da, db);
      for (elem z : L.lower_covers(up)) {
        if (z == da || z == db || L.leq(lo, z)) continue;
        bool ok = D.contains(z) || D.contains(lo);
        if (!ok) {
          for (elem i = 0; i < L.size(); ++i)
            if (!D.contains(i) && L.covers(lo, i) && L.covers(i, up)) {
              ok = true;
              break;
            }
        }
        if (!ok) {
          rep.fail(d2, bind(L, {{"D1", da}, {"D2", db}, {"Z", z}}));
          break;
        }
      }
      if (!d2.verdict) break;
    }
    if (!d2.verdict) break;
  }

  auto& d3 = rep.add("D3");
  for (elem x = 0; x < L.size() && d3.verdict; ++x) {
    for (elem w = 0; w < L.size(); ++w) {
      elem up = L.join(x, w);
      if (!L.covers(w, up)) continue;
      elem middle = -1;
      int count = 0;
      for (elem z = 0; z < L.size() && count < 2; ++z)
        if (z != x && z != up && L.leq(x, z) && L.leq(z, up)) {
          middle = z;
          ++count;
        }
      if (count != 1 || !D.contains(middle)) continue;
      if (!D.contains(x) && !D.contains(w)) {
        rep.fail(d3, bind(L, {{"X", x}, {"W", w}, {"Y", middle}}));
        break;
      }
    }
  }
  return rep;
}

inline dependent_set complement_of(const lattice& L, const ideal_set& I) {
  std::vector<elem> m;
  for (elem x = 0; x < L.size(); ++x)
    if (!I.contains(x)) m.push_back(x);
  return dependent_set(L, std::move(m));
}

// ---------------------------------------------------------------------------
// Dual supermatroid

/// True when bar is an automorphism of L or an anti-automorphism of L
/// (an order isomorphism L → L or L → L-reversed).
inline bool is_order_reversal_bar(const lattice& L, const std::vector<elem>& bar) {
  const int n = L.size();
  if (static_cast<int>(bar.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (elem x : bar) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  bool fwd = true, rev = true;
  for (elem x = 0; x < n && (fwd || rev); ++x)
    for (elem y = 0; y < n; ++y) {
      bool xy = L.leq(x, y);
      if (xy != L.leq(bar[x], bar[y])) fwd = false;
      if (xy != L.leq(bar[y], bar[x])) rev = false;
      if (!fwd && !rev) break;
    }
  return fwd || rev;
}

struct dual_result {
  lattice lat;                      // the order reversal of L, relabeled along bar
  std::vector<elem> base_members;   // {bar(B)} as indices into lat
};

/// Dual supermatroid: the order reversal of L relabeled along bar, carrying
/// the base family {bar(B)}. With the identity bar this is the literal order
/// reversal; with a self-duality map such as Boolean complement the dual is
/// realized on the original order. Applying the construction twice with an
/// involutive bar recovers the original.
inline dual_result dual_supermatroid(const lattice& L, const base_family& B,
                                     const std::vector<elem>* bar = nullptr) {
  std::vector<elem> id_bar;
  if (bar == nullptr) {
    id_bar.resize(L.size());
    for (elem x = 0; x < L.size(); ++x) id_bar[x] = x;
    bar = &id_bar;
  }
  if (!is_order_reversal_bar(L, *bar))
    throw error(errc::not_order_reversing, "bar is not an order-reversing bijection");
  std::vector<std::pair<elem, elem>> covers;
  covers.reserve(L.cover_pairs().size());
  for (const auto& [lo, hi] : L.cover_pairs()) covers.emplace_back((*bar)[hi], (*bar)[lo]);
  dual_result out{lattice::build_indexed(L.names(), covers), {}};
  out.base_members.reserve(B.members().size());
  for (elem b : B.members()) out.base_members.push_back((*bar)[b]);
  std::sort(out.base_members.begin(), out.base_members.end());
  return out;
}

/// r*(bar(X)) = r(X) + (|⊤| − |X|) − r(⊤), as a rank function on the dual
/// lattice. Requires r to be the rank function of a supermatroid on a
/// modular lattice.
inline rank_fn dual_rank_formula(const lattice& L, const lattice& Ldual, const rank_fn& r,
                                 const std::vector<elem>* bar = nullptr) {
  if (!is_modular(L))
    throw error(errc::precondition_violated, "dual rank formula needs a modular lattice");
  ideal_set I = ideal_from_rank(L, r);
  if (!check_height(L, I).verdict || !(rank_of(L, I) == r))
    throw error(errc::precondition_violated, "not the rank function of a supermatroid");
  std::vector<int> values(L.size(), 0);
  const int whole = L.height(L.top());
  const int rank_top = r.at(L.top());
  for (elem x = 0; x < L.size(); ++x) {
    elem image = bar ? (*bar)[x] : x;
    values[image] = r.at(x) + (whole - L.height(x)) - rank_top;
  }
  return rank_fn(Ldual, std::move(values));
}

// ---------------------------------------------------------------------------
// Enumeration

/// Calls fn for every non-empty antichain, in lexicographic order of the
/// ascending index sequence.
template <typename Fn>
void for_each_antichain(const lattice& L, Fn&& fn) {
  std::vector<elem> cur;
  auto rec = [&](auto&& self, elem start) -> void {
    for (elem x = start; x < L.size(); ++x) {
      bool ok = true;
      for (elem c : cur)
        if (L.comparable(c, x)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(x);
      fn(static_cast<const std::vector<elem>&>(cur));
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

inline ideal_set downward_closure(const lattice& L, const std::vector<elem>& maximals) {
  return ideal_set::from_predicate(L, [&](elem x) {
    for (elem m : maximals)
      if (L.leq(x, m)) return true;
    return false;
  });
}

/// All non-empty ideals (downward-closed subsets), canonically ordered by
/// their member lists. Antichains and ideals are in bijection via maximal
/// elements, so each ideal appears exactly once.
inline std::vector<ideal_set> enumerate_ideals(const lattice& L) {
  std::vector<ideal_set> out;
  for_each_antichain(L, [&](const std::vector<elem>& anti) {
    out.push_back(downward_closure(L, anti));
  });
  std::sort(out.begin(), out.end(),
            [](const ideal_set& a, const ideal_set& b) { return a.members() < b.members(); });
  return out;
}

/// Every supermatroid of L (ideal passing the height axiom), canonical
/// order, each exactly once. Guarded to |L| ≤ 24 unless forced.
inline std::vector<ideal_set> enumerate_supermatroids(const lattice& L, bool force = false) {
  if (L.size() > 24 && !force)
    throw error(errc::too_large,
                "lattice has " + std::to_string(L.size()) + " elements; pass force to enumerate");
  std::vector<ideal_set> out;
  for_each_antichain(L, [&](const std::vector<elem>& anti) {
    ideal_set I = downward_closure(L, anti);
    if (check_height(L, I).verdict) out.push_back(std::move(I));
  });
  std::sort(out.begin(), out.end(),
            [](const ideal_set& a, const ideal_set& b) { return a.members() < b.members(); });
  return out;
}

/// {X : |X| ≤ k} — a supermatroid on every modular lattice.
inline ideal_set uniform_ideal(const lattice& L, int k) {
  return ideal_set::from_predicate(L, [&](elem x) { return L.height(x) <= k; });
}

}  // namespace latmat
