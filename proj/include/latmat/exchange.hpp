#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "latmat/lattice.hpp"
#include "latmat/report.hpp"
#include "latmat/supermatroid.hpp"

namespace latmat {

struct exchange_per_y {
  elem y = -1;
  elem y_under = -1;
  elem v = -1;
  std::vector<elem> v_under_set;
};

struct exchange_per_w_under {
  elem w_under = -1;
  elem y_prime = -1;
  std::vector<exchange_per_y> per_y;
};

/// Replayable witness of the strong exchange property. Every recorded
/// relation holds through the public lattice and supermatroid queries.
struct exchange_witness {
  elem w = -1;
  std::vector<exchange_per_w_under> per_w_under;
};

namespace detail {

inline void require(bool cond, const char* what) {
  if (!cond) throw error(errc::precondition_violated, what);
}

inline void check_exchange_pre(const lattice& L, const base_family& B, elem X, elem Y, elem Xo,
                               bool assume_valid) {
  if (!assume_valid) {
    require(is_modular(L), "lattice not modular");
    require(check_base(L, B).verdict, "base axiom fails");
  }
  require(B.contains(X), "X not a base");
  require(B.contains(Y), "Y not a base");
  require(L.covers(Xo, X), "Xring does not precede X");
  require(L.leq(L.meet(X, Y), Xo), "Xring not above X meet Y");
}

}  // namespace detail

/// Exhaustive search for the strong-exchange witness. All existentials are
/// resolved to the lexicographically least candidate in canonical element
/// order; a missing witness on a modular supermatroid refutes the exchange
/// property and is raised as NoWitness.
inline exchange_witness verify_strong_exchange(const lattice& L, const base_family& B, elem X,
                                               elem Y, elem Xo, bool assume_valid = false) {
  detail::check_exchange_pre(L, B, X, Y, Xo, assume_valid);
  const elem XmY = L.meet(X, Y);

  for (elem w : L.admissibles(Xo)) {
    if (L.join(Xo, w) != X) continue;

    exchange_witness wit;
    wit.w = w;
    bool w_ok = true;

    for (elem wu : L.join_irreducibles()) {
      if (!L.leq(wu, w)) continue;
      const auto& admY = L.admissibles(Y);
      if (std::find(admY.begin(), admY.end(), wu) == admY.end()) continue;

      const elem low = L.join(XmY, wu);
      const elem high = L.join(Y, wu);
      elem chosen_yp = -1;
      std::vector<exchange_per_y> chosen_per_y;

      for (elem yp : B.members()) {
        if (!(L.leq(low, yp) && L.covers(yp, high))) continue;
        bool yp_ok = true;
        std::vector<exchange_per_y> per_y;
        const elem YmYp = L.meet(Y, yp);

        // y ranges over the parts of Y completing Y' to Y ∨ w̲.
        for (elem y : L.admissibles(yp)) {
          if (!L.leq(y, Y) || L.join(yp, y) != high) continue;
          bool found_pair = false;
          exchange_per_y rec;
          for (elem yu : L.join_irreducibles()) {
            if (!L.leq(yu, y)) continue;
            for (elem v : L.join_irreducibles()) {
              if (!L.congruent_mod(yu, v, YmYp)) continue;
              std::vector<elem> vu_set;
              for (elem vu : L.admissibles(Xo))
                if (L.leq(vu, v)) vu_set.push_back(vu);
              if (vu_set.empty()) continue;
              bool all_bases = true;
              for (elem vu : vu_set)
                if (!B.contains(L.join(Xo, vu))) {
                  all_bases = false;
                  break;
                }
              if (!all_bases) continue;
              rec = {y, yu, v, std::move(vu_set)};
              found_pair = true;
              break;
            }
            if (found_pair) break;
          }
          if (!found_pair) {
            yp_ok = false;
            break;
          }
          per_y.push_back(std::move(rec));
        }
        if (yp_ok) {
          chosen_yp = yp;
          chosen_per_y = std::move(per_y);
          break;
        }
      }
      if (chosen_yp < 0) {
        w_ok = false;
        break;
      }
      wit.per_w_under.push_back({wu, chosen_yp, std::move(chosen_per_y)});
    }
    if (w_ok) return wit;
  }
  throw error(errc::no_witness, "strong exchange refuted at (" + L.name(X) + ", " + L.name(Y) +
                                    ", " + L.name(Xo) + ")");
}

/// Simplified exchange on atomic modular lattices: the least triple
/// (w, Y', v) with Xring ∨ w = X, w ∨ (X ∧ Y) ≤ Y' ≺ Y ∨ w, v ≤ Y
/// join-irreducible, Y' ∨ v = Y ∨ w, and both Y' and Xring ∨ v bases.
inline std::tuple<elem, elem, elem> verify_strong_exchange_atomic(const lattice& L,
                                                                  const base_family& B, elem X,
                                                                  elem Y, elem Xo,
                                                                  bool assume_valid = false) {
  detail::check_exchange_pre(L, B, X, Y, Xo, assume_valid);
  const elem XmY = L.meet(X, Y);
  for (elem w : L.admissibles(Xo)) {
    if (L.join(Xo, w) != X) continue;
    const elem low = L.join(XmY, w);
    const elem high = L.join(Y, w);
    for (elem yp : B.members()) {
      if (!(L.leq(low, yp) && L.covers(yp, high))) continue;
      for (elem v : L.join_irreducibles()) {
        if (!L.leq(v, Y)) continue;
        if (L.join(yp, v) != high) continue;
        if (!B.contains(L.join(Xo, v))) continue;
        return {w, yp, v};
      }
    }
  }
  throw error(errc::no_witness, "atomic strong exchange refuted at (" + L.name(X) + ", " +
                                    L.name(Y) + ", " + L.name(Xo) + ")");
}

struct matching_chain_report {
  std::vector<elem> W;  // X = W_0 ≺ … ≺ W_α = X ∨ O
  std::vector<elem> w;  // joined elements, w[i] builds W[i+1]
  std::vector<int> j;   // chain indices with chain[j[i]] ∨ w[i] independent
};

namespace detail {

inline void diamond_matching(const lattice& L, const ideal_set& I, elem X, elem O,
                             const std::vector<elem>& zchain, std::vector<elem>& ys) {
  const int alpha = static_cast<int>(zchain.size()) - 1;
  if (alpha == 0) {
    if (X != O) throw error(errc::construction_failed, "degenerate matching with X != O");
    return;
  }
  if (!check_height(L, I).verdict)
    throw error(errc::construction_failed, "truncated ideal lost the height axiom");
  base_family B = bases_of(L, I);
  if (!B.contains(X) || !B.contains(O))
    throw error(errc::construction_failed, "matching endpoints are not bases");

  const elem Zprev = zchain[alpha - 1];
  auto [x, Op, o] = verify_strong_exchange_atomic(L, B, X, O, Zprev, /*assume_valid=*/true);
  (void)x;
  const elem Yprev = L.meet(Op, O);
  if (L.join(Yprev, o) != O)
    throw error(errc::construction_failed, "exchange step does not rebuild O");
  if (!I.contains(L.join(Zprev, o)))
    throw error(errc::construction_failed, "exchanged element is not independent");

  const int k = L.height(X);
  std::vector<elem> truncated;
  for (elem m : I.members())
    if (L.height(m) <= k - 1) truncated.push_back(m);
  ideal_set Itrunc(L, std::move(truncated));
  std::vector<elem> zprefix(zchain.begin(), zchain.end() - 1);
  diamond_matching(L, Itrunc, Zprev, Yprev, zprefix, ys);
  ys.push_back(o);
}

}  // namespace detail

/// Builds and verifies the matching chain from a base X to X ∨ O along a
/// maximal chain ⊥ = chain[0] ≺ … ≺ chain[k] = X: a chain
/// X = W_0 ≺ … ≺ W_α = X ∨ O with W_i = W_{i−1} ∨ w_i, each chain[j_i] ∨ w_i
/// independent and i ↦ j_i injective.
inline matching_chain_report check_matching_chain(const lattice& L, const ideal_set& I, elem X,
                                                  elem O, const std::vector<elem>& chain) {
  classification_flags f = classify(L);
  detail::require(f.modular && f.atomic, "matching chain needs an atomic modular lattice");
  detail::require(check_height(L, I).verdict, "ideal is not a supermatroid");
  base_family B = bases_of(L, I);
  detail::require(B.contains(X) && B.contains(O), "X and O must be bases");
  detail::require(!chain.empty() && chain.front() == L.bottom() && chain.back() == X,
                  "chain must run from bottom to X");
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    detail::require(L.covers(chain[i], chain[i + 1]), "chain must be maximal");

  const int k = static_cast<int>(chain.size()) - 1;
  const elem XO = L.meet(X, O);

  // Steps of the chain that do not advance X_i ∧ O carry the exchanged part.
  std::vector<int> n_idx;
  std::vector<elem> xs;
  for (int i = 1; i <= k; ++i) {
    if (L.meet(chain[i], O) != L.meet(chain[i - 1], O)) continue;
    elem pick = -1;
    for (elem q : L.join_irreducibles())
      if (L.leq(q, chain[i]) && !L.leq(q, chain[i - 1])) {
        pick = q;
        break;
      }
    if (pick < 0 || L.join(chain[i - 1], pick) != chain[i])
      throw error(errc::construction_failed, "no join-irreducible realizes a chain step");
    n_idx.push_back(i);
    xs.push_back(pick);
  }

  std::vector<elem> zchain{XO};
  for (elem x : xs) {
    elem next = L.join(zchain.back(), x);
    if (!L.covers(zchain.back(), next))
      throw error(errc::construction_failed, "derived chain is not a cover chain");
    zchain.push_back(next);
  }
  if (zchain.back() != X) throw error(errc::construction_failed, "derived chain misses X");

  std::vector<elem> ys;
  detail::diamond_matching(L, I, X, O, zchain, ys);

  matching_chain_report rep;
  rep.W.push_back(X);
  const int alpha = static_cast<int>(ys.size());
  for (int i = 0; i < alpha; ++i) {
    elem next = L.join(rep.W.back(), ys[i]);
    if (!L.covers(rep.W.back(), next))
      throw error(errc::construction_failed, "matching chain step is not a cover");
    rep.W.push_back(next);
    rep.w.push_back(ys[i]);
    int ji = n_idx[i] - 1;
    if (!I.contains(L.join(chain[ji], ys[i])))
      throw error(errc::construction_failed, "matched element is not independent");
    rep.j.push_back(ji);
  }
  if (rep.W.back() != L.join(X, O))
    throw error(errc::construction_failed, "matching chain misses X join O");
  if (alpha != L.height(L.join(X, O)) - L.height(X))
    throw error(errc::construction_failed, "matching chain has the wrong length");
  std::vector<int> sorted = rep.j;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw error(errc::construction_failed, "matched chain indices are not injective");
  return rep;
}

/// For every X, Y and x admissible at both X and X ∨ Y there must be an
/// x' admissible at X, congruent to x mod X, whose sub-elements admissible
/// at Y all dominate the marginal of x at X ∨ Y.
inline axiom_report check_strengthened_dr(const lattice& L, const lattice_fn& f) {
  axiom_report rep;
  rep.axiom = "strengthened_downward_dr";
  auto& c = rep.add("exists_reroute");
  const int n = L.size();
  for (elem x = 0; x < n && c.verdict; ++x) {
    for (elem y = 0; y < n && c.verdict; ++y) {
      const elem xy = L.join(x, y);
      for (elem a : L.admissibles(x)) {
        const auto& admXY = L.admissibles(xy);
        if (std::find(admXY.begin(), admXY.end(), a) == admXY.end()) continue;
        const rat lhs = f.at(L.join(xy, a)) - f.at(xy);
        bool found = false;
        for (elem ap : L.admissibles(x)) {
          if (!L.congruent_mod(ap, a, x)) continue;
          bool ok = true;
          for (elem au : L.admissibles(y)) {
            if (!L.leq(au, ap)) continue;
            if (f.at(L.join(y, au)) - f.at(y) < lhs) {
              ok = false;
              break;
            }
          }
          if (ok) {
            found = true;
            break;
          }
        }
        if (!found) {
          rep.fail(c, bind(L, {{"X", x}, {"Y", y}, {"x", a}}));
          break;
        }
      }
    }
  }
  return rep;
}

/// Regularity of the collinearity relation on a modular lattice: for every
/// collinear triple (p, q, r) and join-irreducible r̲ ≤ r incomparable with
/// p and q, some p̲ ≤ p and q̲ ≤ q form a collinear triple with r̲.
inline axiom_report check_regularity(const lattice& L) {
  axiom_report rep;
  rep.axiom = "regularity";
  auto& c = rep.add("regular");
  auto collinear = [&](elem a, elem b, elem r) {
    if (L.comparable(a, b) || L.comparable(b, r) || L.comparable(a, r)) return false;
    elem ab = L.join(a, b);
    return L.join(b, r) == ab && L.join(a, r) == ab;
  };
  auto triples = collinearity_triples(L);
  for (const auto& t : triples) {
    for (int rot = 0; rot < 3 && c.verdict; ++rot) {
      elem p = t[rot % 3], q = t[(rot + 1) % 3], r = t[(rot + 2) % 3];
      for (elem ru : L.join_irreducibles()) {
        if (!L.leq(ru, r) || L.leq(ru, p) || L.leq(ru, q)) continue;
        bool found = false;
        for (elem pu : L.join_irreducibles()) {
          if (!L.leq(pu, p)) continue;
          for (elem qu : L.join_irreducibles()) {
            if (!L.leq(qu, q)) continue;
            if (collinear(pu, qu, ru)) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (!found) {
          rep.fail(c, bind(L, {{"p", p}, {"q", q}, {"r", r}, {"r_under", ru}}));
          break;
        }
      }
    }
    if (!c.verdict) break;
  }
  return rep;
}

}  // namespace latmat
