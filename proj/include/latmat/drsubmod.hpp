#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latmat/lattice.hpp"
#include "latmat/rational.hpp"
#include "latmat/report.hpp"

namespace latmat {

/// An exact-rational-valued function on the elements of a lattice.
class lattice_fn {
 public:
  lattice_fn(const lattice& L, std::vector<rat> values) : lat_(&L), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != L.size())
      throw error(errc::precondition_violated, "function not total over the lattice");
  }

  static lattice_fn constant(const lattice& L, rat v) {
    return lattice_fn(L, std::vector<rat>(L.size(), v));
  }

  static lattice_fn of_height(const lattice& L) {
    std::vector<rat> v(L.size());
    for (elem x = 0; x < L.size(); ++x) v[x] = rat(L.height(x));
    return lattice_fn(L, v);
  }

  const lattice& lat() const { return *lat_; }
  const rat& at(elem x) const { return values_[x]; }
  rat& at(elem x) { return values_[x]; }
  const std::vector<rat>& values() const { return values_; }

 private:
  const lattice* lat_;
  std::vector<rat> values_;
};

/// Downward DR-submodularity. For every X ≤ Y and b admissible at Y there
/// must be a reroute b' congruent to b mod Y such that the marginal at Y is
/// dominated by the marginal at X of every admissible a ≤ b'. The quantifier
/// order is exactly ∃b' ∀a. In the default mode the inner ∀ may be vacuous;
/// strict mode additionally demands at least one such a.
inline axiom_report check_downward_dr(const lattice& L, const lattice_fn& f,
                                      bool strict_nonvacuous = false) {
  axiom_report rep;
  rep.axiom = strict_nonvacuous ? "downward_dr_strict" : "downward_dr";
  auto& c = rep.add("DR");
  const int n = L.size();
  for (elem x = 0; x < n && c.verdict; ++x) {
    for (elem y = 0; y < n && c.verdict; ++y) {
      if (!L.leq(x, y)) continue;
      for (elem b : L.admissibles(y)) {
        const elem yb = L.join(y, b);
        // Only cover-reaching admissible elements constrain the marginal;
        // on upper-semimodular lattices Y ∨ b always covers Y.
        if (!L.covers(y, yb)) continue;
        const rat lhs = f.at(yb) - f.at(y);
        bool found = false;
        for (elem bp = 0; bp < n && !found; ++bp) {
          if (L.join(bp, y) != yb) continue;
          bool ok = true;
          bool nonvacuous = false;
          for (elem a : L.admissibles(x)) {
            if (!L.leq(a, bp)) continue;
            nonvacuous = true;
            if (f.at(L.join(x, a)) - f.at(x) < lhs) {
              ok = false;
              break;
            }
          }
          if (ok && (!strict_nonvacuous || nonvacuous)) found = true;
        }
        if (!found) {
          rep.fail(c, bind(L, {{"X", x}, {"Y", y}, {"b", b}}));
          break;
        }
      }
    }
  }
  return rep;
}

/// Upward DR-submodularity: downward DR-submodularity on the order reversal.
inline axiom_report check_upward_dr(const lattice& L, const lattice& Ldual, const lattice_fn& f,
                                    bool strict_nonvacuous = false) {
  (void)L;
  lattice_fn g(Ldual, f.values());
  axiom_report rep = check_downward_dr(Ldual, g, strict_nonvacuous);
  rep.axiom = "upward_dr";
  return rep;
}

inline axiom_report check_upward_dr(const lattice& L, const lattice_fn& f,
                                    bool strict_nonvacuous = false) {
  return check_upward_dr(L, dualize(L), f, strict_nonvacuous);
}

inline axiom_report check_bidirectional_dr(const lattice& L, const lattice_fn& f) {
  axiom_report rep;
  rep.axiom = "bidirectional_dr";
  axiom_report down = check_downward_dr(L, f);
  axiom_report up = check_upward_dr(L, f);
  auto& cd = rep.add("DR_down");
  if (!down.verdict) rep.fail(cd, down.clauses[0].witness);
  auto& cu = rep.add("DR_up");
  if (!up.verdict) rep.fail(cu, up.clauses[0].witness);
  return rep;
}

/// f(X ∨ Y) + f(X ∧ Y) ≤ f(X) + f(Y) for all pairs.
inline axiom_report check_lattice_submodular(const lattice& L, const lattice_fn& f) {
  axiom_report rep;
  rep.axiom = "lattice_submodular";
  auto& c = rep.add("submodular");
  const int n = L.size();
  for (elem x = 0; x < n && c.verdict; ++x)
    for (elem y = x; y < n; ++y)
      if (f.at(L.join(x, y)) + f.at(L.meet(x, y)) > f.at(x) + f.at(y)) {
        rep.fail(c, bind(L, {{"X", x}, {"Y", y}}));
        break;
      }
  return rep;
}

/// f(Y ∨ a) − f(Y) ≤ f(X ∨ a̲) − f(X) for all X ≤ Y, a admissible at Y and
/// every a̲ ≤ a admissible at X.
inline axiom_report check_strong_dr(const lattice& L, const lattice_fn& f) {
  axiom_report rep;
  rep.axiom = "strong_dr";
  auto& c = rep.add("strong");
  const int n = L.size();
  for (elem x = 0; x < n && c.verdict; ++x) {
    for (elem y = 0; y < n && c.verdict; ++y) {
      if (!L.leq(x, y)) continue;
      for (elem a : L.admissibles(y)) {
        const rat lhs = f.at(L.join(y, a)) - f.at(y);
        for (elem au : L.admissibles(x)) {
          if (!L.leq(au, a)) continue;
          if (f.at(L.join(x, au)) - f.at(x) < lhs) {
            rep.fail(c, bind(L, {{"X", x}, {"Y", y}, {"a", a}, {"a_under", au}}));
            break;
          }
        }
        if (!c.verdict) break;
      }
    }
  }
  return rep;
}

/// Co-extreme variant: for all X ≤ Y and q co-extreme at Y,
///   f(Y ∨ q) − f(Y) ≤ max over Z ≡ q mod Y (with a co-extreme of X below Z)
///                     of the min over such co-extremes p of f(X ∨ p) − f(X).
inline axiom_report check_downward_dr_prime(const lattice& L, const lattice_fn& f) {
  axiom_report rep;
  rep.axiom = "downward_dr_prime";
  auto& c = rep.add("DR_prime");
  const int n = L.size();
  for (elem x = 0; x < n && c.verdict; ++x) {
    for (elem y = 0; y < n && c.verdict; ++y) {
      if (!L.leq(x, y)) continue;
      for (elem q : L.coextremes(y)) {
        const rat lhs = f.at(L.join(y, q)) - f.at(y);
        const elem yq = L.join(y, q);
        bool have_bound = false;
        rat best{};
        elem best_z = -1, best_p = -1;
        for (elem z = 0; z < n; ++z) {
          if (L.join(z, y) != yq) continue;
          bool have_min = false;
          rat inner{};
          elem inner_p = -1;
          for (elem p : L.coextremes(x)) {
            if (!L.leq(p, z)) continue;
            rat gain = f.at(L.join(x, p)) - f.at(x);
            if (!have_min || gain < inner) {
              inner = gain;
              inner_p = p;
              have_min = true;
            }
          }
          if (!have_min) continue;  // outer max is restricted to nonempty inner sets
          if (!have_bound || inner > best) {
            best = inner;
            best_z = z;
            best_p = inner_p;
            have_bound = true;
          }
        }
        if (!have_bound || lhs > best) {
          if (best_z >= 0)
            rep.fail(c, bind(L, {{"X", x}, {"Y", y}, {"q", q}, {"Z", best_z}, {"p", best_p}}));
          else
            rep.fail(c, bind(L, {{"X", x}, {"Y", y}, {"q", q}}));
          break;
        }
      }
    }
  }
  return rep;
}

inline axiom_report check_monotone(const lattice& L, const lattice_fn& f) {
  axiom_report rep;
  rep.axiom = "monotone";
  auto& c = rep.add("monotone");
  // Checking covers suffices; the order is their transitive closure.
  for (const auto& [lo, hi] : L.cover_pairs())
    if (f.at(lo) > f.at(hi)) {
      rep.fail(c, bind(L, {{"X", lo}, {"Y", hi}}));
      break;
    }
  return rep;
}

/// Smallest c in [0,1] with f(X ∨ a) − f(X) ≥ (1 − c) f(a̲) for all X,
/// a admissible at X and minimal join-irreducible a̲ ≤ a. Constraints with
/// f(a̲) = 0 are skipped. Requires a monotone f.
inline rat curvature(const lattice& L, const lattice_fn& f) {
  if (!check_monotone(L, f).verdict)
    throw error(errc::not_monotone, "curvature needs a monotone function");
  // Minimal join-irreducibles are the atoms.
  std::vector<elem> atoms;
  for (elem a : L.join_irreducibles())
    if (L.covers(L.bottom(), a)) atoms.push_back(a);
  bool have = false;
  rat worst{};
  for (elem x = 0; x < L.size(); ++x) {
    for (elem a : L.admissibles(x)) {
      const rat gain = f.at(L.join(x, a)) - f.at(x);
      for (elem au : atoms) {
        if (!L.leq(au, a)) continue;
        const rat base = f.at(au);
        if (base == rat(0)) continue;
        rat ratio = gain / base;
        if (!have || ratio < worst) {
          worst = ratio;
          have = true;
        }
      }
    }
  }
  if (!have) return rat(0);
  rat c = rat(1) - worst;
  if (c < rat(0)) return rat(0);
  if (c > rat(1)) return rat(1);
  return c;
}

}  // namespace latmat
