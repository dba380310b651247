#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "latmat/drsubmod.hpp"
#include "latmat/lattice.hpp"
#include "latmat/supermatroid.hpp"

namespace latmat {

struct greedy_step {
  elem chosen;
  int candidates;
  rat value;  // objective after the step
};

/// Deterministic trace of a greedy run; ties are broken toward the least
/// candidate in canonical element order.
struct greedy_trace {
  std::vector<greedy_step> steps;
  elem final_elem;
  rat final_value;
};

/// Unconstrained greedy: k steps from bottom, each step joining the
/// admissible element maximizing the objective. Requires an atomic modular
/// lattice and k at most the lattice height.
inline greedy_trace greedy_valuated(const lattice& L, const lattice_fn& w, int k) {
  classification_flags f = classify(L);
  if (!(f.modular && f.atomic))
    throw error(errc::precondition_violated, "greedy needs an atomic modular lattice");
  if (k < 0 || k > L.height(L.top()))
    throw error(errc::precondition_violated, "k exceeds the lattice height");
  greedy_trace trace;
  elem x = L.bottom();
  for (int step = 0; step < k; ++step) {
    elem best = -1;
    rat best_val{};
    int count = 0;
    for (elem a : L.admissibles(x)) {
      ++count;
      rat val = w.at(L.join(x, a));
      if (best < 0 || val > best_val) {
        best = a;
        best_val = val;
      }
    }
    if (best < 0) throw error(errc::precondition_violated, "no admissible extension");
    x = L.join(x, best);
    trace.steps.push_back({best, count, best_val});
  }
  trace.final_elem = x;
  trace.final_value = w.at(x);
  return trace;
}

/// Supermatroid-constrained greedy: joins the feasible admissible element
/// of largest objective until no extension stays independent. The final
/// element is a base of the constraint.
inline greedy_trace greedy_constrained(const lattice& L, const lattice_fn& f, const ideal_set& I) {
  greedy_trace trace;
  elem x = L.bottom();
  for (;;) {
    elem best = -1;
    rat best_val{};
    int count = 0;
    for (elem a : L.admissibles(x)) {
      elem next = L.join(x, a);
      if (!I.contains(next)) continue;
      ++count;
      rat val = f.at(next);
      if (best < 0 || val > best_val) {
        best = a;
        best_val = val;
      }
    }
    if (best < 0) break;
    x = L.join(x, best);
    trace.steps.push_back({best, count, best_val});
  }
  trace.final_elem = x;
  trace.final_value = f.at(x);
  return trace;
}

/// Exact maximizer over the feasible elements, least index on ties.
inline std::pair<elem, rat> brute_force_max(const lattice& L, const lattice_fn& f,
                                            const std::function<bool(elem)>& feasible) {
  elem best = -1;
  rat best_val{};
  for (elem x = 0; x < L.size(); ++x) {
    if (!feasible(x)) continue;
    rat val = f.at(x);
    if (best < 0 || val > best_val) {
      best = x;
      best_val = val;
    }
  }
  if (best < 0) throw error(errc::empty_feasible_set, "no feasible element");
  return {best, best_val};
}

/// The valuated-supermatroid exchange inequality, checked by exhausting the
/// full nested quantifier structure over all X, Y of height k and X̊ ≺ X
/// above X ∧ Y. Restricted to atomic modular lattices unless permissive.
inline axiom_report check_valuated(const lattice& L, const lattice_fn& w, int k,
                                   bool permissive = false) {
  classification_flags flags = classify(L);
  if (!flags.modular)
    throw error(errc::precondition_violated, "valuated check needs a modular lattice");
  if (!permissive && !flags.atomic)
    throw error(errc::precondition_violated,
                "valuated check needs an atomic lattice (or permissive mode)");
  axiom_report rep;
  rep.axiom = "valuated";
  auto& c = rep.add("exchange_inequality");

  std::vector<elem> slice;
  for (elem x = 0; x < L.size(); ++x)
    if (L.height(x) == k) slice.push_back(x);

  for (elem X : slice) {
    for (elem Y : slice) {
      const elem XmY = L.meet(X, Y);
      for (elem Xo : L.lower_covers(X)) {
        if (!L.leq(XmY, Xo)) continue;
        bool some_w = false;
        for (elem w_el : L.admissibles(Xo)) {
          if (L.join(Xo, w_el) != X) continue;
          bool w_ok = true;
          for (elem wu : L.join_irreducibles()) {
            if (!L.leq(wu, w_el)) continue;
            const auto& admY = L.admissibles(Y);
            if (std::find(admY.begin(), admY.end(), wu) == admY.end()) continue;
            const elem low = L.join(XmY, wu);
            const elem high = L.join(Y, wu);
            bool some_yp = false;
            for (elem yp : slice) {
              if (!(L.leq(low, yp) && L.covers(yp, high))) continue;
              bool yp_ok = true;
              const elem YmYp = L.meet(Y, yp);
              for (elem y : L.admissibles(yp)) {
                if (!L.leq(y, Y) || L.join(yp, y) != high) continue;
                bool found_pair = false;
                for (elem yu : L.join_irreducibles()) {
                  if (!L.leq(yu, y)) continue;
                  for (elem v : L.join_irreducibles()) {
                    if (!L.congruent_mod(yu, v, YmYp)) continue;
                    std::vector<elem> vu_set;
                    for (elem vu : L.admissibles(Xo))
                      if (L.leq(vu, v)) vu_set.push_back(vu);
                    if (vu_set.empty()) continue;
                    bool all_hold = true;
                    for (elem vu : vu_set)
                      if (w.at(X) + w.at(Y) > w.at(L.join(Xo, vu)) + w.at(yp)) {
                        all_hold = false;
                        break;
                      }
                    if (!all_hold) continue;
                    found_pair = true;
                    break;
                  }
                  if (found_pair) break;
                }
                if (!found_pair) {
                  yp_ok = false;
                  break;
                }
              }
              if (yp_ok) {
                some_yp = true;
                break;
              }
            }
            if (!some_yp) {
              w_ok = false;
              break;
            }
          }
          if (w_ok) {
            some_w = true;
            break;
          }
        }
        if (!some_w) {
          rep.fail(c, bind(L, {{"X", X}, {"Y", Y}, {"Xring", Xo}}));
          return rep;
        }
      }
    }
  }
  return rep;
}

struct approximation_record {
  greedy_trace trace;
  rat greedy_value;
  elem optimum_elem;
  rat optimum;
  rat ratio;
  std::optional<rat> curvature_value;
};

/// Runs the constrained greedy against the brute-force optimum; the
/// curvature is attached when f is monotone and bidirectional DR-submodular.
inline approximation_record approximation_report(const lattice& L, const lattice_fn& f,
                                                 const ideal_set& I) {
  approximation_record rec{greedy_constrained(L, f, I), rat(0), -1, rat(0), rat(0), std::nullopt};
  rec.greedy_value = rec.trace.final_value;
  auto [opt_elem, opt] = brute_force_max(L, f, [&](elem x) { return I.contains(x); });
  rec.optimum_elem = opt_elem;
  rec.optimum = opt;
  if (opt == rat(0))
    rec.ratio = rec.greedy_value == rat(0) ? rat(1) : rat(0);
  else
    rec.ratio = rec.greedy_value / opt;
  if (check_monotone(L, f).verdict && check_bidirectional_dr(L, f).verdict)
    rec.curvature_value = curvature(L, f);
  return rec;
}

// ---------------------------------------------------------------------------
// Test-function generators. Seeds are explicit; raw engine output is used so
// the streams are identical across platforms.

inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

/// g ∘ height for the concave g with the given increment sequence
/// (non-increasing, non-negative). Monotone and strong DR-submodular on
/// modular lattices.
inline lattice_fn concave_of_height(const lattice& L, const std::vector<rat>& increments) {
  const int h = L.height(L.top());
  if (static_cast<int>(increments.size()) < h)
    throw error(errc::precondition_violated, "need one increment per height level");
  for (size_t i = 0; i + 1 < increments.size(); ++i)
    if (increments[i] < increments[i + 1] || increments[i + 1] < rat(0))
      throw error(errc::precondition_violated, "increments must be non-increasing, non-negative");
  std::vector<rat> g(h + 1);
  g[0] = rat(0);
  for (int i = 0; i < h; ++i) g[i + 1] = g[i] + increments[i];
  std::vector<rat> values(L.size());
  for (elem x = 0; x < L.size(); ++x) values[x] = g[L.height(x)];
  return lattice_fn(L, std::move(values));
}

/// Seeded rejection sampler for monotone strong-DR functions: a random
/// concave-of-height profile, optionally perturbed, resampled until both
/// checkers accept.
inline lattice_fn random_monotone_strong_dr(const lattice& L, std::uint64_t seed,
                                            int max_tries = 200) {
  std::mt19937_64 rng(seed);
  const int h = L.height(L.top());
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<rat> inc(std::max(h, 1));
    long long cur = 1 + static_cast<long long>(rand_below(rng, 6));
    for (int i = 0; i < h; ++i) {
      inc[i] = rat(cur, 2);
      cur -= static_cast<long long>(rand_below(rng, 3));
      if (cur < 0) cur = 0;
    }
    lattice_fn f = concave_of_height(L, inc);
    if (attempt % 2 == 1) {
      // Perturb one non-extremal value; kept only when the checkers accept.
      elem x = static_cast<elem>(rand_below(rng, static_cast<std::uint64_t>(L.size())));
      if (x != L.bottom()) f.at(x) += rat(1, 4) * rat(rand_below(rng, 2) ? 1 : -1);
    }
    if (check_monotone(L, f).verdict && check_strong_dr(L, f).verdict) return f;
  }
  throw error(errc::construction_failed, "rejection sampling exhausted");
}

}  // namespace latmat
