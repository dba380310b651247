#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "latmat/drsubmod.hpp"
#include "latmat/exchange.hpp"
#include "latmat/lattice.hpp"
#include "latmat/optimize.hpp"
#include "latmat/supermatroid.hpp"

namespace latmat {

/// Outcome of one exhaustive verification suite on one lattice: the number
/// of instances checked and a line per discrepancy (empty means the suite
/// holds).
struct suite_result {
  std::string suite;
  long long cases = 0;
  std::vector<std::string> discrepancies;
  bool ok() const { return discrepancies.empty(); }

  void merge(const suite_result& other) {
    cases += other.cases;
    discrepancies.insert(discrepancies.end(), other.discrepancies.begin(),
                         other.discrepancies.end());
  }
};

namespace detail {

inline std::string set_to_string(const lattice& L, const std::vector<elem>& xs) {
  std::string s = "{";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += L.name(xs[i]);
  }
  s += '}';
  return s;
}

/// Every integer function with r(⊥) = 0 and cover increments in {0, 1},
/// enumerated by depth-first assignment in topological order.
inline std::vector<std::vector<int>> enumerate_r1r2_functions(const lattice& L) {
  std::vector<elem> topo;
  {
    // heights are compatible with the cover order
    std::vector<std::pair<int, elem>> byh;
    for (elem x = 0; x < L.size(); ++x) byh.emplace_back(L.height(x), x);
    std::sort(byh.begin(), byh.end());
    for (auto& [h, x] : byh) topo.push_back(x);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> values(L.size(), -1);
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == topo.size()) {
      out.push_back(values);
      return;
    }
    elem x = topo[idx];
    if (x == L.bottom()) {
      values[x] = 0;
      self(self, idx + 1);
      values[x] = -1;
      return;
    }
    int lo = 0, hi = 0;
    bool first = true;
    for (elem c : L.lower_covers(x)) {
      if (first) {
        lo = values[c];
        hi = values[c] + 1;
        first = false;
      } else {
        lo = std::max(lo, values[c]);
        hi = std::min(hi, values[c] + 1);
      }
    }
    for (int v = lo; v <= hi; ++v) {
      values[x] = v;
      self(self, idx + 1);
    }
    values[x] = -1;
  };
  rec(rec, 0);
  return out;
}

/// Runs fn(i, out) for i in [0, count) across `jobs` threads; per-index
/// results are merged in index order, so the outcome is deterministic.
inline suite_result parallel_cases(long long count, int jobs,
                                   const std::function<void(long long, suite_result&)>& fn) {
  suite_result total;
  if (jobs <= 1 || count < 2) {
    for (long long i = 0; i < count; ++i) fn(i, total);
    return total;
  }
  int workers = std::min<long long>(jobs, count);
  std::vector<suite_result> parts(static_cast<size_t>(count));
  std::vector<std::thread> threads;
  for (int t = 0; t < workers; ++t) {
    threads.emplace_back([&, t]() {
      for (long long i = t; i < count; i += workers) fn(i, parts[static_cast<size_t>(i)]);
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& p : parts) total.merge(p);
  return total;
}

}  // namespace detail

/// The full equivalence suite on a modular lattice: every supermatroid
/// passes the independence, rank, base and dependence axioms; every ideal,
/// antichain, filter and (R1)(R2)-function round-trips the converse
/// directions; the localized, weak, upward and co-extreme variants agree.
inline suite_result verify_modular_equivalence(const lattice& L, int jobs = 1) {
  suite_result res;
  res.suite = "modular-equivalence";
  if (!is_modular(L)) {
    res.discrepancies.push_back("lattice is not modular");
    return res;
  }
  lattice Ldual = dualize(L);

  std::vector<ideal_set> ideals = enumerate_ideals(L);
  auto ideal_part = detail::parallel_cases(
      static_cast<long long>(ideals.size()), jobs, [&](long long idx, suite_result& out) {
        const ideal_set& I = ideals[static_cast<size_t>(idx)];
        const std::string tag = detail::set_to_string(L, I.members());
        bool height_ok = check_height(L, I).verdict;
        bool i2 = check_independence(L, I, independence_variant::I2).verdict;
        bool i2l = check_independence(L, I, independence_variant::I2l).verdict;
        bool i2w = check_independence(L, I, independence_variant::I2w).verdict;
        out.cases += 4;
        if (height_ok != i2) out.discrepancies.push_back("H vs I2 differ on " + tag);
        if (i2 != i2l) out.discrepancies.push_back("I2 vs I2l differ on " + tag);
        if (i2 != i2w) out.discrepancies.push_back("I2 vs I2w differ on " + tag);

        // Filter side: the dependence axiom must single out exactly the
        // supermatroid complements.
        bool dep = check_dependence(L, complement_of(L, I)).verdict;
        out.cases += 1;
        if (dep != height_ok) out.discrepancies.push_back("D vs H differ on complement of " + tag);

        base_family B = bases_of(L, I);
        axiom_report base_rep = check_base(L, B);
        if (height_ok) {
          rank_fn r = rank_of(L, I);
          if (!check_rank(L, r, rank_variant::R3_downward, &Ldual).verdict)
            out.discrepancies.push_back("supermatroid rank fails the rank axiom on " + tag);
          if (!base_rep.verdict) out.discrepancies.push_back("bases fail the base axiom on " + tag);
          ideal_set back = ideal_from_bases(L, B);
          if (!(back == I)) out.discrepancies.push_back("base round-trip broke " + tag);
          ideal_set from_rank = ideal_from_rank(L, r);
          if (!(from_rank == I)) out.discrepancies.push_back("rank round-trip broke " + tag);
          out.cases += 4;
        }

        // Base side for the maximal elements even when the ideal is not a
        // supermatroid: middle property must match the weak augmentation.
        bool b_ok = base_rep.clause_ok("B1") && base_rep.clause_ok("B2");
        out.cases += 1;
        if (b_ok != i2w) out.discrepancies.push_back("B1+B2 vs I2w differ on " + tag);
      });
  res.merge(ideal_part);

  std::vector<std::vector<int>> fns = detail::enumerate_r1r2_functions(L);
  auto fn_part = detail::parallel_cases(
      static_cast<long long>(fns.size()), jobs, [&](long long idx, suite_result& out) {
        rank_fn r(L, fns[static_cast<size_t>(idx)]);
        lattice_fn f = r.as_lattice_fn();
        bool down = check_downward_dr(L, f).verdict;
        bool up = check_upward_dr(L, Ldual, f).verdict;
        bool prime = check_downward_dr_prime(L, f).verdict;
        out.cases += 3;
        std::string tag;
        if (down != up || down != prime) {
          std::ostringstream os;
          os << "r=(";
          for (elem x = 0; x < L.size(); ++x) os << (x ? "," : "") << r.at(x);
          os << ")";
          tag = os.str();
        }
        if (down != up) out.discrepancies.push_back("R3 vs R3u differ for " + tag);
        if (down != prime) out.discrepancies.push_back("R3 vs R3s differ for " + tag);
        if (down) {
          ideal_set I = ideal_from_rank(L, r);
          out.cases += 1;
          if (!check_height(L, I).verdict)
            out.discrepancies.push_back("rank-axiom function yields a non-supermatroid");
        }
      });
  res.merge(fn_part);
  return res;
}

/// Axiom relations that survive beyond modularity, keyed to the lattice
/// class: height ⇔ independence everywhere, middle ⇔ weak independence,
/// dependence ⇒ localized independence, the rank-axiom directions on the
/// semimodular sides, and the co-extreme and coex-augmentation rank
/// variants on lower locally modular lattices.
inline suite_result verify_llm_suite(const lattice& L) {
  suite_result res;
  res.suite = "llm";
  classification_flags flags = classify(L);
  lattice Ldual = dualize(L);

  for (const ideal_set& I : enumerate_ideals(L)) {
    const std::string tag = detail::set_to_string(L, I.members());
    bool height_ok = check_height(L, I).verdict;
    bool i2 = check_independence(L, I, independence_variant::I2).verdict;
    res.cases += 1;
    if (height_ok != i2) res.discrepancies.push_back("H vs I2 differ on " + tag);

    base_family B = bases_of(L, I);
    axiom_report base_rep = check_base(L, B);
    bool b_ok = base_rep.clause_ok("B1") && base_rep.clause_ok("B2");
    bool i2w = check_independence(L, I, independence_variant::I2w).verdict;
    res.cases += 1;
    if (b_ok != i2w) res.discrepancies.push_back("B1+B2 vs I2w differ on " + tag);

    bool dep = check_dependence(L, complement_of(L, I)).verdict;
    bool i2l = check_independence(L, I, independence_variant::I2l).verdict;
    res.cases += 2;
    if (dep && !i2l) res.discrepancies.push_back("D holds but I2l fails on " + tag);
    if (height_ok && !dep) res.discrepancies.push_back("supermatroid complement fails D on " + tag);

    if (flags.lower_semimodular && height_ok) {
      res.cases += 1;
      if (!check_rank(L, rank_of(L, I), rank_variant::R3_downward, &Ldual).verdict)
        res.discrepancies.push_back("supermatroid rank fails R1R2R3 on LSM " + tag);
    }
    if (flags.lower_locally_modular && height_ok) {
      res.cases += 1;
      if (!check_rank(L, rank_of(L, I), rank_variant::R3p_sano).verdict)
        res.discrepancies.push_back("supermatroid rank fails R3' on " + tag);
    }
  }

  for (const auto& values : detail::enumerate_r1r2_functions(L)) {
    rank_fn r(L, values);
    lattice_fn f = r.as_lattice_fn();
    bool down = check_downward_dr(L, f).verdict;

    if (flags.upper_semimodular && down) {
      res.cases += 1;
      if (!check_height(L, ideal_from_rank(L, r)).verdict)
        res.discrepancies.push_back("rank axiom does not yield a supermatroid on USM lattice");
    }
    if (flags.lower_locally_modular) {
      if (check_downward_dr_prime(L, f).verdict) {
        res.cases += 1;
        if (!check_independence(L, ideal_from_rank(L, r), independence_variant::I2).verdict)
          res.discrepancies.push_back("R3s function yields an ideal failing I2");
      }
      if (check_rank(L, r, rank_variant::R3p_sano).verdict) {
        res.cases += 1;
        if (!check_independence(L, ideal_from_rank(L, r), independence_variant::I2).verdict)
          res.discrepancies.push_back("R3' function yields an ideal failing I2");
      }
    }
  }
  return res;
}

/// The small structural lemmas, checked exhaustively on the classes where
/// they are stated.
inline suite_result verify_lemma_suite(const lattice& L) {
  suite_result res;
  res.suite = "lemmas";
  classification_flags flags = classify(L);
  const int n = L.size();

  // Implication structure of the classification flags.
  res.cases += 1;
  if (flags.distributive && !flags.modular)
    res.discrepancies.push_back("distributive lattice not classified modular");
  if (flags.modular && !(flags.lower_semimodular && flags.upper_semimodular))
    res.discrepancies.push_back("modular lattice not both-semimodular");
  if (flags.modular && !flags.lower_locally_modular)
    res.discrepancies.push_back("modular lattice not lower locally modular");
  if (flags.lower_locally_distributive && !flags.lower_locally_modular)
    res.discrepancies.push_back("LLD lattice not LLM");
  if (flags.distributive && !flags.lower_locally_distributive)
    res.discrepancies.push_back("distributive lattice not LLD");
  if ((flags.lower_semimodular || flags.upper_semimodular) && !flags.graded)
    res.discrepancies.push_back("semimodular lattice not graded");
  if (flags.lower_locally_modular && !flags.lower_semimodular)
    res.discrepancies.push_back("LLM lattice not lower semimodular");

  // Sub-admissibility: a ∈ adm(Y), a not below X admits b ∈ adm(X), b ≤ a.
  for (elem x = 0; x < n; ++x)
    for (elem y = 0; y < n; ++y)
      for (elem a : L.admissibles(y)) {
        if (L.leq(a, x)) continue;
        res.cases += 1;
        bool found = false;
        for (elem b : L.admissibles(x))
          if (L.leq(b, a)) {
            found = true;
            break;
          }
        if (!found)
          res.discrepancies.push_back("sub-admissibility fails at X=" + L.name(x) +
                                      " a=" + L.name(a));
      }

  // Existence of join-irreducibles: X < Y admits q ≤ Y co-extreme at X.
  for (elem x = 0; x < n; ++x)
    for (elem y = 0; y < n; ++y) {
      if (!L.lt(x, y)) continue;
      res.cases += 1;
      bool found = false;
      for (elem q : L.coextremes(x))
        if (L.leq(q, y)) {
          found = true;
          break;
        }
      if (!found)
        res.discrepancies.push_back("no co-extreme below " + L.name(y) + " at " + L.name(x));
    }

  if (flags.lower_semimodular) {
    // X ≺ Y, Z ≤ Y, Z not below X forces X ∧ Z ≺ Z.
    for (const auto& [x, y] : L.cover_pairs())
      for (elem z = 0; z < n; ++z) {
        if (!L.leq(z, y) || L.leq(z, x)) continue;
        res.cases += 1;
        if (!L.covers(L.meet(x, z), z))
          res.discrepancies.push_back("meet-cover lemma fails at X=" + L.name(x) +
                                      " Z=" + L.name(z));
      }

    // Chernoff: an extreme decomposition of Y restricts to X when y ≤ X.
    for (elem y_el = 0; y_el < n; ++y_el)
      for (elem yring : L.lower_covers(y_el))
        for (elem y : L.join_irreducibles()) {
          if (L.join(yring, y) != y_el) continue;
          for (elem x = 0; x < n; ++x) {
            if (!L.leq(x, y_el) || !L.leq(y, x)) continue;
            res.cases += 1;
            elem m = L.meet(yring, x);
            if (!(L.covers(m, x) && L.join(m, y) == x))
              res.discrepancies.push_back("extreme restriction fails at Y=" + L.name(y_el) +
                                          " X=" + L.name(x) + " y=" + L.name(y));
          }
        }
  }

  if (flags.upper_semimodular) {
    // X ≺ Y gives X ∨ Z ⪯ Y ∨ Z.
    for (const auto& [x, y] : L.cover_pairs())
      for (elem z = 0; z < n; ++z) {
        res.cases += 1;
        elem a = L.join(x, z), b = L.join(y, z);
        if (!(a == b || L.covers(a, b)))
          res.discrepancies.push_back("join-cover lemma fails at X=" + L.name(x) +
                                      " Z=" + L.name(z));
      }
  }

  if (flags.graded) {
    // Jordan–Dedekind: equal maximal chain lengths between comparable pairs.
    std::vector<int> longest, shortest;
    for (elem x = 0; x < n; ++x) {
      L.chain_lengths_from(x, longest, shortest);
      for (elem y = 0; y < n; ++y)
        if (longest[y] >= 0) {
          res.cases += 1;
          if (longest[y] != shortest[y])
            res.discrepancies.push_back("unequal maximal chains between " + L.name(x) + " and " +
                                        L.name(y));
        }
    }
  }

  if (flags.lower_locally_modular) {
    // Ladder: every maximal chain and lower cover Z of its head admit the
    // merge index l.
    std::vector<elem> chain;
    auto extend = [&](auto&& self, elem cur) -> void {
      bool leaf = true;
      for (elem u : L.upper_covers(cur)) {
        leaf = false;
        chain.push_back(u);
        self(self, u);
        chain.pop_back();
      }
      (void)leaf;
      if (chain.size() >= 2) {
        const int m = static_cast<int>(chain.size()) - 1;
        elem head = chain[m];
        for (elem z : L.lower_covers(head)) {
          if (z == chain[m - 1]) continue;
          res.cases += 1;
          bool ok = false;
          for (int l = 0; l <= m && !ok; ++l) {
            bool rungs = true;
            for (int i = l; i <= m; ++i)
              if (!L.covers(L.meet(chain[i], z), chain[i])) {
                rungs = false;
                break;
              }
            if (!rungs) continue;
            if (l == 0 || chain[l - 1] == L.meet(chain[l], z)) ok = true;
          }
          if (!ok)
            res.discrepancies.push_back("ladder fails on chain ending " + L.name(head) +
                                        " with Z=" + L.name(z));
        }
      }
    };
    for (elem start = 0; start < n; ++start) {
      chain = {start};
      extend(extend, start);
    }
  }
  return res;
}

/// Strong exchange over every enumerated supermatroid and admissible
/// triple, the base-axiom consequence, the rerouted marginal bound for the
/// rank function, collinearity regularity, and on atomic lattices the
/// matching-chain construction.
inline suite_result verify_exchange_suite(const lattice& L, int jobs = 1) {
  suite_result res;
  res.suite = "exchange";
  classification_flags flags = classify(L);
  if (!flags.modular) {
    res.discrepancies.push_back("lattice is not modular");
    return res;
  }

  {
    axiom_report reg = check_regularity(L);
    res.cases += 1;
    if (!reg.verdict) res.discrepancies.push_back("collinearity regularity fails");
  }

  std::vector<ideal_set> matroids = enumerate_supermatroids(L);
  auto part = detail::parallel_cases(
      static_cast<long long>(matroids.size()), jobs, [&](long long idx, suite_result& out) {
        const ideal_set& I = matroids[static_cast<size_t>(idx)];
        const std::string tag = detail::set_to_string(L, I.members());
        base_family B = bases_of(L, I);

        if (!check_base(L, B).verdict) {
          out.discrepancies.push_back("supermatroid bases fail the base axiom on " + tag);
          return;
        }

        for (elem X : B.members())
          for (elem Y : B.members()) {
            elem XmY = L.meet(X, Y);
            for (elem Xo : L.lower_covers(X)) {
              if (!L.leq(XmY, Xo)) continue;
              out.cases += 1;
              try {
                verify_strong_exchange(L, B, X, Y, Xo, /*assume_valid=*/true);
              } catch (const error& e) {
                out.discrepancies.push_back(std::string("strong exchange: ") + e.what() + " on " +
                                            tag);
              }
              if (flags.atomic) {
                out.cases += 1;
                try {
                  verify_strong_exchange_atomic(L, B, X, Y, Xo, /*assume_valid=*/true);
                } catch (const error& e) {
                  out.discrepancies.push_back(std::string("atomic exchange: ") + e.what() +
                                              " on " + tag);
                }
              }
            }
          }

        lattice_fn r = rank_of(L, I).as_lattice_fn();
        out.cases += 1;
        if (!check_strengthened_dr(L, r).verdict)
          out.discrepancies.push_back("strengthened marginal bound fails on " + tag);

        if (flags.atomic) {
          for (elem X : B.members())
            for (elem O : B.members()) {
              // every maximal chain from bottom to X
              std::vector<std::vector<elem>> chains;
              std::vector<elem> cur{L.bottom()};
              auto grow = [&](auto&& self) -> void {
                if (cur.back() == X) {
                  chains.push_back(cur);
                  return;
                }
                for (elem u : L.upper_covers(cur.back())) {
                  if (!L.leq(u, X)) continue;
                  cur.push_back(u);
                  self(self);
                  cur.pop_back();
                }
              };
              grow(grow);
              for (const auto& chain : chains) {
                out.cases += 1;
                try {
                  check_matching_chain(L, I, X, O, chain);
                } catch (const error& e) {
                  out.discrepancies.push_back(std::string("matching chain: ") + e.what() + " on " +
                                              tag);
                }
              }
            }
        }
      });
  res.merge(part);
  return res;
}

/// Dual-rank agreement: for every enumerated supermatroid the closed-form
/// dual rank equals the rank computed on the dual supermatroid, and the
/// double dual returns the original base family.
inline suite_result verify_dual_suite(const lattice& L, const std::vector<elem>* bar = nullptr) {
  suite_result res;
  res.suite = "dual";
  for (const ideal_set& I : enumerate_supermatroids(L)) {
    const std::string tag = detail::set_to_string(L, I.members());
    base_family B = bases_of(L, I);
    dual_result d = dual_supermatroid(L, B, bar);
    base_family Bd(d.lat, d.base_members);
    res.cases += 1;
    if (!check_base(d.lat, Bd).verdict) {
      res.discrepancies.push_back("dual bases fail the base axiom on " + tag);
      continue;
    }
    ideal_set Id = ideal_from_bases(d.lat, Bd);
    if (!check_height(d.lat, Id).verdict) {
      res.discrepancies.push_back("dual ideal is not a supermatroid on " + tag);
      continue;
    }
    rank_fn dual_rank = rank_of(d.lat, Id);
    rank_fn formula = dual_rank_formula(L, d.lat, rank_of(L, I), bar);
    res.cases += 1;
    if (!(dual_rank == formula))
      res.discrepancies.push_back("dual rank formula disagrees on " + tag);

    dual_result dd = dual_supermatroid(d.lat, Bd, bar);
    res.cases += 1;
    std::vector<elem> original = B.members();
    std::vector<elem> back = dd.base_members;
    std::sort(back.begin(), back.end());
    if (back != original || dd.lat.cover_pairs() != L.cover_pairs())
      res.discrepancies.push_back("double dual does not recover the original on " + tag);
  }
  return res;
}

}  // namespace latmat
