#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "latmat/optimize.hpp"
#include "latmat/builders.hpp"

using namespace latmat;

TEST_CASE("unconstrained greedy on a supermatroid rank reaches the optimum") {
  lattice L = subspace_lattice(2, 3);
  lattice_fn w = rank_of(L, uniform_ideal(L, 2)).as_lattice_fn();
  greedy_trace t = greedy_valuated(L, w, 2);
  CHECK(t.final_value == rat(2));
  auto [oe, ov] = brute_force_max(L, w, [&](elem x) { return L.height(x) == 2; });
  CHECK(t.final_value == ov);
}

TEST_CASE("greedy tie-breaking picks the canonical least atom") {
  lattice L = diamond(3);
  greedy_trace t = greedy_valuated(L, lattice_fn::of_height(L), 1);
  CHECK(L.name(t.steps.at(0).chosen) == "a");
  CHECK(t.final_value == rat(1));
  // identical runs yield identical traces
  greedy_trace t2 = greedy_valuated(L, lattice_fn::of_height(L), 1);
  CHECK(t2.steps.at(0).chosen == t.steps.at(0).chosen);
  CHECK(t2.final_elem == t.final_elem);
}

TEST_CASE("greedy follows a linear supermatroid objective to its image rank") {
  lattice L = subspace_lattice(2, 3);
  gf_mat A = {{1, 0, 0}, {0, 1, 0}};
  lattice_fn w = linear_rank(L, 2, 3, A).as_lattice_fn();
  greedy_trace t = greedy_valuated(L, w, 2);
  CHECK(t.final_value == rat(2));
}

TEST_CASE("greedy preconditions") {
  lattice fig4 = corpus("fig4_lld_rank_gap").lat;
  CHECK_THROWS_MATCHES(greedy_valuated(fig4, lattice_fn::of_height(fig4), 1), error,
                       Catch::Matchers::Predicate<error>([](const error& e) {
                         return e.code() == errc::precondition_violated;
                       }));
  lattice L = diamond(3);
  CHECK_THROWS_MATCHES(greedy_valuated(L, lattice_fn::of_height(L), 3), error,
                       Catch::Matchers::Predicate<error>([](const error& e) {
                         return e.code() == errc::precondition_violated;
                       }));
}

TEST_CASE("valuated exchange inequality holds for supermatroid ranks") {
  lattice L = subspace_lattice(2, 3);
  for (const ideal_set& I : enumerate_supermatroids(L)) {
    lattice_fn w = rank_of(L, I).as_lattice_fn();
    for (int k = 1; k <= 3; ++k) REQUIRE(check_valuated(L, w, k).verdict);
  }
  CHECK(check_valuated(L, lattice_fn::of_height(L), 2).verdict);
}

TEST_CASE("a planted violation fails the valuated check with a witness") {
  lattice L = subspace_lattice(2, 3);
  lattice_fn base = rank_of(L, uniform_ideal(L, 2)).as_lattice_fn();
  bool planted = false;
  for (elem x = 0; x < L.size() && !planted; ++x) {
    if (L.height(x) != 2) continue;
    lattice_fn w = base;
    w.at(x) -= rat(5);
    axiom_report rep = check_valuated(L, w, 2);
    if (!rep.verdict) {
      planted = true;
      bool has_witness = false;
      for (const auto& c : rep.clauses)
        if (!c.verdict && !c.witness.empty()) has_witness = true;
      CHECK(has_witness);
    }
  }
  CHECK(planted);
}

TEST_CASE("valuated check preconditions and permissive mode") {
  lattice fig4 = corpus("fig4_lld_rank_gap").lat;
  CHECK_THROWS_AS(check_valuated(fig4, lattice_fn::of_height(fig4), 1), error);
  lattice m3c3 = product(diamond(3), chain(3));
  REQUIRE_FALSE(classify(m3c3).atomic);
  CHECK_THROWS_AS(check_valuated(m3c3, lattice_fn::of_height(m3c3), 1), error);
  CHECK(check_valuated(m3c3, lattice_fn::of_height(m3c3), 1, /*permissive=*/true).verdict);
}

TEST_CASE("brute force maximization") {
  lattice L = diamond(3);
  auto [e1, v1] = brute_force_max(L, lattice_fn::of_height(L), [](elem) { return true; });
  CHECK(e1 == L.top());
  CHECK(v1 == rat(2));

  corpus_entry fig2 = corpus("fig2_diamond");
  ideal_set I = corpus_ideal(fig2);
  lattice_fn r = corpus_rank(fig2).as_lattice_fn();
  auto [e2, v2] = brute_force_max(fig2.lat, r, [&](elem x) { return I.contains(x); });
  CHECK(fig2.lat.name(e2) == "a");
  CHECK(v2 == rat(1));

  CHECK_THROWS_MATCHES(brute_force_max(L, lattice_fn::of_height(L), [](elem) { return false; }),
                       error, Catch::Matchers::Predicate<error>([](const error& e) {
                         return e.code() == errc::empty_feasible_set;
                       }));
}

TEST_CASE("constrained greedy ends on a base") {
  lattice L = subspace_lattice(2, 3);
  for (const ideal_set& I : enumerate_supermatroids(L)) {
    base_family B = bases_of(L, I);
    greedy_trace t = greedy_constrained(L, lattice_fn::of_height(L), I);
    REQUIRE(B.contains(t.final_elem));
  }
}

TEST_CASE("approximation report: simple cases") {
  lattice m3 = diamond(3);
  ideal_set u1 = uniform_ideal(m3, 1);
  approximation_record rec = approximation_report(m3, lattice_fn::of_height(m3), u1);
  CHECK(rec.greedy_value == rat(1));
  CHECK(rec.optimum == rat(1));
  CHECK(rec.ratio == rat(1));
  REQUIRE(rec.curvature_value.has_value());
  CHECK(*rec.curvature_value == rat(0));

  lattice s23 = subspace_lattice(2, 3);
  lattice_fn capped = concave_of_height(s23, {rat(1), rat(0), rat(0)});
  approximation_record rec2 = approximation_report(s23, capped, uniform_ideal(s23, 2));
  CHECK(rec2.greedy_value == rat(1));
  CHECK(rec2.optimum == rat(1));
  CHECK(rec2.ratio == rat(1));

  approximation_record rec3 =
      approximation_report(s23, lattice_fn::constant(s23, rat(0)), uniform_ideal(s23, 2));
  CHECK(rec3.ratio == rat(1));
}

TEST_CASE("sampled strong-DR functions keep the half guarantee") {
  lattice L = subspace_lattice(2, 3);
  std::vector<ideal_set> matroids = enumerate_supermatroids(L);
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    lattice_fn f = random_monotone_strong_dr(L, seed);
    REQUIRE(check_strong_dr(L, f).verdict);
    REQUIRE(check_monotone(L, f).verdict);
    for (size_t i = 0; i < matroids.size(); i += 17) {
      approximation_record rec = approximation_report(L, f, matroids[i]);
      REQUIRE(rec.ratio >= rat(1, 2));
    }
  }
  // identical seed, identical function
  lattice_fn a = random_monotone_strong_dr(L, 99);
  lattice_fn b = random_monotone_strong_dr(L, 99);
  CHECK(a.values() == b.values());
}

TEST_CASE("curvature bound on the greedy ratio for height compositions") {
  lattice L = subspace_lattice(2, 3);
  std::vector<std::vector<rat>> profiles = {
      {rat(1), rat(1), rat(1)},
      {rat(1), rat(1), rat(0)},
      {rat(2), rat(1), rat(1, 2)},
      {rat(4), rat(3), rat(1)},
  };
  for (const auto& inc : profiles) {
    lattice_fn f = concave_of_height(L, inc);
    rat c = curvature(L, f);
    for (const ideal_set& I : enumerate_supermatroids(L)) {
      approximation_record rec = approximation_report(L, f, I);
      REQUIRE(rec.ratio >= rat(1) - c);
    }
  }
}
