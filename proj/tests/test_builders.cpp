#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "latmat/builders.hpp"
#include "latmat/serialize.hpp"

using namespace latmat;

namespace {

// Independent span oracle over GF(2)^3: subspaces as bitsets of vectors,
// built by xor-closure.
unsigned span_mask_gf2(std::vector<unsigned> gens) {
  unsigned members = 1;  // the zero vector
  bool grew = true;
  while (grew) {
    grew = false;
    for (unsigned v = 0; v < 8; ++v) {
      if (!(members >> v & 1)) continue;
      for (unsigned g : gens) {
        unsigned w = v ^ g;
        if (!(members >> w & 1)) {
          members |= 1u << w;
          grew = true;
        }
      }
    }
  }
  return members;
}

unsigned vectors_of(const lattice& L, elem x) {
  gf_mat basis = parse_subspace_id(L.name(x), 3);
  std::vector<unsigned> gens;
  for (const auto& row : basis) gens.push_back(unsigned(row[0]) | unsigned(row[1]) << 1 | unsigned(row[2]) << 2);
  return span_mask_gf2(gens);
}

}  // namespace

TEST_CASE("boolean lattices") {
  CHECK(boolean_lattice(0).size() == 1);
  lattice b2 = boolean_lattice(2);
  CHECK(b2.size() == 4);
  CHECK(b2.height(b2.top()) == 2);
  auto f = classify(boolean_lattice(3));
  CHECK(f.distributive);
  CHECK(f.atomic);
  CHECK_THROWS_MATCHES(boolean_lattice(11), error,
                       Catch::Matchers::Predicate<error>(
                           [](const error& e) { return e.code() == errc::too_large; }));
}

TEST_CASE("diamonds") {
  lattice L = diamond(3);
  auto f = classify(L);
  CHECK(f.modular);
  CHECK_FALSE(f.distributive);
  CHECK(f.atomic);
  CHECK(classify(diamond(7)).atomic);
  CHECK_THROWS_MATCHES(diamond(65), error, Catch::Matchers::Predicate<error>([](const error& e) {
                         return e.code() == errc::too_large;
                       }));
}

TEST_CASE("diamond(3) is isomorphic in shape to the GF(2)^2 subspace lattice") {
  lattice s = subspace_lattice(2, 2);
  lattice d = diamond(3);
  REQUIRE(s.size() == d.size());
  // same height profile and cover counts
  std::vector<int> sh, dh;
  for (elem x = 0; x < s.size(); ++x) sh.push_back(s.height(x));
  for (elem x = 0; x < d.size(); ++x) dh.push_back(d.height(x));
  std::sort(sh.begin(), sh.end());
  std::sort(dh.begin(), dh.end());
  CHECK(sh == dh);
  CHECK(s.cover_pairs().size() == d.cover_pairs().size());
}

TEST_CASE("subspace lattice sizes match the Gaussian binomials") {
  CHECK(subspace_lattice(2, 2).size() == 5);
  lattice s23 = subspace_lattice(2, 3);
  CHECK(s23.size() == 16);
  int per_dim[4] = {0, 0, 0, 0};
  for (elem x = 0; x < s23.size(); ++x) ++per_dim[s23.height(x)];
  CHECK(per_dim[0] == 1);
  CHECK(per_dim[1] == 7);
  CHECK(per_dim[2] == 7);
  CHECK(per_dim[3] == 1);
  CHECK(subspace_lattice(3, 2).size() == 1 + 4 + 1);
  CHECK(subspace_lattice(4, 2).size() == 1 + 5 + 1);

  CHECK_THROWS_MATCHES(subspace_lattice(6, 2), error,
                       Catch::Matchers::Predicate<error>(
                           [](const error& e) { return e.code() == errc::not_prime_power; }));
  CHECK_THROWS_MATCHES(subspace_lattice(5, 2), error,
                       Catch::Matchers::Predicate<error>(
                           [](const error& e) { return e.code() == errc::too_large; }));
}

TEST_CASE("subspace lattices are atomic modular with height equal to dimension") {
  for (auto [q, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}}) {
    lattice s = subspace_lattice(q, n);
    INFO("q=" << q << " n=" << n);
    auto f = classify(s);
    CHECK(f.modular);
    CHECK(f.atomic);
    for (elem x = 0; x < s.size(); ++x)
      REQUIRE(s.height(x) == static_cast<int>(parse_subspace_id(s.name(x), n).size()));
  }
}

TEST_CASE("joins in GF(2)^3 agree with the xor-span oracle") {
  lattice s = subspace_lattice(2, 3);
  for (elem x = 0; x < s.size(); ++x)
    for (elem y = 0; y < s.size(); ++y) {
      unsigned vx = vectors_of(s, x), vy = vectors_of(s, y);
      // join = xor-closure of the union; meet = intersection
      std::vector<unsigned> gens;
      for (unsigned v = 0; v < 8; ++v)
        if ((vx | vy) >> v & 1) gens.push_back(v);
      REQUIRE(vectors_of(s, s.join(x, y)) == span_mask_gf2(gens));
      REQUIRE(vectors_of(s, s.meet(x, y)) == (vx & vy));
    }
  // two distinct lines span a plane
  std::vector<elem> lines;
  for (elem x = 0; x < s.size(); ++x)
    if (s.height(x) == 1) lines.push_back(x);
  for (elem a : lines)
    for (elem b : lines)
      if (a != b) REQUIRE(s.height(s.join(a, b)) == 2);
}

TEST_CASE("GF(4) tables form a field") {
  gf F(4);
  for (int a = 0; a < 4; ++a) {
    CHECK(F.add(a, 0) == a);
    CHECK(F.mul(a, 1) == a);
    if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
    for (int b = 0; b < 4; ++b) {
      CHECK(F.add(a, b) == F.add(b, a));
      CHECK(F.mul(a, b) == F.mul(b, a));
      for (int c = 0; c < 4; ++c) {
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
      }
    }
  }
}

TEST_CASE("corpus annotations all re-check against the corresponding checkers") {
  for (const auto& name : corpus_names()) {
    corpus_entry e = corpus(name);
    for (const auto& [key, expected] : e.claims) {
      INFO(name << " / " << key);
      CHECK(verify_corpus_claim(e, key) == expected);
    }
  }
}

TEST_CASE("corpus data files round-trip through the JSON schema") {
  std::string dir = LATMAT_DATA_DIR;
  for (const auto& name : corpus_names()) {
    corpus_entry built = corpus(name);
    corpus_entry loaded = corpus_from_json(load_json_file(dir + "/" + name + ".json"));
    REQUIRE(loaded.lat.names() == built.lat.names());
    REQUIRE(loaded.lat.cover_pairs() == built.lat.cover_pairs());
    REQUIRE(loaded.ideal == built.ideal);
    REQUIRE(loaded.rank_values == built.rank_values);

    lattice pure = load_lattice(dir + "/" + name + ".lattice.json");
    REQUIRE(pure.names() == built.lat.names());
  }
  lattice fig4 = load_lattice(dir + "/fig4_lld_rank_gap.lattice.json");
  CHECK(classify(fig4).lower_locally_distributive);
}

TEST_CASE("save and load are inverse, and element order is preserved") {
  std::string path = "/tmp/latmat_roundtrip.json";
  lattice L = corpus("fig3_i2l_gap").lat;
  save_lattice(L, path);
  lattice back = load_lattice(path);
  CHECK(back.names() == L.names());
  CHECK(back.cover_pairs() == L.cover_pairs());
  // byte-exact re-serialization
  save_lattice(back, path + ".2");
  std::ifstream f1(path), f2(path + ".2");
  std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
  std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
  CHECK(s1 == s2);
  std::remove(path.c_str());
  std::remove((path + ".2").c_str());
}

TEST_CASE("malformed lattice JSON is rejected") {
  std::string path = "/tmp/latmat_bad.json";
  {
    std::ofstream out(path);
    out << "{\"elements\": [\"a\"], \"covers\": [[\"a\"]]}";
  }
  CHECK_THROWS_MATCHES(load_lattice(path), error,
                       Catch::Matchers::Predicate<error>(
                           [](const error& e) { return e.code() == errc::parse_error; }));
  {
    std::ofstream out(path);
    out << "not json";
  }
  CHECK_THROWS_MATCHES(load_lattice(path), error,
                       Catch::Matchers::Predicate<error>(
                           [](const error& e) { return e.code() == errc::parse_error; }));
  CHECK_THROWS_MATCHES(load_lattice("/nonexistent/file.json"), error,
                       Catch::Matchers::Predicate<error>(
                           [](const error& e) { return e.code() == errc::io_error; }));
  std::remove(path.c_str());
}

TEST_CASE("linear rank functions satisfy the rank axiom") {
  lattice s = subspace_lattice(2, 3);
  // projection dropping the last coordinate
  gf_mat A = {{1, 0, 0}, {0, 1, 0}};
  rank_fn r = linear_rank(s, 2, 3, A);
  CHECK(r.at(s.top()) == 2);
  CHECK(check_rank(s, r, rank_variant::R3_downward).verdict);
  ideal_set I = ideal_from_rank(s, r);
  CHECK(check_height(s, I).verdict);

  // full-rank map gives the free supermatroid
  gf_mat full = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  rank_fn rf = linear_rank(s, 2, 3, full);
  for (elem x = 0; x < s.size(); ++x) REQUIRE(rf.at(x) == s.height(x));
}
