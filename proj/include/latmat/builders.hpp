#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latmat/drsubmod.hpp"
#include "latmat/lattice.hpp"
#include "latmat/supermatroid.hpp"

namespace latmat {

// ---------------------------------------------------------------------------
// Named families

/// Boolean lattice of subsets of {0, …, n−1}, named "{0,2}" style and
/// ordered by subset bitmask, so element index equals the mask.
inline lattice boolean_lattice(int n) {
  if (n < 0 || n > 10) throw error(errc::too_large, "boolean lattice limited to n <= 10");
  const int count = 1 << n;
  std::vector<std::string> names(count);
  for (int mask = 0; mask < count; ++mask) {
    std::string s = "{";
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) {
        if (s.size() > 1) s += ',';
        s += std::to_string(i);
      }
    s += '}';
    names[mask] = s;
  }
  std::vector<std::pair<elem, elem>> covers;
  for (int mask = 0; mask < count; ++mask)
    for (int i = 0; i < n; ++i)
      if (!(mask & (1 << i))) covers.emplace_back(mask, mask | (1 << i));
  return lattice::build_indexed(std::move(names), covers);
}

/// Complement permutation on a Boolean lattice built by boolean_lattice.
inline std::vector<elem> boolean_complement_bar(const lattice& B) {
  const int count = B.size();
  std::vector<elem> bar(count);
  for (int mask = 0; mask < count; ++mask) bar[mask] = (count - 1) ^ mask;
  return bar;
}

/// Chain with k elements c0 < c1 < … < c{k−1}.
inline lattice chain(int k) {
  if (k < 1 || k > 1000) throw error(errc::too_large, "chain length out of range");
  std::vector<std::string> names(k);
  for (int i = 0; i < k; ++i) names[i] = "c" + std::to_string(i);
  std::vector<std::pair<elem, elem>> covers;
  for (int i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
  return lattice::build_indexed(std::move(names), covers);
}

/// Diamond M_k: bottom, k atoms, top.
inline lattice diamond(int k) {
  if (k < 3 || k > 64) throw error(errc::too_large, "diamond needs 3 <= k <= 64");
  std::vector<std::string> names;
  names.push_back("bot");
  for (int i = 0; i < k; ++i) {
    if (k <= 26)
      names.push_back(std::string(1, static_cast<char>('a' + i)));
    else
      names.push_back("e" + std::to_string(i + 1));
  }
  names.push_back("top");
  std::vector<std::pair<elem, elem>> covers;
  for (int i = 1; i <= k; ++i) {
    covers.emplace_back(0, i);
    covers.emplace_back(i, k + 1);
  }
  return lattice::build_indexed(std::move(names), covers);
}

// ---------------------------------------------------------------------------
// Finite fields and subspace lattices

/// Arithmetic tables for GF(2), GF(3) and GF(4). GF(4) = {0, 1, w, w+1}
/// with w^2 = w + 1; addition is bitwise xor, multiplication is tabulated.
struct gf {
  int q;
  int add_tab[4][4];
  int mul_tab[4][4];
  int inv_tab[4];

  explicit gf(int q_in) : q(q_in) {
    if (q != 2 && q != 3 && q != 4) {
      bool prime_power = (q == 5 || q == 7 || q == 8 || q == 9 || q == 11 || q == 13 || q == 16);
      if (q > 4 && (prime_power || is_prime(q)))
        throw error(errc::too_large, "field order " + std::to_string(q) + " exceeds the guard");
      throw error(errc::not_prime_power, "GF(" + std::to_string(q) + ") unsupported");
    }
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        add_tab[a][b] = (q == 3) ? (a + b) % 3 : (a ^ b);
        if (q == 4) {
          static const int m4[4][4] = {
              {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
          mul_tab[a][b] = m4[a][b];
        } else {
          mul_tab[a][b] = (a * b) % q;
        }
      }
    inv_tab[0] = -1;
    for (int a = 1; a < q; ++a)
      for (int b = 1; b < q; ++b)
        if (mul_tab[a][b] == 1) inv_tab[a] = b;
  }

  static bool is_prime(int v) {
    if (v < 2) return false;
    for (int d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  }

  int add(int a, int b) const { return add_tab[a][b]; }
  int sub(int a, int b) const { return q == 3 ? (a + 3 - b) % 3 : (a ^ b); }
  int mul(int a, int b) const { return mul_tab[a][b]; }
  int inv(int a) const { return inv_tab[a]; }
};

using gf_vec = std::vector<int>;
using gf_mat = std::vector<gf_vec>;  // list of row vectors

/// Reduced row echelon form; returns the nonzero rows.
inline gf_mat rref(const gf& F, gf_mat rows, int n) {
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    int scale = F.inv(rows[rank][col]);
    for (int j = 0; j < n; ++j) rows[rank][j] = F.mul(rows[rank][j], scale);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      int factor = rows[r][col];
      for (int j = 0; j < n; ++j)
        rows[r][j] = F.sub(rows[r][j], F.mul(factor, rows[rank][j]));
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

inline bool in_row_space(const gf& F, const gf_mat& basis, gf_vec v, int n) {
  for (const auto& row : basis) {
    int lead = -1;
    for (int j = 0; j < n; ++j)
      if (row[j] != 0) {
        lead = j;
        break;
      }
    if (lead < 0 || v[lead] == 0) continue;
    int factor = v[lead];
    for (int j = 0; j < n; ++j) v[j] = F.sub(v[j], F.mul(factor, row[j]));
  }
  for (int j = 0; j < n; ++j)
    if (v[j] != 0) return false;
  return true;
}

inline std::string subspace_id(const gf_mat& basis) {
  std::string s = "[";
  for (size_t r = 0; r < basis.size(); ++r) {
    if (r) s += '|';
    for (int d : basis[r]) s += static_cast<char>('0' + d);
  }
  s += ']';
  return s;
}

inline gf_mat parse_subspace_id(const std::string& id, int n) {
  if (id.size() < 2 || id.front() != '[' || id.back() != ']')
    throw error(errc::parse_error, "bad subspace id " + id);
  gf_mat rows;
  gf_vec cur;
  for (size_t i = 1; i + 1 < id.size(); ++i) {
    char ch = id[i];
    if (ch == '|') {
      rows.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch - '0');
    }
  }
  if (!cur.empty()) rows.push_back(cur);
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n) throw error(errc::parse_error, "bad subspace id " + id);
  return rows;
}

inline long long gaussian_subspace_count(int q, int n) {
  // Sum over k of the Gaussian binomial [n choose k]_q.
  long long total = 0;
  for (int k = 0; k <= n; ++k) {
    long long num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
      long long qn = 1, qk = 1;
      for (int j = 0; j < n - i; ++j) qn *= q;
      for (int j = 0; j < k - i; ++j) qk *= q;
      num *= qn - 1;
      den *= qk - 1;
    }
    total += num / den;
  }
  return total;
}

/// All subspaces of GF(q)^n ordered by inclusion. Element identifiers are
/// canonical reduced-row-echelon basis encodings such as "[10|01]"; the
/// element order is by (dimension, identifier).
inline lattice subspace_lattice(int q, int n) {
  if (n < 0 || n > 4) throw error(errc::too_large, "subspace lattice limited to n <= 4");
  gf F(q);
  if (gaussian_subspace_count(q, n) > 1000)
    throw error(errc::too_large, "subspace lattice would exceed 1000 elements");

  // Every vector of GF(q)^n, mixed-radix order.
  long long total_vecs = 1;
  for (int i = 0; i < n; ++i) total_vecs *= q;
  std::vector<gf_vec> vecs;
  for (long long code = 0; code < total_vecs; ++code) {
    gf_vec v(n);
    long long c = code;
    for (int i = 0; i < n; ++i) {
      v[i] = static_cast<int>(c % q);
      c /= q;
    }
    vecs.push_back(std::move(v));
  }

  std::map<std::string, gf_mat> seen;
  std::vector<std::string> frontier;
  gf_mat zero_basis;
  seen.emplace("[]", zero_basis);
  frontier.push_back("[]");
  while (!frontier.empty()) {
    std::string id = frontier.back();
    frontier.pop_back();
    const gf_mat basis = seen[id];
    for (const auto& v : vecs) {
      bool zero = std::all_of(v.begin(), v.end(), [](int d) { return d == 0; });
      if (zero || in_row_space(F, basis, v, n)) continue;
      gf_mat bigger = basis;
      bigger.push_back(v);
      bigger = rref(F, std::move(bigger), n);
      std::string bid = subspace_id(bigger);
      if (seen.emplace(bid, bigger).second) frontier.push_back(bid);
    }
  }

  std::vector<std::pair<int, std::string>> order;
  for (const auto& [id, basis] : seen) order.emplace_back(static_cast<int>(basis.size()), id);
  std::sort(order.begin(), order.end());
  std::vector<std::string> names;
  names.reserve(order.size());
  for (const auto& [dim, id] : order) names.push_back(id);

  std::vector<std::pair<elem, elem>> covers;
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t j = 0; j < order.size(); ++j) {
      if (order[j].first != order[i].first + 1) continue;
      const gf_mat& small = seen[order[i].second];
      const gf_mat& big = seen[order[j].second];
      bool contained = true;
      for (const auto& row : small)
        if (!in_row_space(F, big, row, n)) {
          contained = false;
          break;
        }
      if (contained) covers.emplace_back(static_cast<elem>(i), static_cast<elem>(j));
    }
  return lattice::build_indexed(std::move(names), covers);
}

/// Rank values of the linear supermatroid represented by a linear map A
/// (k×n matrix over GF(q)) on a subspace lattice built by subspace_lattice:
/// r_A(X) = dim span(A(X)).
inline rank_fn linear_rank(const lattice& L, int q, int n, const gf_mat& A) {
  gf F(q);
  const int k = static_cast<int>(A.size());
  std::vector<int> values(L.size(), 0);
  for (elem x = 0; x < L.size(); ++x) {
    gf_mat basis = parse_subspace_id(L.name(x), n);
    gf_mat image;
    for (const auto& v : basis) {
      gf_vec w(k, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) w[i] = F.add(w[i], F.mul(A[i][j], v[j]));
      image.push_back(std::move(w));
    }
    values[x] = static_cast<int>(rref(F, std::move(image), k).size());
  }
  return rank_fn(L, std::move(values));
}

// ---------------------------------------------------------------------------
// Counterexample corpus

/// One named example lattice with its marked ideal, rank values and the
/// claims the test-suite re-checks against the corresponding checkers.
struct corpus_entry {
  std::string name;
  lattice lat;
  std::vector<std::string> ideal;             // marked members; may be empty
  std::map<std::string, int> rank_values;     // may be empty
  std::vector<std::pair<std::string, bool>> claims;
};

inline std::vector<std::string> corpus_names() {
  return {"fig2_diamond", "fig3_i2l_gap", "fig4_lld_rank_gap", "fig6_upward_gap"};
}

inline corpus_entry corpus(const std::string& name) {
  if (name == "fig2_diamond") {
    corpus_entry e{name,
                   lattice::build({"bot", "a", "b", "c", "top"},
                                  {{"bot", "a"},
                                   {"bot", "b"},
                                   {"bot", "c"},
                                   {"a", "top"},
                                   {"b", "top"},
                                   {"c", "top"}}),
                   {"bot", "a"},
                   {},
                   {}};
    e.rank_values = {{"bot", 0}, {"a", 1}, {"b", 0}, {"c", 0}, {"top", 1}};
    e.claims = {{"is_modular", true},
                {"is_distributive", false},
                {"is_atomic", true},
                {"is_supermatroid", true},
                {"rank_satisfies_rank_axiom", true},
                {"rank_is_lattice_submodular", false}};
    return e;
  }
  if (name == "fig3_i2l_gap") {
    corpus_entry e{
        name,
        lattice::build({"bot", "a1", "a2", "a3", "b1", "b2", "c1", "c2", "c3", "top"},
                       {{"bot", "a1"},
                        {"bot", "b1"},
                        {"bot", "c1"},
                        {"a1", "a2"},
                        {"a2", "a3"},
                        {"c1", "c2"},
                        {"c2", "c3"},
                        {"b1", "b2"},
                        {"b1", "a2"},
                        {"b1", "c2"},
                        {"b2", "a3"},
                        {"b2", "c3"},
                        {"a3", "top"},
                        {"c3", "top"}}),
        {"bot", "a1", "b1", "c1", "c2"},
        {},
        {}};
    e.claims = {{"is_lower_locally_distributive", true},
                {"is_modular", false},
                {"satisfies_I1", true},
                {"satisfies_I2l", true},
                {"satisfies_I2", false},
                {"satisfies_H2", false},
                {"is_supermatroid", false},
                {"complement_satisfies_dependence", true}};
    return e;
  }
  if (name == "fig4_lld_rank_gap") {
    corpus_entry e{name,
                   lattice::build({"bot", "a", "b", "c", "d", "e", "f", "g", "h", "top"},
                                  {{"bot", "d"},
                                   {"d", "e"},
                                   {"bot", "a"},
                                   {"bot", "f"},
                                   {"d", "b"},
                                   {"d", "g"},
                                   {"e", "c"},
                                   {"e", "h"},
                                   {"a", "b"},
                                   {"b", "c"},
                                   {"f", "g"},
                                   {"g", "h"},
                                   {"c", "top"},
                                   {"h", "top"}}),
                   {"bot", "a", "b", "c", "d", "e", "f", "g"},
                   {},
                   {}};
    e.rank_values = {{"bot", 0}, {"a", 1}, {"d", 1}, {"f", 1}, {"b", 2},
                     {"e", 2},   {"g", 2}, {"h", 2}, {"c", 3}, {"top", 3}};
    e.claims = {{"is_lower_locally_distributive", true},
                {"is_modular", false},
                {"rank_satisfies_rank_axiom", true},
                {"satisfies_H2", false},
                {"rank_is_downward_DR_prime", false}};
    return e;
  }
  if (name == "fig6_upward_gap") {
    corpus_entry e{name,
                   lattice::build({"bot", "X", "p", "u", "W", "Y", "v", "q", "s", "Yq"},
                                  {{"bot", "X"},
                                   {"bot", "p"},
                                   {"bot", "u"},
                                   {"X", "W"},
                                   {"u", "v"},
                                   {"p", "W"},
                                   {"p", "v"},
                                   {"W", "Y"},
                                   {"v", "Y"},
                                   {"u", "q"},
                                   {"v", "s"},
                                   {"q", "s"},
                                   {"s", "Yq"},
                                   {"Y", "Yq"}}),
                   {"bot", "u", "q"},
                   {},
                   {}};
    e.claims = {{"is_lower_locally_distributive", true},
                {"is_modular", false},
                {"is_supermatroid", true},
                {"rank_is_upward_DR", false}};
    return e;
  }
  throw error(errc::unknown_corpus_entry, name);
}

inline ideal_set corpus_ideal(const corpus_entry& e) {
  std::vector<elem> m;
  m.reserve(e.ideal.size());
  for (const auto& s : e.ideal) m.push_back(e.lat.index_of(s));
  return ideal_set(e.lat, std::move(m));
}

inline rank_fn corpus_rank(const corpus_entry& e) {
  std::vector<int> values(e.lat.size(), -1);
  for (const auto& [name, v] : e.rank_values) values[e.lat.index_of(name)] = v;
  for (int v : values)
    if (v < 0) throw error(errc::precondition_violated, "corpus rank not total");
  return rank_fn(e.lat, std::move(values));
}

/// Re-checks one stored claim with the corresponding checker.
inline bool verify_corpus_claim(const corpus_entry& e, const std::string& key) {
  const lattice& L = e.lat;
  if (key == "is_modular") return classify(L).modular;
  if (key == "is_distributive") return classify(L).distributive;
  if (key == "is_atomic") return classify(L).atomic;
  if (key == "is_lower_locally_distributive") return classify(L).lower_locally_distributive;
  if (key == "is_supermatroid") return check_height(L, corpus_ideal(e)).verdict;
  if (key == "satisfies_I1") return true;  // ideal_set construction validates it
  if (key == "satisfies_I2")
    return check_independence(L, corpus_ideal(e), independence_variant::I2).verdict;
  if (key == "satisfies_I2l")
    return check_independence(L, corpus_ideal(e), independence_variant::I2l).verdict;
  if (key == "satisfies_H2") {
    ideal_set I = e.rank_values.empty() ? corpus_ideal(e) : ideal_from_rank(L, corpus_rank(e));
    return check_height(L, I).clause_ok("H2");
  }
  if (key == "complement_satisfies_dependence")
    return check_dependence(L, complement_of(L, corpus_ideal(e))).verdict;
  if (key == "rank_satisfies_rank_axiom")
    return check_rank(L, corpus_rank(e), rank_variant::R3_downward).verdict;
  if (key == "rank_is_lattice_submodular")
    return check_lattice_submodular(L, corpus_rank(e).as_lattice_fn()).verdict;
  if (key == "rank_is_downward_DR_prime")
    return check_downward_dr_prime(L, corpus_rank(e).as_lattice_fn()).verdict;
  if (key == "rank_is_upward_DR") {
    rank_fn r = rank_of(L, corpus_ideal(e));
    return check_upward_dr(L, r.as_lattice_fn()).verdict;
  }
  throw error(errc::unknown_corpus_entry, "claim " + key);
}

}  // namespace latmat
