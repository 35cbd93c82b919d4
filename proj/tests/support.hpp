#pragma once

// Independent oracles and the shared corpus for the unit and property tests.
// Oracles here deliberately avoid the library routine they check.

#include <algorithm>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "agstab/cones.hpp"
#include "agstab/perm.hpp"
#include "agstab/series.hpp"

namespace testing_support {

using namespace agstab;

inline std::filesystem::path data_dir() { return AGSTAB_DATA_DIR; }

inline ConeSpec cone(const std::string &rel) {
  return load_cone_file(data_dir() / (rel + ".json"));
}

inline std::vector<std::string> cone_names(const std::string &family) {
  std::vector<std::string> out;
  for (const auto &e : std::filesystem::directory_iterator(data_dir() / family))
    out.push_back(family + "/" + e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

/// p(0..n) by Euler's pentagonal recurrence.
inline std::vector<BigInt> partition_numbers(std::size_t n) {
  std::vector<BigInt> p(n + 1, 0);
  p[0] = 1;
  for (std::size_t m = 1; m <= n; ++m)
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > static_cast<long>(m))
        break;
      const int s = (k % 2) ? 1 : -1;
      p[m] += s * p[m - static_cast<std::size_t>(g1)];
      if (g2 <= static_cast<long>(m))
        p[m] += s * p[m - static_cast<std::size_t>(g2)];
    }
  return p;
}

/// Partitions of 0..n into parts from `allowed`, by the coin-change DP.
inline std::vector<BigInt> restricted_partitions(std::size_t n,
                                                 const std::vector<std::size_t> &allowed) {
  std::vector<BigInt> a(n + 1, 0);
  a[0] = 1;
  for (auto part : allowed)
    for (std::size_t m = part; m <= n; ++m)
      a[m] += a[m - part];
  return a;
}

/// Determinant by cofactor expansion along the first row.
inline Rational cofactor_det(const std::vector<std::vector<Rational>> &m) {
  const std::size_t n = m.size();
  if (n == 1)
    return m[0][0];
  Rational total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j)
          row.push_back(m[i][k]);
      minor.push_back(row);
    }
    total += ((j % 2) ? -1 : 1) * m[0][j] * cofactor_det(minor);
  }
  return total;
}

/// Every permutation of {0..n-1} in lexicographic order.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::uint32_t> im(n);
  for (std::size_t i = 0; i < n; ++i)
    im[i] = static_cast<std::uint32_t>(i);
  std::vector<Permutation> out;
  do
    out.emplace_back(im);
  while (std::next_permutation(im.begin(), im.end()));
  return out;
}

/// Sparse polynomials in a few variables over Q.
using Monomial = std::vector<unsigned>;
using Poly = std::map<Monomial, Rational>;

inline Poly poly_mul(const Poly &a, const Poly &b) {
  Poly out;
  for (const auto &[ma, ca] : a)
    for (const auto &[mb, cb] : b) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i)
        m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
  return out;
}

/// Monomials of total degree k in n variables.
inline std::vector<Monomial> monomials(std::size_t n, unsigned k) {
  std::vector<Monomial> out;
  Monomial m(n, 0);
  auto rec = [&](auto &self, std::size_t var, unsigned left) -> void {
    if (var + 1 == n) {
      m[var] = left;
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m[var] = e;
      self(self, var + 1, left - e);
    }
  };
  if (n > 0)
    rec(rec, 0, k);
  return out;
}

/// dim of the invariants of degree k under the matrix group {A}, computed
/// as the average trace of Sym^k(A) by substituting x -> A x into each
/// monomial. Independent of any determinant.
inline Rational invariant_dimension(const std::vector<std::vector<std::vector<Rational>>> &group,
                                    unsigned k) {
  const std::size_t n = group.front().size();
  Rational total = 0;
  for (const auto &a : group) {
    // images of the variables: x_i -> sum_j a[j][i] x_j (right action on
    // coordinates; the trace is the same for A and its transpose)
    std::vector<Poly> img(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (a[j][i] != 0) {
          Monomial m(n, 0);
          m[j] = 1;
          img[i][m] = a[j][i];
        }
    for (const auto &mono : monomials(n, k)) {
      Poly p{{Monomial(n, 0), Rational(1)}};
      for (std::size_t i = 0; i < n; ++i)
        for (unsigned e = 0; e < mono[i]; ++e)
          p = poly_mul(p, img[i]);
      if (auto it = p.find(mono); it != p.end())
        total += it->second;
    }
  }
  return total / static_cast<long>(group.size());
}

/// gcd of the r x r minors of an r x g integer matrix, by brute force.
inline BigInt gcd_of_maximal_minors(const std::vector<IntVector> &rows) {
  const std::size_t r = rows.size(), g = rows.front().size();
  BigInt acc = 0;
  std::vector<bool> pick(g, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
  do {
    std::vector<std::vector<Rational>> m(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < g; ++j)
        if (pick[j])
          m[i].emplace_back(rows[i][j]);
    const Rational d = cofactor_det(m);
    mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), d.get_num().get_mpz_t());
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return acc;
}

/// Permutation groups exercised by the property tests: standard families and
/// every shipped cone's declared group (all verified realizable).
inline std::vector<std::pair<std::string, PermGroup>> corpus_groups() {
  std::vector<std::pair<std::string, PermGroup>> out;
  for (std::size_t n = 1; n <= 6; ++n)
    out.emplace_back("S" + std::to_string(n), symmetric_group(n));
  out.emplace_back("trivial4", trivial_group(4));
  out.emplace_back("S2wrS3", wreath_product(symmetric_group(2), 3));
  out.emplace_back("S3wrS2", wreath_product(symmetric_group(3), 2));
  out.emplace_back("S2wrS2wrS2", wreath_product(wreath_product(symmetric_group(2), 2), 2));
  out.emplace_back("C5", group_from_generators(5, {Permutation::from_cycles(5, "(1 2 3 4 5)")}));
  out.emplace_back("A4", group_from_generators(4, {Permutation::from_cycles(4, "(1 2 3)"),
                                                   Permutation::from_cycles(4, "(2 3 4)")}));
  for (const auto &fam : {"matroidal", "perfect"})
    for (const auto &name : cone_names(fam)) {
      const ConeSpec c = cone(name);
      if (c.declared_aut)
        out.emplace_back(name, group_from_generators(c.size(), *c.declared_aut));
    }
  return out;
}

/// Series with zero constant term used for Exp and plethysm checks.
inline std::vector<std::pair<std::string, TruncatedSeries>> corpus_series(std::size_t order) {
  std::vector<std::pair<std::string, TruncatedSeries>> out;
  out.emplace_back("t", TruncatedSeries::monomial(order, 1));
  out.emplace_back("t/(1-t)", TruncatedSeries::polynomial(order, {{1, 1}}) *
                                  series_inverse(one_minus_t_pow(1, order)));
  out.emplace_back("t/(1-t^2)", TruncatedSeries::polynomial(order, {{1, 1}}) *
                                    series_inverse(one_minus_t_pow(2, order)));
  out.emplace_back("2t+3t^2+t^5", TruncatedSeries::polynomial(order, {{1, 2}, {2, 3}, {5, 1}}));
  out.emplace_back("t^3 P_K3", analyze_cone(cone("matroidal/K3"), order).poincare.shifted(3));
  out.emplace_back("t^5 P_K4-1", analyze_cone(cone("matroidal/K4-1"), order).poincare.shifted(5));
  return out;
}

} // namespace testing_support
