#pragma once

#include <bqg/integer_matrix.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using bqg::Integer;
using Dense = std::vector<std::vector<Integer>>;

// Fraction-free Gaussian elimination.
inline Integer determinant(Dense a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline void choose(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
                   std::vector<std::size_t>& cur, std::size_t start = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

// gcd of all k x k minors.
inline Integer minor_gcd(const Dense& a, std::size_t k) {
  std::vector<std::vector<std::size_t>> rows, cols;
  std::vector<std::size_t> cur;
  choose(a.size(), k, rows, cur);
  choose(a.empty() ? 0 : a[0].size(), k, cols, cur);
  Integer g = 0;
  for (const auto& r : rows)
    for (const auto& c : cols) {
      Dense m(k, std::vector<Integer>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = a[r[i]][c[j]];
      Integer d = determinant(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

inline Dense random_dense(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi,
                          double zero_fraction = 0.3) {
  std::uniform_int_distribution<int> value(lo, hi);
  std::uniform_real_distribution<double> coin(0, 1);
  Dense a(rows, std::vector<Integer>(cols));
  for (auto& r : a)
    for (auto& x : r) x = coin(rng) < zero_fraction ? 0 : value(rng);
  return a;
}

}  // namespace oracle
