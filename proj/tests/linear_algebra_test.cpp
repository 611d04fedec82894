#include <doctest.h>

#include "oracles.hpp"

#include <bqg/chain_complex.hpp>
#include <bqg/error.hpp>
#include <bqg/smith.hpp>

#include <array>

using namespace bqg;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

bool is_diagonal(const IntMatrix& d) {
  for (const auto& e : d.entries())
    if (e.row != e.col) return false;
  return true;
}

}  // namespace

TEST_CASE("Smith form of small matrices") {
  const auto m = IntMatrix::from_dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(invariant_factors(m) == ints({2, 6, 12}));
  CHECK(invariant_factors(IntMatrix::from_dense({{0, 0}, {0, 0}})).empty());
  CHECK(invariant_factors(IntMatrix::from_dense({{6, 4}})) == ints({2}));
  CHECK(invariant_factors(IntMatrix(0, 5)).empty());
  CHECK(matrix_rank(IntMatrix::from_dense({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("Smith form transforms are unimodular and diagonalize") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const auto dense = oracle::random_dense(rng, r, c, -9, 9);
    const auto m = IntMatrix::from_dense(dense, c);
    const auto s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(is_diagonal(s.D));
    const auto du = oracle::determinant(s.U.to_dense());
    const auto dv = oracle::determinant(s.V.to_dense());
    CHECK(abs(du) == 1);
    CHECK(abs(dv) == 1);
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      if (s.diagonal[i + 1] == 0) continue;
      CHECK(s.diagonal[i] != 0);
      CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    }
  }
}

TEST_CASE("invariant factors match gcds of minors") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const auto dense = oracle::random_dense(rng, r, c, -12, 12, 0.4);
    const auto f = invariant_factors(IntMatrix::from_dense(dense, c));
    Integer prefix = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      const auto g = oracle::minor_gcd(dense, k);
      if (k <= f.size()) {
        prefix *= f[k - 1];
        CHECK(g == prefix);
      } else {
        CHECK(g == 0);
      }
    }
  }
}

TEST_CASE("invariant factors ignore row and column order") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 2 + rng() % 6, c = 2 + rng() % 6;
    const auto m = IntMatrix::from_dense(oracle::random_dense(rng, r, c, -5, 5), c);
    std::vector<std::size_t> pr(r), pc(c);
    std::iota(pr.begin(), pr.end(), 0);
    std::iota(pc.begin(), pc.end(), 0);
    std::shuffle(pr.begin(), pr.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    CHECK(invariant_factors(m.permute_rows(pr).permute_cols(pc)) == invariant_factors(m));
    CHECK(invariant_factors(m.transpose()) == invariant_factors(m));
  }
}

TEST_CASE("sparse path agrees with the dense Smith form") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 3 + rng() % 10, c = 3 + rng() % 10;
    const auto dense = oracle::random_dense(rng, r, c, -3, 3, 0.6);
    CHECK(invariant_factors(IntMatrix::from_dense(dense, c)) == dense_invariant_factors(dense));
  }
}

TEST_CASE("large entries survive overflow of machine integers") {
  const Integer big("123456789012345678901234567890");
  const IntMatrix m(2, 2, {{0, 0, big}, {1, 1, big * 2}});
  CHECK(invariant_factors(m) == std::vector<Integer>{big, big * 2});
  const auto k = IntMatrix::from_dense({{4611686018427387904LL, 3}, {3, 4611686018427387904LL}});
  const auto f = invariant_factors(k);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == 1);
  CHECK(f[1] == Integer("4611686018427387904") * Integer("4611686018427387904") - 9);
}

TEST_CASE("finitely generated abelian groups normalize") {
  const auto a = FgAbelianGroup::from_cyclic_orders(1, ints({2, 3, 4, 1, 0}));
  CHECK(a.rank == 2);
  CHECK(a.torsion == ints({2, 12}));
  CHECK(a.to_string() == "Z^2 + Z/2 + Z/12");
  CHECK(FgAbelianGroup{}.to_string() == "0");
  CHECK(direct_sum(FgAbelianGroup::from_cyclic_orders(0, ints({2})),
                   FgAbelianGroup::from_cyclic_orders(0, ints({3}))) ==
        FgAbelianGroup::from_cyclic_orders(0, ints({6})));
  CHECK(FgAbelianGroup::from_cyclic_orders(32, ints({2, 2, 2, 2, 2, 2, 2, 2, 2})).to_string() ==
        "Z^32 + (Z/2)^9");
}

TEST_CASE("chain complexes reject non-complexes") {
  const auto d1 = IntMatrix::from_dense({{1, 1}});
  const auto d2 = IntMatrix::from_dense({{1}, {1}});
  CHECK_THROWS_AS(ChainComplex(Grading::Homological, 0, {1, 2, 1}, {d1, d2}), Error);
}

TEST_CASE("homology of a real projective plane triangulation") {
  // minimal 6-vertex RP^2
  const std::vector<std::array<int, 3>> tri = {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5},
                                               {0, 4, 5}, {1, 2, 5}, {1, 3, 4}, {1, 4, 5},
                                               {2, 3, 4}, {2, 3, 5}};
  FinitePoset p;
  std::vector<std::vector<int>> faces;
  for (const auto& t : tri) {
    for (int mask = 1; mask < 8; ++mask) {
      std::vector<int> f;
      for (int i = 0; i < 3; ++i)
        if (mask >> i & 1) f.push_back(t[static_cast<std::size_t>(i)]);
      faces.push_back(f);
    }
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  p.size = faces.size();
  p.leq.assign(p.size * p.size, 0);
  for (std::size_t i = 0; i < p.size; ++i)
    for (std::size_t j = 0; j < p.size; ++j)
      p.leq[i * p.size + j] = std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(),
                                            faces[i].end());
  // barycentric subdivision
  const auto c = order_complex_chains(p);
  const auto h = homology_all(c);
  REQUIRE(h.size() == 3);
  CHECK(h[0] == FgAbelianGroup{1, {}});
  CHECK(h[1] == FgAbelianGroup::from_cyclic_orders(0, ints({2})));
  CHECK(h[2].is_zero());
  CHECK(euler_characteristic(c) == 1);
  CHECK(betti_euler(h) == 1);
}

TEST_CASE("order complex of a product poset has multiplicative Euler characteristic") {
  auto chain_poset = [](std::size_t n, bool antichain) {
    FinitePoset p;
    p.size = n;
    p.leq.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p.leq[i * n + j] = antichain ? i == j : i <= j;
    return p;
  };
  auto product = [](const FinitePoset& a, const FinitePoset& b) {
    FinitePoset p;
    p.size = a.size * b.size;
    p.leq.assign(p.size * p.size, 0);
    for (std::size_t i = 0; i < p.size; ++i)
      for (std::size_t j = 0; j < p.size; ++j)
        p.leq[i * p.size + j] =
            a.le(i / b.size, j / b.size) && b.le(i % b.size, j % b.size);
    return p;
  };
  const auto a = chain_poset(3, true), b = chain_poset(4, true), c = chain_poset(3, false);
  auto chi = [](const FinitePoset& p) { return euler_characteristic(order_complex_chains(p)); };
  CHECK(chi(product(a, b)) == chi(a) * chi(b));
  CHECK(chi(product(a, c)) == chi(a) * chi(c));
  CHECK(chi(product(c, c)) == 1);
}
