#include <doctest.h>

#include <bqg/catalog.hpp>
#include <bqg/limits.hpp>

#include <algorithm>
#include <numeric>
#include <random>

using namespace bqg;

namespace {

FgAbelianGroup Zn(std::size_t r) { return FgAbelianGroup{r, {}}; }

bool vanishes_above(const std::vector<FgAbelianGroup>& lim, std::size_t s) {
  for (std::size_t i = s; i < lim.size(); ++i)
    if (!lim[i].is_zero()) return false;
  return true;
}

FgAbelianGroup at(const std::vector<FgAbelianGroup>& lim, std::size_t s) {
  return s < lim.size() ? lim[s] : FgAbelianGroup{};
}

FinitePoset from_relation(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& lt) {
  FinitePoset p;
  p.size = n;
  p.leq.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) p.leq[i * n + i] = 1;
  for (auto [a, b] : lt) p.leq[a * n + b] = 1;
  return p;
}

}  // namespace

TEST_CASE("groups where commutation is transitive have no higher limits") {
  struct Case {
    const char* name;
    std::vector<long long> params;
    std::uint64_t p;
    std::size_t rank;
  };
  const std::vector<Case> cases = {{"dihedral", {8}, 2, 8},
                                   {"quaternion8", {}, 2, 8},
                                   {"symmetric", {3}, 2, 4},
                                   {"symmetric", {3}, 3, 3},
                                   {"dihedral", {10}, 2, 6}};
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto r = rep_ring_limits_cech(catalog(c.name, c.params), c.p);
    CHECK(at(r.lim, 0) == Zn(c.rank));
    CHECK(vanishes_above(r.lim, 1));
  }
}

TEST_CASE("extraspecial groups of order 32 have torsion in lim^1") {
  for (const char* name : {"extraspecial_plus", "extraspecial_minus"}) {
    const auto r = rep_ring_limits_cech(catalog(name, {2}), 2);
    CHECK(r.maximal_count == 15);
    CHECK(at(r.lim, 0) == Zn(32));
    CHECK(at(r.lim, 1) == FgAbelianGroup::from_cyclic_orders(0, std::vector<Integer>(9, 2)));
    CHECK(vanishes_above(r.lim, 2));
  }
}

TEST_CASE("abelian groups: lim^0 is the representation ring of the Sylow subgroup") {
  const auto r = rep_ring_limits_cech(catalog("abelian", {2, 6}), 2);
  CHECK(r.maximal_count == 1);
  CHECK(at(r.lim, 0) == Zn(4));
  CHECK(vanishes_above(r.lim, 1));
}

TEST_CASE("constant functor on a poset with a minimum has only lim^0") {
  const auto g = catalog("dihedral", {8});
  const auto poset = nilpotent_p_poset(g, 2, 2);
  const auto bar = higher_limits(bar_cochain_complex(poset, constant_diagram(as_finite_poset(poset)), 3));
  CHECK(at(bar, 0) == Zn(1));
  CHECK(vanishes_above(bar, 1));
  const DnDiagram d(maximal_members(poset));
  const auto cech = higher_limits(
      cech_cochain_complex(d, constant_diagram(inclusion_order(d.distinct_subgroups()))));
  CHECK(at(cech, 0) == Zn(1));
  CHECK(vanishes_above(cech, 1));
}

TEST_CASE("Cech and bar engines agree") {
  for (const auto& e : std::vector<CatalogEntry>{{"dihedral", {16}},
                                                {"symmetric", {4}},
                                                {"abelian", {2, 2, 2}},
                                                {"dihedral", {12}}}) {
    const auto g = catalog(e.name, e.params);
    for (auto p : prime_divisors(g.order())) {
      CAPTURE(e.label());
      CAPTURE(p);
      const auto a = rep_ring_limits_cech(g, p);
      const auto b = rep_ring_limits_bar(g, p, 3);
      for (std::size_t s = 0; s <= 3; ++s) CHECK(at(a.lim, s) == at(b.lim, s));
    }
  }
}

TEST_CASE("higher limits do not depend on the basis of each value") {
  const auto g = catalog("dihedral", {8});
  const auto poset = nilpotent_p_poset(g, 2, 2);
  const auto f = rep_ring_diagram(poset);
  const auto base = higher_limits(bar_cochain_complex(poset, f, 3));
  std::mt19937 rng(5);
  for (std::size_t obj = 0; obj < f.size(); ++obj) {
    std::vector<std::size_t> perm(f.rank(obj));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto moved = permute_basis(f, obj, perm);
    CHECK(higher_limits(bar_cochain_complex(poset, moved, 3)) == base);
  }
}

TEST_CASE("diagrams must be functorial") {
  const auto p = from_relation(3, {{0, 1}, {1, 2}, {0, 2}});
  AbDiagram::MapStore maps;
  maps.emplace(std::make_pair(0, 1), IntMatrix::from_dense({{1}}));
  maps.emplace(std::make_pair(1, 2), IntMatrix::from_dense({{2}}));
  maps.emplace(std::make_pair(0, 2), IntMatrix::from_dense({{3}}));
  CHECK_THROWS_AS(AbDiagram(p, {1, 1, 1}, maps), Error);
  maps.erase({0, 2});
  CHECK_THROWS_AS(AbDiagram(p, {1, 1, 1}, maps), Error);
  maps.emplace(std::make_pair(0, 2), IntMatrix::from_dense({{2}}));
  CHECK_NOTHROW(AbDiagram(p, {1, 1, 1}, maps));
}

TEST_CASE("restriction maps in the representation ring diagram") {
  const auto g = catalog("abelian", {2, 2});
  const auto poset = nilpotent_poset(g, 2);
  const auto f = rep_ring_diagram(poset);
  for (std::size_t a = 0; a < f.size(); ++a) {
    CHECK(f.rank(a) == poset[a].order());
    for (std::size_t b = 0; b < f.size(); ++b) {
      if (!poset.leq(a, b)) continue;
      const auto& m = f.map(a, b);
      // one 1 per column
      std::vector<int> per_col(m.cols(), 0);
      for (const auto& e : m.entries()) {
        CHECK(e.value == 1);
        ++per_col[e.col];
      }
      CHECK(std::all_of(per_col.begin(), per_col.end(), [](int c) { return c == 1; }));
    }
  }
}
