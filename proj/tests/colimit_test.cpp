#include <doctest.h>

#include <bqg/catalog.hpp>
#include <bqg/colimit.hpp>
#include <bqg/presentation.hpp>
#include <bqg/todd_coxeter.hpp>

using namespace bqg;

namespace {

std::size_t order_of(const GroupPresentation& p, std::size_t cap = 200000) {
  const auto t = todd_coxeter(p, {}, cap);
  REQUIRE(t.complete());
  return t.cosets;
}

}  // namespace

TEST_CASE("coset enumeration of classical presentations") {
  CHECK(order_of(abstract_presentation(1, {{0, 0, 0, 0, 0, 0, 0}})) == 7);
  CHECK(order_of(abstract_presentation(2, {{0, 0}, {1, 1}, {0, 1, 0, 1, 0, 1}})) == 6);
  // A5 = <a, b | a^2, b^3, (ab)^5>
  CHECK(order_of(abstract_presentation(
            2, {{0, 0}, {1, 1, 1}, {0, 1, 0, 1, 0, 1, 0, 1, 0, 1}})) == 60);
  // Q8 = <a, b | a^4, a^2 b^-2, b^-1 a b a>
  CHECK(order_of(abstract_presentation(2, {{0, 0, 0, 0}, {0, 0, -2, -2}, {-2, 0, 1, 0}})) == 8);
  // trivial group in disguise: <a, b | a b a^-1 b^-2, b a b^-1 a^-2>
  CHECK(order_of(abstract_presentation(2, {{0, 1, -1, -2, -2}, {1, 0, -2, -1, -1}})) == 1);
  CHECK(order_of(abstract_presentation(0, {})) == 1);
}

TEST_CASE("coset enumeration relative to a subgroup gives its index") {
  const auto s3 = abstract_presentation(2, {{0, 0}, {1, 1, 1}, {0, 1, 0, 1}});
  const auto t = todd_coxeter(s3, {Word{{0, false}}});
  REQUIRE(t.complete());
  CHECK(t.cosets == 3);
}

TEST_CASE("infinite groups hit the coset cap") {
  const auto free2 = abstract_presentation(2, {});
  CHECK(todd_coxeter(free2, {}, 5000).status == EnumerationStatus::CapExceeded);
  const auto z2 = abstract_presentation(2, {{0, 1, -1, -2}});
  const auto t = todd_coxeter(z2, {}, 5000);
  CHECK_FALSE(t.complete());
  CHECK(t.peak_cosets <= 5000);
}

TEST_CASE("complete coset tables are permutation actions satisfying the relators") {
  const auto p = abstract_presentation(2, {{0, 0}, {1, 1, 1}, {0, 1, 0, 1, 0, 1, 0, 1}});
  const auto t = todd_coxeter(p);
  REQUIRE(t.complete());
  CHECK(t.cosets == 24);
  for (const auto& row : t.action) {
    std::vector<int> seen(t.cosets, 0);
    for (auto c : row) ++seen[c];
    CHECK(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));
  }
  for (std::uint32_t c = 0; c < t.cosets; ++c)
    for (const auto& r : p.relators) {
      std::uint32_t x = c;
      for (const auto& l : r) {
        if (!l.inverse) {
          x = t.action[l.generator][x];
        } else {
          for (std::uint32_t y = 0; y < t.cosets; ++y)
            if (t.action[l.generator][y] == x) {
              x = y;
              break;
            }
        }
      }
      CHECK(x == c);
    }
  const auto table = regular_cayley_table(t);
  CHECK(FiniteGroup::from_cayley_table(table).order() == 24);
}

TEST_CASE("colimit of the abelian subgroups of an abelian group is the group") {
  for (const auto& e : std::vector<CatalogEntry>{
           {"cyclic", {12}}, {"abelian", {2, 2}}, {"abelian", {2, 6}}, {"cyclic", {30}}}) {
    CAPTURE(e.label());
    const auto r = colimit_group(catalog(e.name, e.params));
    REQUIRE(r.complete());
    CHECK(*r.order == catalog(e.name, e.params).order());
    CHECK(r.psi_kernel_order == 1);
    CHECK(r.psi_homomorphism);
    CHECK(r.psi_surjective);
  }
}

TEST_CASE("colimits of groups with transitive commutation are infinite amalgams") {
  for (const auto& e :
       std::vector<CatalogEntry>{{"dihedral", {8}}, {"quaternion8", {}}, {"symmetric", {3}}}) {
    CAPTURE(e.label());
    const auto g = catalog(e.name, e.params);
    CHECK_FALSE(colimit_group(g, 2, 20000).complete());
    const auto a = tc_amalgam_presentation(g, 20000);
    CHECK_FALSE(a.enumeration.complete());
    CHECK(a.abelianization.rank == 0);
  }
  CHECK_THROWS_AS(tc_amalgam_presentation(catalog("symmetric", {4})), Error);
}

TEST_CASE("rank-2 reduction keeps the colimit") {
  for (const auto& e : std::vector<CatalogEntry>{
           {"cyclic", {30}}, {"abelian", {2, 6}}, {"abelian", {2, 2, 2}}, {"extraspecial_minus", {2}}}) {
    CAPTURE(e.label());
    const auto c = compare_rank2(catalog(e.name, e.params));
    REQUIRE(c.both_complete());
    CHECK(c.isomorphic);
    CHECK(c.full_order == c.reduced_order);
  }
  const auto z30 = compare_rank2(catalog("cyclic", {30}));
  CHECK(z30.reduced_relators < z30.full_relators);
}

TEST_CASE("abelian colimit of extraspecial groups of order 32") {
  for (bool minus : {false, true}) {
    const auto c = verify_extraspecial_colimit(2, minus);
    CHECK(c.applicable);
    CHECK(c.expected_order == 64);
    CHECK(c.colimit_order == 64);
    CHECK(c.kernel_order_two);
    CHECK(c.kernel_central);
    CHECK(c.kernel_meets_commutator_trivially);
    CHECK(c.complement_found);
    CHECK(c.complement_isomorphic);
    CHECK(c.complement.size() == 32);
    CHECK(c.passed());
  }
  const auto small = verify_extraspecial_colimit(1, false, 20000);
  CHECK_FALSE(small.applicable);
  CHECK_FALSE(small.note.empty());
  CHECK(small.amalgam.has_value());
}

TEST_CASE("colimits with q = 3 use class-2 subgroups") {
  const auto d8 = catalog("dihedral", {8});
  const auto r = colimit_group(d8, 3);
  REQUIRE(r.complete());
  CHECK(*r.order == 8);
  CHECK(r.psi_kernel_order == 1);
}

TEST_CASE("abelianization of presentations") {
  CHECK(abelianization(abstract_presentation(2, {{0, 0}, {1, 1, 1}, {0, 1, 0, 1}})) ==
        FgAbelianGroup::from_cyclic_orders(0, {Integer(2)}));
  CHECK(abelianization(abstract_presentation(2, {})) == FgAbelianGroup{2, {}});
  CHECK_THROWS_AS(abelian_colimit_presentation(all_subgroups(catalog("symmetric", {3}))), Error);
}
