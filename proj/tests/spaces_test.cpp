#include <doctest.h>

#include <bqg/catalog.hpp>
#include <bqg/colimit.hpp>
#include <bqg/spaces.hpp>

using namespace bqg;

namespace {

FgAbelianGroup cyc(long n) { return FgAbelianGroup::from_cyclic_orders(0, {Integer(n)}); }
FgAbelianGroup Zn(std::size_t r) { return FgAbelianGroup{r, {}}; }

// Commuting ordered pairs of non-identity elements, counted directly.
std::size_t commuting_pairs(const FiniteGroup& g) {
  std::size_t n = 0;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (x != g.identity() && y != g.identity() && g.commute(x, y)) ++n;
  return n;
}

}  // namespace

TEST_CASE("simplices of B(2,G) are commuting tuples") {
  for (const auto& e : catalog_sweep(16)) {
    const auto g = catalog(e.name, e.params);
    const auto d = bqg_simplices(g, 2, 2);
    CHECK(d.counts[1] == g.order() - 1);
    CHECK(d.counts[2] == commuting_pairs(g));
    CHECK(d.face_identities_hold());
  }
  CHECK(bqg_simplices(catalog("symmetric", {3}), 2, 1).counts[2] == 7);
}

TEST_CASE("homology of B(2, Z/n) is the group homology of Z/n") {
  for (long n : {2L, 3L, 4L, 6L}) {
    const auto h = bqg_homology(cyclic_group(static_cast<std::size_t>(n)), 2, 3);
    CHECK(h[0] == Zn(1));
    CHECK(h[1] == cyc(n));
    CHECK(h[2].is_zero());
    CHECK(h[3] == cyc(n));
  }
}

TEST_CASE("H1 of B(2,S3)") {
  const auto h = bqg_homology(catalog("symmetric", {3}), 2, 1);
  CHECK(h[1] == FgAbelianGroup::from_cyclic_orders(
                     0, {Integer(3), Integer(2), Integer(2), Integer(2)}));
}

TEST_CASE("B(q,G) for q above the class is BG") {
  // D8 has class 2, so B(3,D8) = BD8 and H1 is the abelianization
  const auto h = bqg_homology(catalog("dihedral", {8}), 3, 1);
  CHECK(h[1] == FgAbelianGroup::from_cyclic_orders(0, {Integer(2), Integer(2)}));
}

TEST_CASE("basis cap guards B(q,G) chains") {
  CHECK_THROWS_AS(bqg_simplices(catalog("abelian", {2, 2, 2, 2}), 2, 3, std::nullopt, 1000), Error);
}

TEST_CASE("homology splits over primes") {
  for (const auto& e : std::vector<CatalogEntry>{{"cyclic", {6}}, {"symmetric", {3}}, {"dihedral", {12}}}) {
    CAPTURE(e.label());
    CHECK(splitting_report(catalog(e.name, e.params), 2, 2).passed);
  }
}

TEST_CASE("transport nerve of one-point sets is the order complex") {
  const auto g = catalog("dihedral", {8});
  const auto members = nilpotent_poset(g, 2).members();
  GSetDiagram d;
  d.poset = inclusion_order(members);
  d.set_sizes.assign(members.size(), 1);
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = 0; b < members.size(); ++b)
      if (a != b && d.poset.le(a, b)) d.maps[{a, b}] = {0};
  const auto nerve = transport_nerve(d);
  CHECK(nerve.face_identities_hold());
  CHECK(nerve.counts == order_complex_chains(d.poset).dims());
  const auto h = homology_all(nerve.chains());
  CHECK(h[0] == Zn(1));
  for (std::size_t k = 1; k < h.size(); ++k) CHECK(h[k].is_zero());
}

TEST_CASE("set diagrams are validated") {
  GSetDiagram d;
  d.poset.size = 2;
  d.poset.leq = {1, 1, 0, 1};
  d.set_sizes = {2, 2};
  d.maps[{0, 1}] = {0, 0};
  CHECK_THROWS_AS(d.validate(), Error);
  d.maps[{0, 1}] = {1, 0};
  CHECK_NOTHROW(d.validate());
}

TEST_CASE("universal cover of E(2,G) for extraspecial groups of order 32") {
  for (const char* name : {"extraspecial_plus", "extraspecial_minus"}) {
    const auto u = universal_cover_homology(catalog(name, {2}));
    CHECK(u.colimit_order == 64);
    CHECK(u.nerve.euler_characteristic == 152);
    REQUIRE(u.nerve.homology.size() == 3);
    CHECK(u.nerve.homology[0] == Zn(1));
    CHECK(u.nerve.homology[1].is_zero());
    CHECK(u.nerve.homology[2] == Zn(151));
    CHECK(u.simply_connected);
  }
}

TEST_CASE("universal cover of an abelian group is a point") {
  const auto u = universal_cover_homology(catalog("abelian", {2, 2}));
  CHECK(u.poset_size == 1);
  CHECK(u.nerve.euler_characteristic == 1);
}

TEST_CASE("universal cover needs a finite colimit") {
  CHECK_THROWS_AS(universal_cover_homology(catalog("dihedral", {8}), 2, 5000), Error);
}

TEST_CASE("coset poset of Z/2 x Z/2") {
  const auto g = catalog("abelian", {2, 2});
  const auto p = coset_poset(g);
  CHECK(p.size == 10);
  std::size_t strict = 0;
  for (std::size_t i = 0; i < p.size; ++i)
    for (std::size_t j = 0; j < p.size; ++j)
      if (i != j && p.le(i, j)) ++strict;
  CHECK(strict == 12);
  const auto h = coset_poset_homology(g);
  CHECK(h.euler_characteristic == -2);
  const auto r = reduced(h.homology);
  CHECK(r[0].is_zero());
  CHECK(r[1] == Zn(3));
}

TEST_CASE("complemented chief factors") {
  CHECK(complemented_chief_factor_count(catalog("cyclic", {4})) == 1);
  CHECK(complemented_chief_factor_count(catalog("cyclic", {6})) == 2);
  CHECK(complemented_chief_factor_count(catalog("abelian", {2, 2})) == 2);
  CHECK(complemented_chief_factor_count(catalog("symmetric", {3})) == 2);
  CHECK(complemented_chief_factor_count(catalog("quaternion8")) == 2);
  CHECK(complemented_chief_factor_count(catalog("symmetric", {4})) == 3);
  CHECK_THROWS_AS(complemented_chief_factors(catalog("symmetric", {5})), Error);
}

TEST_CASE("coset posets of solvable groups are wedges of equidimensional spheres") {
  for (const auto& e : catalog_sweep(12)) {
    CAPTURE(e.label());
    const auto w = verify_wedge_spheres(catalog(e.name, e.params));
    CHECK(w.passed);
    CHECK(w.spheres > 0);
  }
}

TEST_CASE("K-theory of extraspecial group of order 32") {
  const auto k = ktheory_report(catalog("extraspecial_plus", {2}));
  CHECK(k.collapse_certified);
  CHECK(k.k0 == "Z + Z_2^31");
  CHECK(k.k1 == "(Z/2)^9");
  CHECK(k.rational_k0 == "Q + Q_2^31");
  CHECK(k.rational_k1 == "0");
}

TEST_CASE("K-theory of a group with two primes") {
  const auto k = ktheory_report(catalog("symmetric", {3}));
  CHECK(k.collapse_certified);
  CHECK(k.k0 == "Z + Z_2^3 + Z_3^2");
  CHECK(k.k1 == "0");
}

TEST_CASE("E(2,G) of a transitively commutative group") {
  // D8: three maximal abelian subgroups meeting in the center
  const auto h = eqg_homology(catalog("dihedral", {8}));
  CHECK(h.homology[0] == Zn(1));
  CHECK(h.euler_characteristic == h.betti_euler);
}
