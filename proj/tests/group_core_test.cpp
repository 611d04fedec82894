#include <doctest.h>

#include <bqg/abelian.hpp>
#include <bqg/catalog.hpp>
#include <bqg/io.hpp>
#include <bqg/poset.hpp>

using namespace bqg;

namespace {

std::size_t subgroup_count(const FiniteGroup& g) { return all_subgroups(g).size(); }

}  // namespace

TEST_CASE("catalog groups have the expected orders") {
  CHECK(catalog("cyclic", {12}).order() == 12);
  CHECK(catalog("abelian", {2, 2, 3}).order() == 12);
  CHECK(catalog("dihedral", {8}).order() == 8);
  CHECK(catalog("quaternion8").order() == 8);
  CHECK(catalog("symmetric", {4}).order() == 24);
  CHECK(catalog("extraspecial_plus", {2}).order() == 32);
  CHECK(catalog("extraspecial_minus", {2}).order() == 32);
  CHECK(catalog("extraspecial_plus", {3}).order() == 128);
}

TEST_CASE("catalog rejects bad names and parameters") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(code([] { catalog("nonsense", {3}); }) == ErrorCode::UnknownName);
  CHECK(code([] { catalog("dihedral", {7}); }) == ErrorCode::UnsupportedParam);
  CHECK(code([] { catalog("cyclic", {}); }) == ErrorCode::UnsupportedParam);
  CHECK(code([] { catalog("symmetric", {9}); }) == ErrorCode::UnsupportedParam);
}

TEST_CASE("Cayley tables violating the axioms are rejected") {
  // x*y = x - y mod 3 has no two-sided identity and is not associative
  std::vector<std::vector<Elem>> t(3, std::vector<Elem>(3));
  for (Elem x = 0; x < 3; ++x)
    for (Elem y = 0; y < 3; ++y) t[x][y] = (x + 3 - y) % 3;
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table(t), Error);
  std::vector<std::vector<Elem>> ragged{{0, 1}, {1}};
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table(ragged), Error);
}

TEST_CASE("subgroup lattices of small groups") {
  CHECK(subgroup_count(catalog("dihedral", {8})) == 10);
  CHECK(subgroup_count(catalog("quaternion8")) == 6);
  CHECK(subgroup_count(catalog("symmetric", {3})) == 6);
  CHECK(subgroup_count(catalog("symmetric", {4})) == 30);
  CHECK(subgroup_count(catalog("cyclic", {12})) == 6);
  CHECK(subgroup_count(catalog("abelian", {2, 2})) == 5);
  CHECK(subgroup_count(catalog("abelian", {2, 2, 2})) == 16);
}

TEST_CASE("subgroup orders divide the group order") {
  for (const auto& e : catalog_sweep(32)) {
    const auto g = catalog(e.name, e.params);
    for (const auto& h : all_subgroups(g)) {
      CHECK(g.order() % h.order() == 0);
      for (Elem x : h.members())
        for (Elem y : h.members()) CHECK(h.contains(g.mul(x, g.inv(y))));
    }
  }
}

TEST_CASE("center, derived subgroup and class of extraspecial groups") {
  for (const char* name : {"extraspecial_plus", "extraspecial_minus"}) {
    const auto g = catalog(name, {2});
    const auto z = center(g);
    CHECK(z.order() == 2);
    CHECK(derived_subgroup(whole_group(g)) == z);
    CHECK(nilpotency_class(whole_group(g)) == 2);
    CHECK(!is_transitively_commutative(g));
    const auto census = element_census(g);
    CHECK(census.prime_power_counts.at(2) == 31);
    CHECK(census.mixed_order_count == 0);
  }
}

TEST_CASE("N(q,G) counts subgroups of class below q") {
  const auto d8 = catalog("dihedral", {8});
  CHECK(nilpotent_poset(d8, 2).size() == 9);
  CHECK(nilpotent_poset(d8, 3).size() == 10);
  const auto s3 = catalog("symmetric", {3});
  CHECK(nilpotent_poset(s3, 2).size() == 5);
  CHECK(nilpotent_poset(s3, 5).size() == 5);  // S3 is not nilpotent
  CHECK(nilpotent_p_poset(s3, 2, 3).size() == 2);
  CHECK(nilpotent_poset(d8, 2).contains_trivial());
  CHECK(nilpotency_class(whole_group(catalog("dihedral", {16}))) == 3);
  CHECK_FALSE(nilpotency_class(whole_group(s3)).has_value());
}

TEST_CASE("transitive commutativity") {
  CHECK(is_transitively_commutative(catalog("dihedral", {8})));
  CHECK(is_transitively_commutative(catalog("quaternion8")));
  CHECK(is_transitively_commutative(catalog("symmetric", {3})));
  CHECK_FALSE(is_transitively_commutative(catalog("symmetric", {4})));
}

TEST_CASE("solvability") {
  CHECK(is_solvable(catalog("symmetric", {4})));
  CHECK_FALSE(is_solvable(catalog("symmetric", {5})));
}

TEST_CASE("intersection closure is closed under intersections") {
  for (const char* name : {"extraspecial_plus", "extraspecial_minus"}) {
    const auto g = catalog(name, {2});
    const auto mx = maximal_members(nilpotent_poset(g, 2));
    const auto cl = intersection_closure(mx);
    for (const auto& a : cl.members())
      for (const auto& b : cl.members()) CHECK(cl.index_of(intersection(a, b)).has_value());
    CHECK(mx.size() == 15);
  }
}

TEST_CASE("poset order agrees with inclusion") {
  const auto p = nilpotent_poset(catalog("dihedral", {16}), 2);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) CHECK(p.leq(i, j) == p[i].subset_of(p[j]));
}

TEST_CASE("dn diagram nodes are intersections of the chosen maximals") {
  const auto g = catalog("extraspecial_plus", {2});
  const auto mx = maximal_members(nilpotent_poset(g, 2));
  const DnDiagram d(std::vector<Subgroup>(mx.begin(), mx.begin() + 4));
  CHECK(d.node_count() == 15);
  for (std::uint32_t mask = 1; mask <= d.node_count(); ++mask) {
    auto expect = whole_group(g);
    for (std::size_t i = 0; i < 4; ++i)
      if (mask >> i & 1) expect = intersection(expect, mx[i]);
    CHECK(d.at(mask) == expect);
  }
  CHECK(d.simplices(2).size() == 6);
}

TEST_CASE("abelian invariants and the d value") {
  const auto g = catalog("abelian", {2, 6});
  const auto w = whole_group(g);
  CHECK(abelian_invariants(w) == std::vector<std::uint64_t>{2, 6});
  CHECK(d_value(w) == 3);
  CHECK(d_value(whole_group(catalog("cyclic", {30}))) == 3);
  CHECK(d_value(whole_group(catalog("abelian", {4, 4}))) == 2);
  CHECK_THROWS_AS(d_value(whole_group(catalog("symmetric", {3}))), Error);
}

TEST_CASE("restriction of characters is a surjective homomorphism") {
  const auto g = catalog("abelian", {2, 4});
  const CharacterGroup whole(whole_group(g));
  for (const auto& h : all_subgroups(g)) {
    const CharacterGroup sub(h);
    const auto r = whole.restriction_to(sub);
    std::vector<int> hit(sub.size(), 0);
    for (auto v : r) hit[v] = 1;
    CHECK(std::count(hit.begin(), hit.end(), 1) == static_cast<long>(sub.size()));
    for (std::size_t i = 0; i < whole.size(); ++i)
      for (Elem x : h.members()) CHECK(whole.evaluate(i, x) == sub.evaluate(r[i], x));
  }
}

TEST_CASE("permutation groups close under products") {
  const auto g = from_permutations({{1, 0, 2, 3}, {1, 2, 3, 0}}, 4);
  CHECK(g.order() == 24);
  const auto a = from_permutations({{1, 2, 0}}, 3);
  CHECK(a.order() == 3);
  CHECK(a.is_abelian());
}

TEST_CASE("group JSON round trip preserves the table") {
  const auto g = catalog("dihedral", {12});
  const auto back = group_from_json(group_to_json(g));
  CHECK(back.table() == g.table());
  CHECK(back.names() == g.names());
  const auto spec = group_from_spec("catalog:abelian:2:3");
  CHECK(spec.order() == 6);
  CHECK(spec.is_abelian());
  CHECK_THROWS_AS(group_from_spec("catalog:cyclic:x"), Error);
  CHECK_THROWS_AS(group_from_spec("cyclic:4"), Error);
  CHECK_THROWS_AS(group_from_spec("@/nonexistent/file.json"), Error);
  const auto perm = group_from_json(Json::parse(R"({"degree": 3, "permutations": [[1,0,2],[1,2,0]]})"));
  CHECK(perm.order() == 6);
  const auto named = group_from_json(Json::parse(R"({"catalog": "quaternion8"})"));
  CHECK(named.order() == 8);
}
