#pragma once

#include <bqg/error.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bqg {

using Elem = std::uint32_t;

/// Fixed-capacity bitset over the elements of one group.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }
  bool contains(Elem x) const { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void insert(Elem x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Elem x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }
  std::size_t count() const;
  bool subset_of(const ElemSet& other) const;
  ElemSet operator&(const ElemSet& other) const;
  std::vector<Elem> elements() const;
  std::size_t hash() const;

  friend bool operator==(const ElemSet&, const ElemSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const { return s.hash(); }
};

/// A finite group stored as a validated Cayley table. Copies share the
/// underlying table.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Validates the group axioms; throws NotAGroup with a witness.
  static FiniteGroup from_cayley_table(
      const std::vector<std::vector<Elem>>& table,
      std::vector<std::string> names = {});

  std::size_t order() const { return data_ ? data_->order : 0; }
  Elem identity() const { return data_->identity; }
  Elem mul(Elem a, Elem b) const { return data_->table[a * data_->order + b]; }
  Elem inv(Elem a) const { return data_->inverse[a]; }
  Elem pow(Elem a, long long k) const;
  Elem commutator(Elem a, Elem b) const {  // a^-1 b^-1 a b
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }
  std::size_t element_order(Elem a) const { return data_->orders[a]; }
  const std::vector<std::string>& names() const { return data_->names; }
  std::string name_of(Elem a) const;
  std::vector<std::vector<Elem>> table() const;
  bool is_abelian() const;

  /// Same underlying table object (not an isomorphism test).
  bool same_as(const FiniteGroup& other) const { return data_ == other.data_; }

 private:
  struct Data {
    std::size_t order = 0;
    Elem identity = 0;
    std::vector<Elem> table;
    std::vector<Elem> inverse;
    std::vector<std::size_t> orders;
    std::vector<std::string> names;
  };
  std::shared_ptr<const Data> data_;
};

/// Closure of a list of permutations of {0..degree-1}. Elements are ordered
/// breadth-first from the identity, generators in input order. The product
/// p*q applies p first, then q.
FiniteGroup from_permutations(const std::vector<std::vector<std::size_t>>& generators,
                              std::size_t degree, std::size_t cap = 100000);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// (G1 x G2) / <(z1, z2)>.
FiniteGroup central_product(const FiniteGroup& g1, const FiniteGroup& g2,
                            Elem z1, Elem z2);

/// Subgroup value object, identified by its member set.
class Subgroup {
 public:
  Subgroup() = default;
  /// Members must already form a subgroup; `generators` may be empty.
  Subgroup(FiniteGroup parent, ElemSet members, std::vector<Elem> generators = {});

  const FiniteGroup& parent() const { return parent_; }
  const ElemSet& set() const { return set_; }
  const std::vector<Elem>& members() const { return members_; }
  const std::vector<Elem>& generators() const { return generators_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Elem x) const { return set_.contains(x); }
  bool subset_of(const Subgroup& other) const { return set_.subset_of(other.set_); }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_abelian() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.set_ == b.set_; }

 private:
  FiniteGroup parent_;
  ElemSet set_;
  std::vector<Elem> members_;
  std::vector<Elem> generators_;
};

/// Canonical order: by size, then by sorted member list.
bool canonical_less(const Subgroup& a, const Subgroup& b);

Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Elem> generators);
Subgroup join(const Subgroup& h, Elem x);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const Subgroup& h);
bool is_normal(const Subgroup& h);

std::vector<Subgroup> lower_central_series(const Subgroup& h);
/// Least c with Gamma^{c+1}(H) = 1 (0 for the trivial group); nullopt when
/// the series stabilizes above 1.
std::optional<int> nilpotency_class(const Subgroup& h);
bool is_solvable(const FiniteGroup& g);

struct SubgroupLimits {
  std::size_t max_order = 256;
  std::size_t max_subgroups = 100000;
};

/// Every subgroup of G in canonical order.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, SubgroupLimits limits = {});

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_p_power(std::uint64_t n, std::uint64_t p);

/// Elements of N of p-power order; N must be nilpotent.
Subgroup sylow_component(const Subgroup& n, std::uint64_t p);

struct ElementCensus {
  std::map<std::uint64_t, std::size_t> prime_power_counts;  // p -> n_p
  std::size_t mixed_order_count = 0;                        // non prime-power orders
};
ElementCensus element_census(const FiniteGroup& g);

/// Throws AbelianInput for abelian G.
bool is_transitively_commutative(const FiniteGroup& g);

}  // namespace bqg
