#pragma once

#include <bqg/group.hpp>

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace bqg {

/// Independent generators a_1..a_k of an abelian subgroup with orders
/// d_1 | d_2 | ... | d_k, and the coordinate vector of every member.
struct AbelianBasis {
  std::vector<Elem> generators;
  std::vector<std::uint64_t> orders;
  std::unordered_map<Elem, std::vector<std::uint64_t>> coordinates;
};

/// Throws NotAbelian.
AbelianBasis abelian_basis(const Subgroup& a);
std::vector<std::uint64_t> abelian_invariants(const Subgroup& a);

/// Sum over primes of the rank of the Sylow subgroup.
int d_value(const Subgroup& t);

/// The dual group of an abelian subgroup: characters are tuples
/// (c_1..c_k), c_i in Z/d_i, in lexicographic order. Character c sends
/// a_1^{x_1}...a_k^{x_k} to exp(2 pi i sum c_i x_i / d_i).
class CharacterGroup {
 public:
  explicit CharacterGroup(const Subgroup& base);

  const Subgroup& base() const { return base_; }
  const AbelianBasis& basis() const { return basis_; }
  std::size_t size() const { return size_; }
  std::vector<std::uint64_t> character(std::size_t index) const;
  std::size_t index_of(const std::vector<std::uint64_t>& c) const;

  /// Value of character `index` at member x, as k in Z/modulus meaning k/modulus.
  std::uint64_t evaluate(std::size_t index, Elem x) const;
  std::uint64_t modulus() const { return modulus_; }

  /// For each character of *this, the index of its restriction in `sub`
  /// (sub must be a subgroup of base()).
  std::vector<std::size_t> restriction_to(const CharacterGroup& sub) const;

 private:
  Subgroup base_;
  AbelianBasis basis_;
  std::size_t size_ = 1;
  std::uint64_t modulus_ = 1;  // exponent of the parent group
};

}  // namespace bqg
