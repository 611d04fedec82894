#pragma once

#include <bqg/chain_complex.hpp>
#include <bqg/group.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace bqg {

struct Letter {
  std::uint32_t generator;
  bool inverse = false;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

/// Finitely presented group. For colimit presentations every generator
/// stands for a non-identity element of a fixed finite group.
struct GroupPresentation {
  std::vector<std::string> labels;
  std::vector<Elem> elements;  // empty when generators are abstract
  std::vector<Word> relators;

  std::size_t generator_count() const { return labels.size(); }
  /// Throws InvalidInput when a relator names an undeclared generator.
  void validate() const;
  /// "generators: [g1, g2]" and "relators: [g1^2, g1*g2*g3^-1]" lines.
  std::string to_text() const;
};

/// Abstract presentation from generator count and relators written with
/// generator indices, negative entries meaning inverses (k -> -(k+1)).
GroupPresentation abstract_presentation(std::size_t generators,
                                        const std::vector<std::vector<int>>& relators);

/// One generator per non-identity element of the union of `collection`.
/// For every member A with generating set S (canonical abelian basis for
/// abelian A), relators x*y*(xy)^-1 for x in S, y in A, identity letters
/// omitted, deduplicated by (x, y, xy).
GroupPresentation colimit_presentation(const std::vector<Subgroup>& collection);
/// Same, throwing NotAbelianCollection for non-abelian members.
GroupPresentation abelian_colimit_presentation(const std::vector<Subgroup>& collection);
/// Colimit presentation of the members with d_value <= 2.
GroupPresentation reduced_colimit_presentation(const std::vector<Subgroup>& collection);

/// Z^r + torsion from the exponent-sum matrix of the relators.
FgAbelianGroup abelianization(const GroupPresentation& p);

}  // namespace bqg
