#pragma once

#include <bqg/presentation.hpp>

#include <cstdint>
#include <vector>

namespace bqg {

enum class EnumerationStatus { Complete, CapExceeded };

/// Result of a coset enumeration. When Complete, cosets are numbered in
/// breadth-first order from coset 0 (the subgroup) and action[g][c] is the
/// image of coset c under generator g.
struct CosetTable {
  EnumerationStatus status = EnumerationStatus::CapExceeded;
  std::size_t generators = 0;
  std::size_t cosets = 0;  // the index when Complete, live cosets otherwise
  std::vector<std::vector<std::uint32_t>> action;
  /// Breadth-first tree: coset c = parent[c] acted on by parent_letter[c].
  std::vector<std::uint32_t> parent;
  std::vector<Letter> parent_letter;
  std::size_t peak_cosets = 0;
  std::size_t defined_cosets = 0;

  bool complete() const { return status == EnumerationStatus::Complete; }
  /// Word from coset 0 to coset c along the tree.
  Word word_of(std::uint32_t c) const;
};

/// HLT enumeration with deduction processing and lookahead when the table
/// is full. `cap` bounds the number of cosets held at any time.
CosetTable todd_coxeter(const GroupPresentation& p, const std::vector<Word>& subgroup = {},
                        std::size_t cap = 1'000'000);

}  // namespace bqg
