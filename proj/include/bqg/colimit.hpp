#pragma once

#include <bqg/poset.hpp>
#include <bqg/presentation.hpp>
#include <bqg/todd_coxeter.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bqg {

/// Cayley table of the group enumerated by a complete coset table over the
/// trivial subgroup: element j is the coset reached by the tree word of j,
/// and table[i][j] is coset i acted on by that word.
std::vector<std::vector<Elem>> regular_cayley_table(const CosetTable& t);

/// Colimit of a collection of subgroups of G and the natural map psi to G.
struct ColimitReport {
  int q = 2;
  bool reduced = false;
  std::size_t collection_size = 0;
  GroupPresentation presentation;
  CosetTable table;
  std::optional<std::size_t> order;
  std::size_t psi_kernel_order = 0;
  bool psi_surjective = false;
  bool psi_homomorphism = false;
  bool kernel_central = false;
  std::optional<FiniteGroup> realization;  // absent when incomplete or too large
  std::vector<Elem> psi;                   // realization element -> G element
  std::vector<Elem> iota;                  // G element -> realization element

  bool complete() const { return table.complete(); }
};

/// Enumerates the colimit presentation of `collection`.
ColimitReport colimit_of_collection(const FiniteGroup& g, const std::vector<Subgroup>& collection,
                                    std::size_t cap = 1'000'000);

/// q = 2: abelian subgroups, rank-2 reduced unless reduce is false.
/// q > 2: all members of N(q, G), no reduction.
ColimitReport colimit_group(const FiniteGroup& g, int q = 2, std::size_t cap = 1'000'000,
                            bool reduce = true, SubgroupLimits limits = {});

/// Full against rank-2 reduced presentation of the abelian subgroups.
struct Rank2Comparison {
  EnumerationStatus full_status = EnumerationStatus::CapExceeded;
  EnumerationStatus reduced_status = EnumerationStatus::CapExceeded;
  std::size_t full_order = 0;
  std::size_t reduced_order = 0;
  std::size_t full_relators = 0;
  std::size_t reduced_relators = 0;
  /// The generator-identity map from the reduced colimit to the full one is
  /// a well-defined homomorphism and a bijection.
  bool isomorphic = false;
  bool both_complete() const {
    return full_status == EnumerationStatus::Complete &&
           reduced_status == EnumerationStatus::Complete;
  }
};
Rank2Comparison compare_rank2(const FiniteGroup& g, std::size_t cap = 100'000,
                              SubgroupLimits limits = {});

/// Amalgam of the maximal abelian subgroups of a TC group along the center.
struct AmalgamReport {
  std::vector<Subgroup> maximals;
  Subgroup center;
  GroupPresentation presentation;
  FgAbelianGroup abelianization;
  CosetTable enumeration;
};
AmalgamReport tc_amalgam_presentation(const FiniteGroup& g, std::size_t cap = 100'000);

struct ExtraspecialColimitCheck {
  std::size_t n = 0;
  bool minus = false;
  bool applicable = false;  // n >= 2
  std::string note;
  std::size_t group_order = 0;
  std::size_t expected_order = 0;
  std::size_t colimit_order = 0;
  EnumerationStatus status = EnumerationStatus::CapExceeded;
  bool order_ok = false;
  bool kernel_order_two = false;
  bool kernel_central = false;
  bool kernel_meets_commutator_trivially = false;
  bool complement_found = false;
  bool complement_isomorphic = false;  // psi restricted to the complement is bijective
  std::vector<Elem> complement;         // members, as realization elements
  std::optional<AmalgamReport> amalgam;  // n = 1
  bool passed() const {
    return applicable && order_ok && kernel_order_two && kernel_central &&
           kernel_meets_commutator_trivially && complement_found && complement_isomorphic;
  }
};
ExtraspecialColimitCheck verify_extraspecial_colimit(std::size_t n, bool minus,
                                                     std::size_t cap = 1'000'000);

}  // namespace bqg
