#pragma once

#include <bqg/group.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace bqg {

/// A family of subgroups of one group ordered by inclusion.
class SubgroupPoset {
 public:
  SubgroupPoset() = default;
  /// Members are sorted canonically and deduplicated.
  SubgroupPoset(FiniteGroup group, std::vector<Subgroup> members, bool closed_under_subgroups);

  const FiniteGroup& group() const { return group_; }
  const std::vector<Subgroup>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const Subgroup& operator[](std::size_t i) const { return members_[i]; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * members_.size() + j]; }
  bool contains_trivial() const { return contains_trivial_; }
  bool closed_under_subgroups() const { return closed_under_subgroups_; }
  std::optional<std::size_t> index_of(const Subgroup& s) const;
  /// Covering relations (i < j with nothing strictly between).
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

 private:
  FiniteGroup group_;
  std::vector<Subgroup> members_;
  std::vector<char> leq_;
  bool contains_trivial_ = false;
  bool closed_under_subgroups_ = false;
};

/// Subgroups H with Gamma^q(H) = 1, i.e. nilpotency class < q; q = 2 gives
/// the abelian subgroups. Includes the trivial subgroup.
SubgroupPoset nilpotent_poset(const FiniteGroup& g, int q, SubgroupLimits limits = {});
/// The p-subgroups of nilpotent_poset(g, q).
SubgroupPoset nilpotent_p_poset(const FiniteGroup& g, int q, std::uint64_t p,
                                SubgroupLimits limits = {});

std::vector<Subgroup> maximal_members(const SubgroupPoset& p);

/// All intersections of nonempty subfamilies of `maximals`.
SubgroupPoset intersection_closure(const std::vector<Subgroup>& maximals);

/// Intersections M_I of maximal members indexed by nonempty subsets I of
/// {0..n}, encoded as bitmasks. Equal subgroups at different I stay
/// distinct nodes.
class DnDiagram {
 public:
  DnDiagram() = default;
  DnDiagram(std::vector<Subgroup> maximals, std::size_t max_index_count = 21);

  std::size_t maximal_count() const { return maximals_.size(); }
  const std::vector<Subgroup>& maximals() const { return maximals_; }
  /// Number of nodes, 2^{n+1} - 1.
  std::size_t node_count() const { return (std::size_t{1} << maximals_.size()) - 1; }
  const Subgroup& at(std::uint32_t mask) const { return distinct_[node_subgroup_[mask]]; }
  /// Identifier of the subgroup at `mask` among distinct subgroups.
  std::size_t subgroup_id(std::uint32_t mask) const { return node_subgroup_[mask]; }
  const std::vector<Subgroup>& distinct_subgroups() const { return distinct_; }
  /// Masks of the given cardinality in lexicographic order of their index sets.
  std::vector<std::uint32_t> simplices(std::size_t cardinality) const;

 private:
  std::vector<Subgroup> maximals_;
  std::vector<Subgroup> distinct_;
  std::vector<std::uint32_t> node_subgroup_;  // indexed by mask; [0] unused
};

DnDiagram dn_diagram(const std::vector<Subgroup>& maximals, std::size_t max_n = 20);

/// Strict chains A_0 < ... < A_k (k <= max_len) as member indices, in
/// lexicographic order.
std::vector<std::vector<std::size_t>> strict_chains(const SubgroupPoset& p, std::size_t max_len);

/// Members with d_value <= 2; all members must be abelian.
SubgroupPoset restrict_rank2(const SubgroupPoset& p);

}  // namespace bqg
