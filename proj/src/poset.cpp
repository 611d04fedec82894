#include <bqg/poset.hpp>

#include <bqg/abelian.hpp>

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace bqg {

SubgroupPoset::SubgroupPoset(FiniteGroup group, std::vector<Subgroup> members,
                             bool closed_under_subgroups)
    : group_(std::move(group)), closed_under_subgroups_(closed_under_subgroups) {
  std::sort(members.begin(), members.end(), canonical_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
  const auto n = members_.size();
  leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      leq_[i * n + j] = members_[i].order() <= members_[j].order() &&
                        members_[i].subset_of(members_[j]);
  contains_trivial_ = !members_.empty() && members_.front().is_trivial();
}

std::optional<std::size_t> SubgroupPoset::index_of(const Subgroup& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s, canonical_less);
  if (it != members_.end() && *it == s) return static_cast<std::size_t>(it - members_.begin());
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> SubgroupPoset::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const auto n = members_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) cover = false;
      if (cover) edges.emplace_back(i, j);
    }
  return edges;
}

SubgroupPoset nilpotent_poset(const FiniteGroup& g, int q, SubgroupLimits limits) {
  if (q < 1) fail(ErrorCode::InvalidInput, "q must be at least 1");
  std::vector<Subgroup> keep;
  for (auto& h : all_subgroups(g, limits)) {
    if (q == 2) {
      if (h.is_abelian()) keep.push_back(std::move(h));
      continue;
    }
    const auto c = nilpotency_class(h);
    if (c && *c < q) keep.push_back(std::move(h));
  }
  return SubgroupPoset(g, std::move(keep), true);
}

SubgroupPoset nilpotent_p_poset(const FiniteGroup& g, int q, std::uint64_t p,
                                SubgroupLimits limits) {
  auto full = nilpotent_poset(g, q, limits);
  std::vector<Subgroup> keep;
  for (const auto& h : full.members())
    if (is_p_power(h.order(), p)) keep.push_back(h);
  return SubgroupPoset(g, std::move(keep), true);
}

std::vector<Subgroup> maximal_members(const SubgroupPoset& p) {
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < p.size() && maximal; ++j)
      if (j != i && p.leq(i, j)) maximal = false;
    if (maximal) out.push_back(p[i]);
  }
  return out;
}

SubgroupPoset intersection_closure(const std::vector<Subgroup>& maximals) {
  if (maximals.empty()) fail(ErrorCode::InvalidInput, "intersection closure of an empty family");
  std::unordered_map<ElemSet, Subgroup, ElemSetHash> found;
  std::vector<Subgroup> frontier;
  for (const auto& m : maximals)
    if (found.emplace(m.set(), m).second) frontier.push_back(m);
  // Intersections of k+1 maximals are intersections of a k-fold one with a maximal.
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& s : frontier)
      for (const auto& m : maximals) {
        auto t = intersection(s, m);
        if (found.emplace(t.set(), t).second) next.push_back(std::move(t));
      }
    frontier = std::move(next);
  }
  std::vector<Subgroup> members;
  members.reserve(found.size());
  for (auto& [set, s] : found) members.push_back(s);
  return SubgroupPoset(maximals.front().parent(), std::move(members), false);
}

DnDiagram::DnDiagram(std::vector<Subgroup> maximals, std::size_t max_index_count)
    : maximals_(std::move(maximals)) {
  if (maximals_.empty()) fail(ErrorCode::InvalidInput, "dn diagram needs at least one maximal");
  if (maximals_.size() > max_index_count || maximals_.size() > 31)
    fail(ErrorCode::SizeCap, "dn diagram with " + std::to_string(maximals_.size()) +
                                 " maximals exceeds the configured bound");
  std::unordered_map<ElemSet, std::uint32_t, ElemSetHash> ids;
  auto intern = [&](Subgroup s) {
    auto [it, inserted] = ids.emplace(s.set(), static_cast<std::uint32_t>(distinct_.size()));
    if (inserted) distinct_.push_back(std::move(s));
    return it->second;
  };
  const std::size_t nodes = node_count();
  node_subgroup_.assign(nodes + 1, 0);
  for (std::uint32_t mask = 1; mask <= nodes; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const auto bit = static_cast<std::size_t>(std::countr_zero(low));
    if (mask == low) {
      node_subgroup_[mask] = intern(maximals_[bit]);
    } else {
      const auto& rest = distinct_[node_subgroup_[mask ^ low]];
      node_subgroup_[mask] = intern(intersection(rest, maximals_[bit]));
    }
  }
}

std::vector<std::uint32_t> DnDiagram::simplices(std::size_t cardinality) const {
  std::vector<std::uint32_t> out;
  const std::size_t n = maximals_.size();
  if (cardinality == 0 || cardinality > n) return out;
  std::vector<std::size_t> idx(cardinality);
  for (std::size_t i = 0; i < cardinality; ++i) idx[i] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (auto i : idx) mask |= std::uint32_t{1} << i;
    out.push_back(mask);
    std::size_t i = cardinality;
    while (i > 0 && idx[i - 1] == n - cardinality + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < cardinality; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

DnDiagram dn_diagram(const std::vector<Subgroup>& maximals, std::size_t max_n) {
  return DnDiagram(maximals, max_n + 1);
}

std::vector<std::vector<std::size_t>> strict_chains(const SubgroupPoset& p, std::size_t max_len) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> chain;
  auto extend = [&](auto&& self) -> void {
    out.push_back(chain);
    if (chain.size() == max_len + 1) return;
    const auto last = chain.back();
    for (std::size_t j = 0; j < p.size(); ++j)
      if (j != last && p.leq(last, j)) {
        chain.push_back(j);
        self(self);
        chain.pop_back();
      }
  };
  for (std::size_t i = 0; i < p.size(); ++i) {
    chain.assign(1, i);
    extend(extend);
  }
  return out;
}

SubgroupPoset restrict_rank2(const SubgroupPoset& p) {
  std::vector<Subgroup> keep;
  for (const auto& h : p.members()) {
    if (!h.is_abelian())
      fail(ErrorCode::NotAbelianCollection, "restrict_rank2 needs abelian members");
    if (d_value(h) <= 2) keep.push_back(h);
  }
  return SubgroupPoset(p.group(), std::move(keep), p.closed_under_subgroups());
}

}  // namespace bqg
