#include <bqg/limits.hpp>

#include <bqg/abelian.hpp>

#include <algorithm>
#include <limits>

namespace bqg {

AbDiagram::AbDiagram(FinitePoset order, std::vector<std::size_t> ranks, MapStore maps)
    : order_(std::move(order)), ranks_(std::move(ranks)), maps_(std::move(maps)) {
  const auto n = ranks_.size();
  if (order_.size != n) fail(ErrorCode::IndexMismatch, "diagram ranks do not match its poset");
  for (std::size_t a = 0; a < n; ++a) identities_.push_back(IntMatrix::identity(ranks_[a]));
  for (const auto& [key, m] : maps_) {
    const auto [a, b] = key;
    if (a >= n || b >= n || a == b || !order_.le(a, b))
      fail(ErrorCode::IndexMismatch, "diagram map on a non-relation");
    if (m.rows() != ranks_[a] || m.cols() != ranks_[b])
      fail(ErrorCode::InvalidInput, "diagram map has the wrong shape");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && order_.le(a, b) && !maps_.count({a, b}))
        fail(ErrorCode::InvalidInput, "diagram is missing a structure map");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !order_.le(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == b || c == a || !order_.le(b, c)) continue;
        if (!(map(a, c) == map(a, b) * map(b, c)))
          fail(ErrorCode::Internal, "diagram is not functorial");
      }
    }
}

const IntMatrix& AbDiagram::map(std::size_t a, std::size_t b) const {
  if (a == b) return identities_[a];
  auto it = maps_.find({a, b});
  if (it == maps_.end()) fail(ErrorCode::IndexMismatch, "no structure map between these objects");
  return it->second;
}

FinitePoset inclusion_order(const std::vector<Subgroup>& objects) {
  FinitePoset p;
  p.size = objects.size();
  p.leq.assign(p.size * p.size, 0);
  for (std::size_t i = 0; i < p.size; ++i)
    for (std::size_t j = 0; j < p.size; ++j)
      p.leq[i * p.size + j] = objects[i].subset_of(objects[j]);
  return p;
}

FinitePoset as_finite_poset(const SubgroupPoset& sp) {
  FinitePoset p;
  p.size = sp.size();
  p.leq.assign(p.size * p.size, 0);
  for (std::size_t i = 0; i < p.size; ++i)
    for (std::size_t j = 0; j < p.size; ++j) p.leq[i * p.size + j] = sp.leq(i, j);
  return p;
}

AbDiagram rep_ring_diagram(const std::vector<Subgroup>& objects) {
  std::vector<CharacterGroup> chars;
  std::vector<std::size_t> ranks;
  for (const auto& a : objects) {
    if (!a.is_abelian()) fail(ErrorCode::NotAbelian, "rep ring diagram needs abelian subgroups");
    chars.emplace_back(a);
    ranks.push_back(chars.back().size());
  }
  auto order = inclusion_order(objects);
  AbDiagram::MapStore maps;
  for (std::size_t a = 0; a < objects.size(); ++a)
    for (std::size_t b = 0; b < objects.size(); ++b) {
      if (a == b || !order.le(a, b)) continue;
      const auto res = chars[b].restriction_to(chars[a]);
      std::vector<IntMatrix::Entry> e;
      for (std::size_t chi = 0; chi < res.size(); ++chi) e.push_back({res[chi], chi, 1});
      maps.emplace(std::make_pair(a, b), IntMatrix(ranks[a], ranks[b], std::move(e)));
    }
  return AbDiagram(std::move(order), std::move(ranks), std::move(maps));
}

AbDiagram rep_ring_diagram(const SubgroupPoset& p) { return rep_ring_diagram(p.members()); }

AbDiagram rep_ring_diagram(const DnDiagram& d) { return rep_ring_diagram(d.distinct_subgroups()); }

AbDiagram constant_diagram(const FinitePoset& order) {
  AbDiagram::MapStore maps;
  for (std::size_t a = 0; a < order.size; ++a)
    for (std::size_t b = 0; b < order.size; ++b)
      if (a != b && order.le(a, b)) maps.emplace(std::make_pair(a, b), IntMatrix::identity(1));
  return AbDiagram(order, std::vector<std::size_t>(order.size, 1), std::move(maps));
}

AbDiagram permute_basis(const AbDiagram& f, std::size_t object,
                        const std::vector<std::size_t>& perm) {
  AbDiagram::MapStore maps;
  std::vector<std::size_t> ranks;
  for (std::size_t a = 0; a < f.size(); ++a) ranks.push_back(f.rank(a));
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = 0; b < f.size(); ++b) {
      if (a == b || !f.order().le(a, b)) continue;
      IntMatrix m = f.map(a, b);
      if (a == object) m = m.permute_rows(perm);
      if (b == object) m = m.permute_cols(perm);
      maps.emplace(std::make_pair(a, b), std::move(m));
    }
  return AbDiagram(f.order(), std::move(ranks), std::move(maps));
}

ChainComplex cech_cochain_complex(const DnDiagram& d, const AbDiagram& f) {
  if (f.size() != d.distinct_subgroups().size())
    fail(ErrorCode::IndexMismatch, "functor is not indexed by this dn diagram");
  const std::size_t n = d.maximal_count();
  // position of each mask inside its degree, and the offset of its block
  std::vector<std::size_t> offset(d.node_count() + 1, 0);
  std::vector<std::vector<std::uint32_t>> simplices(n);
  std::vector<std::size_t> dims(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    simplices[k] = d.simplices(k + 1);
    for (auto mask : simplices[k]) {
      offset[mask] = dims[k];
      dims[k] += f.rank(d.subgroup_id(mask));
    }
  }
  std::vector<IntMatrix> maps;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<IntMatrix::Entry> e;
    for (auto mask : simplices[k]) {
      const auto sid = d.subgroup_id(mask);
      std::size_t j = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask >> i & 1U)) continue;
        const std::uint32_t face = mask & ~(std::uint32_t{1} << i);
        const int sign = (k - j) % 2 ? -1 : 1;
        for (const auto& x : f.map(sid, d.subgroup_id(face)).entries())
          e.push_back({offset[mask] + x.row, offset[face] + x.col, sign * x.value});
        ++j;
      }
    }
    maps.emplace_back(dims[k], dims[k - 1], std::move(e));
  }
  return ChainComplex(Grading::Cohomological, 0, std::move(dims), std::move(maps));
}

ChainComplex bar_cochain_complex(const SubgroupPoset& p, const AbDiagram& f, std::size_t max_deg) {
  if (f.size() != p.size()) fail(ErrorCode::IndexMismatch, "functor is not indexed by this poset");
  // chains stored descending: x_0 > ... > x_n
  auto ascending = strict_chains(p, max_deg + 1);
  std::vector<std::vector<std::vector<std::size_t>>> chains;
  for (auto& c : ascending) {
    std::reverse(c.begin(), c.end());
    const auto k = c.size() - 1;
    if (chains.size() <= k) chains.resize(k + 1);
    chains[k].push_back(std::move(c));
  }
  for (auto& level : chains) std::sort(level.begin(), level.end());
  std::vector<std::vector<std::size_t>> offsets(chains.size());
  std::vector<std::size_t> dims(chains.size(), 0);
  for (std::size_t k = 0; k < chains.size(); ++k)
    for (const auto& c : chains[k]) {
      offsets[k].push_back(dims[k]);
      dims[k] += f.rank(c.back());
    }
  auto find = [&](std::size_t k, const std::vector<std::size_t>& c) {
    const auto& level = chains[k];
    const auto it = std::lower_bound(level.begin(), level.end(), c);
    return offsets[k][static_cast<std::size_t>(it - level.begin())];
  };
  std::vector<IntMatrix> maps;
  std::vector<std::size_t> face;
  for (std::size_t k = 0; k + 1 < chains.size(); ++k) {
    // delta^k : C^k -> C^{k+1}
    std::vector<IntMatrix::Entry> e;
    for (std::size_t r = 0; r < chains[k + 1].size(); ++r) {
      const auto& x = chains[k + 1][r];
      const auto row0 = offsets[k + 1][r];
      const auto last = x.back();
      for (std::size_t i = 0; i <= k + 1; ++i) {
        face = x;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        const auto col0 = find(k, face);
        const int sign = i % 2 ? -1 : 1;
        if (i <= k) {
          for (std::size_t b = 0; b < f.rank(last); ++b) e.push_back({row0 + b, col0 + b, sign});
        } else {
          for (const auto& m : f.map(last, x[k]).entries())
            e.push_back({row0 + m.row, col0 + m.col, sign * m.value});
        }
      }
    }
    maps.emplace_back(dims[k + 1], dims[k], std::move(e));
  }
  const int top = static_cast<int>(chains.size()) - 1;
  const bool cut = top == static_cast<int>(max_deg) + 1;
  return ChainComplex(Grading::Cohomological, 0, std::move(dims), std::move(maps),
                      cut ? static_cast<int>(max_deg) : std::numeric_limits<int>::max());
}

std::vector<FgAbelianGroup> higher_limits(const ChainComplex& c) {
  auto h = homology_all(c);
  if (c.reliable_top() < c.hi()) h.resize(static_cast<std::size_t>(c.reliable_top() + 1));
  return h;
}

std::vector<std::size_t> rational_higher_limit_ranks(const ChainComplex& c) {
  std::vector<std::size_t> out;
  for (const auto& h : higher_limits(c)) out.push_back(h.rank);
  return out;
}

LimitsReport rep_ring_limits_cech(const FiniteGroup& g, std::uint64_t p, SubgroupLimits limits) {
  const auto poset = nilpotent_p_poset(g, 2, p, limits);
  const auto maximals = maximal_members(poset);
  const DnDiagram d(maximals);
  const auto c = cech_cochain_complex(d, rep_ring_diagram(d));
  LimitsReport r;
  r.method = "cech";
  r.prime = p;
  r.maximal_count = maximals.size();
  r.cochain_ranks = c.dims();
  r.lim = higher_limits(c);
  r.reliable_top = c.reliable_top();
  return r;
}

LimitsReport rep_ring_limits_bar(const FiniteGroup& g, std::uint64_t p, std::size_t max_deg,
                                 SubgroupLimits limits) {
  const auto poset = nilpotent_p_poset(g, 2, p, limits);
  const auto c = bar_cochain_complex(poset, rep_ring_diagram(poset), max_deg);
  LimitsReport r;
  r.method = "bar";
  r.prime = p;
  r.maximal_count = maximal_members(poset).size();
  r.cochain_ranks = c.dims();
  r.lim = higher_limits(c);
  r.reliable_top = c.reliable_top();
  return r;
}

}  // namespace bqg
