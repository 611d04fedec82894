#include <bqg/chain_complex.hpp>

#include <bqg/error.hpp>
#include <bqg/smith.hpp>

#include <algorithm>

namespace bqg {

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(std::size_t rank,
                                                  const std::vector<Integer>& orders) {
  FgAbelianGroup g;
  g.rank = rank;
  std::vector<Integer> a;
  for (const auto& d : orders) {
    if (d == 0)
      ++g.rank;
    else if (abs(d) != 1)
      a.push_back(abs(d));
  }
  // (a_i, a_j) -> (gcd, lcm) leaves a_i dividing everything after it
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      Integer gg = gcd(a[i], a[j]);
      Integer l = a[i] / gg * a[j];
      a[i] = gg;
      a[j] = l;
    }
  for (auto& d : a)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

std::string FgAbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  auto add = [&](const std::string& part) {
    if (!s.empty()) s += " + ";
    s += part;
  };
  if (rank == 1) add("Z");
  if (rank > 1) add("Z^" + std::to_string(rank));
  std::size_t i = 0;
  while (i < torsion.size()) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    const std::string base = "Z/" + torsion[i].get_str();
    add(j - i == 1 ? base : "(" + base + ")^" + std::to_string(j - i));
    i = j;
  }
  return s;
}

bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  if (a.rank != b.rank || a.torsion.size() != b.torsion.size()) return false;
  for (std::size_t i = 0; i < a.torsion.size(); ++i)
    if (a.torsion[i] != b.torsion[i]) return false;
  return true;
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<Integer> all = a.torsion;
  all.insert(all.end(), b.torsion.begin(), b.torsion.end());
  return FgAbelianGroup::from_cyclic_orders(a.rank + b.rank, all);
}

ChainComplex::ChainComplex(Grading grading, int lo, std::vector<std::size_t> dims,
                           std::vector<IntMatrix> maps, int reliable_top)
    : grading_(grading), lo_(lo), dims_(std::move(dims)), maps_(std::move(maps)),
      reliable_top_(reliable_top) {
  if (dims_.empty() ? !maps_.empty() : maps_.size() + 1 != dims_.size())
    fail(ErrorCode::InvalidInput, "chain complex needs one map between each pair of degrees");
  const bool down = grading_ == Grading::Homological;
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    const auto rows = down ? dims_[k] : dims_[k + 1];
    const auto cols = down ? dims_[k + 1] : dims_[k];
    if (maps_[k].rows() != rows || maps_[k].cols() != cols)
      fail(ErrorCode::InvalidInput, "differential has the wrong shape at degree " +
                                        std::to_string(lo_ + static_cast<int>(k)));
  }
  for (std::size_t k = 0; k + 1 < maps_.size(); ++k) {
    const auto composite = down ? maps_[k] * maps_[k + 1] : maps_[k + 1] * maps_[k];
    if (!composite.is_zero())
      fail(ErrorCode::Internal, "d o d != 0 at degree " + std::to_string(lo_ + static_cast<int>(k)));
  }
}

std::size_t ChainComplex::dim(int n) const {
  if (n < lo_ || n > hi()) return 0;
  return dims_[static_cast<std::size_t>(n - lo_)];
}

const IntMatrix* ChainComplex::outgoing(int n) const {
  if (n < lo_ || n > hi()) return nullptr;
  const auto k = n - lo_;
  if (grading_ == Grading::Homological)
    return k >= 1 ? &maps_[static_cast<std::size_t>(k - 1)] : nullptr;
  return n < hi() ? &maps_[static_cast<std::size_t>(k)] : nullptr;
}

const IntMatrix* ChainComplex::incoming(int n) const {
  if (n < lo_ || n > hi()) return nullptr;
  const auto k = n - lo_;
  if (grading_ == Grading::Homological)
    return n < hi() ? &maps_[static_cast<std::size_t>(k)] : nullptr;
  return k >= 1 ? &maps_[static_cast<std::size_t>(k - 1)] : nullptr;
}

namespace {

FgAbelianGroup assemble(std::size_t dim, std::size_t rank_out, const std::vector<Integer>& in) {
  FgAbelianGroup h;
  h.rank = dim - rank_out - in.size();
  for (const auto& d : in)
    if (d != 1) h.torsion.push_back(d);
  return h;
}

}  // namespace

FgAbelianGroup homology(const ChainComplex& c, int n) {
  const auto* out = c.outgoing(n);
  const auto* in = c.incoming(n);
  const std::size_t rank_out = out ? matrix_rank(*out) : 0;
  return assemble(c.dim(n), rank_out, in ? invariant_factors(*in) : std::vector<Integer>{});
}

FgAbelianGroup cohomology(const ChainComplex& c, int n) {
  if (c.grading() != Grading::Cohomological)
    fail(ErrorCode::InvalidInput, "cohomology needs a cochain complex");
  return homology(c, n);
}

std::vector<FgAbelianGroup> homology_all(const ChainComplex& c) {
  std::vector<FgAbelianGroup> out;
  if (c.empty()) return out;
  // factors[k] for the map between degrees lo+k and lo+k+1
  std::vector<std::vector<Integer>> factors;
  for (int n = c.lo(); n < c.hi(); ++n) {
    const auto* m = c.grading() == Grading::Homological ? c.incoming(n) : c.outgoing(n);
    factors.push_back(invariant_factors(*m));
  }
  for (int n = c.lo(); n <= c.hi(); ++n) {
    const auto k = static_cast<std::size_t>(n - c.lo());
    const bool has_below = k > 0, has_above = n < c.hi();
    const auto* below = has_below ? &factors[k - 1] : nullptr;
    const auto* above = has_above ? &factors[k] : nullptr;
    const auto* out_f = c.grading() == Grading::Homological ? below : above;
    const auto* in_f = c.grading() == Grading::Homological ? above : below;
    out.push_back(assemble(c.dim(n), out_f ? out_f->size() : 0,
                           in_f ? *in_f : std::vector<Integer>{}));
  }
  return out;
}

long long euler_characteristic(const ChainComplex& c) {
  long long chi = 0;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    const auto d = static_cast<long long>(c.dim(n));
    chi += (n % 2 == 0) ? d : -d;
  }
  return chi;
}

long long betti_euler(const std::vector<FgAbelianGroup>& groups, int lo) {
  long long chi = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto r = static_cast<long long>(groups[i].rank);
    chi += ((lo + static_cast<int>(i)) % 2 == 0) ? r : -r;
  }
  return chi;
}

std::vector<FgAbelianGroup> reduced(std::vector<FgAbelianGroup> groups) {
  if (!groups.empty() && groups[0].rank > 0) --groups[0].rank;
  return groups;
}

namespace {

std::vector<std::vector<std::vector<std::uint32_t>>> enumerate_chains(const FinitePoset& p,
                                                                      std::size_t max_dim,
                                                                      bool& cut) {
  std::vector<std::vector<std::vector<std::uint32_t>>> by_degree;
  std::vector<std::vector<std::uint32_t>> above(p.size);
  for (std::uint32_t i = 0; i < p.size; ++i)
    for (std::uint32_t j = 0; j < p.size; ++j)
      if (i != j && p.le(i, j)) above[i].push_back(j);
  cut = false;
  std::vector<std::uint32_t> chain;
  auto extend = [&](auto&& self) -> void {
    const auto k = chain.size() - 1;
    if (by_degree.size() <= k) by_degree.resize(k + 1);
    by_degree[k].push_back(chain);
    const auto& up = above[chain.back()];
    if (k == max_dim) {
      if (!up.empty()) cut = true;
      return;
    }
    for (auto j : up) {
      chain.push_back(j);
      self(self);
      chain.pop_back();
    }
  };
  for (std::uint32_t i = 0; i < p.size; ++i) {
    chain.assign(1, i);
    extend(extend);
  }
  for (auto& d : by_degree) std::sort(d.begin(), d.end());
  return by_degree;
}

}  // namespace

ChainComplex order_complex_chains(const FinitePoset& p, std::size_t max_dim) {
  bool cut = false;
  const auto chains = enumerate_chains(p, max_dim, cut);
  std::vector<std::size_t> dims;
  for (const auto& d : chains) dims.push_back(d.size());
  std::vector<IntMatrix> maps;
  for (std::size_t k = 1; k < chains.size(); ++k) {
    const auto& lower = chains[k - 1];
    std::vector<IntMatrix::Entry> e;
    std::vector<std::uint32_t> face;
    for (std::size_t col = 0; col < chains[k].size(); ++col) {
      const auto& ch = chains[k][col];
      for (std::size_t i = 0; i <= k; ++i) {
        face.clear();
        for (std::size_t t = 0; t <= k; ++t)
          if (t != i) face.push_back(ch[t]);
        const auto it = std::lower_bound(lower.begin(), lower.end(), face);
        e.push_back({static_cast<std::size_t>(it - lower.begin()), col, i % 2 ? -1 : 1});
      }
    }
    maps.emplace_back(lower.size(), chains[k].size(), std::move(e));
  }
  const int top = static_cast<int>(chains.size()) - 1;
  return ChainComplex(Grading::Homological, 0, std::move(dims), std::move(maps),
                      cut ? top - 1 : std::numeric_limits<int>::max());
}

std::vector<std::size_t> chain_counts(const FinitePoset& p, std::size_t max_dim) {
  bool cut = false;
  std::vector<std::size_t> out;
  for (const auto& d : enumerate_chains(p, max_dim, cut)) out.push_back(d.size());
  return out;
}

}  // namespace bqg
