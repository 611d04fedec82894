#include <bqg/spaces.hpp>

#include <bqg/abelian.hpp>

#include <algorithm>
#include <unordered_map>

namespace bqg {

bool SimplicialChainData::face_identities_hold() const {
  for (std::size_t k = 2; k < faces.size(); ++k)
    for (std::size_t s = 0; s < counts[k]; ++s) {
      const auto& f = faces[k][s];
      for (std::size_t j = 1; j <= k; ++j)
        for (std::size_t i = 0; i < j; ++i) {
          const auto a = f[j], b = f[i];
          if (a == kDegenerate || b == kDegenerate) continue;
          if (faces[k - 1][a][i] != faces[k - 1][b][j - 1]) return false;
        }
    }
  return true;
}

ChainComplex SimplicialChainData::chains() const {
  std::vector<IntMatrix> maps;
  for (std::size_t k = 1; k < counts.size(); ++k) {
    std::vector<IntMatrix::Entry> e;
    for (std::size_t s = 0; s < counts[k]; ++s)
      for (std::size_t i = 0; i <= k; ++i) {
        const auto f = faces[k][s][i];
        if (f != kDegenerate) e.push_back({f, s, i % 2 ? -1 : 1});
      }
    maps.emplace_back(counts[k - 1], counts[k], std::move(e));
  }
  return ChainComplex(Grading::Homological, 0, counts, std::move(maps), reliable_top);
}

namespace {

// Subgroups generated by tuple prefixes, with memoized extension by one
// element; a state is valid when the subgroup lies in N(q,G) (and is a
// p-group when requested).
class PrefixClosure {
 public:
  PrefixClosure(const FiniteGroup& g, int q, std::optional<std::uint64_t> p)
      : g_(g), q_(q), p_(p) {
    add(trivial_subgroup(g));
  }

  int step(int state, Elem x) {
    auto& slot = next_[static_cast<std::size_t>(state)][x];
    if (slot != kUnknown) return slot;
    const auto& s = states_[static_cast<std::size_t>(state)];
    if (s.contains(x)) return slot = state;
    auto h = join(s, x);
    auto it = ids_.find(h.set());
    int id = it != ids_.end() ? it->second : add(std::move(h));
    // `slot` may dangle after add(); look it up again
    next_[static_cast<std::size_t>(state)][x] = valid_[static_cast<std::size_t>(id)] ? id : kInvalid;
    return next_[static_cast<std::size_t>(state)][x];
  }

  static constexpr int kUnknown = -2;
  static constexpr int kInvalid = -1;

 private:
  int add(Subgroup h) {
    const int id = static_cast<int>(states_.size());
    bool ok;
    if (q_ == 2) {
      ok = h.is_abelian();
    } else {
      const auto c = nilpotency_class(h);
      ok = c && *c < q_;
    }
    if (ok && p_) ok = is_p_power(h.order(), *p_);
    ids_.emplace(h.set(), id);
    states_.push_back(std::move(h));
    valid_.push_back(ok);
    next_.emplace_back(g_.order(), kUnknown);
    return id;
  }

  const FiniteGroup& g_;
  int q_;
  std::optional<std::uint64_t> p_;
  std::vector<Subgroup> states_;
  std::vector<char> valid_;
  std::unordered_map<ElemSet, int, ElemSetHash> ids_;
  std::vector<std::vector<int>> next_;
};

// Index of `t` among the sorted flat tuples of length n.
std::uint32_t find_tuple(const std::vector<Elem>& flat, std::size_t n, const std::vector<Elem>& t) {
  std::size_t lo = 0, hi = n == 0 ? 1 : flat.size() / n;
  while (lo < hi) {
    const auto mid = (lo + hi) / 2;
    if (std::lexicographical_compare(flat.begin() + static_cast<std::ptrdiff_t>(mid * n),
                                     flat.begin() + static_cast<std::ptrdiff_t>(mid * n + n),
                                     t.begin(), t.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  return static_cast<std::uint32_t>(lo);
}

}  // namespace

SimplicialChainData bqg_simplices(const FiniteGroup& g, int q, std::size_t max_deg,
                                  std::optional<std::uint64_t> p, std::size_t basis_cap) {
  if (q < 2) fail(ErrorCode::UnsupportedParam, "B(q,G) needs q >= 2");
  const std::size_t top = max_deg + 1;
  PrefixClosure closure(g, q, p);
  std::vector<std::vector<Elem>> flat(top + 1);  // degree n tuples, stride n
  std::size_t total = 1;
  std::vector<Elem> tuple;
  auto extend = [&](auto&& self, int state) -> void {
    if (tuple.size() == top) return;
    for (Elem x = 0; x < g.order(); ++x) {
      if (x == g.identity()) continue;
      const int next = closure.step(state, x);
      if (next == PrefixClosure::kInvalid) continue;
      tuple.push_back(x);
      auto& level = flat[tuple.size()];
      level.insert(level.end(), tuple.begin(), tuple.end());
      if (++total > basis_cap)
        fail(ErrorCode::TooLarge, "B(q,G) chains exceed " + std::to_string(basis_cap) +
                                      " simplices through degree " + std::to_string(top));
      self(self, next);
      tuple.pop_back();
    }
  };
  extend(extend, 0);

  SimplicialChainData d;
  d.counts.push_back(1);
  d.faces.emplace_back();
  for (std::size_t n = 1; n <= top; ++n) {
    const auto count = flat[n].size() / n;
    d.counts.push_back(count);
    std::vector<std::vector<std::uint32_t>> fs(count, std::vector<std::uint32_t>(n + 1));
    std::vector<Elem> face;
    for (std::size_t s = 0; s < count; ++s) {
      const Elem* t = flat[n].data() + s * n;
      for (std::size_t i = 0; i <= n; ++i) {
        face.clear();
        bool degenerate = false;
        for (std::size_t k = 0; k < n; ++k) {
          if (i == 0 && k == 0) continue;
          if (i == n && k == n - 1) continue;
          if (i >= 1 && i < n && k == i) continue;
          if (i >= 1 && i < n && k == i - 1) {
            const Elem prod = g.mul(t[i - 1], t[i]);
            if (prod == g.identity()) degenerate = true;
            face.push_back(prod);
          } else {
            face.push_back(t[k]);
          }
        }
        fs[s][i] = degenerate ? SimplicialChainData::kDegenerate
                              : (n == 1 ? 0 : find_tuple(flat[n - 1], n - 1, face));
      }
    }
    d.faces.push_back(std::move(fs));
  }
  d.reliable_top = static_cast<int>(max_deg);
  return d;
}

ChainComplex bqg_truncated_chains(const FiniteGroup& g, int q, std::size_t max_deg,
                                  std::optional<std::uint64_t> p, std::size_t basis_cap) {
  return bqg_simplices(g, q, max_deg, p, basis_cap).chains();
}

std::vector<FgAbelianGroup> bqg_homology(const FiniteGroup& g, int q, std::size_t max_deg,
                                         std::optional<std::uint64_t> p, std::size_t basis_cap) {
  auto h = homology_all(bqg_truncated_chains(g, q, max_deg, p, basis_cap));
  h.resize(max_deg + 1);
  return h;
}

void GSetDiagram::validate() const {
  const auto n = set_sizes.size();
  if (poset.size != n) fail(ErrorCode::InvalidInput, "diagram sets do not match its poset");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !poset.le(a, b)) continue;
      auto it = maps.find({a, b});
      if (it == maps.end()) fail(ErrorCode::InvalidInput, "diagram is missing a set map");
      const auto& m = it->second;
      if (m.size() != set_sizes[a]) fail(ErrorCode::InvalidInput, "set map has the wrong size");
      std::vector<char> hit(set_sizes[b], 0);
      for (auto v : m) {
        if (v >= set_sizes[b]) fail(ErrorCode::InvalidInput, "set map leaves its target");
        hit[v] = 1;
      }
      if (!std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; }))
        fail(ErrorCode::InvalidInput, "set map is not surjective");
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b || !poset.le(b, c)) continue;
        const auto& bc = maps.at({b, c});
        const auto& ac = maps.at({a, c});
        for (std::size_t s = 0; s < m.size(); ++s)
          if (bc[m[s]] != ac[s]) fail(ErrorCode::InvalidInput, "set maps are not functorial");
      }
    }
}

SimplicialChainData transport_nerve(const GSetDiagram& d, std::size_t max_dim) {
  d.validate();
  const auto& p = d.poset;
  std::vector<std::vector<std::uint32_t>> above(p.size);
  for (std::uint32_t i = 0; i < p.size; ++i)
    for (std::uint32_t j = 0; j < p.size; ++j)
      if (i != j && p.le(i, j)) above[i].push_back(j);
  std::vector<std::vector<std::vector<std::uint32_t>>> chains;
  bool cut = false;
  std::vector<std::uint32_t> chain;
  auto extend = [&](auto&& self) -> void {
    const auto k = chain.size() - 1;
    if (chains.size() <= k) chains.resize(k + 1);
    chains[k].push_back(chain);
    if (k == max_dim) {
      if (!above[chain.back()].empty()) cut = true;
      return;
    }
    for (auto j : above[chain.back()]) {
      chain.push_back(j);
      self(self);
      chain.pop_back();
    }
  };
  for (std::uint32_t i = 0; i < p.size; ++i) {
    chain.assign(1, i);
    extend(extend);
  }
  SimplicialChainData out;
  std::vector<std::vector<std::size_t>> offset(chains.size());
  for (std::size_t k = 0; k < chains.size(); ++k) {
    std::sort(chains[k].begin(), chains[k].end());
    std::size_t total = 0;
    for (const auto& c : chains[k]) {
      offset[k].push_back(total);
      total += d.set_sizes[c.front()];
    }
    out.counts.push_back(total);
  }
  out.faces.resize(chains.size());
  std::vector<std::uint32_t> face;
  for (std::size_t k = 1; k < chains.size(); ++k) {
    auto& fs = out.faces[k];
    fs.reserve(out.counts[k]);
    const auto& lower = chains[k - 1];
    for (const auto& c : chains[k]) {
      std::vector<std::size_t> base(k + 1);
      for (std::size_t i = 0; i <= k; ++i) {
        face = c;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        const auto pos = static_cast<std::size_t>(
            std::lower_bound(lower.begin(), lower.end(), face) - lower.begin());
        base[i] = offset[k - 1][pos];
      }
      const auto& push = d.maps.at({c[0], c[1]});
      for (std::size_t s = 0; s < d.set_sizes[c.front()]; ++s) {
        std::vector<std::uint32_t> f(k + 1);
        f[0] = static_cast<std::uint32_t>(base[0] + push[s]);
        for (std::size_t i = 1; i <= k; ++i) f[i] = static_cast<std::uint32_t>(base[i] + s);
        fs.push_back(std::move(f));
      }
    }
  }
  if (cut) out.reliable_top = static_cast<int>(chains.size()) - 2;
  return out;
}

GSetDiagram coset_diagram(const std::vector<Subgroup>& members, const FiniteGroup& k,
                          const std::vector<Elem>& iota) {
  GSetDiagram d;
  d.poset = inclusion_order(members);
  const auto n = members.size();
  std::vector<std::vector<std::uint32_t>> label(n, std::vector<std::uint32_t>(k.order()));
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Elem> image;
    for (Elem x : members[a].members()) image.push_back(iota.at(x));
    std::vector<char> done(k.order(), 0);
    std::uint32_t next = 0;
    for (Elem x = 0; x < k.order(); ++x) {
      if (done[x]) continue;
      for (Elem y : image) {
        const Elem z = k.mul(x, y);
        done[z] = 1;
        label[a][z] = next;
      }
      ++next;
    }
    d.set_sizes.push_back(next);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !d.poset.le(a, b)) continue;
      std::vector<std::uint32_t> m(d.set_sizes[a]);
      for (Elem x = 0; x < k.order(); ++x) m[label[a][x]] = label[b][x];
      d.maps.emplace(std::make_pair(a, b), std::move(m));
    }
  return d;
}

namespace {

NerveHomology nerve_homology(const SimplicialChainData& s) {
  if (!s.face_identities_hold()) fail(ErrorCode::Internal, "face identities fail");
  NerveHomology h;
  h.simplex_counts = s.counts;
  const auto c = s.chains();
  h.homology = homology_all(c);
  h.euler_characteristic = euler_characteristic(c);
  h.betti_euler = betti_euler(h.homology);
  if (h.euler_characteristic != h.betti_euler)
    fail(ErrorCode::Internal, "Euler characteristic disagrees with the Betti numbers");
  return h;
}

std::vector<Subgroup> closure_members(const FiniteGroup& g, int q) {
  return intersection_closure(maximal_members(nilpotent_poset(g, q))).members();
}

}  // namespace

NerveHomology eqg_homology(const FiniteGroup& g, int q) {
  std::vector<Elem> id(g.order());
  for (Elem x = 0; x < g.order(); ++x) id[x] = x;
  return nerve_homology(transport_nerve(coset_diagram(closure_members(g, q), g, id)));
}

UniversalCoverReport universal_cover_homology(const FiniteGroup& g, int q, std::size_t cap) {
  const auto r = colimit_group(g, q, cap);
  if (!r.complete() || !r.realization)
    fail(ErrorCode::ColimitNotFinite, "colimit enumeration did not complete within the cap");
  UniversalCoverReport u;
  u.colimit_order = *r.order;
  const auto members = closure_members(g, q);
  u.poset_size = members.size();
  u.nerve = nerve_homology(transport_nerve(coset_diagram(members, *r.realization, r.iota)));
  const auto& h = u.nerve.homology;
  u.simply_connected = !h.empty() && h[0] == FgAbelianGroup{1, {}} &&
                       (h.size() < 2 || h[1].is_zero());
  return u;
}

FinitePoset coset_poset(const FiniteGroup& g, SubgroupLimits limits) {
  std::vector<ElemSet> cosets;
  for (const auto& h : all_subgroups(g, limits)) {
    if (h.order() == g.order()) continue;
    std::vector<char> done(g.order(), 0);
    for (Elem x = 0; x < g.order(); ++x) {
      if (done[x]) continue;
      ElemSet s(g.order());
      for (Elem y : h.members()) {
        s.insert(g.mul(x, y));
        done[g.mul(x, y)] = 1;
      }
      cosets.push_back(std::move(s));
    }
  }
  FinitePoset p;
  p.size = cosets.size();
  p.leq.assign(p.size * p.size, 0);
  for (std::size_t i = 0; i < p.size; ++i)
    for (std::size_t j = 0; j < p.size; ++j) p.leq[i * p.size + j] = cosets[i].subset_of(cosets[j]);
  return p;
}

NerveHomology coset_poset_homology(const FiniteGroup& g, SubgroupLimits limits) {
  const auto c = order_complex_chains(coset_poset(g, limits));
  NerveHomology h;
  h.simplex_counts = c.dims();
  h.homology = homology_all(c);
  h.euler_characteristic = euler_characteristic(c);
  h.betti_euler = betti_euler(h.homology);
  return h;
}

ChiefSeriesReport complemented_chief_factors(const FiniteGroup& g, SubgroupLimits limits) {
  if (!is_solvable(g)) fail(ErrorCode::NotSolvable, "group is not solvable");
  const auto subgroups = all_subgroups(g, limits);
  std::vector<Subgroup> normals;
  for (const auto& h : subgroups)
    if (is_normal(h)) normals.push_back(h);
  ChiefSeriesReport r;
  r.series.push_back(trivial_subgroup(g));
  while (r.series.back().order() != g.order()) {
    const auto& cur = r.series.back();
    std::vector<const Subgroup*> above;
    for (const auto& n : normals)
      if (n.order() > cur.order() && cur.subset_of(n)) above.push_back(&n);
    const Subgroup* pick = nullptr;
    for (const auto* n : above) {
      const bool minimal = std::none_of(above.begin(), above.end(), [&](const Subgroup* m) {
        return m->order() < n->order() && m->subset_of(*n);
      });
      if (minimal) {
        pick = n;
        break;
      }
    }
    r.series.push_back(*pick);
  }
  for (std::size_t i = 1; i < r.series.size(); ++i) {
    const auto& lower = r.series[i - 1];
    const auto& upper = r.series[i];
    const bool found = std::any_of(subgroups.begin(), subgroups.end(), [&](const Subgroup& h) {
      return lower.subset_of(h) && h.order() * upper.order() == g.order() * lower.order() &&
             intersection(h, upper) == lower;
    });
    r.complemented.push_back(found);
    if (found) ++r.d;
  }
  return r;
}

std::size_t complemented_chief_factor_count(const FiniteGroup& g, SubgroupLimits limits) {
  return complemented_chief_factors(g, limits).d;
}

WedgeReport verify_wedge_spheres(const FiniteGroup& g, SubgroupLimits limits) {
  WedgeReport w;
  w.d = complemented_chief_factor_count(g, limits);
  w.reduced_homology = reduced(coset_poset_homology(g, limits).homology);
  w.passed = true;
  for (std::size_t k = 0; k < w.reduced_homology.size(); ++k) {
    const auto& h = w.reduced_homology[k];
    if (!h.is_free()) w.passed = false;
    if (w.d >= 1 && k == w.d - 1)
      w.spheres = h.rank;
    else if (!h.is_zero())
      w.passed = false;
  }
  if (w.d == 0) w.passed = false;
  return w;
}

SplittingReport splitting_report(const FiniteGroup& g, int q, std::size_t max_deg) {
  SplittingReport r;
  const auto whole = bqg_homology(g, q, max_deg);
  std::map<std::uint64_t, std::vector<FgAbelianGroup>> parts;
  for (auto p : prime_divisors(g.order())) parts[p] = bqg_homology(g, q, max_deg, p);
  r.passed = true;
  for (std::size_t k = 1; k <= max_deg; ++k) {
    SplittingDegree d;
    d.degree = k;
    d.whole = whole[k];
    for (const auto& [p, h] : parts) {
      d.per_prime[p] = h[k];
      d.sum = direct_sum(d.sum, h[k]);
    }
    d.equal = d.whole == d.sum;
    r.passed = r.passed && d.equal;
    r.degrees.push_back(std::move(d));
  }
  return r;
}

namespace {

std::string power(const std::string& base, std::size_t e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

}  // namespace

KTheoryReport ktheory_report(const FiniteGroup& g) {
  KTheoryReport r;
  const auto census = element_census(g);
  r.collapse_certified = true;
  r.k0 = "Z";
  r.rational_k0 = "Q";
  for (auto p : prime_divisors(g.order())) {
    KTheoryPrime kp;
    kp.prime = p;
    auto it = census.prime_power_counts.find(p);
    kp.n_p = it == census.prime_power_counts.end() ? 0 : it->second;
    kp.lim = rep_ring_limits_cech(g, p).lim;
    kp.collapse_certified = true;
    for (std::size_t s = 2; s < kp.lim.size(); ++s)
      if (!kp.lim[s].is_zero()) kp.collapse_certified = false;
    r.collapse_certified = r.collapse_certified && kp.collapse_certified;
    if (kp.n_p) {
      r.k0 += " + " + power("Z_" + std::to_string(p), kp.n_p);
      r.rational_k0 += " + " + power("Q_" + std::to_string(p), kp.n_p);
    }
    if (kp.lim.size() > 1)
      r.k1_group = direct_sum(r.k1_group, FgAbelianGroup{0, kp.lim[1].torsion});
    r.primes.push_back(std::move(kp));
  }
  r.rational_k1 = "0";
  if (r.collapse_certified) {
    r.k1 = r.k1_group.to_string();
  } else {
    r.k0.clear();
    r.k1_group = {};
  }
  return r;
}

std::size_t default_max_deg(const FiniteGroup& g) { return g.order() <= 32 ? 3 : 2; }

}  // namespace bqg
