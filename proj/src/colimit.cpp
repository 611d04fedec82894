#include <bqg/colimit.hpp>

#include <bqg/abelian.hpp>
#include <bqg/catalog.hpp>

#include <algorithm>

namespace bqg {

namespace {

constexpr std::size_t kRealizeLimit = 1024;

std::vector<std::vector<std::uint32_t>> inverse_actions(const CosetTable& t) {
  std::vector<std::vector<std::uint32_t>> inv(t.action.size(), std::vector<std::uint32_t>(t.cosets));
  for (std::size_t g = 0; g < t.action.size(); ++g)
    for (std::uint32_t c = 0; c < t.cosets; ++c) inv[g][t.action[g][c]] = c;
  return inv;
}

std::uint32_t act(const CosetTable& t, const std::vector<std::vector<std::uint32_t>>& inv,
                  std::uint32_t c, const Letter& l) {
  return l.inverse ? inv[l.generator][c] : t.action[l.generator][c];
}

std::uint32_t act_word(const CosetTable& t, const std::vector<std::vector<std::uint32_t>>& inv,
                       std::uint32_t c, const Word& w) {
  for (const auto& l : w) c = act(t, inv, c, l);
  return c;
}

}  // namespace

std::vector<std::vector<Elem>> regular_cayley_table(const CosetTable& t) {
  if (!t.complete()) fail(ErrorCode::InvalidInput, "coset table is not complete");
  const auto inv = inverse_actions(t);
  const auto n = t.cosets;
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    table[i][0] = i;
    for (std::uint32_t j = 1; j < n; ++j)
      table[i][j] = act(t, inv, table[i][t.parent[j]], t.parent_letter[j]);
  }
  return table;
}

ColimitReport colimit_of_collection(const FiniteGroup& g, const std::vector<Subgroup>& collection,
                                    std::size_t cap) {
  ColimitReport r;
  r.collection_size = collection.size();
  r.presentation = colimit_presentation(collection);
  r.table = todd_coxeter(r.presentation, {}, cap);
  if (!r.table.complete()) return r;
  const auto n = r.table.cosets;
  r.order = n;
  const auto& p = r.presentation;

  r.psi.assign(n, g.identity());
  for (std::uint32_t j = 1; j < n; ++j) {
    const auto& l = r.table.parent_letter[j];
    const Elem x = p.elements[l.generator];
    r.psi[j] = g.mul(r.psi[r.table.parent[j]], l.inverse ? g.inv(x) : x);
  }
  r.iota.assign(g.order(), 0);
  for (std::size_t k = 0; k < p.generator_count(); ++k) r.iota[p.elements[k]] = r.table.action[k][0];

  std::vector<char> hit(g.order(), 0);
  for (Elem x : r.psi) hit[x] = 1;
  r.psi_surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  r.psi_kernel_order = static_cast<std::size_t>(std::count(r.psi.begin(), r.psi.end(), g.identity()));

  if (n > kRealizeLimit) return r;
  const auto table = regular_cayley_table(r.table);
  r.psi_homomorphism = true;
  for (std::size_t i = 0; i < n && r.psi_homomorphism; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r.psi[table[i][j]] != g.mul(r.psi[i], r.psi[j])) {
        r.psi_homomorphism = false;
        break;
      }
  r.kernel_central = true;
  for (std::size_t k = 0; k < n && r.kernel_central; ++k) {
    if (r.psi[k] != g.identity()) continue;
    for (std::size_t x = 0; x < n; ++x)
      if (table[k][x] != table[x][k]) {
        r.kernel_central = false;
        break;
      }
  }
  r.realization = FiniteGroup::from_cayley_table(table);
  return r;
}

ColimitReport colimit_group(const FiniteGroup& g, int q, std::size_t cap, bool reduce,
                            SubgroupLimits limits) {
  if (q < 2) fail(ErrorCode::UnsupportedParam, "colimits are defined for q >= 2");
  const auto poset = nilpotent_poset(g, q, limits);
  std::vector<Subgroup> collection;
  const bool use_reduction = q == 2 && reduce;
  for (const auto& h : poset.members())
    if (!use_reduction || d_value(h) <= 2) collection.push_back(h);
  auto r = colimit_of_collection(g, collection, cap);
  r.q = q;
  r.reduced = use_reduction;
  return r;
}

Rank2Comparison compare_rank2(const FiniteGroup& g, std::size_t cap, SubgroupLimits limits) {
  Rank2Comparison c;
  const auto poset = nilpotent_poset(g, 2, limits);
  const auto full_p = abelian_colimit_presentation(poset.members());
  const auto reduced_p = reduced_colimit_presentation(poset.members());
  c.full_relators = full_p.relators.size();
  c.reduced_relators = reduced_p.relators.size();
  const auto full = todd_coxeter(full_p, {}, cap);
  const auto red = todd_coxeter(reduced_p, {}, cap);
  c.full_status = full.status;
  c.reduced_status = red.status;
  if (full.complete()) c.full_order = full.cosets;
  if (red.complete()) c.reduced_order = red.cosets;
  if (!c.both_complete()) return c;
  // reduced generators are a subset of the full ones (same group elements)
  std::map<Elem, std::uint32_t> full_index;
  for (std::uint32_t i = 0; i < full_p.elements.size(); ++i) full_index[full_p.elements[i]] = i;
  std::vector<std::uint32_t> to_full;
  for (Elem x : reduced_p.elements) {
    auto it = full_index.find(x);
    if (it == full_index.end())
      fail(ErrorCode::Internal, "reduced presentation has a generator outside the full one");
    to_full.push_back(it->second);
  }
  // phi: reduced element j -> the full coset reached by the tree word of j
  const auto inv_full = inverse_actions(full);
  const auto n = red.cosets;
  std::vector<std::uint32_t> phi(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    auto w = red.word_of(j);
    for (auto& l : w) l.generator = to_full[l.generator];
    phi[j] = act_word(full, inv_full, 0, w);
  }
  std::vector<char> seen(full.cosets, 0);
  bool bijective = n == full.cosets;
  for (auto x : phi) {
    if (seen[x]) bijective = false;
    seen[x] = 1;
  }
  bool hom = true;
  if (bijective && n <= kRealizeLimit) {
    const auto tr = regular_cayley_table(red);
    const auto tf = regular_cayley_table(full);
    for (std::size_t i = 0; i < n && hom; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (phi[tr[i][j]] != tf[phi[i]][phi[j]]) {
          hom = false;
          break;
        }
  } else if (bijective) {
    // generators act compatibly: phi(x^g) = phi(x)^g
    for (std::size_t gg = 0; gg < red.action.size() && hom; ++gg)
      for (std::uint32_t x = 0; x < n; ++x)
        if (phi[red.action[gg][x]] != full.action[to_full[gg]][phi[x]]) {
          hom = false;
          break;
        }
  }
  c.isomorphic = bijective && hom;
  return c;
}

AmalgamReport tc_amalgam_presentation(const FiniteGroup& g, std::size_t cap) {
  if (!is_transitively_commutative(g)) fail(ErrorCode::NotTC, "group is not transitively commutative");
  AmalgamReport a;
  a.maximals = maximal_members(nilpotent_poset(g, 2));
  a.center = center(g);
  auto collection = a.maximals;
  collection.push_back(a.center);
  a.presentation = colimit_presentation(collection);
  a.abelianization = abelianization(a.presentation);
  a.enumeration = todd_coxeter(a.presentation, {}, cap);
  return a;
}

namespace {

// Index-2 subgroups of a group given by its Cayley table, as kernels of the
// homomorphisms onto Z/2 (values chosen on a generating set, then checked).
std::vector<std::vector<char>> index_two_kernels(const FiniteGroup& k) {
  const auto gens = whole_group(k).generators();
  const auto n = k.order();
  std::vector<std::vector<char>> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << gens.size()); ++bits) {
    std::vector<int> f(n, -1);
    f[k.identity()] = 0;
    std::vector<Elem> queue{k.identity()};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i)
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const Elem y = k.mul(queue[i], gens[s]);
        const int v = f[queue[i]] ^ static_cast<int>(bits >> s & 1U);
        if (f[y] < 0) {
          f[y] = v;
          queue.push_back(y);
        } else if (f[y] != v) {
          ok = false;
          break;
        }
      }
    if (!ok) continue;
    for (Elem x = 0; x < n && ok; ++x)
      for (Elem y = 0; y < n; ++y)
        if (f[k.mul(x, y)] != (f[x] ^ f[y])) {
          ok = false;
          break;
        }
    if (!ok) continue;
    std::vector<char> ker(n);
    for (Elem x = 0; x < n; ++x) ker[x] = f[x] == 0;
    out.push_back(std::move(ker));
  }
  return out;
}

}  // namespace

ExtraspecialColimitCheck verify_extraspecial_colimit(std::size_t n, bool minus, std::size_t cap) {
  ExtraspecialColimitCheck c;
  c.n = n;
  c.minus = minus;
  const auto g = catalog(minus ? "extraspecial_minus" : "extraspecial_plus",
                         {static_cast<long long>(n)});
  c.group_order = g.order();
  if (n < 2) {
    c.note = "the product decomposition needs n >= 2; for n = 1 the colimit is the amalgam "
             "of the maximal abelian subgroups along the center";
    c.amalgam = tc_amalgam_presentation(g, std::min<std::size_t>(cap, 100'000));
    c.status = c.amalgam->enumeration.status;
    return c;
  }
  c.applicable = true;
  c.expected_order = 2 * g.order();
  const auto r = colimit_group(g, 2, cap);
  c.status = r.table.status;
  if (!r.complete()) {
    c.note = "coset enumeration exceeded the cap; finiteness undecided";
    return c;
  }
  c.colimit_order = *r.order;
  c.order_ok = c.colimit_order == c.expected_order;
  c.kernel_order_two = r.psi_kernel_order == 2;
  c.kernel_central = r.kernel_central;
  if (!r.realization || !c.kernel_order_two) return c;
  const auto& k = *r.realization;
  Elem z = 0;
  for (Elem x = 0; x < k.order(); ++x)
    if (x != k.identity() && r.psi[x] == g.identity()) z = x;
  const auto commutator = derived_subgroup(whole_group(k));
  c.kernel_meets_commutator_trivially = !commutator.contains(z);
  for (const auto& ker : index_two_kernels(k)) {
    if (ker[z]) continue;
    c.complement_found = true;
    std::vector<char> image(g.order(), 0);
    for (Elem x = 0; x < k.order(); ++x)
      if (ker[x]) {
        c.complement.push_back(x);
        image[r.psi[x]] = 1;
      }
    c.complement_isomorphic =
        c.complement.size() == g.order() &&
        std::all_of(image.begin(), image.end(), [](char v) { return v != 0; });
    break;
  }
  return c;
}

}  // namespace bqg
