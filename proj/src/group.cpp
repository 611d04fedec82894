#include <bqg/group.hpp>

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace bqg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::UnsupportedParam: return "UnsupportedParam";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::WrongOrder: return "WrongOrder";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::AbelianInput: return "AbelianInput";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::NotAbelianCollection: return "NotAbelianCollection";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::NotTC: return "NotTC";
    case ErrorCode::NotSolvable: return "NotSolvable";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ColimitNotFinite: return "ColimitNotFinite";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- ElemSet

std::size_t ElemSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElemSet::subset_of(const ElemSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElemSet ElemSet::operator&(const ElemSet& other) const {
  ElemSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
  return r;
}

std::vector<Elem> ElemSet::elements() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<Elem>(i * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t ElemSet::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ------------------------------------------------------------ FiniteGroup

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<Elem>>& table,
                                           std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) fail(ErrorCode::NotAGroup, "empty table");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      fail(ErrorCode::InvalidInput, "table is not square (row " + std::to_string(i) + ")");
    for (auto v : table[i])
      if (v >= n) fail(ErrorCode::InvalidInput, "entry out of range in row " + std::to_string(i));
  }
  if (!names.empty() && names.size() != n)
    fail(ErrorCode::InvalidInput, "names list does not match the order");

  auto data = std::make_shared<Data>();
  data->order = n;
  data->table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) data->table[i * n + j] = table[i][j];

  // Latin square.
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table[i][j]])
        fail(ErrorCode::NotAGroup, "no inverse for element " + std::to_string(i) +
                                       " (row " + std::to_string(i) + " is not a permutation)");
      seen[table[i][j]] = 1;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[table[i][j]])
        fail(ErrorCode::NotAGroup, "no inverse for element " + std::to_string(j) +
                                       " (column " + std::to_string(j) + " is not a permutation)");
      seen[table[i][j]] = 1;
    }
  }

  std::optional<Elem> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = table[e][j] == j && table[j][e] == j;
    if (ok) identity = static_cast<Elem>(e);
  }
  if (!identity) fail(ErrorCode::NotAGroup, "no identity element");
  data->identity = *identity;

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elem ab = data->table[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (data->table[ab * n + c] != data->table[a * n + data->table[b * n + c]]) {
          std::ostringstream os;
          os << "associativity fails for (" << a << ", " << b << ", " << c << ")";
          fail(ErrorCode::NotAGroup, os.str());
        }
      }
    }

  data->inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (data->table[a * n + b] == *identity) {
        data->inverse[a] = static_cast<Elem>(b);
        break;
      }
    if (data->table[data->inverse[a] * n + a] != *identity)
      fail(ErrorCode::NotAGroup, "element " + std::to_string(a) + " has no two-sided inverse");
  }

  data->orders.assign(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    Elem x = static_cast<Elem>(a);
    std::size_t k = 1;
    while (x != *identity) {
      x = data->table[x * n + a];
      ++k;
    }
    data->orders[a] = k;
  }
  data->names = std::move(names);

  FiniteGroup g;
  g.data_ = std::move(data);
  return g;
}

Elem FiniteGroup::pow(Elem a, long long k) const {
  const auto ord = static_cast<long long>(element_order(a));
  k %= ord;
  if (k < 0) k += ord;
  Elem r = identity();
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::string FiniteGroup::name_of(Elem a) const {
  if (!data_->names.empty()) return data_->names[a];
  return "g" + std::to_string(a);
}

std::vector<std::vector<Elem>> FiniteGroup::table() const {
  const auto n = order();
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = data_->table[i * n + j];
  return t;
}

bool FiniteGroup::is_abelian() const {
  const auto n = order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!commute(static_cast<Elem>(a), static_cast<Elem>(b))) return false;
  return true;
}

// --------------------------------------------------------- constructions

FiniteGroup from_permutations(const std::vector<std::vector<std::size_t>>& generators,
                              std::size_t degree, std::size_t cap) {
  using Perm = std::vector<std::size_t>;
  for (const auto& g : generators) {
    if (g.size() != degree) fail(ErrorCode::InvalidInput, "permutation has wrong degree");
    std::vector<char> hit(degree, 0);
    for (auto v : g) {
      if (v >= degree || hit[v]) fail(ErrorCode::InvalidInput, "generator is not a bijection");
      hit[v] = 1;
    }
  }
  auto compose = [degree](const Perm& p, const Perm& q) {
    Perm r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = q[p[i]];
    return r;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);

  std::map<Perm, Elem> index;
  std::vector<Perm> elems{id};
  index.emplace(id, 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : generators) {
      Perm y = compose(elems[head], s);
      if (index.count(y)) continue;
      if (elems.size() >= cap)
        fail(ErrorCode::CapExceeded,
             "permutation closure exceeds cap " + std::to_string(cap));
      index.emplace(y, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(y));
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = index.at(compose(elems[i], elems[j]));

  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& p : elems) {
    // cycle notation
    std::string s;
    std::vector<char> done(degree, 0);
    for (std::size_t i = 0; i < degree; ++i) {
      if (done[i] || p[i] == i) continue;
      s += "(";
      std::size_t j = i;
      bool first = true;
      while (!done[j]) {
        done[j] = 1;
        if (!first) s += " ";
        s += std::to_string(j);
        first = false;
        j = p[j];
      }
      s += ")";
    }
    names.push_back(s.empty() ? "()" : s);
  }
  return FiniteGroup::from_cayley_table(table, std::move(names));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const auto na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    names[x] = "(" + a.name_of(static_cast<Elem>(x / nb)) + "," +
               b.name_of(static_cast<Elem>(x % nb)) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      auto pa = a.mul(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb));
      auto pb = b.mul(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb));
      table[x][y] = static_cast<Elem>(pa * nb + pb);
    }
  }
  return FiniteGroup::from_cayley_table(table, std::move(names));
}

FiniteGroup central_product(const FiniteGroup& g1, const FiniteGroup& g2, Elem z1, Elem z2) {
  auto check = [](const FiniteGroup& g, Elem z, const char* label) {
    if (z >= g.order()) fail(ErrorCode::InvalidInput, std::string(label) + " out of range");
    if (g.element_order(z) != 2)
      fail(ErrorCode::WrongOrder, std::string(label) + " does not have order 2");
    for (std::size_t x = 0; x < g.order(); ++x)
      if (!g.commute(z, static_cast<Elem>(x)))
        fail(ErrorCode::NotCentral, std::string(label) + " is not central");
  };
  check(g1, z1, "z1");
  check(g2, z2, "z2");

  const auto n1 = g1.order(), n2 = g2.order();
  auto pair_index = [n2](Elem a, Elem b) { return static_cast<std::size_t>(a) * n2 + b; };
  std::vector<Elem> cls(n1 * n2);
  std::vector<std::pair<Elem, Elem>> reps;
  for (Elem a = 0; a < n1; ++a)
    for (Elem b = 0; b < n2; ++b) {
      const auto self = pair_index(a, b);
      const auto partner = pair_index(g1.mul(a, z1), g2.mul(b, z2));
      if (self < partner) {
        cls[self] = cls[partner] = static_cast<Elem>(reps.size());
        reps.emplace_back(a, b);
      }
    }
  const auto n = reps.size();
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    names[x] = g1.name_of(reps[x].first) + "." + g2.name_of(reps[x].second);
    for (std::size_t y = 0; y < n; ++y)
      table[x][y] = cls[pair_index(g1.mul(reps[x].first, reps[y].first),
                                   g2.mul(reps[x].second, reps[y].second))];
  }
  return FiniteGroup::from_cayley_table(table, std::move(names));
}

// --------------------------------------------------------------- Subgroup

namespace {

ElemSet closure(const FiniteGroup& g, std::span<const Elem> gens) {
  ElemSet set(g.order());
  std::vector<Elem> queue{g.identity()};
  set.insert(g.identity());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (Elem s : gens) {
      const Elem y = g.mul(x, s);
      if (!set.contains(y)) {
        set.insert(y);
        queue.push_back(y);
      }
    }
  }
  return set;
}

std::vector<Elem> greedy_generators(const FiniteGroup& g, const std::vector<Elem>& members) {
  std::vector<Elem> gens;
  ElemSet span(g.order());
  span.insert(g.identity());
  for (Elem x : members) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = closure(g, gens);
  }
  return gens;
}

}  // namespace

Subgroup::Subgroup(FiniteGroup parent, ElemSet members, std::vector<Elem> generators)
    : parent_(std::move(parent)), set_(std::move(members)), members_(set_.elements()) {
  if (generators.empty()) {
    generators_ = greedy_generators(parent_, members_);
  } else {
    std::erase(generators, parent_.identity());
    generators_ = std::move(generators);
  }
}

bool Subgroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (!parent_.commute(generators_[i], generators_[j])) return false;
  return true;
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members() < b.members();
}

Subgroup whole_group(const FiniteGroup& g) {
  ElemSet s(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) s.insert(static_cast<Elem>(i));
  return Subgroup(g, std::move(s));
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  ElemSet s(g.order());
  s.insert(g.identity());
  return Subgroup(g, std::move(s));
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Elem> generators) {
  std::vector<Elem> gens(generators.begin(), generators.end());
  std::erase(gens, g.identity());
  auto set = closure(g, gens);
  if (gens.empty()) return Subgroup(g, std::move(set));
  return Subgroup(g, std::move(set), std::move(gens));
}

Subgroup join(const Subgroup& h, Elem x) {
  if (h.contains(x)) return h;
  auto gens = h.generators();
  gens.push_back(x);
  return generated_subgroup(h.parent(), gens);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  return Subgroup(a.parent(), a.set() & b.set());
}

Subgroup center(const FiniteGroup& g) {
  const auto gens = whole_group(g).generators();
  ElemSet s(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y : gens) central = central && g.commute(static_cast<Elem>(x), y);
    if (central) s.insert(static_cast<Elem>(x));
  }
  return Subgroup(g, std::move(s));
}

Subgroup derived_subgroup(const Subgroup& h) {
  const auto& g = h.parent();
  ElemSet comms(g.order());
  for (Elem x : h.members())
    for (Elem y : h.members()) comms.insert(g.commutator(x, y));
  const auto gens = comms.elements();
  return generated_subgroup(g, gens);
}

bool is_normal(const Subgroup& h) {
  const auto& g = h.parent();
  const auto ggens = whole_group(g).generators();
  for (Elem s : ggens)
    for (Elem x : h.generators())
      if (!h.contains(g.mul(g.mul(g.inv(s), x), s))) return false;
  return true;
}

std::vector<Subgroup> lower_central_series(const Subgroup& h) {
  const auto& g = h.parent();
  std::vector<Subgroup> series{h};
  while (!series.back().is_trivial()) {
    const auto& cur = series.back();
    ElemSet comms(g.order());
    for (Elem x : cur.members())
      for (Elem y : h.members()) comms.insert(g.commutator(x, y));
    const auto gens = comms.elements();
    Subgroup next = generated_subgroup(g, gens);
    if (next == cur) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<int> nilpotency_class(const Subgroup& h) {
  if (h.is_trivial()) return 0;
  if (h.is_abelian()) return 1;
  auto series = lower_central_series(h);
  if (!series.back().is_trivial()) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

bool is_solvable(const FiniteGroup& g) {
  Subgroup cur = whole_group(g);
  while (!cur.is_trivial()) {
    Subgroup next = derived_subgroup(cur);
    if (next == cur) return false;
    cur = std::move(next);
  }
  return true;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, SubgroupLimits limits) {
  if (g.order() > limits.max_order)
    fail(ErrorCode::CapExceeded, "group order " + std::to_string(g.order()) +
                                     " exceeds subgroup enumeration bound " +
                                     std::to_string(limits.max_order));
  std::unordered_set<ElemSet, ElemSetHash> seen;
  std::vector<Subgroup> found;
  auto add = [&](Subgroup s) {
    if (!seen.insert(s.set()).second) return;
    if (found.size() >= limits.max_subgroups)
      fail(ErrorCode::CapExceeded,
           "subgroup count exceeds cap " + std::to_string(limits.max_subgroups));
    found.push_back(std::move(s));
  };

  add(trivial_subgroup(g));
  // Cyclic subgroups, one generator each.
  std::vector<std::size_t> cyclic_index;
  std::vector<Elem> cyclic_gen;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    const Elem e = static_cast<Elem>(x);
    const Elem gen[] = {e};
    auto c = generated_subgroup(g, gen);
    if (!seen.count(c.set())) {
      cyclic_gen.push_back(e);
      add(std::move(c));
    }
  }
  // Close under joins with cyclic subgroups, breadth first.
  for (std::size_t head = 0; head < found.size(); ++head) {
    // Lagrange: a proper overgroup has order at least 2|H|.
    if (found[head].order() * 2 > g.order()) continue;
    for (Elem x : cyclic_gen) {
      if (found[head].contains(x)) continue;
      add(join(found[head], x));
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool is_p_power(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

Subgroup sylow_component(const Subgroup& n, std::uint64_t p) {
  if (!nilpotency_class(n)) fail(ErrorCode::NotNilpotent, "subgroup is not nilpotent");
  const auto& g = n.parent();
  ElemSet s(g.order());
  for (Elem x : n.members())
    if (is_p_power(g.element_order(x), p)) s.insert(x);
  return Subgroup(g, std::move(s));
}

ElementCensus element_census(const FiniteGroup& g) {
  ElementCensus c;
  for (auto p : prime_divisors(g.order())) c.prime_power_counts[p] = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto ord = g.element_order(static_cast<Elem>(x));
    if (ord == 1) continue;
    auto ps = prime_divisors(ord);
    if (ps.size() == 1)
      ++c.prime_power_counts[ps.front()];
    else
      ++c.mixed_order_count;
  }
  return c;
}

bool is_transitively_commutative(const FiniteGroup& g) {
  if (g.is_abelian()) fail(ErrorCode::AbelianInput, "group is abelian");
  const auto z = center(g);
  std::vector<Elem> nc;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!z.contains(static_cast<Elem>(x))) nc.push_back(static_cast<Elem>(x));
  for (Elem y : nc) {
    std::vector<Elem> cy;
    for (Elem x : nc)
      if (x != y && g.commute(x, y)) cy.push_back(x);
    for (std::size_t i = 0; i < cy.size(); ++i)
      for (std::size_t j = i + 1; j < cy.size(); ++j)
        if (!g.commute(cy[i], cy[j])) return false;
  }
  return true;
}

}  // namespace bqg
