#include <bqg/abelian.hpp>

#include <algorithm>
#include <numeric>

namespace bqg {

namespace {

struct PrimaryGenerator {
  std::uint64_t prime;
  std::uint64_t order;  // a power of prime
  Elem element;
};

// Basis of the Sylow p-part of an abelian subgroup: repeatedly take the
// element of largest order modulo the span so far and correct it by an
// m-th power from the span so it meets the span trivially.
std::vector<PrimaryGenerator> primary_basis(const Subgroup& a, std::uint64_t p) {
  const auto& g = a.parent();
  std::vector<Elem> part;
  for (Elem x : a.members())
    if (is_p_power(g.element_order(x), p)) part.push_back(x);

  std::vector<PrimaryGenerator> out;
  std::vector<Elem> gens;
  Subgroup span = trivial_subgroup(g);
  while (span.order() < part.size()) {
    Elem best = 0;
    std::uint64_t best_m = 0;
    for (Elem x : part) {
      if (span.contains(x)) continue;
      std::uint64_t m = 1;
      Elem y = x;
      while (!span.contains(y)) {
        y = g.mul(y, x);
        ++m;
      }
      if (m > best_m) {
        best_m = m;
        best = x;
      }
    }
    const Elem target = g.pow(best, static_cast<long long>(best_m));
    std::optional<Elem> root;
    for (Elem c : span.members())
      if (g.pow(c, static_cast<long long>(best_m)) == target) {
        root = c;
        break;
      }
    if (!root) fail(ErrorCode::Internal, "abelian basis: no root in span");
    const Elem y = g.mul(best, g.inv(*root));
    out.push_back({p, best_m, y});
    gens.push_back(y);
    span = generated_subgroup(g, gens);
  }
  return out;
}

}  // namespace

AbelianBasis abelian_basis(const Subgroup& a) {
  if (!a.is_abelian()) fail(ErrorCode::NotAbelian, "subgroup is not abelian");
  const auto& g = a.parent();

  // Primary generators per prime, largest order first.
  std::vector<std::vector<PrimaryGenerator>> per_prime;
  std::size_t k = 0;
  for (auto p : prime_divisors(a.order())) {
    auto pb = primary_basis(a, p);
    std::sort(pb.begin(), pb.end(),
              [](const auto& x, const auto& y) { return x.order > y.order; });
    k = std::max(k, pb.size());
    per_prime.push_back(std::move(pb));
  }

  AbelianBasis basis;
  // Combine t-th largest primary factors of each prime into one cyclic factor.
  for (std::size_t t = 0; t < k; ++t) {
    Elem gen = g.identity();
    std::uint64_t ord = 1;
    for (const auto& pb : per_prime) {
      if (t < pb.size()) {
        gen = g.mul(gen, pb[t].element);
        ord *= pb[t].order;
      }
    }
    basis.generators.push_back(gen);
    basis.orders.push_back(ord);
  }
  std::reverse(basis.generators.begin(), basis.generators.end());
  std::reverse(basis.orders.begin(), basis.orders.end());

  // Coordinates of every member.
  std::size_t total = 1;
  for (auto d : basis.orders) total *= d;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<std::uint64_t> coord(basis.orders.size());
    std::size_t rest = idx;
    Elem x = g.identity();
    for (std::size_t i = coord.size(); i-- > 0;) {
      coord[i] = rest % basis.orders[i];
      rest /= basis.orders[i];
      x = g.mul(x, g.pow(basis.generators[i], static_cast<long long>(coord[i])));
    }
    basis.coordinates.emplace(x, std::move(coord));
  }
  if (basis.coordinates.size() != a.order())
    fail(ErrorCode::Internal, "abelian basis does not span the subgroup");
  return basis;
}

std::vector<std::uint64_t> abelian_invariants(const Subgroup& a) {
  return abelian_basis(a).orders;
}

int d_value(const Subgroup& t) {
  if (!t.is_abelian()) fail(ErrorCode::NotAbelian, "subgroup is not abelian");
  int d = 0;
  for (auto p : prime_divisors(t.order())) d += static_cast<int>(primary_basis(t, p).size());
  return d;
}

CharacterGroup::CharacterGroup(const Subgroup& base)
    : base_(base), basis_(abelian_basis(base)), modulus_(base.parent().order()) {
  for (auto d : basis_.orders) size_ *= d;
}

std::vector<std::uint64_t> CharacterGroup::character(std::size_t index) const {
  std::vector<std::uint64_t> c(basis_.orders.size());
  for (std::size_t i = c.size(); i-- > 0;) {
    c[i] = index % basis_.orders[i];
    index /= basis_.orders[i];
  }
  return c;
}

std::size_t CharacterGroup::index_of(const std::vector<std::uint64_t>& c) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < c.size(); ++i) idx = idx * basis_.orders[i] + c[i];
  return idx;
}

std::uint64_t CharacterGroup::evaluate(std::size_t index, Elem x) const {
  const auto c = character(index);
  const auto& xc = basis_.coordinates.at(x);
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    v = (v + c[i] * xc[i] % basis_.orders[i] * (modulus_ / basis_.orders[i])) % modulus_;
  return v;
}

std::vector<std::size_t> CharacterGroup::restriction_to(const CharacterGroup& sub) const {
  if (!sub.base().subset_of(base_))
    fail(ErrorCode::InvalidInput, "restriction target is not a subgroup");
  std::vector<std::size_t> out(size_);
  const auto& sb = sub.basis();
  std::vector<std::uint64_t> c(sb.orders.size());
  for (std::size_t idx = 0; idx < size_; ++idx) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      const auto v = evaluate(idx, sb.generators[j]);
      const auto step = modulus_ / sb.orders[j];
      c[j] = v / step;
    }
    out[idx] = sub.index_of(c);
  }
  return out;
}

}  // namespace bqg
