#include <bqg/catalog.hpp>

#include <numeric>

namespace bqg {

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) fail(ErrorCode::UnsupportedParam, "cyclic group of order 0");
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = i == 0 ? "e" : (i == 1 ? "a" : "a^" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Elem>((i + j) % n);
  }
  return FiniteGroup::from_cayley_table(t, std::move(names));
}

FiniteGroup dihedral_group(std::size_t order) {
  if (order < 2 || order % 2)
    fail(ErrorCode::UnsupportedParam, "dihedral group needs an even order >= 2");
  const std::size_t k = order / 2;
  // r^a s^b  ->  a + k*b
  std::vector<std::vector<Elem>> t(order, std::vector<Elem>(order));
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x % k, b = x / k;
    std::string r = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
    names[x] = r + (b ? "s" : "");
    if (names[x].empty()) names[x] = "e";
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t c = y % k, d = y / k;
      const std::size_t na = b ? (a + k - c) % k : (a + c) % k;
      t[x][y] = static_cast<Elem>(na + k * ((b + d) % 2));
    }
  }
  return FiniteGroup::from_cayley_table(t, std::move(names));
}

FiniteGroup quaternion8() {
  // index = 2*unit + sign, units 1,i,j,k
  // unit products: u*v = sign * w
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};  // 1 = negative
  std::vector<std::vector<Elem>> t(8, std::vector<Elem>(8));
  const char* unit_names[] = {"1", "i", "j", "k"};
  std::vector<std::string> names(8);
  for (int x = 0; x < 8; ++x) {
    names[static_cast<std::size_t>(x)] = std::string(x % 2 ? "-" : "") + unit_names[x / 2];
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int sign = (x % 2) ^ (y % 2) ^ unit_sign[u][v];
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          static_cast<Elem>(2 * unit_mul[u][v] + sign);
    }
  }
  return FiniteGroup::from_cayley_table(t, std::move(names));
}

Elem central_involution(const FiniteGroup& g) {
  const auto z = center(g);
  for (Elem x : z.members())
    if (g.element_order(x) == 2) return x;
  fail(ErrorCode::WrongOrder, "group has no central involution");
}

namespace {

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0 || n > 6) fail(ErrorCode::UnsupportedParam, "symmetric group needs 1 <= n <= 6");
  if (n == 1) return cyclic_group(1);
  std::vector<std::size_t> transposition(n), cycle(n);
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return from_permutations({transposition, cycle}, n);
}

FiniteGroup extraspecial(std::size_t n, bool minus) {
  if (n < 1 || n > 4)
    fail(ErrorCode::UnsupportedParam, "extraspecial groups are built for 1 <= n <= 4");
  FiniteGroup g = minus ? quaternion8() : dihedral_group(8);
  const FiniteGroup d8 = dihedral_group(8);
  const Elem zd = central_involution(d8);
  for (std::size_t i = 1; i < n; ++i) g = central_product(g, d8, central_involution(g), zd);
  return g;
}

}  // namespace

FiniteGroup catalog(const std::string& name, const std::vector<long long>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      fail(ErrorCode::UnsupportedParam,
           name + " expects " + std::to_string(count) + " parameter(s)");
    for (auto p : params)
      if (p <= 0) fail(ErrorCode::UnsupportedParam, name + " parameters must be positive");
  };
  if (name == "cyclic") {
    need(1);
    if (params[0] > 4096) fail(ErrorCode::UnsupportedParam, "cyclic order too large");
    return cyclic_group(static_cast<std::size_t>(params[0]));
  }
  if (name == "abelian") {
    if (params.empty()) fail(ErrorCode::UnsupportedParam, "abelian expects invariants");
    long long total = 1;
    for (auto p : params) {
      if (p <= 0) fail(ErrorCode::UnsupportedParam, "abelian parameters must be positive");
      total *= p;
      if (total > 4096) fail(ErrorCode::UnsupportedParam, "abelian group too large");
    }
    FiniteGroup g = cyclic_group(static_cast<std::size_t>(params[0]));
    for (std::size_t i = 1; i < params.size(); ++i)
      g = direct_product(g, cyclic_group(static_cast<std::size_t>(params[i])));
    return g;
  }
  if (name == "dihedral") {
    need(1);
    if (params[0] > 4096) fail(ErrorCode::UnsupportedParam, "dihedral order too large");
    return dihedral_group(static_cast<std::size_t>(params[0]));
  }
  if (name == "quaternion8") {
    if (!params.empty()) fail(ErrorCode::UnsupportedParam, "quaternion8 takes no parameters");
    return quaternion8();
  }
  if (name == "symmetric") {
    need(1);
    return symmetric_group(static_cast<std::size_t>(params[0]));
  }
  if (name == "extraspecial_plus" || name == "extraspecial_minus") {
    need(1);
    return extraspecial(static_cast<std::size_t>(params[0]), name == "extraspecial_minus");
  }
  fail(ErrorCode::UnknownName, "unknown catalog group '" + name + "'");
}

std::string CatalogEntry::label() const {
  std::string s = name;
  for (auto p : params) s += ":" + std::to_string(p);
  return s;
}

std::vector<CatalogEntry> catalog_sweep(std::size_t max_order) {
  static const std::vector<std::pair<std::size_t, CatalogEntry>> entries = {
      {2, {"cyclic", {2}}},
      {3, {"cyclic", {3}}},
      {4, {"cyclic", {4}}},
      {4, {"abelian", {2, 2}}},
      {5, {"cyclic", {5}}},
      {6, {"cyclic", {6}}},
      {6, {"symmetric", {3}}},
      {8, {"cyclic", {8}}},
      {8, {"abelian", {2, 4}}},
      {8, {"abelian", {2, 2, 2}}},
      {8, {"dihedral", {8}}},
      {8, {"quaternion8", {}}},
      {9, {"abelian", {3, 3}}},
      {10, {"dihedral", {10}}},
      {12, {"cyclic", {12}}},
      {12, {"abelian", {2, 6}}},
      {12, {"dihedral", {12}}},
      {16, {"abelian", {4, 4}}},
      {16, {"abelian", {2, 2, 4}}},
      {16, {"abelian", {2, 2, 2, 2}}},
      {16, {"dihedral", {16}}},
      {18, {"dihedral", {18}}},
      {24, {"symmetric", {4}}},
      {24, {"dihedral", {24}}},
      {30, {"cyclic", {30}}},
      {32, {"dihedral", {32}}},
      {32, {"extraspecial_plus", {2}}},
      {32, {"extraspecial_minus", {2}}},
      {48, {"dihedral", {48}}},
      {64, {"cyclic", {64}}},
      {64, {"abelian", {2, 2, 2, 2, 2, 2}}},
  };
  std::vector<CatalogEntry> out;
  for (const auto& [order, e] : entries)
    if (order <= max_order) out.push_back(e);
  return out;
}

}  // namespace bqg
