#include <bqg/presentation.hpp>

#include <bqg/abelian.hpp>
#include <bqg/smith.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace bqg {

void GroupPresentation::validate() const {
  if (!elements.empty() && elements.size() != labels.size())
    fail(ErrorCode::InvalidInput, "generator labels and elements differ in length");
  for (const auto& r : relators)
    for (const auto& l : r)
      if (l.generator >= labels.size())
        fail(ErrorCode::InvalidInput, "relator uses an undeclared generator");
}

namespace {

std::string word_text(const GroupPresentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += "*";
    s += p.labels[w[i].generator];
    const auto run = static_cast<long>(j - i);
    const long e = w[i].inverse ? -run : run;
    if (e != 1) s += "^" + std::to_string(e);
    i = j;
  }
  return s;
}

}  // namespace

std::string GroupPresentation::to_text() const {
  std::string s = "generators: [";
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? ", " : "") + labels[i];
  s += "]\nrelators: [";
  for (std::size_t i = 0; i < relators.size(); ++i)
    s += (i ? ", " : "") + word_text(*this, relators[i]);
  s += "]\n";
  return s;
}

GroupPresentation abstract_presentation(std::size_t generators,
                                        const std::vector<std::vector<int>>& relators) {
  GroupPresentation p;
  for (std::size_t i = 0; i < generators; ++i) p.labels.push_back("x" + std::to_string(i + 1));
  for (const auto& r : relators) {
    Word w;
    for (int k : r) {
      if (k >= 0)
        w.push_back({static_cast<std::uint32_t>(k), false});
      else
        w.push_back({static_cast<std::uint32_t>(-k - 1), true});
    }
    p.relators.push_back(std::move(w));
  }
  p.validate();
  return p;
}

GroupPresentation colimit_presentation(const std::vector<Subgroup>& collection) {
  GroupPresentation p;
  if (collection.empty()) return p;
  const auto& g = collection.front().parent();
  std::set<Elem> used;
  for (const auto& a : collection)
    for (Elem x : a.members())
      if (x != g.identity()) used.insert(x);
  std::map<Elem, std::uint32_t> index;
  for (Elem x : used) {
    index[x] = static_cast<std::uint32_t>(p.labels.size());
    p.labels.push_back("g" + std::to_string(x));
    p.elements.push_back(x);
  }
  std::set<std::tuple<Elem, Elem, Elem>> seen;
  for (const auto& a : collection) {
    if (a.is_trivial()) continue;
    const auto gens = a.is_abelian() ? abelian_basis(a).generators : a.generators();
    for (Elem x : gens) {
      if (x == g.identity()) continue;
      for (Elem y : a.members()) {
        if (y == g.identity()) continue;
        const Elem z = g.mul(x, y);
        if (!seen.emplace(x, y, z).second) continue;
        Word w{{index.at(x), false}, {index.at(y), false}};
        if (z != g.identity()) w.push_back({index.at(z), true});
        p.relators.push_back(std::move(w));
      }
    }
  }
  return p;
}

GroupPresentation abelian_colimit_presentation(const std::vector<Subgroup>& collection) {
  for (const auto& a : collection)
    if (!a.is_abelian())
      fail(ErrorCode::NotAbelianCollection, "colimit presentation needs abelian members");
  return colimit_presentation(collection);
}

GroupPresentation reduced_colimit_presentation(const std::vector<Subgroup>& collection) {
  std::vector<Subgroup> keep;
  for (const auto& a : collection) {
    if (!a.is_abelian())
      fail(ErrorCode::NotAbelianCollection, "colimit presentation needs abelian members");
    if (d_value(a) <= 2) keep.push_back(a);
  }
  return colimit_presentation(keep);
}

FgAbelianGroup abelianization(const GroupPresentation& p) {
  std::vector<IntMatrix::Entry> e;
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const auto& l : p.relators[r]) e.push_back({r, l.generator, l.inverse ? -1 : 1});
  const IntMatrix m(p.relators.size(), p.generator_count(), std::move(e));
  const auto f = invariant_factors(m);
  return FgAbelianGroup::from_cyclic_orders(p.generator_count() - f.size(), f);
}

}  // namespace bqg
