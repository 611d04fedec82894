#pragma once

#include <bqg/group.hpp>

#include <string>
#include <vector>

namespace bqg {

/// Named constructions:
///   cyclic n, abelian d1 d2 ..., dihedral m (order m, m even),
///   quaternion8, symmetric n (n <= 6),
///   extraspecial_plus n  (central product of n copies of D8),
///   extraspecial_minus n (same with one factor replaced by Q8).
FiniteGroup catalog(const std::string& name, const std::vector<long long>& params = {});

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t order);
FiniteGroup quaternion8();
/// Central involution used when forming central products of D8 / Q8 factors.
Elem central_involution(const FiniteGroup& g);

/// A named catalog entry, e.g. {"dihedral", {8}} -> "dihedral:8".
struct CatalogEntry {
  std::string name;
  std::vector<long long> params;
  std::string label() const;
};

/// Fixed list of catalog groups used by property sweeps, ordered by group
/// order; only entries with order <= max_order are returned.
std::vector<CatalogEntry> catalog_sweep(std::size_t max_order);

}  // namespace bqg
