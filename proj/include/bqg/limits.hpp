#pragma once

#include <bqg/chain_complex.hpp>
#include <bqg/poset.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bqg {

/// Contravariant functor from a finite poset to free abelian groups:
/// object a carries Z^rank(a), and a <= b carries a rank(a) x rank(b) matrix.
class AbDiagram {
 public:
  using MapStore = std::map<std::pair<std::size_t, std::size_t>, IntMatrix>;

  AbDiagram() = default;
  /// Pairs a < b missing from `maps` are an error; identities are implied.
  /// Functoriality is checked on every comparable triple.
  AbDiagram(FinitePoset order, std::vector<std::size_t> ranks, MapStore maps);

  const FinitePoset& order() const { return order_; }
  std::size_t size() const { return ranks_.size(); }
  std::size_t rank(std::size_t a) const { return ranks_[a]; }
  /// Structure map F(b) -> F(a) for a <= b.
  const IntMatrix& map(std::size_t a, std::size_t b) const;

 private:
  FinitePoset order_;
  std::vector<std::size_t> ranks_;
  MapStore maps_;
  std::vector<IntMatrix> identities_;
};

FinitePoset inclusion_order(const std::vector<Subgroup>& objects);
FinitePoset as_finite_poset(const SubgroupPoset& p);

/// Representation rings of abelian subgroups with restriction maps; the
/// object order is the order of `objects`.
AbDiagram rep_ring_diagram(const std::vector<Subgroup>& objects);
AbDiagram rep_ring_diagram(const SubgroupPoset& p);
/// Indexed by the distinct subgroups of the diagram (see DnDiagram::subgroup_id).
AbDiagram rep_ring_diagram(const DnDiagram& d);

AbDiagram constant_diagram(const FinitePoset& order);

/// Change of basis at one object: basis vector i moves to position perm[i].
AbDiagram permute_basis(const AbDiagram& f, std::size_t object,
                        const std::vector<std::size_t>& perm);

/// C^k = sum over (k+1)-subsets s of F(M_s); the component of delta^{k-1}
/// from face d_j s to s is (-1)^{k-j} F(d_j). F is indexed by the distinct
/// subgroups of `d`.
ChainComplex cech_cochain_complex(const DnDiagram& d, const AbDiagram& f);

/// Normalized cochains: degree n basis = strict chains x_0 > ... > x_n with a
/// basis vector of F(x_n). Built through degree max_deg + 1.
ChainComplex bar_cochain_complex(const SubgroupPoset& p, const AbDiagram& f, std::size_t max_deg);

std::vector<FgAbelianGroup> higher_limits(const ChainComplex& c);
std::vector<std::size_t> rational_higher_limit_ranks(const ChainComplex& c);

struct LimitsReport {
  std::string method;  // "cech" or "bar"
  std::uint64_t prime = 0;
  std::size_t maximal_count = 0;
  std::vector<std::size_t> cochain_ranks;
  std::vector<FgAbelianGroup> lim;
  int reliable_top = 0;  // lim beyond this degree not computed exactly; INT_MAX when complete
};

/// Rep-ring limits over the maximal abelian p-subgroups (Cech method).
LimitsReport rep_ring_limits_cech(const FiniteGroup& g, std::uint64_t p,
                                  SubgroupLimits limits = {});
/// Rep-ring limits over all abelian p-subgroups (bar method).
LimitsReport rep_ring_limits_bar(const FiniteGroup& g, std::uint64_t p, std::size_t max_deg,
                                 SubgroupLimits limits = {});

}  // namespace bqg
