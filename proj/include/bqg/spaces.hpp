#pragma once

#include <bqg/chain_complex.hpp>
#include <bqg/colimit.hpp>
#include <bqg/limits.hpp>
#include <bqg/poset.hpp>

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bqg {

/// Non-degenerate simplices per degree with their faces; faces[k][s][i] is
/// the index of d_i of simplex s among degree k-1 simplices, or kDegenerate
/// when that face is degenerate (zero in normalized chains).
struct SimplicialChainData {
  static constexpr std::uint32_t kDegenerate = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::size_t> counts;
  std::vector<std::vector<std::vector<std::uint32_t>>> faces;  // faces[0] is empty
  int reliable_top = std::numeric_limits<int>::max();

  /// d_i d_j = d_{j-1} d_i for i < j wherever both routes stay non-degenerate.
  bool face_identities_hold() const;
  ChainComplex chains() const;
};

/// Normalized chains of B(q,G) (or B(q,G)_p): degree-n simplices are tuples
/// of non-identity elements generating a subgroup of class < q (a p-group
/// when p is given). Built through degree max_deg + 1.
SimplicialChainData bqg_simplices(const FiniteGroup& g, int q, std::size_t max_deg,
                                  std::optional<std::uint64_t> p = std::nullopt,
                                  std::size_t basis_cap = 4'000'000);
ChainComplex bqg_truncated_chains(const FiniteGroup& g, int q, std::size_t max_deg,
                                  std::optional<std::uint64_t> p = std::nullopt,
                                  std::size_t basis_cap = 4'000'000);
/// H_0 .. H_max_deg.
std::vector<FgAbelianGroup> bqg_homology(const FiniteGroup& g, int q, std::size_t max_deg,
                                         std::optional<std::uint64_t> p = std::nullopt,
                                         std::size_t basis_cap = 4'000'000);

/// Set-valued covariant diagram on a finite poset: maps[{a, b}] for a < b
/// sends set(a) onto set(b).
struct GSetDiagram {
  FinitePoset poset;
  std::vector<std::size_t> set_sizes;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::uint32_t>> maps;

  /// Shapes, surjectivity and functoriality; throws InvalidInput.
  void validate() const;
};

/// Simplices (A_0 < ... < A_k, s in set(A_0)); deleting A_0 pushes s
/// forward to set(A_1).
SimplicialChainData transport_nerve(const GSetDiagram& d,
                                    std::size_t max_dim = std::numeric_limits<std::size_t>::max());

/// Cosets K/iota(A) over the subgroups `poset` (members of G), where
/// iota maps G-elements into the group K.
GSetDiagram coset_diagram(const std::vector<Subgroup>& members, const FiniteGroup& k,
                          const std::vector<Elem>& iota);

struct NerveHomology {
  std::vector<std::size_t> simplex_counts;
  std::vector<FgAbelianGroup> homology;
  long long euler_characteristic = 0;
  long long betti_euler = 0;
};

/// Homology of E(q,G) over the intersection closure of the maximal members.
NerveHomology eqg_homology(const FiniteGroup& g, int q = 2);

struct UniversalCoverReport {
  std::size_t colimit_order = 0;
  std::size_t poset_size = 0;
  NerveHomology nerve;
  bool simply_connected = false;  // H_0 = Z and H_1 = 0
};
/// Throws ColimitNotFinite when the colimit enumeration does not complete.
UniversalCoverReport universal_cover_homology(const FiniteGroup& g, int q = 2,
                                              std::size_t cap = 1'000'000);

/// Cosets xH of proper subgroups ordered by inclusion.
FinitePoset coset_poset(const FiniteGroup& g, SubgroupLimits limits = {});
NerveHomology coset_poset_homology(const FiniteGroup& g, SubgroupLimits limits = {});

struct ChiefSeriesReport {
  std::vector<Subgroup> series;       // 1 = N_0 < N_1 < ... < N_r = G
  std::vector<bool> complemented;     // per factor N_i / N_{i-1}
  std::size_t d = 0;
};
/// Throws NotSolvable.
ChiefSeriesReport complemented_chief_factors(const FiniteGroup& g, SubgroupLimits limits = {});
std::size_t complemented_chief_factor_count(const FiniteGroup& g, SubgroupLimits limits = {});

struct WedgeReport {
  std::size_t d = 0;
  std::vector<FgAbelianGroup> reduced_homology;
  bool passed = false;  // free and concentrated in degree d-1
  std::size_t spheres = 0;
};
WedgeReport verify_wedge_spheres(const FiniteGroup& g, SubgroupLimits limits = {});

struct SplittingDegree {
  std::size_t degree = 0;
  FgAbelianGroup whole;
  std::map<std::uint64_t, FgAbelianGroup> per_prime;
  FgAbelianGroup sum;
  bool equal = false;
};
struct SplittingReport {
  std::vector<SplittingDegree> degrees;
  bool passed = false;
};
SplittingReport splitting_report(const FiniteGroup& g, int q, std::size_t max_deg);

struct KTheoryPrime {
  std::uint64_t prime = 0;
  std::size_t n_p = 0;
  std::vector<FgAbelianGroup> lim;
  bool collapse_certified = false;
};
struct KTheoryReport {
  std::vector<KTheoryPrime> primes;
  bool collapse_certified = false;
  std::string k0;  // e.g. "Z + Z_2^31"
  std::string k1;  // e.g. "(Z/2)^9", empty when not certified
  FgAbelianGroup k1_group;
  std::string rational_k0;
  std::string rational_k1;
};
KTheoryReport ktheory_report(const FiniteGroup& g);

/// max_deg = 3 for |G| <= 32, 2 above.
std::size_t default_max_deg(const FiniteGroup& g);

}  // namespace bqg
