#pragma once

#include <bqg/integer_matrix.hpp>

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace bqg {

/// Z^rank + Z/d1 + ... with d1 | d2 | ... and every d_i >= 2.
struct FgAbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  /// Accepts any list of cyclic orders (0 means Z, 1 is dropped) and
  /// normalizes to invariant factors.
  static FgAbelianGroup from_cyclic_orders(std::size_t rank, const std::vector<Integer>& orders);

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }
  /// e.g. "Z^32 + (Z/2)^9", "0"
  std::string to_string() const;

  friend bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b);
};

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

enum class Grading { Homological, Cohomological };

/// Bounded complex of free modules C_lo .. C_hi. Differentials are stored
/// between neighbouring degrees: homological d_n : C_n -> C_{n-1}
/// (dims[n-1-lo] x dims[n-lo]), cohomological delta^n : C^n -> C^{n+1}.
/// d o d = 0 is checked on construction.
class ChainComplex {
 public:
  ChainComplex() = default;
  ChainComplex(Grading grading, int lo, std::vector<std::size_t> dims,
               std::vector<IntMatrix> maps,
               int reliable_top = std::numeric_limits<int>::max());

  Grading grading() const { return grading_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  bool empty() const { return dims_.empty(); }
  std::size_t dim(int n) const;
  const std::vector<std::size_t>& dims() const { return dims_; }
  /// The map leaving degree n, or nullptr at the ends.
  const IntMatrix* outgoing(int n) const;
  /// The map arriving in degree n, or nullptr at the ends.
  const IntMatrix* incoming(int n) const;
  /// Homology above this degree may be wrong because the complex was cut off.
  int reliable_top() const { return reliable_top_; }
  bool reliable(int n) const { return n <= reliable_top_; }

 private:
  Grading grading_ = Grading::Homological;
  int lo_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<IntMatrix> maps_;  // maps_[k] joins degrees lo+k and lo+k+1
  int reliable_top_ = std::numeric_limits<int>::max();
};

/// ker(outgoing) / im(incoming) at degree n; works for either grading.
FgAbelianGroup homology(const ChainComplex& c, int n);
FgAbelianGroup cohomology(const ChainComplex& c, int n);
/// Every degree lo..hi, each differential reduced once.
std::vector<FgAbelianGroup> homology_all(const ChainComplex& c);

/// Sum of (-1)^n rank C_n.
long long euler_characteristic(const ChainComplex& c);
/// Sum of (-1)^n rank H_n for groups listed from degree lo.
long long betti_euler(const std::vector<FgAbelianGroup>& groups, int lo = 0);

/// Reduced homology from ordinary homology starting at degree 0: drops one
/// Z from H_0 (an empty space has reduced H_{-1} = Z, not represented here).
std::vector<FgAbelianGroup> reduced(std::vector<FgAbelianGroup> groups);

/// An abstract finite poset by its order relation.
struct FinitePoset {
  std::size_t size = 0;
  std::vector<char> leq;  // size x size, reflexive
  bool le(std::size_t i, std::size_t j) const { return leq[i * size + j]; }
};

/// Chains of the nerve: degree-k basis = strict chains x_0 < ... < x_k in
/// lexicographic order, boundary = alternating sum of deletions. Chains
/// longer than max_dim are dropped and the top degree marked unreliable.
ChainComplex order_complex_chains(const FinitePoset& p,
                                  std::size_t max_dim = std::numeric_limits<std::size_t>::max());

/// Number of strict chains per degree (no matrices).
std::vector<std::size_t> chain_counts(const FinitePoset& p, std::size_t max_dim);

}  // namespace bqg
