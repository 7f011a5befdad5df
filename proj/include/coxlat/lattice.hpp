#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "coxlat/complexes.hpp"

namespace coxlat {

/// Result of a meet computation: the element, the top-dimensional simplex of
/// X(alpha) ^ X(beta) it was read off from, and whether the reflection-set
/// and order conditions were re-verified.
struct MeetResult {
  GroupElement element;
  Simplex witness_simplex;
  bool verified = false;
};

/// Shared precomputation for lattice operations on one group: the edge
/// matrix of X(gamma) and a cache of reflection-set masks.
class LatticeContext {
 public:
  explicit LatticeContext(const RootSystem& rs);

  const RootSystem& root_system() const { return *rs_; }
  const std::vector<Bits128>& adjacency() const { return adj_; }

  /// Reflection-set mask of an element below gamma (bit i-1 = R(rho_i) <= w).
  Bits128 refl_mask(const GroupElement& g);
  Bits128 mask_from_indices(const std::vector<int>& idx) const;

  /// Meet from precomputed masks; no verification.
  std::pair<GroupElement, Simplex> meet_masked(const Bits128& m);

 private:
  const RootSystem* rs_;
  std::vector<Bits128> adj_;
  std::unordered_map<std::string, Bits128> mask_cache_;
};

/// Greatest lower bound in [I, gamma] via the first top-dimensional simplex
/// of X(alpha) ^ X(beta); verifies S_delta = S_alpha ^ S_beta and both order
/// relations (InternalError on failure).
MeetResult meet(LatticeContext& ctx, const GroupElement& a, const GroupElement& b);

/// Least upper bound via the Kreweras complement:
/// join(a, b) = gamma * meet(a^{-1} gamma, b^{-1} gamma)^{-1}.
GroupElement join(LatticeContext& ctx, const GroupElement& a, const GroupElement& b);

/// Pairwise verification of the lattice property over the whole interval:
/// every meet agrees with the brute-force greatest lower bound over the
/// explicit relation, and every join with the least upper bound.
struct LatticeReport {
  long pairs_checked = 0;
  std::vector<std::string> failures;
  int elements = 0;
  bool ok() const { return failures.empty(); }
};
LatticeReport verify_lattice(LatticeContext& ctx, const IntervalPoset& poset);

/// Number of elements of the interval (the W-Catalan number).
int catalan_count(const IntervalPoset& poset);

/// Reachability bitsets of the poset order (down[i] = elements <= i),
/// computed from the cover relation.  Word-packed, word count ceil(N/64).
std::vector<std::vector<uint64_t>> down_sets(const IntervalPoset& poset);
std::vector<std::vector<uint64_t>> up_sets(const IntervalPoset& poset);

}  // namespace coxlat
