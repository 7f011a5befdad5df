#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coxlat/absorder.hpp"

namespace coxlat {

/// Fixed 128-bit set; enough for every vertex set that occurs (at most
/// nh/2 + n <= 128 vertices, attained by E8).
struct Bits128 {
  std::array<uint64_t, 2> w{0, 0};

  void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool none() const { return w[0] == 0 && w[1] == 0; }
  int count() const { return __builtin_popcountll(w[0]) + __builtin_popcountll(w[1]); }
  Bits128 operator&(const Bits128& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
  Bits128 operator|(const Bits128& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
  Bits128 minus(const Bits128& o) const { return {{w[0] & ~o.w[0], w[1] & ~o.w[1]}}; }
  bool operator==(const Bits128& o) const { return w == o.w; }
  bool subset_of(const Bits128& o) const {
    return (w[0] & ~o.w[0]) == 0 && (w[1] & ~o.w[1]) == 0;
  }
  int lowest() const {
    if (w[0]) return __builtin_ctzll(w[0]);
    if (w[1]) return 64 + __builtin_ctzll(w[1]);
    return -1;
  }
  /// Smallest member strictly greater than i, or -1.
  int next(int i) const {
    for (int j = i + 1; j < 128; ++j)
      if (test(j)) return j;
    return -1;
  }
};

/// A face: strictly increasing list of extended root indices.
struct Simplex {
  std::vector<int> vertices;
  bool operator==(const Simplex& o) const { return vertices == o.vertices; }
};

/// A flag (clique) complex on an ordered list of extended root indices.
/// Faces are exactly the cliques of the edge graph; facets are the maximal
/// cliques, enumerated deterministically and cached.
class FlagComplex {
 public:
  FlagComplex(std::vector<int> vertex_ids, int max_clique_bound);

  int num_vertices() const { return static_cast<int>(ids_.size()); }
  const std::vector<int>& vertex_ids() const { return ids_; }
  int vertex_id(int pos) const { return ids_[pos]; }
  /// Local position of a global id, or -1.
  int position_of(int id) const;

  void set_edge(int pos_a, int pos_b);
  bool has_edge(int pos_a, int pos_b) const { return adj_[pos_a].test(pos_b); }
  const Bits128& neighbours(int pos) const { return adj_[pos]; }
  int num_edges() const;
  std::vector<std::pair<int, int>> edges() const;  // global id pairs, sorted

  /// Maximal cliques as sorted local-position lists, lexicographically
  /// ordered.  Computed on first use.
  const std::vector<std::vector<int>>& facets() const;
  /// Dimension = size of the largest facet - 1 (-1 when empty).
  int dimension() const;
  /// Facets of maximal size, as global-id simplices.
  std::vector<Simplex> top_simplices() const;
  /// Number of cliques of each size 1..max_clique_bound (index 0 = vertices).
  std::vector<long> face_counts() const;

  Simplex to_simplex(const std::vector<int>& positions) const;

 private:
  std::vector<int> ids_;
  int bound_;
  std::vector<Bits128> adj_;
  mutable bool facets_ready_ = false;
  mutable std::vector<std::vector<int>> facets_;
};

/// Maximal cliques of the subgraph induced on `allowed`, deterministic.
std::vector<std::vector<int>> maximal_cliques(const std::vector<Bits128>& adj, Bits128 allowed,
                                              int num_vertices);

/// Edge criterion of the root complex: for extended indices i < j, whether
/// R(rho_i) R(rho_j) <= gamma^{-1}, decided by rank arithmetic as
/// l(R(rho_i) R(rho_j) gamma) = n - 2.
bool edge_test(const RootSystem& rs, int i, int j);

/// The flag complex X(gamma) on the positive roots rho_1..rho_{nh/2}.
FlagComplex build_X(const RootSystem& rs);

/// The induced subcomplex X(sigma) on the roots preceding sigma.  X(I) is
/// the empty complex.  Throws Error when sigma is not below gamma.
FlagComplex build_X_sigma(const RootSystem& rs, const GroupElement& sigma);

/// The extended complex EX(gamma): vertex set adds the negative simple
/// roots, edges use the same length criterion plus the antipodal exclusion
/// rho_i != -rho_j.
FlagComplex build_EX(const RootSystem& rs);

/// Ordered simple system data of sigma: delta (recursive last-root rule),
/// epsilon_i = R(delta_1)...R(delta_{i-1}) delta_i, and theta = epsilon
/// sorted in the global order.  All returned as 1-based rho indices.
struct SimpleSystemData {
  std::vector<int> delta;
  std::vector<int> epsilon;
  std::vector<int> theta;
};
SimpleSystemData simple_system(const RootSystem& rs, const GroupElement& sigma);

/// The lexicographically first top-dimensional simplex <theta_1..theta_k>
/// of X(sigma).
Simplex first_facet(const RootSystem& rs, const GroupElement& sigma);

/// Exact nonnegative-combination test: coefficients c >= 0 with
/// x = sum c_i g_i, if any.  Independent generators are solved directly;
/// otherwise all maximal independent subsets are searched (desk scale).
std::optional<std::vector<FieldElement>> cone_membership(const RootSystem& rs,
                                                         const std::vector<Vec>& gens,
                                                         const Vec& x);

/// The halfspace description of |X(sigma)|: membership in M(sigma) with
/// mu(theta_j) . x >= 0 for every theta_j.
struct HalfspaceRealization {
  std::vector<Vec> moved_basis;
  std::vector<Vec> mu_theta;
  const RootSystem* rs;
  bool contains(const Vec& x) const;
};
HalfspaceRealization halfspace_realization(const RootSystem& rs, const GroupElement& sigma);

/// Orthogonal projection of mu(tau_i) onto M(sigma) (exact, via the Gram
/// form).
Vec project_mu(const RootSystem& rs, const GroupElement& sigma, int tau_index);

/// Sphere verification report for an (n-1)-sphere candidate.
struct SphereReport {
  bool pure = false;
  bool pseudomanifold = false;
  bool connected = false;
  bool euler_ok = false;
  long euler = 0;
  long facet_count = 0;
  std::string witness;  // first failing face, if any
  bool ok() const { return pure && pseudomanifold && connected && euler_ok; }
};
SphereReport sphere_check(const FlagComplex& c, int n);

}  // namespace coxlat
