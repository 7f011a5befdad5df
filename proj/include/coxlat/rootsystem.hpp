#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "coxlat/matrix.hpp"

namespace coxlat {

/// A finite irreducible Coxeter datum: rank, Coxeter matrix and the number
/// field needed to express its geometry exactly.
struct CoxeterDatum {
  std::string type_label;
  int rank = 0;
  std::vector<std::vector<int>> cox;  // m_ii = 1, m_ij >= 2, symmetric
  const NumberField* field = nullptr;
};

/// Parse a type symbol: "A3", "B4", "C4", "D5", "E6".."E8", "F4", "G2",
/// "H3", "H4" or "I2(m)".  Throws Error on unknown letters or ranks outside
/// the classified ranges.
CoxeterDatum parse_type(const std::string& symbol);

/// Build a datum from an explicit Coxeter matrix (used for pinned simple
/// systems).  Validates shape, connectivity and picks the field from the
/// edge labels.
CoxeterDatum datum_from_matrix(std::string label, std::vector<std::vector<int>> cox);

/// A bipartite ordering of the simple roots: the first `split` roots are
/// pairwise orthogonal and so are the rest.  order[k] = original index of
/// the k-th reordered simple root.
struct Bipartition {
  std::vector<int> order;
  int split = 0;
};

/// Deterministic two-colouring of the Coxeter graph: the colour class
/// containing the smallest original index comes first, members of each class
/// in original index order.  Throws Error if the graph is not 2-colourable.
Bipartition bipartition(const CoxeterDatum& datum);

CoxeterDatum apply_order(const CoxeterDatum& datum, const Bipartition& bip);

/// Gram matrix B_ij = -cos(pi/m_ij), B_ii = 1, expressed exactly in the
/// datum's field.  Verifies positive definiteness via leading principal
/// minors; throws Error when an entry is not expressible or the form is not
/// positive definite.
Mat gram(const CoxeterDatum& datum);

/// The full root and Petrie-polygon data of an irreducible finite real
/// reflection group in the Steinberg ordering:
///
///   rho_i = R_1 R_2 ... R_{i-1} alpha_i   (indices cyclic mod n)
///   mu_i  = R_1 R_2 ... R_{i-1} beta_i
///
/// where the simple roots are bipartite-ordered, gamma = R_1 ... R_n is the
/// Coxeter element of order h, rho_1..rho_{nh/2} are the positive roots and
/// the beta_i form the dual basis of the simple roots.  Everything lives in
/// simple-root coordinates with the Gram bilinear form; construction
/// verifies the closed forms and the positivity partition.
class RootSystem {
 public:
  explicit RootSystem(const CoxeterDatum& datum);

  const CoxeterDatum& datum() const { return datum_; }
  const NumberField& field() const { return *datum_.field; }
  int rank() const { return datum_.rank; }
  int split() const { return split_; }
  int coxeter_number() const { return h_; }
  int num_positive() const { return datum_.rank * h_ / 2; }
  int num_roots() const { return datum_.rank * h_; }

  const Mat& gram_matrix() const { return B_; }
  const Mat& gram_inverse() const { return Binv_; }
  const Mat& gamma() const { return gamma_; }
  const Mat& gamma_inverse() const { return gamma_inv_; }
  const Mat& gamma_minus_identity_inverse() const { return gmi_inv_; }

  /// rho_i for 1 <= i <= nh; extended indices are reduced cyclically mod nh,
  /// so rho(0) = rho(nh), rho(-k) = rho(nh-k), rho(nh/2 + k) etc. all work.
  const Vec& rho(int i) const { return rho_[cyclic(i)]; }
  const Vec& mu(int i) const { return mu_[cyclic(i)]; }
  /// Dual basis vector beta_i, 1 <= i <= n.
  const Vec& beta(int i) const { return beta_[i - 1]; }
  /// Simple root alpha_i as a coordinate vector, 1 <= i <= n.
  const Vec& simple(int i) const { return alpha_[i - 1]; }
  /// Simple reflection R_i, 1 <= i <= n.
  const Mat& simple_reflection(int i) const { return simple_refl_[i - 1]; }
  /// R_1...R_s and R_{s+1}...R_n, the two commuting halves of gamma.
  const Mat& product_S1() const { return prod_s1_; }
  const Mat& product_S2() const { return prod_s2_; }
  /// R(rho_i) for any extended index.
  const Mat& reflection_of_root(int i) const { return refl_[cyclic(i)]; }

  /// Index in 1..nh of the root with these coordinates, or 0 if not a root.
  int index_of_root(const Vec& v) const;
  /// Index of -rho_i.
  int antipode(int i) const { return ant_[cyclic(i)] + 1; }

  FieldElement dot(const Vec& x, const Vec& y) const;

  /// Reflection in the hyperplane orthogonal to v (any nonzero v).
  Mat reflection_from_vector(const Vec& v) const;

  /// mu(sigma) = -2 (gamma - I)^{-1} sigma for an arbitrary vector.
  Vec mu_of(const Vec& v) const;

  /// The matrix [mu_i . rho_j] for 1 <= i, j <= nh/2.
  Mat dot_table() const;

  /// 1 if every coordinate has sign >= 0, -1 if every coordinate has
  /// sign <= 0, 0 otherwise.
  int root_sign(const Vec& v) const;

 private:
  size_t cyclic(int i) const;

  CoxeterDatum datum_;
  Bipartition bip_;
  int split_ = 0;
  int h_ = 0;
  Mat B_, Binv_, gamma_, gamma_inv_, gmi_inv_, prod_s1_, prod_s2_;
  std::vector<Vec> alpha_, beta_, rho_, mu_;
  std::vector<Mat> simple_refl_, refl_;
  std::vector<int> ant_;
  std::unordered_map<std::string, int> root_index_;
};

}  // namespace coxlat
