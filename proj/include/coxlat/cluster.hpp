#pragma once

#include "coxlat/complexes.hpp"

namespace coxlat {

/// An almost-positive root: a positive root (with its Steinberg index) or
/// the negative of a simple root (with the simple index).  ext_index is the
/// extended label shared with EX(gamma).
struct AlmostPositiveRoot {
  int ext_index = 0;
  Vec vector;
  bool negative_simple = false;
  int idx = 0;  // Steinberg index (positive) or simple index (negative simple)
};

/// The set of almost-positive roots in the EX(gamma) vertex order:
/// -S2, then the positive roots, then the tail permutation of -S1.
std::vector<AlmostPositiveRoot> almost_positive_roots(const RootSystem& rs);

/// tau_+ = R_1...R_s away from -S2 (fixed on -S2); tau_- symmetrically.
AlmostPositiveRoot tau_plus(const RootSystem& rs, const AlmostPositiveRoot& b);
AlmostPositiveRoot tau_minus(const RootSystem& rs, const AlmostPositiveRoot& b);

/// Compatibility degree: rotate the pair with tau_- tau_+ until the first
/// argument is a negative simple root -alpha_i (cap h+2, then retry with
/// tau_+ tau_-), then read off max([beta' : alpha_i], 0) with
/// [x : alpha_i] = x . beta_i.
FieldElement compatibility_degree(const RootSystem& rs, const AlmostPositiveRoot& a,
                                  const AlmostPositiveRoot& b);

/// True for the crystallographic types (all Coxeter labels in {2, 3, 4, 6}).
bool is_crystallographic(const CoxeterDatum& datum);

/// The generalised associahedron as a flag complex on the almost-positive
/// roots: an edge joins two roots iff their compatibility degree vanishes.
/// Non-crystallographic types require extension = true.
FlagComplex build_GA(const RootSystem& rs, bool extension = false);

/// Edge-set comparison of EX(gamma) and GA(W) under the shared vertex
/// labelling.  The symmetric difference must be empty.
struct IsoReport {
  std::vector<std::pair<int, int>> only_in_ex;
  std::vector<std::pair<int, int>> only_in_ga;
  long shared_edges = 0;
  bool ok() const { return only_in_ex.empty() && only_in_ga.empty(); }
};
IsoReport isomorphism_check(const FlagComplex& ex, const FlagComplex& ga);

}  // namespace coxlat
