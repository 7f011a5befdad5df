#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "coxlat/rootsystem.hpp"

namespace coxlat {

/// An element of the reflection group as an exact matrix in simple-root
/// coordinates, with a canonical key for hashing and deduplication.
class GroupElement {
 public:
  explicit GroupElement(Mat m) : mat_(std::move(m)), key_(mat_.key()) {}

  const Mat& mat() const { return mat_; }
  const std::string& key() const { return key_; }
  bool operator==(const GroupElement& o) const { return key_ == o.key_; }
  bool operator!=(const GroupElement& o) const { return key_ != o.key_; }

 private:
  Mat mat_;
  std::string key_;
};

GroupElement identity_element(const RootSystem& rs);
GroupElement gamma_element(const RootSystem& rs);
/// Inverse with respect to the Gram form: w^{-1} = B^{-1} w^T B.
Mat group_inverse(const RootSystem& rs, const Mat& w);
/// True when w preserves the Gram form, w^T B w = B.
bool preserves_form(const RootSystem& rs, const Mat& w);

/// Reflection in a unit root; throws Error when dot(v, v) != 1.
GroupElement reflection(const RootSystem& rs, const Vec& unit_root);

/// Reflection length: rank(w - I) = dim of the moved space.
int reflection_length(const Mat& w);
inline int reflection_length(const GroupElement& w) { return reflection_length(w.mat()); }

/// Absolute order: u <= w iff l(w) = l(u) + l(u^{-1} w).
bool leq(const RootSystem& rs, const Mat& u, const Mat& w);
inline bool leq(const RootSystem& rs, const GroupElement& u, const GroupElement& w) {
  return leq(rs, u.mat(), w.mat());
}

/// Moved space M(w) = im(w - I) and fixed space F(w) = ker(w - I), as exact
/// bases.
std::pair<std::vector<Vec>, std::vector<Vec>> moved_fixed(const RootSystem& rs, const Mat& w);

/// The interval [I, gamma] in the absolute order, graded by reflection
/// length, with lower covers.  Elements are in canonical order: by length,
/// then by matrix key.
struct IntervalPoset {
  std::vector<GroupElement> elems;
  std::vector<int> len;
  std::vector<std::vector<int>> lower_covers;  // indices of elements covered
  std::unordered_map<std::string, int> index_by_key;

  int size() const { return static_cast<int>(elems.size()); }
  int find(const GroupElement& g) const {
    auto it = index_by_key.find(g.key());
    return it == index_by_key.end() ? -1 : it->second;
  }
};

/// Enumerate [I, gamma] by breadth-first search downward from gamma:
/// w' = R w is kept iff l(w') = l(w) - 1.  The optional reflection order
/// permutes which reflections are tried first; the result is order
/// independent and canonically sorted.
IntervalPoset enumerate_interval(const RootSystem& rs,
                                 const std::vector<int>* reflection_order = nullptr);

/// Indices i (1-based, ascending) of the positive roots with R(rho_i) <= w.
/// Throws Error when w is not below gamma.
std::vector<int> reflection_set(const RootSystem& rs, const Mat& w);

/// Kreweras complement w -> w^{-1} gamma; order reversing on [I, gamma].
GroupElement kreweras(const RootSystem& rs, const GroupElement& w);

}  // namespace coxlat
