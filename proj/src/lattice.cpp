#include "coxlat/lattice.hpp"

#include <algorithm>

namespace coxlat {

LatticeContext::LatticeContext(const RootSystem& rs) : rs_(&rs) {
  const int np = rs.num_positive();
  adj_.assign(np, Bits128{});
  for (int a = 0; a < np; ++a)
    for (int b = a + 1; b < np; ++b)
      if (edge_test(rs, a + 1, b + 1)) {
        adj_[a].set(b);
        adj_[b].set(a);
      }
}

Bits128 LatticeContext::mask_from_indices(const std::vector<int>& idx) const {
  Bits128 m;
  for (int i : idx) m.set(i - 1);
  return m;
}

Bits128 LatticeContext::refl_mask(const GroupElement& g) {
  auto it = mask_cache_.find(g.key());
  if (it != mask_cache_.end()) return it->second;
  Bits128 m = mask_from_indices(reflection_set(*rs_, g.mat()));
  mask_cache_.emplace(g.key(), m);
  return m;
}

std::pair<GroupElement, Simplex> LatticeContext::meet_masked(const Bits128& m) {
  const RootSystem& rs = *rs_;
  if (m.none()) return {identity_element(rs), Simplex{}};
  auto cliques = maximal_cliques(adj_, m, rs.num_positive());
  size_t top = 0;
  for (const auto& c : cliques) top = std::max(top, c.size());
  const std::vector<int>* first = nullptr;
  for (const auto& c : cliques)
    if (c.size() == top) {
      first = &c;
      break;
    }
  // cliques are lexicographically sorted, so this is the first
  // top-dimensional simplex in the lexicographic order.
  Simplex s;
  for (int pos : *first) s.vertices.push_back(pos + 1);
  Mat prod = Mat::identity(rs.field(), rs.rank());
  for (auto it = s.vertices.rbegin(); it != s.vertices.rend(); ++it)
    prod = prod * rs.reflection_of_root(*it);
  return {GroupElement(std::move(prod)), std::move(s)};
}

MeetResult meet(LatticeContext& ctx, const GroupElement& a, const GroupElement& b) {
  const RootSystem& rs = ctx.root_system();
  Bits128 ma = ctx.refl_mask(a);
  Bits128 mb = ctx.refl_mask(b);
  Bits128 m = ma & mb;
  auto [elem, simplex] = ctx.meet_masked(m);
  if (!(ctx.refl_mask(elem) == m))
    throw InternalError("meet: reflection set of the meet is not the intersection");
  if (!leq(rs, elem.mat(), a.mat()) || !leq(rs, elem.mat(), b.mat()))
    throw InternalError("meet: result is not a lower bound");
  return MeetResult{std::move(elem), std::move(simplex), true};
}

GroupElement join(LatticeContext& ctx, const GroupElement& a, const GroupElement& b) {
  const RootSystem& rs = ctx.root_system();
  GroupElement ka = kreweras(rs, a);
  GroupElement kb = kreweras(rs, b);
  MeetResult m = meet(ctx, ka, kb);
  GroupElement j(rs.gamma() * group_inverse(rs, m.element.mat()));
  if (!leq(rs, a.mat(), j.mat()) || !leq(rs, b.mat(), j.mat()))
    throw InternalError("join: result is not an upper bound");
  return j;
}

namespace {

struct BitRows {
  int words;
  std::vector<std::vector<uint64_t>> rows;

  explicit BitRows(int n) : words((n + 63) / 64), rows(n, std::vector<uint64_t>(words, 0)) {}
  void set(int r, int c) { rows[r][c >> 6] |= uint64_t(1) << (c & 63); }
  bool test(int r, int c) const { return (rows[r][c >> 6] >> (c & 63)) & 1; }
  void or_into(int dst, int src) {
    for (int w = 0; w < words; ++w) rows[dst][w] |= rows[src][w];
  }
};

}  // namespace

std::vector<std::vector<uint64_t>> down_sets(const IntervalPoset& poset) {
  const int n = poset.size();
  BitRows rows(n);
  for (int i = 0; i < n; ++i) {
    rows.set(i, i);
    for (int c : poset.lower_covers[i]) rows.or_into(i, c);  // lengths sorted: c < i
  }
  return rows.rows;
}

std::vector<std::vector<uint64_t>> up_sets(const IntervalPoset& poset) {
  const int n = poset.size();
  BitRows rows(n);
  // Covers point at smaller indices (canonical order is by length), so one
  // descending sweep closes the relation upward.
  std::vector<std::vector<int>> upper(n);
  for (int i = 0; i < n; ++i)
    for (int c : poset.lower_covers[i]) upper[c].push_back(i);
  for (int i = n - 1; i >= 0; --i) {
    rows.set(i, i);
    for (int u : upper[i]) rows.or_into(i, u);
  }
  return rows.rows;
}

LatticeReport verify_lattice(LatticeContext& ctx, const IntervalPoset& poset) {
  const RootSystem& rs = ctx.root_system();
  LatticeReport rep;
  const int n = poset.size();
  rep.elements = n;
  auto down = down_sets(poset);
  auto up = up_sets(poset);
  const int words = static_cast<int>(down[0].size());

  auto test_bit = [&](const std::vector<uint64_t>& row, int c) {
    return (row[c >> 6] >> (c & 63)) & 1;
  };
  // Precompute reflection masks and Kreweras complements per element.
  std::vector<Bits128> pmask(n);
  std::vector<int> krew(n);
  for (int i = 0; i < n; ++i) {
    pmask[i] = ctx.refl_mask(poset.elems[i]);
    int k = poset.find(kreweras(rs, poset.elems[i]));
    if (k < 0) {
      rep.failures.push_back("kreweras complement of element " + std::to_string(i) +
                             " is outside the interval");
      return rep;
    }
    krew[i] = k;
  }
  // Elements are characterised by their reflection sets.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pmask[i] == pmask[j]) {
        rep.failures.push_back("elements " + std::to_string(i) + " and " + std::to_string(j) +
                               " share a reflection set");
        return rep;
      }

  std::vector<uint64_t> common(words);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ++rep.pairs_checked;
      // Meet via the complex.
      auto [elem, simplex] = ctx.meet_masked(pmask[i] & pmask[j]);
      int mi = poset.find(elem);
      if (mi < 0) {
        rep.failures.push_back("meet(" + std::to_string(i) + "," + std::to_string(j) +
                               ") is not an interval element");
        continue;
      }
      if (!(ctx.refl_mask(elem) == (pmask[i] & pmask[j]))) {
        rep.failures.push_back("meet(" + std::to_string(i) + "," + std::to_string(j) +
                               ") violates the reflection-set condition");
        continue;
      }
      // Brute-force greatest lower bound over the explicit relation.
      for (int w = 0; w < words; ++w) common[w] = down[i][w] & down[j][w];
      int glb = -1;
      for (int c = n - 1; c >= 0; --c) {
        if (!test_bit(common, c)) continue;
        bool dominates = true;
        for (int w = 0; w < words; ++w)
          if (common[w] & ~down[c][w]) {
            dominates = false;
            break;
          }
        if (dominates) {
          glb = c;
          break;
        }
      }
      if (glb < 0) {
        rep.failures.push_back("pair (" + std::to_string(i) + "," + std::to_string(j) +
                               ") has no greatest lower bound");
        continue;
      }
      if (glb != mi) {
        rep.failures.push_back("meet(" + std::to_string(i) + "," + std::to_string(j) +
                               ") = " + std::to_string(mi) + " but brute-force glb = " +
                               std::to_string(glb));
        continue;
      }
      // Join via the Kreweras complement: gamma * meet(K(a), K(b))^{-1}.
      auto [kelem, ksimplex] = ctx.meet_masked(pmask[krew[i]] & pmask[krew[j]]);
      GroupElement jelem(rs.gamma() * group_inverse(rs, kelem.mat()));
      int ji = poset.find(jelem);
      if (ji < 0) {
        rep.failures.push_back("join(" + std::to_string(i) + "," + std::to_string(j) +
                               ") is not an interval element");
        continue;
      }
      // Brute-force least upper bound.
      for (int w = 0; w < words; ++w) common[w] = up[i][w] & up[j][w];
      int lub = -1;
      for (int c = 0; c < n; ++c) {
        if (!test_bit(common, c)) continue;
        bool below_all = true;
        for (int w = 0; w < words; ++w)
          if (common[w] & ~up[c][w]) {
            below_all = false;
            break;
          }
        if (below_all) {
          lub = c;
          break;
        }
      }
      if (lub < 0) {
        rep.failures.push_back("pair (" + std::to_string(i) + "," + std::to_string(j) +
                               ") has no least upper bound");
        continue;
      }
      if (lub != ji) {
        rep.failures.push_back("join(" + std::to_string(i) + "," + std::to_string(j) +
                               ") = " + std::to_string(ji) + " but brute-force lub = " +
                               std::to_string(lub));
      }
    }
  }
  return rep;
}

int catalan_count(const IntervalPoset& poset) { return poset.size(); }

}  // namespace coxlat
