#include "coxlat/absorder.hpp"

#include <algorithm>
#include <map>

namespace coxlat {

GroupElement identity_element(const RootSystem& rs) {
  return GroupElement(Mat::identity(rs.field(), rs.rank()));
}

GroupElement gamma_element(const RootSystem& rs) { return GroupElement(rs.gamma()); }

Mat group_inverse(const RootSystem& rs, const Mat& w) {
  return rs.gram_inverse() * w.transpose() * rs.gram_matrix();
}

bool preserves_form(const RootSystem& rs, const Mat& w) {
  return w.transpose() * rs.gram_matrix() * w == rs.gram_matrix();
}

GroupElement reflection(const RootSystem& rs, const Vec& v) {
  if (!rs.dot(v, v).is_one()) throw Error("reflection: axis vector is not a unit root");
  return GroupElement(rs.reflection_from_vector(v));
}

int reflection_length(const Mat& w) {
  return rank(w - Mat::identity(w.field(), w.rows()));
}

bool leq(const RootSystem& rs, const Mat& u, const Mat& w) {
  if (u.rows() != w.rows() || &u.field() != &w.field())
    throw Error("leq: elements of different groups");
  int lu = reflection_length(u);
  int lw = reflection_length(w);
  if (lu > lw) return false;
  return reflection_length(group_inverse(rs, u) * w) == lw - lu;
}

std::pair<std::vector<Vec>, std::vector<Vec>> moved_fixed(const RootSystem& rs, const Mat& w) {
  Mat d = w - Mat::identity(rs.field(), rs.rank());
  return {column_space(d), null_space(d)};
}

IntervalPoset enumerate_interval(const RootSystem& rs, const std::vector<int>* reflection_order) {
  const int np = rs.num_positive();
  std::vector<int> order(np);
  for (int i = 0; i < np; ++i) order[i] = i + 1;
  if (reflection_order) order = *reflection_order;

  struct Node {
    GroupElement g;
    int len;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> idx;
  std::vector<std::pair<int, int>> cover_edges;  // (upper, lower)

  GroupElement top = gamma_element(rs);
  nodes.push_back({top, rs.rank()});
  idx[top.key()] = 0;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int at : frontier) {
      Mat w = nodes[at].g.mat();
      int lw = nodes[at].len;
      if (lw == 0) continue;
      for (int i : order) {
        Mat w2 = rs.reflection_of_root(i) * w;
        if (reflection_length(w2) != lw - 1) continue;
        GroupElement g2(std::move(w2));
        auto it = idx.find(g2.key());
        int j;
        if (it == idx.end()) {
          j = static_cast<int>(nodes.size());
          nodes.push_back({g2, lw - 1});
          idx[g2.key()] = j;
          next.push_back(j);
        } else {
          j = it->second;
        }
        cover_edges.emplace_back(at, j);
      }
    }
    frontier = std::move(next);
  }

  // Canonical order: by length, then by key.
  std::vector<int> perm(nodes.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (nodes[a].len != nodes[b].len) return nodes[a].len < nodes[b].len;
    return nodes[a].g.key() < nodes[b].g.key();
  });
  std::vector<int> where(nodes.size());
  for (size_t i = 0; i < perm.size(); ++i) where[perm[i]] = static_cast<int>(i);

  IntervalPoset poset;
  poset.elems.reserve(nodes.size());
  poset.len.reserve(nodes.size());
  poset.lower_covers.assign(nodes.size(), {});
  for (int p : perm) {
    poset.index_by_key[nodes[p].g.key()] = static_cast<int>(poset.elems.size());
    poset.elems.push_back(nodes[p].g);
    poset.len.push_back(nodes[p].len);
  }
  std::sort(cover_edges.begin(), cover_edges.end());
  cover_edges.erase(std::unique(cover_edges.begin(), cover_edges.end()), cover_edges.end());
  for (auto [up, lo] : cover_edges) poset.lower_covers[where[up]].push_back(where[lo]);
  for (auto& c : poset.lower_covers) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  return poset;
}

std::vector<int> reflection_set(const RootSystem& rs, const Mat& w) {
  if (!leq(rs, w, rs.gamma())) throw Error("reflection_set: element is not below gamma");
  int lw = reflection_length(w);
  std::vector<int> out;
  for (int i = 1; i <= rs.num_positive(); ++i) {
    if (reflection_length(rs.reflection_of_root(i) * w) == lw - 1) out.push_back(i);
  }
  return out;
}

GroupElement kreweras(const RootSystem& rs, const GroupElement& w) {
  if (!leq(rs, w.mat(), rs.gamma())) throw Error("kreweras: element is not below gamma");
  return GroupElement(group_inverse(rs, w.mat()) * rs.gamma());
}

}  // namespace coxlat
