#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace oracles {

std::vector<GroupElement> enumerate_group(const RootSystem& rs, size_t cap) {
  std::vector<GroupElement> out;
  std::set<std::string> seen;
  std::deque<Mat> frontier;
  Mat id = Mat::identity(rs.field(), rs.rank());
  out.emplace_back(id);
  seen.insert(out.back().key());
  frontier.push_back(id);
  while (!frontier.empty()) {
    Mat w = frontier.front();
    frontier.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      Mat w2 = w * rs.simple_reflection(i);
      GroupElement g(w2);
      if (seen.insert(g.key()).second) {
        out.push_back(g);
        if (out.size() > cap) throw Error("group enumeration exceeded the cap");
        frontier.push_back(std::move(w2));
      }
    }
  }
  return out;
}

std::map<std::string, int> reflection_cayley_distances(const RootSystem& rs,
                                                       const std::vector<GroupElement>& group) {
  std::map<std::string, int> dist;
  std::deque<Mat> frontier;
  Mat id = Mat::identity(rs.field(), rs.rank());
  dist[GroupElement(id).key()] = 0;
  frontier.push_back(id);
  while (!frontier.empty()) {
    Mat w = frontier.front();
    frontier.pop_front();
    int d = dist[GroupElement(w).key()];
    for (int i = 1; i <= rs.num_positive(); ++i) {
      Mat w2 = rs.reflection_of_root(i) * w;
      std::string k = GroupElement(w2).key();
      if (!dist.count(k)) {
        dist[k] = d + 1;
        frontier.push_back(std::move(w2));
      }
    }
  }
  if (dist.size() != group.size()) throw Error("Cayley graph did not reach the whole group");
  return dist;
}

std::vector<std::string> interval_by_filter(const RootSystem& rs,
                                            const std::vector<GroupElement>& group) {
  std::vector<std::string> keys;
  const int n = rs.rank();
  for (const auto& g : group) {
    int l = reflection_length(g.mat());
    int rest = reflection_length(group_inverse(rs, g.mat()) * rs.gamma());
    if (l + rest == n) keys.push_back(g.key());
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::string brute_force_lub(const RootSystem& rs, const std::vector<GroupElement>& interval,
                            const GroupElement& a, const GroupElement& b) {
  std::vector<const GroupElement*> uppers;
  for (const auto& w : interval)
    if (leq(rs, a.mat(), w.mat()) && leq(rs, b.mat(), w.mat())) uppers.push_back(&w);
  for (const auto* u : uppers) {
    bool least = true;
    for (const auto* v : uppers)
      if (!leq(rs, u->mat(), v->mat())) {
        least = false;
        break;
      }
    if (least) return u->key();
  }
  return {};
}

Perm4 perm_mul(const Perm4& p, const Perm4& q) {
  Perm4 r{};
  for (int i = 0; i < 4; ++i) r[i] = p[q[i]];
  return r;
}

Perm4 transposition(int a, int b) {
  Perm4 p{0, 1, 2, 3};
  std::swap(p[a - 1], p[b - 1]);
  return p;
}

int perm_reflection_length(const Perm4& p) {
  std::array<bool, 4> seen{};
  int cycles = 0;
  for (int i = 0; i < 4; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return 4 - cycles;
}

int interval_sign(const FieldElement& x) {
  const NumberField& f = x.field();
  if (x.is_zero()) return 0;
  Rat lo = f.interval_lo(), hi = f.interval_hi();
  Rat width_cap(mpz_class(1), mpz_class(1) << 64);
  while (hi - lo > width_cap) {
    Rat mid = (lo + hi) / 2;
    if (f.count_roots(lo, mid) == 1)
      hi = mid;
    else
      lo = mid;
  }
  auto eval_bounds = [&](const std::vector<Rat>& c) {
    Rat vlo(0), vhi(0);
    for (size_t i = c.size(); i-- > 0;) {
      Rat p1 = vlo * lo, p2 = vlo * hi, p3 = vhi * lo, p4 = vhi * hi;
      Rat nlo = std::min(std::min(p1, p2), std::min(p3, p4));
      Rat nhi = std::max(std::max(p1, p2), std::max(p3, p4));
      vlo = nlo + c[i];
      vhi = nhi + c[i];
    }
    return std::make_pair(vlo, vhi);
  };
  auto [vlo, vhi] = eval_bounds(x.coeffs());
  if (sgn(vlo) > 0) return 1;
  if (sgn(vhi) < 0) return -1;
  return -2;
}

}  // namespace oracles
