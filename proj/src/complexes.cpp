#include "coxlat/complexes.hpp"

#include <algorithm>
#include <map>

namespace coxlat {

FlagComplex::FlagComplex(std::vector<int> vertex_ids, int max_clique_bound)
    : ids_(std::move(vertex_ids)), bound_(max_clique_bound) {
  if (ids_.size() > 128) throw Error("flag complex exceeds 128 vertices");
  for (size_t i = 1; i < ids_.size(); ++i)
    if (ids_[i - 1] >= ids_[i]) throw Error("flag complex vertex ids must be strictly increasing");
  adj_.assign(ids_.size(), Bits128{});
}

int FlagComplex::position_of(int id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return -1;
  return static_cast<int>(it - ids_.begin());
}

void FlagComplex::set_edge(int a, int b) {
  adj_[a].set(b);
  adj_[b].set(a);
  facets_ready_ = false;
}

int FlagComplex::num_edges() const {
  int e = 0;
  for (const auto& row : adj_) e += row.count();
  return e / 2;
}

std::vector<std::pair<int, int>> FlagComplex::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < num_vertices(); ++a)
    for (int b = a + 1; b < num_vertices(); ++b)
      if (has_edge(a, b)) out.emplace_back(ids_[a], ids_[b]);
  return out;
}

namespace {

void bk_extend(const std::vector<Bits128>& adj, int nv, Bits128 r, Bits128 p, Bits128 x,
               std::vector<std::vector<int>>& out) {
  if (p.none() && x.none()) {
    std::vector<int> clique;
    for (int v = r.lowest(); v >= 0; v = r.next(v)) clique.push_back(v);
    out.push_back(std::move(clique));
    return;
  }
  Bits128 px = p | x;
  int pivot = px.lowest();
  Bits128 candidates = p.minus(adj[pivot]);
  for (int v = candidates.lowest(); v >= 0; v = candidates.next(v)) {
    Bits128 r2 = r;
    r2.set(v);
    bk_extend(adj, nv, r2, p & adj[v], x & adj[v], out);
    p.reset(v);
    x.set(v);
  }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const std::vector<Bits128>& adj, Bits128 allowed,
                                              int num_vertices) {
  std::vector<Bits128> restricted(adj.size());
  for (size_t v = 0; v < adj.size(); ++v) restricted[v] = adj[v] & allowed;
  std::vector<std::vector<int>> out;
  if (allowed.none()) return out;
  bk_extend(restricted, num_vertices, Bits128{}, allowed, Bits128{}, out);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::vector<int>>& FlagComplex::facets() const {
  if (!facets_ready_) {
    Bits128 all;
    for (int v = 0; v < num_vertices(); ++v) all.set(v);
    facets_ = maximal_cliques(adj_, all, num_vertices());
    facets_ready_ = true;
  }
  return facets_;
}

int FlagComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets()) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

std::vector<Simplex> FlagComplex::top_simplices() const {
  size_t top = 0;
  for (const auto& f : facets()) top = std::max(top, f.size());
  std::vector<Simplex> out;
  for (const auto& f : facets())
    if (f.size() == top) out.push_back(to_simplex(f));
  return out;
}

Simplex FlagComplex::to_simplex(const std::vector<int>& positions) const {
  Simplex s;
  s.vertices.reserve(positions.size());
  for (int p : positions) s.vertices.push_back(ids_[p]);
  return s;
}

std::vector<long> FlagComplex::face_counts() const {
  std::vector<long> counts(bound_ + 1, 0);
  const int nv = num_vertices();
  // Depth-first clique enumeration over increasing positions.
  std::function<void(Bits128, int)> walk = [&](Bits128 cand, int size) {
    for (int v = cand.lowest(); v >= 0; v = cand.next(v)) {
      if (size + 1 > bound_) throw InternalError("clique larger than the rank bound");
      ++counts[size + 1];
      Bits128 next = cand & adj_[v];
      // only vertices after v, to count each clique once
      for (int u = next.lowest(); u >= 0 && u <= v; u = next.next(u)) next.reset(u);
      walk(next, size + 1);
      cand.reset(v);
    }
  };
  Bits128 all;
  for (int v = 0; v < nv; ++v) all.set(v);
  walk(all, 0);
  return counts;
}

bool edge_test(const RootSystem& rs, int i, int j) {
  Mat prod = rs.reflection_of_root(i) * rs.reflection_of_root(j) * rs.gamma();
  return reflection_length(prod) == rs.rank() - 2;
}

FlagComplex build_X(const RootSystem& rs) {
  const int np = rs.num_positive();
  std::vector<int> ids(np);
  for (int i = 0; i < np; ++i) ids[i] = i + 1;
  FlagComplex c(std::move(ids), rs.rank());
  for (int a = 0; a < np; ++a)
    for (int b = a + 1; b < np; ++b)
      if (edge_test(rs, a + 1, b + 1)) c.set_edge(a, b);
  return c;
}

FlagComplex build_X_sigma(const RootSystem& rs, const GroupElement& sigma) {
  if (!leq(rs, sigma.mat(), rs.gamma()))
    throw Error("build_X_sigma: sigma is not below gamma");
  if (reflection_length(sigma) == 0) return FlagComplex({}, rs.rank());
  std::vector<int> p = reflection_set(rs, sigma.mat());
  FlagComplex c(p, rs.rank());
  for (size_t a = 0; a < p.size(); ++a)
    for (size_t b = a + 1; b < p.size(); ++b)
      if (edge_test(rs, p[a], p[b]))
        c.set_edge(static_cast<int>(a), static_cast<int>(b));
  return c;
}

FlagComplex build_EX(const RootSystem& rs) {
  const int n = rs.rank(), s = rs.split(), np = rs.num_positive();
  std::vector<int> ids;
  for (int e = -n + s + 1; e <= 0; ++e) ids.push_back(e);
  for (int e = 1; e <= np + s; ++e) ids.push_back(e);

  // The added vertices are exactly the negatives of the simple roots.
  for (int k = 1; k <= n - s; ++k) {
    if (!(rs.rho(-n + s + k) == vec_neg(rs.simple(s + k))))
      throw InternalError("EX vertex rho_{-n+s+k} is not -alpha_{s+k}");
  }
  {
    std::vector<std::string> tail;
    for (int k = 1; k <= s; ++k) tail.push_back(vec_key(rs.rho(np + k)));
    std::vector<std::string> neg_s1;
    for (int i = 1; i <= s; ++i) neg_s1.push_back(vec_key(vec_neg(rs.simple(i))));
    std::sort(tail.begin(), tail.end());
    std::sort(neg_s1.begin(), neg_s1.end());
    if (tail != neg_s1)
      throw InternalError("EX trailing vertices are not a permutation of -S1");
  }

  FlagComplex c(ids, n);
  const int nv = static_cast<int>(ids.size());
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b) {
      int i = ids[a], j = ids[b];
      if (rs.rho(i) == vec_neg(rs.rho(j))) continue;
      if (edge_test(rs, i, j)) c.set_edge(a, b);
    }
  return c;
}

SimpleSystemData simple_system(const RootSystem& rs, const GroupElement& sigma) {
  if (!leq(rs, sigma.mat(), rs.gamma()))
    throw Error("simple_system: sigma is not below gamma");
  const int k = reflection_length(sigma);
  if (k == 0) throw Error("simple_system: sigma must not be the identity");
  const NumberField& f = rs.field();
  std::vector<int> p = reflection_set(rs, sigma.mat());

  SimpleSystemData out;
  out.delta.assign(k, 0);
  Mat w = sigma.mat();
  for (int i = k; i >= 1; --i) {
    auto basis = column_space(w - Mat::identity(f, rs.rank()));
    int found = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
      if (in_span(basis, rs.rho(*it), f)) {
        found = *it;
        break;
      }
    }
    if (found == 0) throw InternalError("no positive root in the moved space");
    out.delta[i - 1] = found;
    w = w * rs.reflection_of_root(found);
  }
  if (!w.is_identity()) throw InternalError("simple system does not factor sigma");

  // delta is a simple system: pairwise non-acute.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (rs.dot(rs.rho(out.delta[i]), rs.rho(out.delta[j])).sign() > 0)
        throw InternalError("extracted simple system has an acute pair");

  out.epsilon.assign(k, 0);
  Mat pref = Mat::identity(f, rs.rank());
  for (int i = 1; i <= k; ++i) {
    Vec e = pref.apply(rs.rho(out.delta[i - 1]));
    int idx = rs.index_of_root(e);
    if (idx == 0 || idx > rs.num_positive())
      throw InternalError("epsilon_i is not a positive root");
    out.epsilon[i - 1] = idx;
    pref = pref * rs.reflection_of_root(out.delta[i - 1]);
  }
  out.theta = out.epsilon;
  std::sort(out.theta.begin(), out.theta.end());

  // sigma = R(eps_k)...R(eps_1) = R(theta_k)...R(theta_1).
  Mat prod_eps = Mat::identity(f, rs.rank());
  Mat prod_theta = Mat::identity(f, rs.rank());
  for (int i = k; i >= 1; --i) {
    prod_eps = prod_eps * rs.reflection_of_root(out.epsilon[i - 1]);
    prod_theta = prod_theta * rs.reflection_of_root(out.theta[i - 1]);
  }
  if (!(prod_eps == sigma.mat()) || !(prod_theta == sigma.mat()))
    throw InternalError("epsilon/theta factorisations do not reproduce sigma");
  return out;
}

Simplex first_facet(const RootSystem& rs, const GroupElement& sigma) {
  auto ss = simple_system(rs, sigma);
  return Simplex{ss.theta};
}

namespace {

void independent_subsets(const Mat& g, int r, int start, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == r) {
    out.push_back(current);
    return;
  }
  for (int c = start; c < g.cols(); ++c) {
    current.push_back(c);
    Mat sub(g.field(), g.rows(), static_cast<int>(current.size()));
    for (size_t i = 0; i < current.size(); ++i)
      sub.set_column(static_cast<int>(i), g.column(current[i]));
    if (rank(sub) == static_cast<int>(current.size()))
      independent_subsets(g, r, c + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::optional<std::vector<FieldElement>> cone_membership(const RootSystem& rs,
                                                         const std::vector<Vec>& gens,
                                                         const Vec& x) {
  const NumberField& f = rs.field();
  const int m = static_cast<int>(gens.size());
  std::vector<FieldElement> zero(m, FieldElement(f));
  if (vec_is_zero(x)) return zero;
  if (m == 0) return std::nullopt;
  Mat g = mat_from_columns(f, rs.rank(), gens);
  int r = rank(g);
  if (r == 0) return std::nullopt;

  std::vector<std::vector<int>> subsets;
  std::vector<int> current;
  independent_subsets(g, r, 0, current, subsets);
  for (const auto& sub : subsets) {
    Mat gs(f, rs.rank(), static_cast<int>(sub.size()));
    for (size_t i = 0; i < sub.size(); ++i) gs.set_column(static_cast<int>(i), gens[sub[i]]);
    auto sol = solve(gs, x);
    if (!sol) continue;
    bool nonneg = true;
    for (const auto& c : *sol)
      if (c.sign() < 0) {
        nonneg = false;
        break;
      }
    if (!nonneg) continue;
    std::vector<FieldElement> full = zero;
    for (size_t i = 0; i < sub.size(); ++i) full[sub[i]] = (*sol)[i];
    return full;
  }
  return std::nullopt;
}

bool HalfspaceRealization::contains(const Vec& x) const {
  if (!in_span(moved_basis, x, rs->field())) return false;
  for (const auto& m : mu_theta)
    if (rs->dot(m, x).sign() < 0) return false;
  return true;
}

HalfspaceRealization halfspace_realization(const RootSystem& rs, const GroupElement& sigma) {
  auto ss = simple_system(rs, sigma);
  HalfspaceRealization h;
  h.rs = &rs;
  h.moved_basis = column_space(sigma.mat() - Mat::identity(rs.field(), rs.rank()));
  for (int t : ss.theta) h.mu_theta.push_back(rs.mu_of(rs.rho(t)));
  return h;
}

Vec project_mu(const RootSystem& rs, const GroupElement& sigma, int tau_index) {
  const NumberField& f = rs.field();
  auto basis = column_space(sigma.mat() - Mat::identity(f, rs.rank()));
  Vec mu = rs.mu_of(rs.rho(tau_index));
  if (basis.empty()) return vec_zero(f, rs.rank());
  int k = static_cast<int>(basis.size());
  Mat v = mat_from_columns(f, rs.rank(), basis);
  Mat vtb = v.transpose() * rs.gram_matrix();
  Mat normal = vtb * v;  // V^T B V
  Vec rhs = vtb.apply(mu);
  auto c = solve(normal, rhs);
  if (!c) throw InternalError("projection onto the moved space failed");
  Vec out = vec_zero(f, rs.rank());
  for (int i = 0; i < k; ++i) out = vec_add(out, vec_scale(basis[i], (*c)[i]));
  return out;
}

SphereReport sphere_check(const FlagComplex& c, int n) {
  SphereReport rep;
  const auto& facets = c.facets();
  rep.facet_count = static_cast<long>(facets.size());

  rep.pure = true;
  for (const auto& f : facets)
    if (static_cast<int>(f.size()) != n) {
      rep.pure = false;
      std::string w = "facet of size " + std::to_string(f.size()) + ": {";
      for (int v : f) w += std::to_string(c.vertex_id(v)) + " ";
      rep.witness = w + "}";
      break;
    }

  // Pseudomanifold: every (n-2)-face lies in exactly two facets.  For n = 1
  // the empty face must lie in exactly two facets, i.e. there are two
  // vertices in total.
  rep.pseudomanifold = true;
  if (n == 1) {
    rep.pseudomanifold = (facets.size() == 2);
    rep.connected = (facets.size() == 2);
  } else {
    std::map<std::vector<int>, int> ridge_count;
    for (const auto& f : facets) {
      for (size_t skip = 0; skip < f.size(); ++skip) {
        std::vector<int> ridge;
        for (size_t i = 0; i < f.size(); ++i)
          if (i != skip) ridge.push_back(f[i]);
        ++ridge_count[ridge];
      }
    }
    // Enumerate all (n-1)-cliques and demand exactly two facet extensions.
    std::function<void(std::vector<int>&, Bits128)> walk =
        [&](std::vector<int>& cur, Bits128 cand) {
          if (static_cast<int>(cur.size()) == n - 1) {
            auto it = ridge_count.find(cur);
            int cnt = (it == ridge_count.end()) ? 0 : it->second;
            if (cnt != 2 && rep.pseudomanifold) {
              rep.pseudomanifold = false;
              std::string w = "ridge {";
              for (int v : cur) w += std::to_string(c.vertex_id(v)) + " ";
              rep.witness = w + "} lies in " + std::to_string(cnt) + " facets";
            }
            return;
          }
          for (int v = cand.lowest(); v >= 0; v = cand.next(v)) {
            cur.push_back(v);
            Bits128 next = cand & c.neighbours(v);
            for (int u = next.lowest(); u >= 0 && u <= v; u = next.next(u)) next.reset(u);
            walk(cur, next);
            cur.pop_back();
            cand.reset(v);
          }
        };
    Bits128 all;
    for (int v = 0; v < c.num_vertices(); ++v) all.set(v);
    std::vector<int> cur;
    walk(cur, all);

    // Facet adjacency: share a ridge.
    int fc = static_cast<int>(facets.size());
    std::vector<int> comp(fc, -1);
    std::vector<Bits128> fmask(fc);
    for (int i = 0; i < fc; ++i)
      for (int v : facets[i]) fmask[i].set(v);
    std::vector<int> stack;
    if (fc > 0) {
      comp[0] = 0;
      stack.push_back(0);
      while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < fc; ++j) {
          if (comp[j] >= 0) continue;
          if ((fmask[i] & fmask[j]).count() == n - 1) {
            comp[j] = 0;
            stack.push_back(j);
          }
        }
      }
    }
    rep.connected = fc > 0;
    for (int i = 0; i < fc; ++i)
      if (comp[i] < 0) rep.connected = false;
  }

  // Euler characteristic only makes sense once purity bounds the face sizes.
  if (rep.pure) {
    auto counts = c.face_counts();
    long chi = 0;
    for (size_t k = 1; k < counts.size(); ++k) chi += (k % 2 == 1 ? 1 : -1) * counts[k];
    rep.euler = chi;
    long expected = 1 + ((n - 1) % 2 == 0 ? 1 : -1);
    rep.euler_ok = (chi == expected);
    if (!rep.euler_ok && rep.witness.empty())
      rep.witness =
          "Euler characteristic " + std::to_string(chi) + " != " + std::to_string(expected);
  }
  return rep;
}

}  // namespace coxlat
