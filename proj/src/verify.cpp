#include "coxlat/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace coxlat {

using nlohmann::json;

std::vector<int> Rng::subset(int n, int k) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  for (int i = 0; i < k; ++i) {
    int j = i + below(n - i);
    std::swap(pool[i], pool[j]);
  }
  std::vector<int> out(pool.begin(), pool.begin() + k);
  std::sort(out.begin(), out.end());
  return out;
}

namespace checks {

namespace {

CheckResult pass(const std::string& name, const std::string& detail = "") {
  return CheckResult{name, true, detail};
}

CheckResult fail(const std::string& name, const std::string& detail) {
  return CheckResult{name, false, detail};
}

template <typename F>
CheckResult guarded(const std::string& name, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return fail(name, std::string("exception: ") + e.what());
  }
}

// Minimal-length reflection factorisation by repeated left division.
std::vector<int> random_factorisation(const RootSystem& rs, const Mat& sigma, Rng& rng) {
  std::vector<int> factors;
  Mat w = sigma;
  int l = reflection_length(w);
  while (l > 0) {
    std::vector<int> choices;
    for (int i = 1; i <= rs.num_positive(); ++i)
      if (reflection_length(rs.reflection_of_root(i) * w) == l - 1) choices.push_back(i);
    int pick = choices[rng.below(static_cast<int>(choices.size()))];
    factors.push_back(pick);
    w = rs.reflection_of_root(pick) * w;
    --l;
  }
  return factors;
}

bool span_subset(const RootSystem& rs, const std::vector<Vec>& small,
                 const std::vector<Vec>& big) {
  for (const auto& v : small)
    if (!in_span(big, v, rs.field())) return false;
  return true;
}

}  // namespace

CheckResult structure(const RootSystem& rs) {
  return guarded("structure", [&]() -> CheckResult {
    // Positive-root count by closure under the simple reflections.
    std::set<std::string> seen;
    std::vector<Vec> frontier;
    for (int i = 1; i <= rs.rank(); ++i) {
      frontier.push_back(rs.simple(i));
      seen.insert(vec_key(rs.simple(i)));
    }
    while (!frontier.empty()) {
      std::vector<Vec> next;
      for (const auto& v : frontier)
        for (int i = 1; i <= rs.rank(); ++i) {
          Vec w = rs.simple_reflection(i).apply(v);
          if (seen.insert(vec_key(w)).second) next.push_back(w);
        }
      frontier = std::move(next);
    }
    int positives = 0;
    for (int i = 1; i <= rs.num_roots(); ++i)
      if (rs.root_sign(rs.rho(i)) > 0) ++positives;
    if (positives != rs.num_positive())
      return fail("structure", "Steinberg ordering lists " + std::to_string(positives) +
                                   " positive roots, expected " +
                                   std::to_string(rs.num_positive()));
    if (static_cast<int>(seen.size()) != rs.num_roots())
      return fail("structure", "orbit closure yields " + std::to_string(seen.size() / 2) +
                                   " positive roots, expected " +
                                   std::to_string(rs.num_positive()));
    return pass("structure", "h=" + std::to_string(rs.coxeter_number()) +
                                 " positive_roots=" + std::to_string(rs.num_positive()));
  });
}

CheckResult petrie(const RootSystem& rs) {
  return guarded("petrie_identity", [&]() -> CheckResult {
    const int nh = rs.num_roots();
    FieldElement one(rs.field(), 1L);
    for (int i = 1; i <= nh; ++i) {
      Vec lhs = rs.gamma().apply(rs.mu(i));
      Vec rhs = vec_sub(rs.mu(i), vec_scale(rs.rho(i), FieldElement(rs.field(), 2L)));
      if (!(lhs == rhs))
        return fail("petrie_identity", "gamma mu_i != mu_i - 2 rho_i at i=" + std::to_string(i));
      if (!(rs.dot(rs.mu(i), rs.rho(i)) == one))
        return fail("petrie_identity", "mu_i . rho_i != 1 at i=" + std::to_string(i));
      Vec fixed = (rs.reflection_of_root(i) * rs.gamma()).apply(rs.mu(i));
      if (!(fixed == rs.mu(i)))
        return fail("petrie_identity", "R(rho_i) gamma does not fix mu_i at i=" + std::to_string(i));
      Vec via_inverse = rs.mu_of(rs.rho(i));
      if (!(via_inverse == rs.mu(i)))
        return fail("petrie_identity",
                    "-2 (gamma - I)^{-1} rho_i != mu_i at i=" + std::to_string(i));
    }
    return pass("petrie_identity", std::to_string(nh) + " indices checked");
  });
}

CheckResult table_signs(const RootSystem& rs) {
  return guarded("dot_table_signs", [&]() -> CheckResult {
    const int nh = rs.num_roots(), np = rs.num_positive(), n = rs.rank();
    auto wrap = [&](int i) { return ((i - 1) % nh) + 1; };
    std::vector<std::vector<FieldElement>> d(nh + 1);
    for (int i = 1; i <= nh; ++i) {
      d[i].reserve(nh);
      for (int j = 1; j <= nh; ++j) d[i].push_back(rs.dot(rs.mu(i), rs.rho(j)));
    }
    auto at = [&](int i, int j) -> const FieldElement& { return d[wrap(i)][wrap(j) - 1]; };
    for (int i = 1; i <= nh; ++i)
      for (int j = 1; j <= nh; ++j)
        if (!(at(i, j) == -at(j + n, i)))
          return fail("dot_table_signs",
                      "antisymmetry fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (int i = 1; i <= np; ++i)
      for (int j = i; j <= np; ++j)
        if (at(i, j).sign() < 0)
          return fail("dot_table_signs",
                      "upper entry negative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (int i = 1; i <= nh; ++i)
      for (int t = 1; t <= n - 1; ++t)
        if (!at(i + t, i).is_zero())
          return fail("dot_table_signs", "band entry nonzero at (i+t,i) with i=" +
                                             std::to_string(i) + " t=" + std::to_string(t));
    for (int i = 1; i <= np; ++i)
      for (int j = i + 1; j <= np; ++j)
        if (at(j, i).sign() > 0)
          return fail("dot_table_signs",
                      "lower entry positive at (" + std::to_string(j) + "," + std::to_string(i) + ")");
    return pass("dot_table_signs", std::to_string(nh) + "x" + std::to_string(nh) + " entries");
  });
}

CheckResult consecutive_windows(const RootSystem& rs) {
  return guarded("consecutive_windows", [&]() -> CheckResult {
    const int nh = rs.num_roots(), n = rs.rank();
    for (int i = 1; i <= nh; ++i) {
      Mat prod = Mat::identity(rs.field(), n);
      for (int t = 0; t < n; ++t) prod = prod * rs.reflection_of_root(i + t);
      if (!(prod == rs.gamma_inverse()))
        return fail("consecutive_windows",
                    "window at i=" + std::to_string(i) + " does not multiply to gamma^{-1}");
    }
    return pass("consecutive_windows", std::to_string(nh) + " windows");
  });
}

CheckResult dual_basis(const RootSystem& rs) {
  return guarded("dual_basis", [&]() -> CheckResult {
    for (int i = 1; i <= rs.rank(); ++i)
      for (int j = 1; j <= rs.rank(); ++j) {
        FieldElement v = rs.dot(rs.beta(i), rs.simple(j));
        bool want_one = (i == j);
        if (want_one ? !v.is_one() : !v.is_zero())
          return fail("dual_basis", "beta_i . alpha_j != delta_ij at (" + std::to_string(i) +
                                        "," + std::to_string(j) + ")");
      }
    return pass("dual_basis");
  });
}

CheckResult facet_bound(const RootSystem& rs) {
  return guarded("facet_bound", [&]() -> CheckResult {
    FlagComplex x = build_X(rs);
    const int np = rs.num_positive(), n = rs.rank();
    long expected = np - n + 1;
    const auto& facets = x.facets();
    if (static_cast<long>(facets.size()) < expected)
      return fail("facet_bound", "only " + std::to_string(facets.size()) + " facets, expected >= " +
                                     std::to_string(expected));
    for (int i = 1; i + n - 1 <= np; ++i) {
      std::vector<int> window;
      for (int t = 0; t < n; ++t) window.push_back(i + t - 1);  // local positions
      if (!std::binary_search(facets.begin(), facets.end(), window))
        return fail("facet_bound", "consecutive window at i=" + std::to_string(i) +
                                       " is not a facet of X");
    }
    return pass("facet_bound", std::to_string(facets.size()) + " facets >= " +
                                   std::to_string(expected));
  });
}

CheckResult flag_lemma(const RootSystem& rs, uint64_t seed, int samples) {
  return guarded("flag_lemma", [&]() -> CheckResult {
    Rng rng(seed);
    const int n = rs.rank(), np = rs.num_positive();
    for (int t = 0; t < samples; ++t) {
      int k = 1 + rng.below(n);
      if (k > np) k = np;
      auto s = rng.subset(np, k);
      Mat prod = Mat::identity(rs.field(), n);
      for (int idx : s) prod = prod * rs.reflection_of_root(idx);
      prod = prod * rs.gamma();
      bool cond_a = (reflection_length(prod) == n - k);
      bool cond_b = true;
      for (int i = 0; i < k && cond_b; ++i)
        for (int j = 0; j < i && cond_b; ++j)
          if (!rs.dot(rs.mu_of(rs.rho(s[i])), rs.rho(s[j])).is_zero()) cond_b = false;
      if (cond_a != cond_b)
        return fail("flag_lemma", "length and orthogonality criteria disagree on sample " +
                                      std::to_string(t));
      bool clique = true;
      for (int i = 0; i < k && clique; ++i)
        for (int j = 0; j < i && clique; ++j)
          if (!edge_test(rs, s[j], s[i])) clique = false;
      if (clique != cond_a)
        return fail("flag_lemma",
                    "clique criterion disagrees with length criterion on sample " +
                        std::to_string(t));
    }
    return pass("flag_lemma", std::to_string(samples) + " samples");
  });
}

CheckResult cone_exclusion(const RootSystem& rs, uint64_t seed, int samples) {
  return guarded("cone_exclusion", [&]() -> CheckResult {
    Rng rng(seed);
    const int np = rs.num_positive(), n = rs.rank();
    if (np < 2) return pass("cone_exclusion", "vacuous: fewer than two positive roots");
    for (int t = 0; t < samples; ++t) {
      int k = 2 + rng.below(np - 1);
      int max_size = std::min(n + 2, k - 1);
      int r = 1 + rng.below(max_size);
      auto s = rng.subset(k - 1, r);
      std::vector<Vec> gens;
      for (int idx : s) gens.push_back(rs.rho(idx));
      if (cone_membership(rs, gens, rs.rho(k)))
        return fail("cone_exclusion", "rho_" + std::to_string(k) +
                                          " found in the cone on earlier roots (sample " +
                                          std::to_string(t) + ")");
    }
    return pass("cone_exclusion", std::to_string(samples) + " samples");
  });
}

CheckResult root_angles(const RootSystem& rs) {
  return guarded("root_angles", [&]() -> CheckResult {
    const int np = rs.num_positive(), n = rs.rank();
    for (int i = 1; i <= np; ++i)
      for (int j = 1; j <= np; ++j) {
        if (i == j) continue;
        Mat u = rs.reflection_of_root(i) * rs.reflection_of_root(j);
        if (reflection_length(group_inverse(rs, u) * rs.gamma()) != n - 2) continue;
        int s = rs.dot(rs.rho(i), rs.rho(j)).sign();
        if (i < j && s > 0)
          return fail("root_angles", "acute pair with R_i R_j <= gamma, i<j: (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
        if (i > j && s < 0)
          return fail("root_angles", "obtuse pair with R_i R_j <= gamma, i>j: (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
      }
    return pass("root_angles", "all ordered pairs");
  });
}

CheckResult sphere(const RootSystem& rs) {
  return guarded("sphere_EX", [&]() -> CheckResult {
    FlagComplex ex = build_EX(rs);
    const int n = rs.rank();
    if (ex.num_vertices() != rs.num_positive() + n)
      return fail("sphere_EX", "EX has " + std::to_string(ex.num_vertices()) +
                                   " vertices, expected nh/2 + n");
    FlagComplex x = build_X(rs);
    for (const auto& [a, b] : x.edges()) {
      int pa = ex.position_of(a), pb = ex.position_of(b);
      if (pa < 0 || pb < 0 || !ex.has_edge(pa, pb))
        return fail("sphere_EX", "X edge (" + std::to_string(a) + "," + std::to_string(b) +
                                     ") missing from EX");
    }
    SphereReport rep = sphere_check(ex, n);
    if (!rep.ok())
      return fail("sphere_EX", "EX fails the sphere checks: " + rep.witness);
    return pass("sphere_EX", "facets=" + std::to_string(rep.facet_count) +
                                 " euler=" + std::to_string(rep.euler));
  });
}

namespace {

// Top-dimensional simplices of the subcomplex of X(gamma) induced on the
// root indices p, as lexicographically sorted index lists.
std::vector<std::vector<int>> induced_tops(LatticeContext& ctx, const std::vector<int>& p) {
  const RootSystem& rs = ctx.root_system();
  Bits128 mask;
  for (int i : p) mask.set(i - 1);
  auto cliques = maximal_cliques(ctx.adjacency(), mask, rs.num_positive());
  size_t top = 0;
  for (const auto& c : cliques) top = std::max(top, c.size());
  std::vector<std::vector<int>> out;
  for (const auto& c : cliques) {
    if (c.size() != top) continue;
    std::vector<int> ids;
    ids.reserve(c.size());
    for (int pos : c) ids.push_back(pos + 1);
    out.push_back(std::move(ids));
  }
  return out;
}

std::vector<int> sigma_selection(const IntervalPoset& poset, Rng& rng, int cap) {
  std::vector<int> all;
  for (int i = 0; i < poset.size(); ++i)
    if (poset.len[i] > 0) all.push_back(i);
  if (cap <= 0 || static_cast<int>(all.size()) <= cap) return all;
  std::vector<int> out;
  auto picks = rng.subset(static_cast<int>(all.size()), cap);
  for (int p : picks) out.push_back(all[p - 1]);
  return out;
}

}  // namespace

CheckResult simple_systems(LatticeContext& ctx, const IntervalPoset& poset, uint64_t seed,
                           int sigma_cap) {
  return guarded("simple_systems", [&]() -> CheckResult {
    const RootSystem& rs = ctx.root_system();
    Rng rng(seed + 1);
    const int np = rs.num_positive();
    auto chosen = sigma_selection(poset, rng, sigma_cap);
    for (int si : chosen) {
      const GroupElement& sigma = poset.elems[si];
      const int k = poset.len[si];
      auto ss = simple_system(rs, sigma);
      auto p = reflection_set(rs, sigma.mat());
      std::set<int> pset(p.begin(), p.end());
      std::set<int> eps_set(ss.epsilon.begin(), ss.epsilon.end());

      // mu(eps_i) . delta_i = 1 and [mu'(eps_i) . delta_j] = identity.
      for (int i = 0; i < k; ++i) {
        if (!rs.dot(rs.mu_of(rs.rho(ss.epsilon[i])), rs.rho(ss.delta[i])).is_one())
          return fail("simple_systems", "mu(eps_i) . delta_i != 1 for sigma #" +
                                            std::to_string(si));
        Vec proj = project_mu(rs, sigma, ss.epsilon[i]);
        for (int j = 0; j < k; ++j) {
          FieldElement v = rs.dot(proj, rs.rho(ss.delta[j]));
          if (i == j ? !v.is_one() : !v.is_zero())
            return fail("simple_systems", "[mu'(eps_i) . delta_j] is not the identity for sigma #" +
                                              std::to_string(si));
        }
      }

      // sigma^{-1}(tau) is a negative element of P exactly on the epsilons.
      Mat sigma_inv = group_inverse(rs, sigma.mat());
      for (int tau : p) {
        Vec img = sigma_inv.apply(rs.rho(tau));
        int idx = rs.index_of_root(img);
        if (idx == 0) return fail("simple_systems", "sigma^{-1} tau is not a root");
        bool in_minus_p = idx > np && pset.count(rs.antipode(idx)) > 0;
        bool is_eps = eps_set.count(tau) > 0;
        if (in_minus_p != is_eps)
          return fail("simple_systems",
                      "sigma action / epsilon characterisation fails for sigma #" +
                          std::to_string(si) + ", tau=" + std::to_string(tau));
      }

      // Dual characterisation of delta: delta_i is also the first positive
      // root in M(R(delta_1)...R(delta_{i-1}) sigma); in particular
      // delta_1 = tau_1.
      {
        Mat w2 = sigma.mat();
        for (int i = 1; i <= k; ++i) {
          auto basis = column_space(w2 - Mat::identity(rs.field(), rs.rank()));
          int first = 0;
          for (int tau : p)
            if (in_span(basis, rs.rho(tau), rs.field())) {
              first = tau;
              break;
            }
          if (first != ss.delta[i - 1])
            return fail("simple_systems",
                        "first-root characterisation of delta fails for sigma #" +
                            std::to_string(si));
          w2 = rs.reflection_of_root(ss.delta[i - 1]) * w2;
        }
        if (!w2.is_identity())
          return fail("simple_systems", "left factorisation by delta does not exhaust sigma");
      }
      if (ss.delta[0] != p.front())
        return fail("simple_systems", "delta_1 != tau_1 for sigma #" + std::to_string(si));
      if (ss.delta[k - 1] != p.back())
        return fail("simple_systems", "delta_k != tau_t for sigma #" + std::to_string(si));

      // Out-of-order epsilon pairs are orthogonal and commute.
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          if (ss.epsilon[i] <= ss.epsilon[j]) continue;
          if (!rs.dot(rs.rho(ss.epsilon[i]), rs.rho(ss.epsilon[j])).is_zero())
            return fail("simple_systems", "out-of-order epsilon pair is not orthogonal");
          Mat ab = rs.reflection_of_root(ss.epsilon[i]) * rs.reflection_of_root(ss.epsilon[j]);
          Mat ba = rs.reflection_of_root(ss.epsilon[j]) * rs.reflection_of_root(ss.epsilon[i]);
          if (!(ab == ba))
            return fail("simple_systems", "out-of-order epsilon pair does not commute");
        }

      // theta spans the lexicographically first top simplex of X(sigma).
      auto tops = induced_tops(ctx, p);
      if (tops.empty() || static_cast<int>(tops.front().size()) != k)
        return fail("simple_systems", "X(sigma) does not have dimension " +
                                          std::to_string(k - 1) + " for sigma #" +
                                          std::to_string(si));
      if (!(tops.front() == ss.theta))
        return fail("simple_systems", "first top simplex of X(sigma) differs from theta for sigma #" +
                                          std::to_string(si));

      // Length-2 elements: X(sigma) is the path tau_1 - ... - tau_t and the
      // end reflections reverse it.
      if (k == 2) {
        const int t = static_cast<int>(p.size());
        for (int a = 0; a < t; ++a)
          for (int b = a + 1; b < t; ++b) {
            bool expect = (b == a + 1);
            if (ctx.adjacency()[p[a] - 1].test(p[b] - 1) != expect)
              return fail("simple_systems", "X(sigma) of a length-2 element is not a path");
          }
        const Mat& r1 = rs.reflection_of_root(p[0]);
        const Mat& rt = rs.reflection_of_root(p[t - 1]);
        for (int i = 1; i <= t; ++i) {
          Vec img1 = r1.apply(rs.rho(p[i - 1]));
          Vec want1 = (i == 1) ? vec_neg(rs.rho(p[0])) : rs.rho(p[t - i + 2 - 1]);
          if (!(img1 == want1))
            return fail("simple_systems", "R(tau_1) action formula fails");
          Vec imgt = rt.apply(rs.rho(p[i - 1]));
          Vec wantt = (i == t) ? vec_neg(rs.rho(p[t - 1])) : rs.rho(p[t - i - 1]);
          if (!(imgt == wantt))
            return fail("simple_systems", "R(tau_t) action formula fails");
        }
      }
    }
    return pass("simple_systems", std::to_string(chosen.size()) + " elements");
  });
}

CheckResult halfspaces(LatticeContext& ctx, const IntervalPoset& poset, uint64_t seed,
                       int sigma_cap) {
  return guarded("halfspace_realization", [&]() -> CheckResult {
    const RootSystem& rs = ctx.root_system();
    Rng rng(seed + 2);
    auto chosen = sigma_selection(poset, rng, sigma_cap);
    const NumberField& f = rs.field();
    for (int si : chosen) {
      const GroupElement& sigma = poset.elems[si];
      auto h = halfspace_realization(rs, sigma);
      auto p = reflection_set(rs, sigma.mat());

      for (int tau : p)
        if (!h.contains(rs.rho(tau)))
          return fail("halfspace_realization", "tau in P fails the halfspace predicate, sigma #" +
                                                   std::to_string(si));
      if (h.contains(vec_neg(rs.rho(p.front()))))
        return fail("halfspace_realization",
                    "-tau_1 satisfies the halfspace predicate, sigma #" + std::to_string(si));

      // Facet cones cover P and random nonnegative combinations of P.
      auto tops = induced_tops(ctx, p);
      auto in_facet_cone = [&](const Vec& x) {
        for (const auto& simplex : tops) {
          std::vector<Vec> gens;
          for (int v : simplex) gens.push_back(rs.rho(v));
          Mat g = mat_from_columns(f, rs.rank(), gens);
          auto sol = solve(g, x);
          if (!sol) continue;
          bool ok = true;
          for (const auto& c : *sol)
            if (c.sign() < 0) {
              ok = false;
              break;
            }
          if (ok) return true;
        }
        return false;
      };
      for (int tau : p)
        if (!in_facet_cone(rs.rho(tau)))
          return fail("halfspace_realization", "tau in P lies in no facet cone, sigma #" +
                                                   std::to_string(si));
      for (int t = 0; t < 3; ++t) {
        Vec x = vec_zero(f, rs.rank());
        for (int tau : p) {
          if (rng.below(2) == 0) continue;
          x = vec_add(x, vec_scale(rs.rho(tau), FieldElement(f, Rat(1 + rng.below(4)))));
        }
        if (vec_is_zero(x)) continue;
        if (!in_facet_cone(x))
          return fail("halfspace_realization",
                      "nonnegative combination escapes the facet cones, sigma #" +
                          std::to_string(si));
        if (!h.contains(x))
          return fail("halfspace_realization",
                      "nonnegative combination fails the halfspace predicate, sigma #" +
                          std::to_string(si));
      }

      // mu'(tau) matches the projection identities.
      for (int tau : p) {
        Vec proj = project_mu(rs, sigma, tau);
        Vec lhs = sigma.mat().apply(proj);
        Vec rhs = vec_sub(proj, vec_scale(rs.rho(tau), FieldElement(f, 2L)));
        if (!(lhs == rhs))
          return fail("halfspace_realization", "sigma mu'(tau) != mu'(tau) - 2 tau, sigma #" +
                                                   std::to_string(si));
        for (int tau2 : p)
          if (!(rs.dot(proj, rs.rho(tau2)) == rs.dot(rs.mu_of(rs.rho(tau)), rs.rho(tau2))))
            return fail("halfspace_realization",
                        "mu'(tau) . tau' differs from mu(tau) . tau', sigma #" +
                            std::to_string(si));
      }

      // Intermediate filtration steps, sampled: a nonnegative combination of
      // tau_1..tau_i satisfies the halfspace description of the i-th stage
      // and lies in a top cone of the stage complex (rank <= 3 only).
      if (rs.rank() <= 3 && static_cast<int>(p.size()) >= 2) {
        auto ss = simple_system(rs, sigma);
        int theta_k = ss.theta.back();
        std::vector<int> eligible;
        for (size_t ix = 0; ix < p.size(); ++ix)
          if (p[ix] >= theta_k) eligible.push_back(static_cast<int>(ix));
        for (int t = 0; t < 2 && !eligible.empty(); ++t) {
          int stage = eligible[rng.below(static_cast<int>(eligible.size()))];
          std::vector<int> prefix(p.begin(), p.begin() + stage + 1);
          Vec x = vec_zero(f, rs.rank());
          for (int tau : prefix)
            x = vec_add(x, vec_scale(rs.rho(tau), FieldElement(f, Rat(rng.below(3)))));
          if (vec_is_zero(x)) continue;
          for (int th : ss.theta)
            if (rs.dot(rs.mu_of(rs.rho(th)), x).sign() < 0)
              return fail("halfspace_realization",
                          "filtration stage point violates a positive halfspace, sigma #" +
                              std::to_string(si));
          for (size_t ix = stage + 1; ix < p.size(); ++ix)
            if (rs.dot(rs.mu_of(rs.rho(p[ix])), x).sign() > 0)
              return fail("halfspace_realization",
                          "filtration stage point violates a negative halfspace, sigma #" +
                              std::to_string(si));
          auto stage_tops = induced_tops(ctx, prefix);
          bool covered = false;
          for (const auto& simplex : stage_tops) {
            std::vector<Vec> gens;
            for (int v : simplex) gens.push_back(rs.rho(v));
            auto sol = solve(mat_from_columns(f, rs.rank(), gens), x);
            if (!sol) continue;
            bool nonneg = true;
            for (const auto& cc : *sol)
              if (cc.sign() < 0) nonneg = false;
            if (nonneg) {
              covered = true;
              break;
            }
          }
          if (!covered)
            return fail("halfspace_realization",
                        "filtration stage point escapes the stage complex, sigma #" +
                            std::to_string(si));
        }
      }

      // Pairwise facet-cone intersections agree with face intersections
      // (sampled points).
      if (rs.rank() <= 3) {
        for (size_t a = 0; a < tops.size(); ++a)
          for (size_t b = a + 1; b < tops.size(); ++b) {
            std::vector<int> shared;
            std::set_intersection(tops[a].begin(), tops[a].end(), tops[b].begin(),
                                  tops[b].end(), std::back_inserter(shared));
            for (int t = 0; t < 3; ++t) {
              Vec x = vec_zero(f, rs.rank());
              for (int v : tops[a])
                x = vec_add(x, vec_scale(rs.rho(v), FieldElement(f, Rat(rng.below(4)))));
              if (vec_is_zero(x)) continue;
              std::vector<Vec> gb;
              for (int v : tops[b]) gb.push_back(rs.rho(v));
              auto solb = solve(mat_from_columns(f, rs.rank(), gb), x);
              bool in_b = false;
              if (solb) {
                in_b = true;
                for (const auto& c : *solb)
                  if (c.sign() < 0) in_b = false;
              }
              if (!in_b) continue;
              std::vector<Vec> gs;
              for (int v : shared) gs.push_back(rs.rho(v));
              std::optional<Vec> sols;
              if (!gs.empty()) sols = solve(mat_from_columns(f, rs.rank(), gs), x);
              bool in_shared = false;
              if (sols) {
                in_shared = true;
                for (const auto& c : *sols)
                  if (c.sign() < 0) in_shared = false;
              }
              if (!in_shared && !vec_is_zero(x))
                return fail("halfspace_realization",
                            "facet cones intersect outside their shared face, sigma #" +
                                std::to_string(si));
            }
          }
      }
    }
    return pass("halfspace_realization", std::to_string(chosen.size()) + " elements");
  });
}

CheckResult lattice_pairs(LatticeContext& ctx, const IntervalPoset& poset, LatticeReport* out) {
  return guarded("lattice_pairs", [&]() -> CheckResult {
    LatticeReport rep = verify_lattice(ctx, poset);
    if (out) *out = rep;
    if (!rep.ok()) {
      std::string d = rep.failures.front();
      return fail("lattice_pairs", std::to_string(rep.failures.size()) + " failures; first: " + d);
    }
    return pass("lattice_pairs", std::to_string(rep.pairs_checked) + " pairs over " +
                                     std::to_string(rep.elements) + " elements");
  });
}

CheckResult lattice_algebra(LatticeContext& ctx, const IntervalPoset& poset, uint64_t seed) {
  return guarded("lattice_algebra", [&]() -> CheckResult {
    const RootSystem& rs = ctx.root_system();
    Rng rng(seed + 3);
    const int n = poset.size();
    std::vector<Bits128> pmask(n);
    for (int i = 0; i < n; ++i) pmask[i] = ctx.refl_mask(poset.elems[i]);
    // Meets memoized by element index; the algebra laws below then reduce to
    // integer lookups.
    std::vector<int32_t> meet_tab(static_cast<size_t>(n) * n, -1);
    auto meet_idx = [&](int a, int b) {
      int32_t& slot = meet_tab[static_cast<size_t>(a) * n + b];
      if (slot >= 0) return static_cast<int>(slot);
      auto [elem, simplex] = ctx.meet_masked(pmask[a] & pmask[b]);
      int m = poset.find(elem);
      if (m < 0) throw InternalError("meet left the interval");
      slot = m;
      meet_tab[static_cast<size_t>(b) * n + a] = m;
      return m;
    };
    std::vector<int> krew(n), gamma_complement(n);
    for (int i = 0; i < n; ++i) {
      krew[i] = poset.find(kreweras(rs, poset.elems[i]));
      gamma_complement[i] =
          poset.find(GroupElement(rs.gamma() * group_inverse(rs, poset.elems[i].mat())));
      if (krew[i] < 0 || gamma_complement[i] < 0)
        throw InternalError("Kreweras complement left the interval");
    }
    auto join_idx = [&](int a, int b) { return gamma_complement[meet_idx(krew[a], krew[b])]; };

    // Idempotence and the extremal laws.
    for (int i = 0; i < n; ++i) {
      if (meet_idx(i, i) != i) return fail("lattice_algebra", "meet(x, x) != x");
      if (meet_idx(i, n - 1) != i) return fail("lattice_algebra", "meet(x, gamma) != x");
      if (join_idx(i, 0) != i) return fail("lattice_algebra", "join(x, I) != x");
    }

    const bool small = rs.rank() <= 3;
    // Choice independence and moved-space span of the meet.
    long pair_budget = small ? static_cast<long>(n) * n : 2000;
    for (long t = 0; t < pair_budget; ++t) {
      int a = small ? static_cast<int>(t / n) : rng.below(n);
      int b = small ? static_cast<int>(t % n) : rng.below(n);
      Bits128 m = pmask[a] & pmask[b];
      auto [elem, simplex] = ctx.meet_masked(m);
      if (!m.none()) {
        auto cliques = maximal_cliques(ctx.adjacency(), m, rs.num_positive());
        size_t top = 0;
        for (const auto& c : cliques) top = std::max(top, c.size());
        for (const auto& c : cliques) {
          if (c.size() != top) continue;
          Mat prod = Mat::identity(rs.field(), rs.rank());
          for (auto it = c.rbegin(); it != c.rend(); ++it)
            prod = prod * rs.reflection_of_root(*it + 1);
          if (!(GroupElement(prod) == elem))
            return fail("lattice_algebra",
                        "meet depends on the choice of top-dimensional simplex");
        }
        // span(P_a ^ P_b) = M(meet).
        std::vector<Vec> verts;
        for (int i = 1; i <= rs.num_positive(); ++i)
          if (m.test(i - 1)) verts.push_back(rs.rho(i));
        Mat vm = mat_from_columns(rs.field(), rs.rank(), verts);
        if (rank(vm) != reflection_length(elem.mat()))
          return fail("lattice_algebra", "span of shared vertex set != moved space of the meet");
        auto mv = column_space(elem.mat() - Mat::identity(rs.field(), rs.rank()));
        for (const auto& v : verts)
          if (!in_span(mv, v, rs.field()))
            return fail("lattice_algebra", "shared vertex escapes the moved space of the meet");
      }
    }

    // Associativity, commutativity, absorption.
    long triple_budget = small ? static_cast<long>(n) * n * n : 10000;
    for (long t = 0; t < triple_budget; ++t) {
      int a, b, c;
      if (small) {
        a = static_cast<int>(t % n);
        b = static_cast<int>((t / n) % n);
        c = static_cast<int>(t / (static_cast<long>(n) * n));
      } else {
        a = rng.below(n);
        b = rng.below(n);
        c = rng.below(n);
      }
      if (meet_idx(a, b) != meet_idx(b, a)) return fail("lattice_algebra", "meet not commutative");
      if (meet_idx(a, meet_idx(b, c)) != meet_idx(meet_idx(a, b), c))
        return fail("lattice_algebra", "meet not associative");
      if (meet_idx(a, join_idx(a, b)) != a)
        return fail("lattice_algebra", "absorption meet(a, join(a,b)) != a");
      if (join_idx(a, meet_idx(a, b)) != a)
        return fail("lattice_algebra", "absorption join(a, meet(a,b)) != a");
    }
    return pass("lattice_algebra");
  });
}

CheckResult order_identities(const RootSystem& rs, const IntervalPoset& poset, uint64_t seed) {
  return guarded("order_identities", [&]() -> CheckResult {
    Rng rng(seed + 4);
    const int n = poset.size();
    const NumberField& f = rs.field();
    auto down = down_sets(poset);
    auto below = [&](int u, int w) { return (down[w][u >> 6] >> (u & 63)) & 1; };

    std::vector<std::vector<Vec>> moved(n), fixed(n);
    for (int i = 0; i < n; ++i) {
      auto mf = moved_fixed(rs, poset.elems[i].mat());
      moved[i] = mf.first;
      fixed[i] = mf.second;
    }

    const bool small = rs.rank() <= 3;
    long budget = small ? static_cast<long>(n) * n : 1000;
    for (long t = 0; t < budget; ++t) {
      int u = small ? static_cast<int>(t / n) : rng.below(n);
      int w = small ? static_cast<int>(t % n) : rng.below(n);
      if (below(u, w)) {
        if (!span_subset(rs, moved[u], moved[w]))
          return fail("order_identities", "u <= w but M(u) is not contained in M(w)");
        if (!span_subset(rs, fixed[w], fixed[u]))
          return fail("order_identities", "u <= w but F(w) is not contained in F(u)");
        // Kreweras reversal.
        int ku = poset.find(kreweras(rs, poset.elems[u]));
        int kw = poset.find(kreweras(rs, poset.elems[w]));
        if (!below(kw, ku))
          return fail("order_identities", "Kreweras complement is not order reversing");
      }
      // M(u) subset of M(w) forces u <= w for interval elements.
      if (static_cast<int>(moved[u].size()) <= static_cast<int>(moved[w].size()) &&
          span_subset(rs, moved[u], moved[w]) && !below(u, w))
        return fail("order_identities", "moved-space containment without order relation");
    }

    // Conjugation identity on random moved-space vectors.
    for (int t = 0; t < 40; ++t) {
      int wi = rng.below(n);
      if (poset.len[wi] == 0) continue;
      Vec v = vec_zero(f, rs.rank());
      for (const auto& b : moved[wi]) v = vec_add(v, vec_scale(b, FieldElement(f, rng.rat())));
      if (vec_is_zero(v) || rs.dot(v, v).is_zero()) continue;
      const Mat& w = poset.elems[wi].mat();
      Mat lhs = rs.reflection_from_vector(v) * w;
      Mat rhs = w * rs.reflection_from_vector(group_inverse(rs, w).apply(v));
      if (!(lhs == rhs))
        return fail("order_identities", "R(v) w != w R(w^{-1} v) for v in M(w)");
    }

    // Minimal factorisations: later factors move inside M(R_1 alpha).
    for (int t = 0; t < 25; ++t) {
      int wi = rng.below(n);
      if (poset.len[wi] < 2) continue;
      auto factors = random_factorisation(rs, poset.elems[wi].mat(), rng);
      Mat rest = rs.reflection_of_root(factors[0]) * poset.elems[wi].mat();
      auto mrest = column_space(rest - Mat::identity(f, rs.rank()));
      for (size_t j = 1; j < factors.size(); ++j)
        if (!in_span(mrest, rs.rho(factors[j]), f))
          return fail("order_identities", "factor root escapes M(R_1 alpha)");
    }

    // Two-reflection transfer: R_i R_j <= gamma iff R_j <= R_i gamma.
    for (int t = 0; t < 200; ++t) {
      int i = 1 + rng.below(rs.num_positive());
      int j = 1 + rng.below(rs.num_positive());
      if (i == j) continue;
      Mat rij = rs.reflection_of_root(i) * rs.reflection_of_root(j);
      bool lhs = leq(rs, rij, rs.gamma());
      bool mid = leq(rs, rs.reflection_of_root(j), rs.reflection_of_root(i) * rs.gamma());
      bool rhs = leq(rs, rs.reflection_of_root(i), rs.gamma() * rs.reflection_of_root(j));
      if (lhs != mid || mid != rhs)
        return fail("order_identities", "two-reflection transfer identity fails at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
    }

    // Interval enumeration does not depend on the reflection order.
    {
      std::vector<int> order(rs.num_positive());
      for (int i = 0; i < rs.num_positive(); ++i) order[i] = i + 1;
      for (int i = rs.num_positive() - 1; i > 0; --i)
        std::swap(order[i], order[rng.below(i + 1)]);
      IntervalPoset again = enumerate_interval(rs, &order);
      if (again.size() != poset.size())
        return fail("order_identities", "interval size depends on reflection order");
      for (int i = 0; i < poset.size(); ++i)
        if (again.elems[i].key() != poset.elems[i].key())
          return fail("order_identities", "interval contents depend on reflection order");
    }
    return pass("order_identities");
  });
}

CheckResult cluster_maps(const RootSystem& rs) {
  return guarded("cluster_maps", [&]() -> CheckResult {
    auto omega = almost_positive_roots(rs);
    const int s = rs.split();
    for (const auto& b : omega) {
      auto pp = tau_plus(rs, tau_plus(rs, b));
      auto mm = tau_minus(rs, tau_minus(rs, b));
      if (!(pp.vector == b.vector) || !(mm.vector == b.vector))
        return fail("cluster_maps", "tau maps are not involutions");

      bool in_minus_s1 = b.negative_simple && b.idx <= s;
      bool is_s2_root = false;
      if (!b.negative_simple)
        for (int i = s + 1; i <= rs.rank(); ++i)
          if (b.vector == rs.simple(i)) is_s2_root = true;
      auto img = tau_plus(rs, tau_minus(rs, b));
      if (in_minus_s1 || is_s2_root) {
        if (!(img.vector == vec_neg(b.vector)))
          return fail("cluster_maps", "tau_+ tau_- != -id on (-S1) u S2");
      } else {
        if (!(img.vector == rs.gamma().apply(b.vector)))
          return fail("cluster_maps", "tau_+ tau_- != gamma off (-S1) u S2");
      }

      bool in_minus_s2 = b.negative_simple && b.idx > s;
      bool is_s1_root = false;
      if (!b.negative_simple)
        for (int i = 1; i <= s; ++i)
          if (b.vector == rs.simple(i)) is_s1_root = true;
      auto img2 = tau_minus(rs, tau_plus(rs, b));
      if (in_minus_s2 || is_s1_root) {
        if (!(img2.vector == vec_neg(b.vector)))
          return fail("cluster_maps", "tau_- tau_+ != -id on (-S2) u S1");
      } else {
        if (!(img2.vector == rs.gamma_inverse().apply(b.vector)))
          return fail("cluster_maps", "tau_- tau_+ != gamma^{-1} off (-S2) u S1");
      }

      // Rotation reaches a negative simple within h+2 steps.
      auto x = b;
      int steps = 0;
      while (!x.negative_simple && steps <= rs.coxeter_number() + 2) {
        x = tau_minus(rs, tau_plus(rs, x));
        ++steps;
      }
      if (!x.negative_simple)
        return fail("cluster_maps", "rotation did not reach a negative simple root");
    }
    return pass("cluster_maps", std::to_string(omega.size()) + " almost-positive roots");
  });
}

CheckResult cluster_compat(const RootSystem& rs, bool extension) {
  return guarded("cluster_compat", [&]() -> CheckResult {
    if (!is_crystallographic(rs.datum()) && !extension)
      return pass("cluster_compat", "skipped: non-crystallographic type without extension flag");
    auto omega = almost_positive_roots(rs);
    const int nv = static_cast<int>(omega.size());
    std::vector<std::vector<FieldElement>> d(nv, std::vector<FieldElement>(nv, FieldElement(rs.field())));
    for (int a = 0; a < nv; ++a)
      for (int b = 0; b < nv; ++b) {
        if (a == b) continue;
        d[a][b] = compatibility_degree(rs, omega[a], omega[b]);
      }
    bool crys = is_crystallographic(rs.datum());
    for (int a = 0; a < nv; ++a)
      for (int b = 0; b < nv; ++b) {
        if (a == b) continue;
        if (d[a][b].is_zero() != d[b][a].is_zero())
          return fail("cluster_compat", "zero locus of the compatibility degree is not symmetric");
        if (crys) {
          // Unit-root coordinates put the values in Z[theta]; for the
          // simply-laced types this is plain integrality.
          for (const auto& coeff : d[a][b].coeffs())
            if (coeff.get_den() != 1)
              return fail("cluster_compat",
                          "crystallographic compatibility degree is not an algebraic integer");
        }
        // Invariance under both involutions.
        FieldElement dp = compatibility_degree(rs, tau_plus(rs, omega[a]), tau_plus(rs, omega[b]));
        if (!(dp == d[a][b]))
          return fail("cluster_compat", "compatibility degree not invariant under tau_+");
        FieldElement dm = compatibility_degree(rs, tau_minus(rs, omega[a]), tau_minus(rs, omega[b]));
        if (!(dm == d[a][b]))
          return fail("cluster_compat", "compatibility degree not invariant under tau_-");
      }
    FlagComplex ga = build_GA(rs, extension);
    if (ga.num_vertices() != rs.num_positive() + rs.rank())
      return fail("cluster_compat", "GA vertex count is not nh/2 + n");
    FlagComplex ex = build_EX(rs);
    IsoReport iso = isomorphism_check(ex, ga);
    if (!iso.ok())
      return fail("cluster_compat",
                  "EX and GA differ on " +
                      std::to_string(iso.only_in_ex.size() + iso.only_in_ga.size()) + " edges");
    return pass("cluster_compat", "shared_edges=" + std::to_string(iso.shared_edges));
  });
}

}  // namespace checks

VerifyReport run_verify(const CoxeterDatum& datum, const VerifyOptions& opts) {
  VerifyReport rep;
  rep.type = datum.type_label;
  rep.seed = opts.seed;
  try {
    RootSystem rs(datum);
    rep.checks.push_back(checks::structure(rs));
    rep.checks.push_back(checks::petrie(rs));
    rep.checks.push_back(checks::table_signs(rs));
    rep.checks.push_back(checks::consecutive_windows(rs));
    rep.checks.push_back(checks::dual_basis(rs));
    rep.checks.push_back(checks::facet_bound(rs));
    rep.checks.push_back(checks::flag_lemma(rs, opts.seed, 1000));
    rep.checks.push_back(checks::cone_exclusion(rs, opts.seed, 50));
    rep.checks.push_back(checks::root_angles(rs));
    rep.checks.push_back(checks::sphere(rs));

    IntervalPoset poset = enumerate_interval(rs);
    rep.elements = poset.size();
    LatticeContext ctx(rs);
    LatticeReport lat;
    rep.checks.push_back(checks::lattice_pairs(ctx, poset, &lat));
    rep.pairs_checked = lat.pairs_checked;
    for (const auto& f : lat.failures) rep.failures.push_back(f);
    rep.checks.push_back(checks::lattice_algebra(ctx, poset, opts.seed));

    int sigma_cap = rs.rank() <= 4 ? 0 : 40;
    rep.checks.push_back(checks::simple_systems(ctx, poset, opts.seed, sigma_cap));
    rep.checks.push_back(checks::halfspaces(ctx, poset, opts.seed, sigma_cap));
    rep.checks.push_back(checks::order_identities(rs, poset, opts.seed));
    rep.checks.push_back(checks::cluster_maps(rs));
    rep.checks.push_back(checks::cluster_compat(rs, opts.extension));
  } catch (const std::exception& e) {
    rep.failures.push_back(std::string("fatal: ") + e.what());
  }
  for (const auto& c : rep.checks)
    if (!c.pass) rep.failures.push_back(c.name + ": " + c.detail);
  return rep;
}

std::string verify_json(const VerifyReport& rep, std::optional<long> wall_ms) {
  json j;
  j["type"] = rep.type;
  j["seed"] = rep.seed;
  j["elements"] = rep.elements;
  j["pairs_checked"] = rep.pairs_checked;
  j["failures"] = rep.failures;
  json cs = json::array();
  for (const auto& c : rep.checks) {
    json cj;
    cj["name"] = c.name;
    cj["status"] = c.pass ? "pass" : "fail";
    if (!c.detail.empty()) cj["detail"] = c.detail;
    cs.push_back(cj);
  }
  j["checks"] = cs;
  j["status"] = rep.ok() ? "pass" : "fail";
  if (wall_ms) j["wall_time_ms"] = *wall_ms;
  return j.dump(2) + "\n";
}

std::string verify_text(const VerifyReport& rep) {
  std::ostringstream os;
  os << "verify " << rep.type << " (seed " << rep.seed << ")\n";
  for (const auto& c : rep.checks) {
    os << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << '\n';
  }
  os << "elements: " << rep.elements << ", pairs checked: " << rep.pairs_checked << '\n';
  os << (rep.ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace coxlat
