#include "coxlat/cluster.hpp"

#include <algorithm>

namespace coxlat {

namespace {

AlmostPositiveRoot classify(const RootSystem& rs, Vec v) {
  AlmostPositiveRoot r;
  int idx = rs.index_of_root(v);
  if (idx == 0) throw InternalError("vector is not a root of the system");
  if (idx <= rs.num_positive()) {
    r.negative_simple = false;
    r.idx = idx;
    r.ext_index = idx;
  } else {
    Vec pos = vec_neg(v);
    int simple = 0;
    for (int i = 1; i <= rs.rank(); ++i)
      if (pos == rs.simple(i)) {
        simple = i;
        break;
      }
    if (simple == 0) throw InternalError("negative root in Omega is not a negative simple");
    r.negative_simple = true;
    r.idx = simple;
    if (simple > rs.split()) {
      r.ext_index = simple - rs.rank();
    } else {
      r.ext_index = 0;
      for (int k = 1; k <= rs.split(); ++k)
        if (rs.rho(rs.num_positive() + k) == v) {
          r.ext_index = rs.num_positive() + k;
          break;
        }
      if (r.ext_index == 0) throw InternalError("negative simple missing from the EX tail");
    }
  }
  r.vector = std::move(v);
  return r;
}

}  // namespace

std::vector<AlmostPositiveRoot> almost_positive_roots(const RootSystem& rs) {
  const int n = rs.rank(), s = rs.split(), np = rs.num_positive();
  std::vector<AlmostPositiveRoot> out;
  out.reserve(np + n);
  for (int e = -n + s + 1; e <= 0; ++e) out.push_back(classify(rs, rs.rho(e)));
  for (int e = 1; e <= np + s; ++e) out.push_back(classify(rs, rs.rho(e)));
  return out;
}

AlmostPositiveRoot tau_plus(const RootSystem& rs, const AlmostPositiveRoot& b) {
  if (b.negative_simple && b.idx > rs.split()) return b;  // fixed on -S2
  return classify(rs, rs.product_S1().apply(b.vector));
}

AlmostPositiveRoot tau_minus(const RootSystem& rs, const AlmostPositiveRoot& b) {
  if (b.negative_simple && b.idx <= rs.split()) return b;  // fixed on -S1
  return classify(rs, rs.product_S2().apply(b.vector));
}

FieldElement compatibility_degree(const RootSystem& rs, const AlmostPositiveRoot& a,
                                  const AlmostPositiveRoot& b) {
  const int cap = rs.coxeter_number() + 2;
  for (int direction = 0; direction < 2; ++direction) {
    AlmostPositiveRoot x = a, y = b;
    for (int iter = 0; iter <= cap; ++iter) {
      if (x.negative_simple) {
        FieldElement v = rs.dot(y.vector, rs.beta(x.idx));
        return v.sign() > 0 ? v : FieldElement(rs.field());
      }
      if (direction == 0) {
        x = tau_minus(rs, tau_plus(rs, x));
        y = tau_minus(rs, tau_plus(rs, y));
      } else {
        x = tau_plus(rs, tau_minus(rs, x));
        y = tau_plus(rs, tau_minus(rs, y));
      }
    }
  }
  throw Error("compatibility rotation did not reach a negative simple root within h+2 steps");
}

bool is_crystallographic(const CoxeterDatum& datum) {
  for (int i = 0; i < datum.rank; ++i)
    for (int j = i + 1; j < datum.rank; ++j) {
      int m = datum.cox[i][j];
      if (m != 2 && m != 3 && m != 4 && m != 6) return false;
    }
  return true;
}

FlagComplex build_GA(const RootSystem& rs, bool extension) {
  if (!is_crystallographic(rs.datum()) && !extension)
    throw Error("type " + rs.datum().type_label +
                " is not crystallographic; pass the extension flag to build its associahedron");
  auto omega = almost_positive_roots(rs);
  std::vector<int> ids;
  ids.reserve(omega.size());
  for (const auto& r : omega) ids.push_back(r.ext_index);
  FlagComplex c(ids, rs.rank());
  const int nv = static_cast<int>(omega.size());
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b) {
      if (compatibility_degree(rs, omega[a], omega[b]).is_zero()) c.set_edge(a, b);
    }
  return c;
}

IsoReport isomorphism_check(const FlagComplex& ex, const FlagComplex& ga) {
  if (ex.vertex_ids() != ga.vertex_ids())
    throw Error("isomorphism_check: complexes have different vertex sets");
  IsoReport rep;
  const int nv = ex.num_vertices();
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b) {
      bool e = ex.has_edge(a, b), g = ga.has_edge(a, b);
      if (e && g)
        ++rep.shared_edges;
      else if (e)
        rep.only_in_ex.emplace_back(ex.vertex_id(a), ex.vertex_id(b));
      else if (g)
        rep.only_in_ga.emplace_back(ex.vertex_id(a), ex.vertex_id(b));
    }
  return rep;
}

}  // namespace coxlat
