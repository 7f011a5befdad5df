#include "coxlat/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace coxlat {

using nlohmann::json;

std::vector<std::string> coord_strings(const Vec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

namespace {

std::string join_coords(const Vec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s.push_back(';');
    s += v[i].str();
  }
  return s;
}

json field_json(const NumberField& f) {
  json j;
  j["generator_order"] = f.generator_order();
  std::vector<std::string> mp;
  for (const auto& c : f.min_poly()) mp.push_back(rat_str(c));
  j["min_poly"] = mp;
  j["isolating_interval"] = {rat_str(f.interval_lo()), rat_str(f.interval_hi())};
  return j;
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

std::string tables_csv(const RootSystem& rs) {
  std::ostringstream os;
  const int np = rs.num_positive();
  os << "i,rho,mu\n";
  for (int i = 1; i <= np; ++i)
    os << i << ",\"" << join_coords(rs.rho(i)) << "\",\"" << join_coords(rs.mu(i)) << "\"\n";
  os << "\n";
  Mat t = rs.dot_table();
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < np; ++j) {
      if (j) os << ',';
      os << t.at(i, j).str();
    }
    os << '\n';
  }
  return os.str();
}

std::string tables_json(const RootSystem& rs) {
  json j;
  j["type"] = rs.datum().type_label;
  j["rank"] = rs.rank();
  j["coxeter_number"] = rs.coxeter_number();
  j["split"] = rs.split();
  j["positive_roots"] = rs.num_positive();
  j["field"] = field_json(rs.field());
  json rho = json::array(), mu = json::array();
  for (int i = 1; i <= rs.num_positive(); ++i) {
    rho.push_back(coord_strings(rs.rho(i)));
    mu.push_back(coord_strings(rs.mu(i)));
  }
  j["rho"] = rho;
  j["mu"] = mu;
  Mat t = rs.dot_table();
  json rows = json::array();
  for (int i = 0; i < t.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < t.cols(); ++k) row.push_back(t.at(i, k).str());
    rows.push_back(row);
  }
  j["mu_dot_rho"] = rows;
  return j.dump(2) + "\n";
}

std::string tables_text(const RootSystem& rs) {
  std::ostringstream os;
  os << rs.datum().type_label << ": rank " << rs.rank() << ", h = " << rs.coxeter_number()
     << ", s = " << rs.split() << ", " << rs.num_positive() << " positive roots\n\n";
  const int np = rs.num_positive();
  for (int i = 1; i <= np; ++i)
    os << "  rho_" << i << " = (" << join_coords(rs.rho(i)) << ")   mu_" << i << " = ("
       << join_coords(rs.mu(i)) << ")\n";
  os << "\n[mu_i . rho_j]:\n";
  Mat t = rs.dot_table();
  for (int i = 0; i < np; ++i) {
    os << "  ";
    for (int j = 0; j < np; ++j) {
      if (j) os << '\t';
      os << t.at(i, j).str();
    }
    os << '\n';
  }
  return os.str();
}

std::string complex_json(const RootSystem& rs, const FlagComplex& c, const std::string& kind) {
  json j;
  j["type"] = rs.datum().type_label;
  j["complex"] = kind;
  j["rank"] = rs.rank();
  json verts = json::array();
  for (int p = 0; p < c.num_vertices(); ++p) {
    json v;
    v["index"] = c.vertex_id(p);
    v["coords"] = coord_strings(rs.rho(c.vertex_id(p)));
    verts.push_back(v);
  }
  j["vertices"] = verts;
  json edges = json::array();
  for (const auto& [a, b] : c.edges()) edges.push_back({a, b});
  j["edges"] = edges;
  json facets = json::array();
  for (const auto& f : c.facets()) {
    json fx = json::array();
    for (int p : f) fx.push_back(c.vertex_id(p));
    facets.push_back(fx);
  }
  j["facets"] = facets;
  return j.dump(2) + "\n";
}

std::string complex_dot(const FlagComplex& c, const std::string& kind) {
  std::ostringstream os;
  os << "graph \"" << kind << "\" {\n";
  for (int p = 0; p < c.num_vertices(); ++p)
    os << "  v" << p << " [label=\"" << c.vertex_id(p) << "\"];\n";
  for (int a = 0; a < c.num_vertices(); ++a)
    for (int b = a + 1; b < c.num_vertices(); ++b)
      if (c.has_edge(a, b)) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string complex_text(const RootSystem& rs, const FlagComplex& c, const std::string& kind) {
  std::ostringstream os;
  os << kind << " for " << rs.datum().type_label << ": " << c.num_vertices() << " vertices, "
     << c.num_edges() << " edges, " << c.facets().size() << " facets, dimension "
     << c.dimension() << "\n";
  os << "vertices:";
  for (int p = 0; p < c.num_vertices(); ++p) os << ' ' << c.vertex_id(p);
  os << "\nfacets:\n";
  for (const auto& f : c.facets()) {
    os << "  <";
    for (size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << c.vertex_id(f[i]);
    os << ">\n";
  }
  return os.str();
}

std::vector<std::vector<double>> cholesky_embedding(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<std::vector<double>> b(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = rs.gram_matrix().at(i, j).to_double();
  std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double sum = b[i][j];
      for (int k = 0; k < j; ++k) sum -= l[i][k] * l[j][k];
      if (i == j)
        l[i][i] = std::sqrt(sum);
      else
        l[i][j] = sum / l[j][j];
    }
  }
  return l;
}

std::vector<double> embed(const std::vector<std::vector<double>>& chol, const Vec& v) {
  const int n = static_cast<int>(chol.size());
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double c = v[i].to_double();
    for (int j = 0; j < n; ++j) out[j] += c * chol[i][j];
  }
  return out;
}

std::string complex_off(const RootSystem& rs, const FlagComplex& c) {
  if (rs.rank() != 3) throw Error("OFF export requires a rank-3 group");
  auto chol = cholesky_embedding(rs);
  std::ostringstream os;
  const auto& facets = c.facets();
  os << "OFF\n" << c.num_vertices() << ' ' << facets.size() << ' ' << c.num_edges() << "\n";
  for (int p = 0; p < c.num_vertices(); ++p) {
    auto x = embed(chol, rs.rho(c.vertex_id(p)));
    os << fmt17(x[0]) << ' ' << fmt17(x[1]) << ' ' << fmt17(x[2]) << "\n";
  }
  for (const auto& f : facets) {
    os << f.size();
    for (int p : f) os << ' ' << p;
    os << "\n";
  }
  return os.str();
}

std::string interval_json(const RootSystem& rs, const IntervalPoset& poset) {
  json j;
  j["type"] = rs.datum().type_label;
  j["size"] = poset.size();
  json elems = json::object();
  for (int i = 0; i < poset.size(); ++i) {
    json e;
    e["length"] = poset.len[i];
    e["covers"] = poset.lower_covers[i];
    elems[std::to_string(i)] = e;
  }
  j["elements"] = elems;
  return j.dump(2) + "\n";
}

std::string interval_text(const RootSystem& rs, const IntervalPoset& poset) {
  std::ostringstream os;
  os << "[I, gamma] in " << rs.datum().type_label << ": " << poset.size() << " elements\n";
  std::vector<int> by_len(rs.rank() + 1, 0);
  for (int l : poset.len) ++by_len[l];
  os << "rank sizes:";
  for (int l = 0; l <= rs.rank(); ++l) os << ' ' << by_len[l];
  os << '\n';
  return os.str();
}

std::string compatibility_csv(const RootSystem& rs) {
  auto omega = almost_positive_roots(rs);
  std::ostringstream os;
  os << "i\\j";
  for (const auto& b : omega) os << ',' << b.ext_index;
  os << '\n';
  for (const auto& a : omega) {
    os << a.ext_index;
    for (const auto& b : omega) {
      if (a.ext_index == b.ext_index) {
        os << ",";
        continue;
      }
      os << ',' << compatibility_degree(rs, a, b).str();
    }
    os << '\n';
  }
  return os.str();
}

std::string associahedron_json(const RootSystem& rs, const FlagComplex& ga,
                               const IsoReport* iso) {
  json j;
  j["type"] = rs.datum().type_label;
  j["vertices"] = ga.num_vertices();
  json edges = json::array();
  for (const auto& [a, b] : ga.edges()) edges.push_back({a, b});
  j["edges"] = edges;
  j["facets"] = static_cast<long>(ga.facets().size());
  if (iso) {
    json rep;
    rep["shared_edges"] = iso->shared_edges;
    rep["only_in_ex"] = json::array();
    for (auto [a, b] : iso->only_in_ex) rep["only_in_ex"].push_back({a, b});
    rep["only_in_ga"] = json::array();
    for (auto [a, b] : iso->only_in_ga) rep["only_in_ga"].push_back({a, b});
    rep["isomorphic"] = iso->ok();
    j["isomorphism"] = rep;
  }
  return j.dump(2) + "\n";
}

}  // namespace coxlat
