#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxlat/rootsystem.hpp"

namespace fixtures {

using coxlat::CoxeterDatum;
using coxlat::FieldElement;
using coxlat::Mat;
using coxlat::NumberField;
using coxlat::Rat;
using coxlat::RootSystem;
using coxlat::Vec;

// Icosahedral simple system: alpha_1 = (1,0,0), alpha_2 = (0,1,0),
// alpha_3 = (1/2)(-1,-tau,tau-1).  Pairwise angles: m_12 = 2, m_13 = 3,
// m_23 = 5, already bipartite ordered with split 2.
inline CoxeterDatum icosahedral_datum() {
  return coxlat::datum_from_matrix("H3", {{1, 2, 3}, {2, 1, 5}, {3, 5, 1}});
}

// Tetrahedral simple system for the symmetric group on 4 letters:
// alpha_1 = (1,3), alpha_2 = (1,2), alpha_3 = (3,4) as transpositions,
// with m_12 = m_13 = 3 and m_23 = 2; split 1, gamma = (1,2,3,4).
inline CoxeterDatum tetrahedral_datum() {
  return coxlat::datum_from_matrix("A3", {{1, 3, 3}, {3, 1, 2}, {3, 2, 1}});
}

// Transposition carried by each root of the tetrahedral system, in the
// Steinberg order: rho_1..rho_6 and their negatives.
inline std::vector<std::pair<int, int>> tetrahedral_transpositions() {
  return {{1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}, {1, 2}};
}

// The [mu_i . rho_j] matrix of the icosahedral group.  Entry codes:
// 0, +-1, +-T (tau), +-S (tau^2), +-D (2 tau).
inline const char* icosahedral_table[15] = {
    // columns 1..15 per row
    "1  0  1  0  T  T  T  1  T  0  T  1  1  0  0",
    "0  1  T  T  T  S  1  S  S  T  T  T  0  1  0",
    "0  0  1  1  T  S  T  S  D  T  S  S  1  T  1",
    "-1 0  0  1  0  1  0  T  T  T  1  T  0  T  1",
    "0  -1 0  0  1  T  T  T  S  1  S  S  T  T  T",
    "-1 -T -1 0  0  1  1  T  S  T  S  D  T  S  S",
    "0  -T -1 -1 0  0  1  0  1  0  T  T  T  1  T",
    "-T -T -T 0  -1 0  0  1  T  T  T  S  1  S  S",
    "-T -S -S -1 -T -1 0  0  1  1  T  S  T  S  D",
    "-T -1 -T 0  -T -1 -1 0  0  1  0  1  0  T  T",
    "-1 -S -S -T -T -T 0  -1 0  0  1  T  T  T  S",
    "-T -S -D -T -S -S -1 -T -1 0  0  1  1  T  S",
    "0  -T -T -T -1 -T 0  -T -1 -1 0  0  1  0  1",
    "-T -T -S -1 -S -S -T -T -T 0  -1 0  0  1  T",
    "-1 -T -S -T -S -D -T -S -S -1 -T -1 0  0  1"};

inline FieldElement table_entry(const NumberField& f, const std::string& code) {
  FieldElement tau = FieldElement::theta(f);
  bool neg = code[0] == '-';
  std::string c = neg ? code.substr(1) : code;
  FieldElement v(f);
  if (c == "0")
    v = FieldElement(f);
  else if (c == "1")
    v = FieldElement(f, 1L);
  else if (c == "T")
    v = tau;
  else if (c == "S")
    v = tau * tau;
  else if (c == "D")
    v = tau * Rat(2);
  else
    throw std::runtime_error("bad table code: " + code);
  return neg ? -v : v;
}

inline Mat icosahedral_mu_rho(const NumberField& f) {
  Mat t(f, 15, 15);
  for (int i = 0; i < 15; ++i) {
    std::istringstream row(icosahedral_table[i]);
    std::string code;
    for (int j = 0; j < 15; ++j) {
      row >> code;
      t.at(i, j) = table_entry(f, code);
    }
  }
  return t;
}

// Exact ambient coordinates over Q(sqrt2) of the hyperoctahedral example:
// alpha_1 = (1,0,0,0), alpha_2 = (s/2)(0,1,0,-1), alpha_3 = (s/2)(-1,0,0,1),
// alpha_4 = (s/2)(0,-1,1,0) with s = sqrt2.  Maps simple-root coordinates to
// ambient coordinates.
inline std::vector<FieldElement> hyperoctahedral_ambient(const RootSystem& rs, const Vec& coords) {
  const NumberField& f = rs.field();
  FieldElement half_s = FieldElement::theta(f) * Rat(1, 2);
  FieldElement zero(f), one(f, 1L);
  std::vector<std::vector<FieldElement>> alpha = {
      {one, zero, zero, zero},
      {zero, half_s, zero, -half_s},
      {-half_s, zero, zero, half_s},
      {zero, -half_s, half_s, zero}};
  std::vector<FieldElement> out(4, zero);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[j] += coords[i] * alpha[i][j];
  return out;
}

inline std::vector<FieldElement> ambient4(const NumberField& f, int a0, int a1, int a2, int a3,
                                          bool halved_sqrt2) {
  // halved_sqrt2: multiply the integer pattern by sqrt2/2; otherwise by 1.
  FieldElement scale = halved_sqrt2 ? FieldElement::theta(f) * Rat(1, 2) : FieldElement(f, 1L);
  std::vector<FieldElement> v;
  for (int c : {a0, a1, a2, a3}) v.push_back(scale * Rat(c));
  return v;
}

namespace icosahedral {

// Ambient coordinates of the icosahedral rho/mu tables over Q(tau): each
// entry is (p + q*tau)/2 encoded as the integer pair {p, q}.
struct PQ {
  int p, q;
};

// rho_1..rho_15
inline const PQ rho_table[15][3] = {
    {{2, 0}, {0, 0}, {0, 0}},  {{0, 0}, {2, 0}, {0, 0}},   {{1, 0}, {0, 1}, {-1, 1}},
    {{-1, 0}, {0, 1}, {-1, 1}}, {{0, 1}, {-1, 1}, {1, 0}},  {{-1, 1}, {1, 0}, {0, 1}},
    {{0, 1}, {1, -1}, {1, 0}},  {{1, -1}, {1, 0}, {0, 1}},  {{0, 0}, {0, 0}, {2, 0}},
    {{0, -1}, {-1, 1}, {1, 0}}, {{-1, 1}, {-1, 0}, {0, 1}}, {{1, -1}, {-1, 0}, {0, 1}},
    {{1, 0}, {0, -1}, {-1, 1}}, {{0, -1}, {1, -1}, {1, 0}}, {{-1, 0}, {0, -1}, {-1, 1}}};

// mu_1..mu_15
inline const PQ mu_table[15][3] = {
    {{2, 0}, {0, 0}, {0, 2}},    {{0, 0}, {2, 0}, {2, 2}},    {{0, 0}, {0, 0}, {0, 4}},
    {{-2, 0}, {0, 0}, {0, 2}},   {{0, 0}, {-2, 0}, {2, 2}},   {{-2, 0}, {0, -2}, {2, 2}},
    {{0, 0}, {0, -2}, {2, 0}},   {{0, -2}, {0, -2}, {0, 2}},  {{0, -2}, {-2, -2}, {2, 0}},
    {{0, -2}, {-2, 0}, {0, 0}},  {{-2, 0}, {-2, -2}, {0, 0}}, {{0, -2}, {-2, -2}, {-2, 0}},
    {{0, 0}, {0, -2}, {-2, 0}},  {{0, -2}, {0, -2}, {0, -2}}, {{-2, 0}, {0, -2}, {-2, -2}}};

// Simple roots in the same ambient encoding.
inline const PQ alpha_table[3][3] = {
    {{2, 0}, {0, 0}, {0, 0}}, {{0, 0}, {2, 0}, {0, 0}}, {{-1, 0}, {0, -1}, {-1, 1}}};

inline std::vector<FieldElement> decode(const NumberField& f, const PQ row[3]) {
  FieldElement tau = FieldElement::theta(f);
  std::vector<FieldElement> out;
  for (int j = 0; j < 3; ++j)
    out.push_back((FieldElement(f, static_cast<long>(row[j].p)) +
                   tau * Rat(row[j].q)) * Rat(1, 2));
  return out;
}

// Map intrinsic simple-root coordinates to the ambient presentation.
inline std::vector<FieldElement> ambient(const RootSystem& rs, const Vec& coords) {
  const NumberField& f = rs.field();
  std::vector<FieldElement> out(3, FieldElement(f));
  for (int i = 0; i < 3; ++i) {
    auto a = decode(f, alpha_table[i]);
    for (int j = 0; j < 3; ++j) out[j] += coords[i] * a[j];
  }
  return out;
}

}  // namespace icosahedral

}  // namespace fixtures
