#include <doctest.h>

#include <algorithm>

#include "coxlat/cluster.hpp"
#include "coxlat/io.hpp"
#include "coxlat/verify.hpp"
#include "fixtures.hpp"

using namespace coxlat;

namespace {

const AlmostPositiveRoot& find_root(const std::vector<AlmostPositiveRoot>& omega, const Vec& v) {
  for (const auto& r : omega)
    if (r.vector == v) return r;
  throw std::runtime_error("root not in Omega");
}

}  // namespace

TEST_CASE("tau maps fix the right negatives and negate S1") {
  RootSystem rs(parse_type("A3"));
  auto omega = almost_positive_roots(rs);
  CHECK(static_cast<int>(omega.size()) == rs.num_positive() + rs.rank());
  for (const auto& r : omega) {
    if (r.negative_simple && r.idx > rs.split()) CHECK(tau_plus(rs, r).vector == r.vector);
    if (r.negative_simple && r.idx <= rs.split()) CHECK(tau_minus(rs, r).vector == r.vector);
  }
  // S1 members are orthogonal, so tau_+ negates each of them.
  for (int i = 1; i <= rs.split(); ++i) {
    const auto& a = find_root(omega, rs.simple(i));
    CHECK(tau_plus(rs, a).vector == vec_neg(rs.simple(i)));
  }
}

TEST_CASE("compatibility with negative simples reads off coordinates") {
  RootSystem rs(parse_type("A2"));
  auto omega = almost_positive_roots(rs);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      const auto& neg = find_root(omega, vec_neg(rs.simple(i)));
      const auto& pos = find_root(omega, rs.simple(j));
      FieldElement d = compatibility_degree(rs, neg, pos);
      CHECK((i == j ? d.is_one() : d.is_zero()));
    }
  // (-alpha_1 || alpha_1 + alpha_2) = 1.
  const auto& neg1 = find_root(omega, vec_neg(rs.simple(1)));
  const auto& highest = find_root(omega, vec_add(rs.simple(1), rs.simple(2)));
  CHECK(compatibility_degree(rs, neg1, highest).is_one());
}

TEST_CASE("the rank-2 associahedron is a pentagon") {
  RootSystem rs(parse_type("A2"));
  FlagComplex ga = build_GA(rs);
  CHECK(ga.num_vertices() == 5);
  CHECK(ga.num_edges() == 5);
  SphereReport rep = sphere_check(ga, 2);
  CHECK(rep.ok());  // a 5-cycle is a 1-sphere
}

TEST_CASE("the rank-3 associahedron has catalan many facets") {
  RootSystem rs(parse_type("A3"));
  FlagComplex ga = build_GA(rs);
  CHECK(static_cast<int>(ga.facets().size()) == 14);
}

TEST_CASE("EX and GA share their edge sets") {
  for (const char* t : {"A2", "A3", "B2", "B3", "B4", "G2", "D4", "F4", "E6"}) {
    RootSystem rs(parse_type(t));
    IsoReport rep = isomorphism_check(build_EX(rs), build_GA(rs));
    CHECK(rep.ok());
  }
  for (const char* t : {"H3", "H4", "I2(5)", "I2(7)"}) {
    RootSystem rs(parse_type(t));
    IsoReport rep = isomorphism_check(build_EX(rs), build_GA(rs, true));
    CHECK(rep.ok());
  }
}

TEST_CASE("non-crystallographic types need the extension flag") {
  RootSystem h3(parse_type("H3"));
  CHECK_THROWS_AS(build_GA(h3), Error);
  CHECK_FALSE(is_crystallographic(h3.datum()));
  CHECK(is_crystallographic(parse_type("B4")));
  CHECK(is_crystallographic(parse_type("I2(6)")));
  CHECK_FALSE(is_crystallographic(parse_type("I2(8)")));
}

TEST_CASE("compatibility table export") {
  RootSystem rs(parse_type("A2"));
  std::string csv = compatibility_csv(rs);
  CHECK(csv.find("i\\j") == 0);
  // 6 lines: header plus five rows.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}
