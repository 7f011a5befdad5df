#include <doctest.h>

#include "coxlat/lattice.hpp"
#include "coxlat/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace coxlat;

namespace {

GroupElement word_element(const RootSystem& rs, std::initializer_list<int> root_indices) {
  Mat prod = Mat::identity(rs.field(), rs.rank());
  std::vector<int> w(root_indices);
  for (auto it = w.rbegin(); it != w.rend(); ++it) prod = prod * rs.reflection_of_root(*it);
  return GroupElement(std::move(prod));
}

}  // namespace

TEST_CASE("crossing double transpositions meet at the identity") {
  RootSystem rs(fixtures::tetrahedral_datum());
  LatticeContext ctx(rs);
  GroupElement alpha = word_element(rs, {6, 5});  // (1,2)(3,4)
  GroupElement beta = word_element(rs, {3, 2});   // (1,4)(2,3)
  MeetResult m = meet(ctx, alpha, beta);
  CHECK(m.element == identity_element(rs));
  CHECK(m.witness_simplex.vertices.empty());
  CHECK(m.verified);
}

TEST_CASE("meet is idempotent and gamma is the maximum") {
  RootSystem b3(parse_type("B3"));
  LatticeContext ctx(b3);
  IntervalPoset poset = enumerate_interval(b3);
  for (const auto& w : poset.elems) {
    CHECK(meet(ctx, w, w).element == w);
    CHECK(meet(ctx, gamma_element(b3), w).element == w);
  }
}

TEST_CASE("meets carry witness simplices spanning the moved space") {
  RootSystem h3(parse_type("H3"));
  LatticeContext ctx(h3);
  IntervalPoset poset = enumerate_interval(h3);
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    const GroupElement& a = poset.elems[rng.below(poset.size())];
    const GroupElement& b = poset.elems[rng.below(poset.size())];
    MeetResult m = meet(ctx, a, b);
    CHECK(m.verified);
    CHECK(static_cast<int>(m.witness_simplex.vertices.size()) ==
          reflection_length(m.element.mat()));
  }
}

TEST_CASE("joins") {
  RootSystem a3(fixtures::tetrahedral_datum());
  LatticeContext ctx(a3);
  IntervalPoset poset = enumerate_interval(a3);
  for (const auto& w : poset.elems) CHECK(join(ctx, identity_element(a3), w) == w);

  // join((1,2), (3,4)) = (1,2)(3,4)
  GroupElement j = join(ctx, GroupElement(a3.reflection_of_root(6)),
                        GroupElement(a3.reflection_of_root(5)));
  CHECK(j == word_element(a3, {6, 5}));
}

TEST_CASE("join agrees with the brute-force least upper bound on I2(7)") {
  RootSystem rs(parse_type("I2(7)"));
  LatticeContext ctx(rs);
  auto group = oracles::enumerate_group(rs);
  std::vector<GroupElement> interval;
  for (const auto& g : group)
    if (leq(rs, g.mat(), rs.gamma())) interval.push_back(g);
  REQUIRE(interval.size() == 9);
  for (const auto& a : interval)
    for (const auto& b : interval) {
      GroupElement j = join(ctx, a, b);
      CHECK(j.key() == oracles::brute_force_lub(rs, interval, a, b));
    }
}

TEST_CASE("meet of distinct reflections in a dihedral group is the identity") {
  RootSystem rs(parse_type("I2(9)"));
  LatticeContext ctx(rs);
  for (int i = 1; i <= 9; ++i)
    for (int j = i + 1; j <= 9; ++j) {
      GroupElement a(rs.reflection_of_root(i));
      GroupElement b(rs.reflection_of_root(j));
      CHECK(meet(ctx, a, b).element == identity_element(rs));
      CHECK(join(ctx, a, b) == gamma_element(rs));
    }
}

TEST_CASE("verify_lattice on small types") {
  struct Row {
    const char* type;
    int elems;
    long pairs;
  };
  for (Row r : {Row{"A3", 14, 91}, Row{"I2(5)", 7, 21}, Row{"I2(12)", 14, 91}, Row{"H3", 32, 496}}) {
    RootSystem rs(parse_type(r.type));
    LatticeContext ctx(rs);
    IntervalPoset poset = enumerate_interval(rs);
    LatticeReport rep = verify_lattice(ctx, poset);
    CHECK(rep.ok());
    CHECK(rep.elements == r.elems);
    CHECK(rep.pairs_checked == r.pairs);
    CHECK(catalan_count(poset) == r.elems);
  }
}

TEST_CASE("catalan counts") {
  CHECK(catalan_count(enumerate_interval(RootSystem(parse_type("A3")))) == 14);
  CHECK(catalan_count(enumerate_interval(RootSystem(parse_type("B4")))) == 70);
  CHECK(catalan_count(enumerate_interval(RootSystem(parse_type("D4")))) == 50);
  // Full-group filters agree where the group is small enough.
  for (const char* t : {"A4", "B4", "D4"}) {
    RootSystem rs(parse_type(t));
    auto group = oracles::enumerate_group(rs);
    auto filtered = oracles::interval_by_filter(rs, group);
    CHECK(static_cast<int>(filtered.size()) ==
          catalan_count(enumerate_interval(rs)));
  }
}

TEST_CASE("down and up sets close the cover relation") {
  RootSystem rs(parse_type("B3"));
  IntervalPoset poset = enumerate_interval(rs);
  auto down = down_sets(poset);
  auto up = up_sets(poset);
  for (int i = 0; i < poset.size(); ++i)
    for (int j = 0; j < poset.size(); ++j) {
      bool rel = leq(rs, poset.elems[i], poset.elems[j]);
      bool via_down = (down[j][i >> 6] >> (i & 63)) & 1;
      bool via_up = (up[i][j >> 6] >> (j & 63)) & 1;
      CHECK(via_down == rel);
      CHECK(via_up == rel);
    }
}
