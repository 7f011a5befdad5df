#include <doctest.h>

#include "coxlat/lattice.hpp"
#include "coxlat/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace coxlat;

namespace {

// Element of the tetrahedral system from a transposition word (right-to-left).
GroupElement perm_element(const RootSystem& rs, std::initializer_list<int> root_indices) {
  Mat prod = Mat::identity(rs.field(), rs.rank());
  std::vector<int> w(root_indices);
  for (auto it = w.rbegin(); it != w.rend(); ++it) prod = prod * rs.reflection_of_root(*it);
  return GroupElement(std::move(prod));
}

}  // namespace

TEST_CASE("reflections") {
  RootSystem rs(fixtures::icosahedral_datum());
  GroupElement r1 = reflection(rs, rs.simple(1));
  CHECK(r1.mat().apply(rs.simple(1)) == vec_neg(rs.simple(1)));
  CHECK(r1.mat().apply(rs.beta(2)) == rs.beta(2));
  CHECK(preserves_form(rs, r1.mat()));

  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    int i = 1 + rng.below(rs.num_positive());
    Mat r = rs.reflection_of_root(i);
    CHECK((r * r).is_identity());
    CHECK(det(r) == FieldElement(rs.field(), -1L));
  }

  Vec twice = vec_scale(rs.simple(1), FieldElement(rs.field(), 2L));
  CHECK_THROWS_AS(reflection(rs, twice), Error);
}

TEST_CASE("reflection length agrees with the Cayley-graph oracle") {
  CHECK(reflection_length(Mat::identity(NumberField::rationals(), 3)) == 0);
  for (const char* t : {"A3", "B3", "I2(5)", "I2(6)", "I2(7)", "I2(8)"}) {
    RootSystem rs(parse_type(t));
    CHECK(reflection_length(rs.gamma()) == rs.rank());
    auto group = oracles::enumerate_group(rs);
    auto dist = oracles::reflection_cayley_distances(rs, group);
    for (const auto& g : group) CHECK(reflection_length(g.mat()) == dist.at(g.key()));
  }
}

TEST_CASE("absolute order on the symmetric group") {
  RootSystem rs(fixtures::tetrahedral_datum());
  GroupElement gamma = gamma_element(rs);
  GroupElement alpha = perm_element(rs, {6, 5});  // (1,2)(3,4)
  GroupElement beta = perm_element(rs, {3, 2});   // (1,4)(2,3)
  CHECK(leq(rs, alpha, gamma));
  CHECK(leq(rs, beta, gamma));
  CHECK(reflection_length(alpha) == 2);

  IntervalPoset poset = enumerate_interval(rs);
  for (const auto& w : poset.elems) CHECK(leq(rs, identity_element(rs), w));

  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    int i = 1 + rng.below(6), j = 1 + rng.below(6);
    if (i == j) continue;
    Mat rij = rs.reflection_of_root(i) * rs.reflection_of_root(j);
    CHECK(leq(rs, rij, rs.gamma()) ==
          leq(rs, rs.reflection_of_root(j), rs.reflection_of_root(i) * rs.gamma()));
  }
}

TEST_CASE("interval enumeration against the full-group filter") {
  struct Row {
    const char* type;
    int expect;
  };
  for (Row r : {Row{"A3", 14}, Row{"H3", 32}, Row{"B3", 20}}) {
    RootSystem rs(parse_type(r.type));
    IntervalPoset poset = enumerate_interval(rs);
    CHECK(poset.size() == r.expect);
    auto group = oracles::enumerate_group(rs);
    auto filtered = oracles::interval_by_filter(rs, group);
    REQUIRE(static_cast<int>(filtered.size()) == poset.size());
    std::vector<std::string> keys;
    for (const auto& g : poset.elems) keys.push_back(g.key());
    std::sort(keys.begin(), keys.end());
    CHECK(keys == filtered);
  }
  for (int m = 3; m <= 12; ++m) {
    RootSystem rs(parse_type("I2(" + std::to_string(m) + ")"));
    IntervalPoset poset = enumerate_interval(rs);
    CHECK(poset.size() == m + 2);
    // I, gamma, and the m reflections.
    int reflections = 0;
    for (int i = 0; i < poset.size(); ++i)
      if (poset.len[i] == 1) ++reflections;
    CHECK(reflections == m);
  }
}

TEST_CASE("interval poset grading and covers") {
  RootSystem rs(parse_type("A3"));
  IntervalPoset poset = enumerate_interval(rs);
  CHECK(poset.len.front() == 0);
  CHECK(poset.len.back() == rs.rank());
  CHECK(poset.elems.front() == identity_element(rs));
  CHECK(poset.elems.back() == gamma_element(rs));
  for (int i = 0; i < poset.size(); ++i)
    for (int c : poset.lower_covers[i]) {
      CHECK(poset.len[c] == poset.len[i] - 1);
      CHECK(leq(rs, poset.elems[c], poset.elems[i]));
    }
}

TEST_CASE("reflection sets") {
  RootSystem h3(fixtures::icosahedral_datum());
  auto all = reflection_set(h3, h3.gamma());
  CHECK(static_cast<int>(all.size()) == 15);

  RootSystem b4(parse_type("B4"));
  GroupElement sigma = perm_element(b4, {1, 3, 6});
  CHECK(reflection_set(b4, sigma.mat()) == std::vector<int>{1, 3, 5, 6, 7, 9, 12, 14, 16});

  for (int i : {1, 4, 9}) {
    auto own = reflection_set(h3, h3.reflection_of_root(i));
    CHECK(own == std::vector<int>{i});
  }

  // (1,3)(2,4) does not precede the four-cycle.
  RootSystem a3(fixtures::tetrahedral_datum());
  GroupElement crossing = perm_element(a3, {1, 4});
  CHECK_FALSE(leq(a3, crossing, gamma_element(a3)));
  CHECK_THROWS_AS(reflection_set(a3, crossing.mat()), Error);
}

TEST_CASE("kreweras complement") {
  RootSystem rs(fixtures::tetrahedral_datum());
  CHECK(kreweras(rs, identity_element(rs)) == gamma_element(rs));
  CHECK(kreweras(rs, gamma_element(rs)) == identity_element(rs));
  IntervalPoset poset = enumerate_interval(rs);
  for (int i = 0; i < poset.size(); ++i)
    for (int j = 0; j < poset.size(); ++j) {
      if (!leq(rs, poset.elems[i], poset.elems[j])) continue;
      CHECK(leq(rs, kreweras(rs, poset.elems[j]), kreweras(rs, poset.elems[i])));
    }
}

TEST_CASE("moved and fixed spaces") {
  RootSystem rs(fixtures::tetrahedral_datum());
  auto [mi, fi] = moved_fixed(rs, Mat::identity(rs.field(), rs.rank()));
  CHECK(mi.empty());
  CHECK(static_cast<int>(fi.size()) == rs.rank());

  Rng rng(29);
  for (const char* t : {"A3", "B3", "H3", "B4", "I2(7)"}) {
    RootSystem r2(parse_type(t));
    IntervalPoset poset = enumerate_interval(r2);
    for (int s = 0; s < 10; ++s) {
      int i = rng.below(poset.size());
      auto [m, f] = moved_fixed(r2, poset.elems[i].mat());
      CHECK(static_cast<int>(m.size() + f.size()) == r2.rank());
      CHECK(static_cast<int>(m.size()) == poset.len[i]);
    }
  }

  // The two crossing-free double transpositions share a one-dimensional
  // moved-space intersection.
  GroupElement alpha = perm_element(rs, {6, 5});
  GroupElement beta = perm_element(rs, {3, 2});
  auto ma = moved_fixed(rs, alpha.mat()).first;
  auto mb = moved_fixed(rs, beta.mat()).first;
  std::vector<Vec> both = ma;
  both.insert(both.end(), mb.begin(), mb.end());
  Mat joint = mat_from_columns(rs.field(), rs.rank(), both);
  CHECK(rank(joint) == 3);  // dim(M(a) + M(b)) = 3, so the intersection is 2+2-3 = 1
}

TEST_CASE("group elements hash and compare canonically") {
  RootSystem rs(parse_type("A2"));
  GroupElement a(rs.gamma());
  GroupElement b(rs.simple_reflection(1) * rs.simple_reflection(2));
  CHECK(a == b);
  CHECK(a.key() == b.key());
  CHECK(preserves_form(rs, a.mat()));
}
