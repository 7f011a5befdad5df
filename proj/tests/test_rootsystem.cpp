#include <doctest.h>

#include "coxlat/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace coxlat;

TEST_CASE("type symbol parsing") {
  CoxeterDatum h3 = parse_type("H3");
  CHECK(h3.rank == 3);
  CHECK(h3.field->generator_order() == 5);
  int fives = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (h3.cox[i][j] == 5) ++fives;
  CHECK(fives == 1);

  CoxeterDatum a1 = parse_type("A1");
  CHECK(a1.rank == 1);
  CHECK(a1.field == &NumberField::rationals());

  CoxeterDatum i27 = parse_type("I2(7)");
  CHECK(i27.rank == 2);
  CHECK(i27.cox[0][1] == 7);
  CHECK(i27.field->degree() == 3);
  CHECK(i27.field->count_roots(i27.field->interval_lo(), i27.field->interval_hi()) == 1);

  // C collapses onto B in the unit-root geometry.
  CHECK(parse_type("C4").cox == parse_type("B4").cox);

  for (const char* bad : {"A0", "B1", "D3", "E5", "E9", "F3", "G3", "H2", "H5", "I2(2)", "X4",
                          "I3(5)", "", "A", "Iq"})
    CHECK_THROWS_AS(parse_type(bad), Error);
}

TEST_CASE("bipartition is deterministic and matches the pinned systems") {
  // Icosahedral fixture is already bipartite ordered: split 2, identity order.
  auto icos = fixtures::icosahedral_datum();
  Bipartition b = bipartition(icos);
  CHECK(b.split == 2);
  CHECK(b.order == std::vector<int>{0, 1, 2});

  // The standard H3 symbol reorders onto exactly the icosahedral matrix.
  auto h3 = parse_type("H3");
  Bipartition bh = bipartition(h3);
  CHECK(apply_order(h3, bh).cox == icos.cox);

  // Tetrahedral fixture: split 1, identity order.
  auto tetra = fixtures::tetrahedral_datum();
  Bipartition bt = bipartition(tetra);
  CHECK(bt.split == 1);
  CHECK(bt.order == std::vector<int>{0, 1, 2});

  // The standard B4 symbol reorders onto the hyperoctahedral example matrix.
  auto b4 = parse_type("B4");
  Bipartition bb = bipartition(b4);
  std::vector<std::vector<int>> cube = {
      {1, 2, 4, 2}, {2, 1, 3, 3}, {4, 3, 1, 2}, {2, 3, 2, 1}};
  CHECK(apply_order(b4, bb).cox == cube);

  CHECK(bipartition(parse_type("A1")).split == 1);
}

TEST_CASE("gram matrices") {
  auto a2 = parse_type("A2");
  Mat g = gram(a2);
  CHECK(g.at(0, 0).is_one());
  CHECK(g.at(0, 1) == FieldElement(*a2.field, Rat(-1, 2)));

  auto icos = fixtures::icosahedral_datum();
  Mat gi = gram(icos);
  FieldElement tau = FieldElement::theta(*icos.field);
  CHECK(gi.at(1, 2) == -(tau * Rat(1, 2)));
  CHECK(gi.at(0, 1).is_zero());

  // Two distinct quadratic labels cannot share one field.
  CHECK_THROWS_AS(datum_from_matrix("bad", {{1, 4, 2}, {4, 1, 5}, {2, 5, 1}}), Error);
  // Odd cycles are not 2-colourable.
  CHECK_THROWS_AS(bipartition(datum_from_matrix("tri", {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}})),
                  Error);
  // Malformed matrices are rejected outright.
  CHECK_THROWS_AS(datum_from_matrix("asym", {{1, 3}, {2, 1}}), Error);
  CHECK_THROWS_AS(datum_from_matrix("diag", {{2, 3}, {3, 1}}), Error);
  // An indefinite (affine) matrix is rejected by the minor test.
  CHECK_THROWS_AS(gram(datum_from_matrix("affine", {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}})), Error);
}

TEST_CASE("dot products via the gram form") {
  RootSystem rs(fixtures::icosahedral_datum());
  for (int i = 1; i <= 3; ++i) CHECK(rs.dot(rs.simple(i), rs.simple(i)).is_one());
  FieldElement tau = FieldElement::theta(rs.field());
  CHECK(rs.dot(rs.simple(2), rs.simple(3)) == -(tau * Rat(1, 2)));
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    int i = 1 + rng.below(rs.num_positive());
    int j = 1 + rng.below(rs.num_positive());
    CHECK(rs.dot(rs.rho(i), rs.rho(j)) == rs.dot(rs.rho(j), rs.rho(i)));
  }
}

TEST_CASE("dual basis properties") {
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "G2", "H3", "H4",
                        "I2(5)", "I2(7)"}) {
    RootSystem rs(parse_type(t));
    for (int i = 1; i <= rs.rank(); ++i)
      for (int j = 1; j <= rs.rank(); ++j) {
        FieldElement v = rs.dot(rs.beta(i), rs.simple(j));
        CHECK((i == j ? v.is_one() : v.is_zero()));
      }
  }
  RootSystem a1(parse_type("A1"));
  CHECK(a1.beta(1) == a1.simple(1));
}

TEST_CASE("icosahedral dual basis matches the ambient values intrinsically") {
  // Ambient duals (1,0,tau), (0,1,tau+1), (0,0,2tau) pairwise dot products.
  RootSystem rs(fixtures::icosahedral_datum());
  const NumberField& f = rs.field();
  FieldElement tau = FieldElement::theta(f);
  auto fe = [&](long a, long b) { return FieldElement(f, a) + tau * Rat(b); };
  FieldElement expect[3][3] = {{fe(2, 1), fe(1, 2), fe(2, 2)},
                               {fe(1, 2), fe(3, 3), fe(2, 4)},
                               {fe(2, 2), fe(2, 4), fe(4, 4)}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(rs.dot(rs.beta(i + 1), rs.beta(j + 1)) == expect[i][j]);
}

TEST_CASE("steinberg data for the pinned systems") {
  RootSystem h3(fixtures::icosahedral_datum());
  CHECK(h3.coxeter_number() == 10);
  CHECK(h3.num_positive() == 15);
  // rho_3 = alpha_1 + tau alpha_2 + alpha_3.
  FieldElement tau = FieldElement::theta(h3.field());
  Vec rho3 = {FieldElement(h3.field(), 1L), tau, FieldElement(h3.field(), 1L)};
  CHECK(h3.rho(3) == rho3);

  RootSystem a3(fixtures::tetrahedral_datum());
  CHECK(a3.coxeter_number() == 4);
  CHECK(a3.num_positive() == 6);
  // Steinberg order carries the transpositions (1,3),(2,3),(1,4),(2,4),(3,4),(1,2):
  // as simple-root coordinates with alpha_1=(1,3), alpha_2=(1,2), alpha_3=(3,4).
  long expected[6][3] = {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}, {0, 0, 1}, {0, 1, 0}};
  for (int i = 1; i <= 6; ++i) {
    Vec want;
    for (int j = 0; j < 3; ++j) want.emplace_back(a3.field(), expected[i - 1][j]);
    CHECK(a3.rho(i) == want);
  }

  RootSystem b4(parse_type("B4"));
  CHECK(b4.coxeter_number() == 8);
  CHECK(b4.num_positive() == 16);
}

TEST_CASE("icosahedral rho and mu sequences match the published tables") {
  RootSystem rs(fixtures::icosahedral_datum());
  const NumberField& f = rs.field();
  for (int i = 1; i <= 15; ++i) {
    auto rho_want = fixtures::icosahedral::decode(f, fixtures::icosahedral::rho_table[i - 1]);
    auto mu_want = fixtures::icosahedral::decode(f, fixtures::icosahedral::mu_table[i - 1]);
    CHECK(fixtures::icosahedral::ambient(rs, rs.rho(i)) == rho_want);
    CHECK(fixtures::icosahedral::ambient(rs, rs.mu(i)) == mu_want);
  }
}

TEST_CASE("icosahedral golden table") {
  RootSystem rs(fixtures::icosahedral_datum());
  Mat expect = fixtures::icosahedral_mu_rho(rs.field());
  Mat got = rs.dot_table();
  REQUIRE(got.rows() == 15);
  bool equal = (got == expect);
  CHECK(equal);
  // Spot values: (1,5) = tau, (3,9) = 2 tau, (4,1) = -1.
  FieldElement tau = FieldElement::theta(rs.field());
  CHECK(got.at(0, 4) == tau);
  CHECK(got.at(2, 8) == tau * Rat(2));
  CHECK(got.at(3, 0) == FieldElement(rs.field(), -1L));
}

TEST_CASE("dot table via the standard H3 symbol matches the fixture") {
  RootSystem rs(parse_type("H3"));
  CHECK(rs.dot_table() == fixtures::icosahedral_mu_rho(rs.field()));
}

TEST_CASE("table export formats are parseable and deterministic") {
  RootSystem rs(parse_type("A2"));
  std::string csv = tables_csv(rs);
  CHECK(csv.find("i,rho,mu") == 0);
  CHECK(tables_csv(rs) == csv);
  std::string js = tables_json(rs);
  CHECK(js.find("\"mu_dot_rho\"") != std::string::npos);
  RootSystem a1(parse_type("A1"));
  std::string a1csv = tables_csv(a1);
  CHECK(a1csv.find("1,\"1\",\"1\"") != std::string::npos);  // single root, beta_1 = alpha_1
}

TEST_CASE("coxeter numbers match the classical table") {
  struct Row {
    const char* type;
    int h;
  };
  for (Row r : {Row{"A1", 2}, Row{"A2", 3}, Row{"A5", 6}, Row{"A7", 8}, Row{"B2", 4},
                Row{"B3", 6}, Row{"B6", 12}, Row{"C5", 10}, Row{"D4", 6}, Row{"D6", 10},
                Row{"E6", 12}, Row{"E7", 18}, Row{"E8", 30}, Row{"F4", 12}, Row{"G2", 6},
                Row{"H3", 10}, Row{"H4", 30}}) {
    RootSystem rs(parse_type(r.type));
    CHECK(rs.coxeter_number() == r.h);
    CHECK(rs.num_positive() == rs.rank() * r.h / 2);
  }
}

TEST_CASE("every dihedral order up to the table cap builds") {
  for (int m = 3; m <= 30; ++m) {
    RootSystem rs(parse_type("I2(" + std::to_string(m) + ")"));
    CHECK(rs.coxeter_number() == m);
    CHECK(rs.num_positive() == m);
    CHECK(rs.field().degree() >= 1);
  }
  CHECK_THROWS_AS(parse_type("I2(31)"), Error);
}

TEST_CASE("affine and indefinite matrices are rejected") {
  // Affine types have singular or indefinite Gram forms.
  CHECK_THROWS_AS(gram(datum_from_matrix("B2~", {{1, 4, 2}, {4, 1, 4}, {2, 4, 1}})), Error);
  CHECK_THROWS_AS(gram(datum_from_matrix("G2~", {{1, 6, 2}, {6, 1, 3}, {2, 3, 1}})), Error);
  CHECK_THROWS_AS(gram(datum_from_matrix(
                      "A3~", {{1, 3, 2, 3}, {3, 1, 3, 2}, {2, 3, 1, 3}, {3, 2, 3, 1}})),
                  Error);
}
