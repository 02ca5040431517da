#include <doctest.h>

#include "delpezzo/errors.hpp"
#include "delpezzo/models.hpp"

#include <random>

using namespace delpezzo;

TEST_CASE("rank-one constructors") {
  VarietyModel g25 = rank_one(5, 6);
  CHECK(g25.marked().lattice().gram() == std::vector<std::vector<Int>>{{5}});
  CHECK(g25.marked().a() == Vec{1});

  VarietyModel p3 = rank_one(8, 3);
  CHECK(p3.marked().lattice().gram() == std::vector<std::vector<Int>>{{2}});
  CHECK(p3.marked().a() == Vec{2});
  CHECK(p3.d() == 8);

  CHECK_THROWS_AS(rank_one(6, 3), DomainError);
  CHECK_THROWS_AS(rank_one(7, 3), DomainError);
  CHECK_THROWS_AS(rank_one(5, 7), DomainError);
  CHECK_THROWS_AS(rank_one(8, 4), DomainError);
}

TEST_CASE("plane bundle constructor and bounds") {
  VarietyModel m = pbundle_over_p2(6, 4);
  CHECK(m.marked().lattice().gram() == std::vector<std::vector<Int>>{{1, 3}, {3, 6}});
  VarietyModel m7 = pbundle_over_p2(7, 3);
  ThetaResult t = theta(m7.marked(), 1);
  REQUIRE(t.count() == 1);
  CHECK(t.elements[0] == Vec{-2, 1});
  CHECK_THROWS_AS(pbundle_over_p2(5, 7), DomainError); // n <= 10 - d
  CHECK_THROWS_AS(pbundle_over_p2(8, 3), DomainError);
}

TEST_CASE("quadric-surface bundle constructor") {
  VarietyModel m6 = pbundle_over_p1p1(6, 3);
  CHECK(theta(m6.marked(), 1).count() == 0); // primitive
  VarietyModel m3 = pbundle_over_p1p1(3, 4);
  ThetaResult t3 = theta(m3.marked(), 1);
  REQUIRE(t3.count() == 2);
  CHECK(t3.elements[0] == Vec{-1, 0, 1}); // a - F1
  CHECK(t3.elements[1] == Vec{0, -1, 1}); // a - F2
  VarietyModel m1 = pbundle_over_p1p1(1, 3);
  ThetaResult t1 = theta(m1.marked(), 1);
  REQUIRE(t1.count() == 2);
  CHECK(t1.elements[0] == Vec{-1, 1, 1}); // a - (F1 - F2)
  CHECK(t1.elements[1] == Vec{1, -1, 1}); // a + (F1 - F2)
  CHECK_THROWS_AS(pbundle_over_p1p1(7, 3), DomainError);
  CHECK_THROWS_AS(pbundle_over_p1p1(6, 4), DomainError); // n <= 9 - d
}

TEST_CASE("quadric bundle constructor") {
  VarietyModel m3 = quadric_bundle_over_p1(3, 3);
  ThetaResult t = theta(m3.marked(), 1);
  REQUIRE(t.count() == 1);
  CHECK(t.elements[0] == Vec{-1, 1}); // a - F
  VarietyModel m4 = quadric_bundle_over_p1(4, 5);
  ThetaResult t2 = theta(m4.marked(), 2);
  REQUIRE(t2.count() == 2);
  CHECK_THROWS_AS(quadric_bundle_over_p1(5, 6), DomainError);
}

TEST_CASE("blowup extends the lattice and shifts the marking") {
  VarietyModel bl = blowup(rank_one(8, 3), 1);
  CHECK(bl.marked().lattice().gram() ==
        std::vector<std::vector<Int>>{{2, 0}, {0, -1}});
  CHECK(bl.marked().a() == Vec{2, -1});
  CHECK(bl.d() == 7);
  ThetaResult t = theta(bl.marked(), 1);
  REQUIRE(t.count() == 1);
  CHECK(t.elements[0] == Vec{0, 1}); // the exceptional class only, d >= 4

  CHECK(theta(blowup(rank_one(4, 3), 1).marked(), 1).count() == 1);
  CHECK(theta(blowup(rank_one(3, 3), 1).marked(), 1).count() == 2);

  // iterated blowup equals a k-fold blowup
  VarietyModel two_steps = blowup(blowup(rank_one(5, 4), 1), 1);
  VarietyModel one_step = blowup(rank_one(5, 4), 2);
  CHECK(two_steps.marked().lattice().gram() == one_step.marked().lattice().gram());
  CHECK(two_steps.marked().a() == one_step.marked().a());

  CHECK_THROWS_AS(blowup(rank_one(2, 3), 2), DomainError); // degree would reach 0
}

TEST_CASE("linear sections keep the lattice") {
  VarietyModel m = rank_one(5, 6);
  VarietyModel s = linear_section(m);
  CHECK(s.n() == 5);
  CHECK(s.marked().lattice().gram() == m.marked().lattice().gram());
  CHECK(invariants(s).xi_type == invariants(m).xi_type);
  CHECK_THROWS_AS(linear_section(rank_one(8, 3)), DomainError);
}

TEST_CASE("surface embedding basics") {
  // cubic: a maps to -K of the plane blown up in 6 points
  SectionEmbedding e = surface_embedding(rank_one(3, 4));
  CHECK(e.apply(Vec{1}) == Vec{3, -1, -1, -1, -1, -1, -1});

  // plane bundle of degree 6: image is spanned by h and -K in I_{1,3}
  SectionEmbedding e6 = surface_embedding(pbundle_over_p2(6, 4));
  CHECK(e6.apply(Vec{1, 0}) == Vec{1, 0, 0, 0});
  CHECK(e6.apply(Vec{0, 1}) == Vec{3, -1, -1, -1});
}

TEST_CASE("pairing preservation on random classes for every constructor") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::vector<VarietyModel> models;
  models.push_back(rank_one(3, 3));
  models.push_back(rank_one(8, 3));
  models.push_back(pbundle_over_p2(5, 4));
  models.push_back(pbundle_over_p1p1(4, 3));
  models.push_back(quadric_bundle_over_p1(2, 3));
  models.push_back(blowup(pbundle_over_p2(6, 3), 2));
  models.push_back(blowup(quadric_bundle_over_p1(4, 3), 1));
  for (const auto& m : models) {
    SectionEmbedding e = surface_embedding(m);
    for (int trial = 0; trial < 20; ++trial) {
      Vec x(m.r()), y(m.r());
      for (int i = 0; i < m.r(); ++i) {
        x[i] = coeff(rng);
        y[i] = coeff(rng);
      }
      CHECK(m.marked().pair(x, y) == e.target.lattice.pair(e.apply(x), e.apply(y)));
    }
  }
}

TEST_CASE("surface sections have matching degree") {
  std::vector<VarietyModel> models;
  models.push_back(rank_one(2, 3));
  models.push_back(rank_one(8, 3));
  models.push_back(pbundle_over_p2(3, 4));
  models.push_back(pbundle_over_p1p1(2, 3));
  models.push_back(quadric_bundle_over_p1(1, 3));
  models.push_back(blowup(pbundle_over_p2(7, 3), 4));
  for (const auto& m : models) {
    SectionEmbedding e = surface_embedding(m);
    CHECK(e.target.lattice.pair(e.target.canonical, e.target.canonical) == m.d());
  }
}

TEST_CASE("xi types of the primitive families") {
  CHECK(xi(rank_one(1, 3)).type_label() == "E8");
  CHECK(xi(rank_one(2, 3)).type_label() == "E7");
  CHECK(xi(rank_one(3, 3)).type_label() == "E6");
  CHECK(xi(rank_one(4, 3)).type_label() == "D5");
  CHECK(xi(rank_one(5, 3)).type_label() == "A4");
  CHECK(xi(rank_one(8, 3)).type_label() == "A1");
  CHECK(xi(pbundle_over_p2(6, 4)).type_label() == "A2");
  CHECK(xi(quadric_bundle_over_p1(4, 3)).type_label() == "D4");
  CHECK(xi(quadric_bundle_over_p1(1, 3)).type_label() == "D7");
  CHECK(xi(pbundle_over_p1p1(6, 3)).type_label() == "A1");
  CHECK(xi(pbundle_over_p1p1(2, 3)).type_label() == "A5");
}

TEST_CASE("xi is invariant under blowup") {
  VarietyModel m = pbundle_over_p2(6, 4);
  std::string label = xi(m).type_label();
  VarietyModel cur = m;
  for (int step = 0; step < 5; ++step) {
    cur = blowup(cur, 1);
    CHECK(xi(cur).type_label() == label);
    CHECK(cur.d() + cur.r() == m.d() + m.r());
  }
}

TEST_CASE("xi rank matches 10 - d - r everywhere") {
  std::vector<VarietyModel> models;
  models.push_back(rank_one(8, 3));
  models.push_back(rank_one(5, 5));
  models.push_back(blowup(rank_one(8, 3), 1));
  models.push_back(pbundle_over_p1p1(4, 4));
  models.push_back(blowup(quadric_bundle_over_p1(3, 3), 1));
  for (const auto& m : models) {
    XiReport rep = xi(m);
    CHECK(rep.xi.rank() == 10 - static_cast<int>(m.d()) - m.r());
  }
}

TEST_CASE("model invariants") {
  ModelInvariants inv = invariants(pbundle_over_p1p1(4, 3));
  CHECK(inv.primitive);
  CHECK(invariants(pbundle_over_p2(4, 3)).primitive == false);
  CHECK(invariants(blowup(pbundle_over_p2(6, 4), 1)).primitive == false);
}

TEST_CASE("construction round trip") {
  Construction c;
  c.op = "blowup";
  c.k = 1;
  c.of = std::make_shared<Construction>(Construction{"pbundle_p2", 6, 4, 0, nullptr});
  VarietyModel m = from_construction(c);
  CHECK(m.d() == 5);
  CHECK(m.r() == 3);
}
