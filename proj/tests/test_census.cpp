#include <doctest.h>

#include "delpezzo/summary.hpp"
#include "delpezzo/catalog.hpp"
#include "delpezzo/census.hpp"
#include "delpezzo/errors.hpp"

#include <set>

using namespace delpezzo;

TEST_CASE("census entry inventory") {
  const auto& entries = census();
  // the three atlas maps: type A grid, D chains, E chains
  int a_count = 0, s_count = 0, d_count = 0, e_count = 0;
  for (const auto& e : entries) {
    if (e.family == 'A') ++a_count;
    if (e.family == 'S') ++s_count;
    if (e.family == 'D') ++d_count;
    if (e.family == 'E') ++e_count;
    CHECK(e.xi_rank == 10 - e.d - e.r);
  }
  CHECK(a_count == 2 + 7 + 6 + 5 + 4 + 3 + 2 + 1); // r=1 pair plus the (d,r) grid
  CHECK(s_count == 3);
  CHECK(d_count == 4 + 4 + 2 + 1);
  CHECK(e_count == 3 + 2 + 1);
}

TEST_CASE("uniqueness tags") {
  std::set<std::pair<int, int>> moduli, pairs;
  for (const auto& e : census()) {
    if (e.uniqueness == "moduli" && e.family == 'A') {
      moduli.insert({e.d, e.r});
      CHECK(e.moduli_dim == 2 * e.r - e.d - 9);
    }
    if (e.uniqueness == "pair" && e.family == 'A') pairs.insert({e.d, e.r});
  }
  CHECK(moduli == std::set<std::pair<int, int>>{{1, 6}, {1, 7}, {1, 8}, {2, 7}});
  CHECK(pairs == std::set<std::pair<int, int>>{{2, 3}, {4, 3}, {6, 3}});
}

TEST_CASE("degree-5 census has exactly ten isomorphism classes") {
  CHECK(isomorphism_class_count(5) == 10);
  CHECK(isomorphism_class_count(6) == 4);
  CHECK(isomorphism_class_count(7) == 1);
  CHECK(isomorphism_class_count(8) == 1);
  CHECK_THROWS_AS(isomorphism_class_count(4), DomainError); // unbounded n
}

TEST_CASE("bound verification passes and catches injected violations") {
  BoundsReport rep = verify_bounds(census());
  CHECK(rep.pass);
  auto entries = census();
  CensusEntry bogus;
  bogus.family = 'A';
  bogus.d = 5;
  bogus.r = 5;
  bogus.n_max = 3;
  entries.push_back(bogus);
  CHECK_FALSE(verify_bounds(entries).pass);
}

TEST_CASE("type A boundary entry") {
  // (d, r) = (1, 8) reaches the boundary d + r + n = 12 at n = 3
  for (const auto& e : census())
    if (e.family == 'A' && e.d == 1 && e.r == 8) {
      CHECK(e.n_max == 3);
      CHECK(e.uniqueness == "moduli");
      CHECK(e.moduli_dim == 6);
    }
}

TEST_CASE("presets build") {
  CHECK(build_preset("X_5_3_4").d() == 5);
  CHECK(build_preset("X_5_3_4").r() == 3);
  CHECK(build_preset("X_6_3_3_star").r() == 3);
  CHECK(build_preset("X_7_2_3").d() == 7);
  CHECK(build_preset("XD_4_2_5").d() == 4);
  CHECK(build_preset("XE_1_3_4").r() == 3);
  CHECK(build_preset("X_4_1_3").d() == 4);  // resolves to the D tower
  CHECK(build_preset("X_1_1_12").d() == 1); // unbounded dimension
  CHECK_THROWS_AS(build_preset("X_9_9_9"), DomainError);
  CHECK_THROWS_AS(build_preset("X_5_3_9"), DomainError); // n above the bound
  CHECK_THROWS_AS(build_preset("bogus"), DomainError);
  for (const auto& name : preset_names()) CHECK(build_preset(name).r() >= 1);
}

TEST_CASE("decompose a two-step blowup back to its core") {
  VarietyModel core = pbundle_over_p2(6, 4);
  VarietyModel blown = blowup(core, 2);
  DecompositionReport rep = decompose(blown);
  CHECK(rep.k == 2);
  CHECK(rep.core_d == 6);
  CHECK(rep.core_r == 2);
  // the recovered core agrees with the original up to basis change: compare
  // the invariants and the special class counts
  SpecialClasses a = special_classes(rep.core);
  SpecialClasses b = special_classes(core.marked());
  CHECK(a.exceptional.count() == b.exceptional.count());
  CHECK(a.p1.count() == b.p1.count());
  CHECK(a.p2.size() == b.p2.size());
  CHECK(rep.core_entry == "X_6_2");
}

TEST_CASE("decompose the imprimitive starred-degree-5 model") {
  VarietyModel m = pbundle_over_p1p1(5, 3);
  DecompositionReport rep = decompose(m);
  CHECK(rep.k == 1);
  CHECK(rep.core_d == 6);
  CHECK(rep.core_r == 2);
  CHECK(rep.core_entry == "X_6_2");
}

TEST_CASE("decompose is the identity on primitive models") {
  VarietyModel m = quadric_bundle_over_p1(4, 3);
  DecompositionReport rep = decompose(m);
  CHECK(rep.k == 0);
  CHECK(rep.core_d == 4);
  CHECK(rep.maximum_set_count == 1);
}

TEST_CASE("blowups of quadric-surface bundles collapse onto deeper cores") {
  // one blowup already contains three pairwise orthogonal exceptional
  // classes, so the maximum decomposition reaches the rank-one core; the
  // depth-1 decomposition still exists and recovers the bundle
  VarietyModel blown = blowup(pbundle_over_p1p1(6, 3), 1);
  DecompositionReport deep = decompose(blown);
  CHECK(deep.k == 3);
  CHECK(deep.core_d == 8);
  CHECK(deep.core_r == 1);
  CHECK(deep.core_entry == "X_8_1");

  auto shallow = decompose_at_depth(blown.marked(), 1);
  REQUIRE(shallow.has_value());
  CHECK(shallow->core_d == 6);
  CHECK(shallow->core_r == 3);
  CHECK(shallow->core_t2 == 3); // the starred degree-6 profile (0, 3, 0)
  CHECK(shallow->core_t1 == 0);

  // no inclusion-maximal orthogonal set of size two exists here
  CHECK_FALSE(decompose_at_depth(blown.marked(), 2).has_value());
}

TEST_CASE("decompose counts the ambiguity of the core") {
  // blowup of the rank-one cubic: two exceptional classes, not orthogonal,
  // so two distinct maximum sets of size one
  VarietyModel m = blowup(rank_one(3, 3), 1);
  DecompositionReport rep = decompose(m);
  CHECK(rep.k == 1);
  CHECK(rep.maximum_set_count == 2);
  CHECK(rep.core_d == 3);
}

TEST_CASE("census entries and summary rows are in bijection") {
  const auto& entries = census();
  const auto& rows = summary_table();
  CHECK(entries.size() == rows.size());
  std::set<std::tuple<char, int, int>> ekeys, rkeys;
  for (const auto& e : entries) ekeys.insert({e.family, e.d, e.r});
  for (const auto& r : rows) rkeys.insert({r.family, r.d, r.r});
  CHECK(ekeys == rkeys);
}

TEST_CASE("summary table shape") {
  const auto& rows = summary_table();
  CHECK(rows.size() == 50);
  long long total_t1 = 0;
  for (const auto& row : rows) total_t1 += row.t1;
  CHECK(total_t1 > 0);
  // spot values
  bool found = false;
  for (const auto& row : rows)
    if (row.block == "A1" && row.d == 1) {
      CHECK(row.delta == "E7");
      CHECK(row.t1 == 126);
      CHECK(row.t2 == 756);
      CHECK(row.t3 == 4032);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("closed form equals direct enumeration on every square-one row") {
  for (const auto& row : summary_table()) {
    if (row.d != 1) continue;
    VarietyModel m = summary_row_model(row);
    for (int s = 1; s <= 3; ++s) {
      ThetaResult direct = theta(m.marked(), s);
      ThetaResult closed = theta_closed_form_d1(m.marked(), s);
      CHECK(direct.elements == closed.elements);
    }
  }
}

TEST_CASE("square-one rows pair roots with exceptional classes") {
  // for <a,a> = 1 the map alpha -> alpha + a is a bijection Theta_0 -> Theta_1
  for (const auto& row : summary_table()) {
    if (row.d != 1) continue;
    VarietyModel m = summary_row_model(row);
    SpecialClasses sc = special_classes(m.marked());
    CHECK(sc.roots.count() == sc.exceptional.count());
    std::set<Vec> exc(sc.exceptional.elements.begin(), sc.exceptional.elements.end());
    for (const auto& alpha : sc.roots.elements) {
      Vec shifted(alpha.size());
      for (size_t i = 0; i < alpha.size(); ++i) shifted[i] = alpha[i] + m.marked().a()[i];
      CHECK(exc.count(shifted) == 1);
    }
  }
}

TEST_CASE("closed-form engine reproduces a known exceptional set") {
  // the (d, r) = (7, 2) row: the single exceptional class a - 2G
  for (const auto& row : summary_table())
    if (row.block == "A1" && row.d == 7) {
      ClosedFormSets cf = closed_form_sets(row);
      REQUIRE(cf.exceptional.size() == 1);
      CHECK(cf.exceptional[0] == Vec{-2, 1});
      CHECK(cf.roots.empty());
    }
}

TEST_CASE("variety catalog lookups") {
  auto segre = catalog_lookup("X_3_6_3");
  REQUIRE(segre.has_value());
  CHECK(segre->notes.find("Segre cubic") != std::string::npos);
  CHECK(segre->notes.find("10 nodes") != std::string::npos);

  auto coble = catalog_lookup("X_2_6_4");
  REQUIRE(coble.has_value());
  CHECK(coble->notes.find("Coble fourfold") != std::string::npos);

  CHECK_FALSE(catalog_lookup("X_9_9_9").has_value());
}
