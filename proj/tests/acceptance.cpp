// Acceptance suite: verifies the eight integration criteria and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include "delpezzo/summary.hpp"
#include "delpezzo/bundles.hpp"
#include "delpezzo/catalog.hpp"
#include "delpezzo/census.hpp"
#include "delpezzo/cones.hpp"
#include "delpezzo/errors.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace delpezzo;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
  std::printf("%s  criterion %d  %-34s %7.2fs  %s\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), seconds, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

void run(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(number, name, pass, detail, secs);
}

// ---------- criterion 1: the summary table, bit exact ----------

bool criterion_summary_table(std::string& detail) {
  auto checks = verify_summary_table();
  int failed = 0;
  for (const auto& c : checks)
    if (!c.pass()) {
      ++failed;
      if (failed <= 3) {
        std::ostringstream os;
        os << "[row " << c.row.block << " d=" << c.row.d << (c.row.starred() ? "*" : "")
           << " r=" << c.row.r << " got " << c.computed_delta << " " << c.c1 << "/" << c.c2
           << "/" << c.c3 << " expected " << c.row.delta << " " << c.row.t1 << "/"
           << c.row.t2 << "/" << c.row.t3 << (c.formulas_pass ? "" : " formulas-mismatch")
           << "]";
        detail += os.str();
      }
    }
  std::ostringstream os;
  os << checks.size() << " rows, " << failed << " failures";
  detail = os.str() + detail;
  return failed == 0 && checks.size() == 50;
}

// ---------- criterion 2: contraction-lattice Diophantine sets ----------

bool criterion_contraction_sets(std::string& detail) {
  int checks = 0, failed = 0;
  auto expect = [&](const MarkedLattice& m, int s, const std::vector<Vec>& want) {
    ++checks;
    ThetaResult t = theta(m, s);
    if (t.elements != want) ++failed;
  };
  // quadric-surface bundle of degree 5: a - F1 - F2 only
  expect(MarkedLattice(IntegerLattice({{0, 1, 2}, {1, 0, 2}, {2, 2, 5}}, {}), {0, 0, 1}), 1,
         {{-1, -1, 1}});
  // plane bundle of degree 7: a - 2G only
  expect(MarkedLattice(IntegerLattice({{1, 3}, {3, 7}}, {}), {0, 1}), 1, {{-2, 1}});
  // quadric bundle of degree 3: a - F only
  expect(MarkedLattice(IntegerLattice({{0, 2}, {2, 3}}, {}), {0, 1}), 1, {{-1, 1}});
  // blowups of rank-one models with d >= 4: the exceptional class only
  for (int d : {4, 5, 8}) {
    VarietyModel bl = blowup(rank_one(d, 3), 1);
    Vec e(bl.r(), 0);
    e[bl.r() - 1] = 1;
    expect(bl.marked(), 1, {e});
  }
  // degree-3 blowup has a second class
  {
    VarietyModel bl = blowup(rank_one(3, 3), 1);
    ThetaResult t = theta(bl.marked(), 1);
    ++checks;
    if (t.count() != 2) ++failed;
  }
  // quadric-surface bundles: primitive for even degrees, the printed sets for odd
  expect(MarkedLattice(IntegerLattice({{0, 1, 2}, {1, 0, 2}, {2, 2, 6}}, {}), {0, 0, 1}), 1, {});
  expect(MarkedLattice(IntegerLattice({{0, 1, 2}, {1, 0, 2}, {2, 2, 3}}, {}), {0, 0, 1}), 1,
         {{-1, 0, 1}, {0, -1, 1}});
  expect(MarkedLattice(IntegerLattice({{0, 1, 2}, {1, 0, 2}, {2, 2, 1}}, {}), {0, 0, 1}), 1,
         {{-1, 1, 1}, {1, -1, 1}});
  std::ostringstream os;
  os << checks << " solution sets, " << failed << " mismatches";
  detail = os.str();
  return failed == 0;
}

// ---------- criterion 3: Xi classification with blowup invariance ----------

bool criterion_xi(std::string& detail) {
  int checks = 0, failed = 0;
  for (const auto& e : census()) {
    VarietyModel m = build_entry(e, 3);
    XiReport rep = xi(m);
    ++checks;
    if (rep.xi.rank() != 10 - e.d - e.r || rep.type_label() != e.xi_type) ++failed;
  }
  // invariance under 1..6 successive blowups
  std::vector<VarietyModel> bases;
  bases.push_back(pbundle_over_p2(7, 3));
  bases.push_back(rank_one(8, 3));
  bases.push_back(quadric_bundle_over_p1(4, 3));
  bases.push_back(rank_one(5, 4));
  bases.push_back(pbundle_over_p1p1(6, 3));
  for (const auto& base : bases) {
    std::string label = xi(base).type_label();
    VarietyModel cur = base;
    for (int step = 1; step <= 6 && cur.d() > 1; ++step) {
      cur = blowup(cur, 1);
      ++checks;
      if (xi(cur).type_label() != label) ++failed;
      if (xi(cur).xi.rank() != 10 - static_cast<int>(cur.d()) - cur.r()) ++failed;
    }
  }
  std::ostringstream os;
  os << checks << " classifications, " << failed << " failures";
  detail = os.str();
  return failed == 0;
}

// ---------- criterion 4: global bounds and the degree-5 count ----------

bool criterion_bounds(std::string& detail) {
  BoundsReport rep = verify_bounds(census());
  long long deg5 = isomorphism_class_count(5);
  std::ostringstream os;
  os << "bounds " << (rep.pass ? "ok" : "violated") << ", degree-5 classes = " << deg5;
  detail = os.str();
  return rep.pass && deg5 == 10;
}

// ---------- criterion 5: the 13 rank-2 rows ----------

bool criterion_r2(std::string& detail) {
  struct Case {
    std::function<VarietyModel()> build;
    Int d;
    std::string xi;
    Int x1, x2, k;
    bool flagged;
  };
  std::vector<Case> cases = {
      {[] { return pbundle_over_p2(1, 3); }, 1, "A7", 1, 1, 6, false},
      {[] { return quadric_bundle_over_p1(1, 3); }, 1, "D7", 1, 1, 4, false},
      {[] { return blowup(rank_one(2, 3), 1); }, 1, "E7", 1, 1, 2, false},
      {[] { return pbundle_over_p2(2, 3); }, 2, "A6", 1, 1, 3, false},
      {[] { return quadric_bundle_over_p1(2, 3); }, 2, "D6", 1, 1, 2, false},
      {[] { return blowup(rank_one(3, 3), 1); }, 2, "E6", 1, 1, 1, false},
      {[] { return pbundle_over_p2(3, 3); }, 3, "A5", 1, 1, 2, false},
      {[] { return blowup(rank_one(4, 3), 1); }, 3, "D5", 1, 1, 1, false},
      {[] { return pbundle_over_p2(4, 3); }, 4, "A4", 1, 1, 1, false},
      {[] { return quadric_bundle_over_p1(4, 3); }, 4, "D4", 1, 1, 1, false},
      {[] { return quadric_bundle_over_p1(5, 3); }, 5, "A3", 1, 1, 1, true},
      {[] { return pbundle_over_p2(6, 3); }, 6, "A2", 1, 1, 1, false},
      {[] { return blowup(rank_one(8, 3), 1); }, 7, "A1", 2, 1, 1, false},
  };
  int failed = 0;
  for (const auto& c : cases) {
    try {
      R2Result res = r2_table(c.build());
      bool ok = res.row.d == c.d && res.row.xi_type == c.xi && res.row.x1 == c.x1 &&
                res.row.x2 == c.x2 && res.row.k == c.k && res.table_index >= 0 &&
                (c.flagged == !res.row.note.empty());
      if (!ok) ++failed;
    } catch (const std::exception&) {
      ++failed;
    }
  }
  std::ostringstream os;
  os << cases.size() << " rows, " << failed << " failures"
     << (failed == 0 ? "; degree-5 relation computed as k=1 and flagged" : "");
  detail = os.str();
  return failed == 0;
}

// ---------- criterion 6: bundle calculus ----------

bool criterion_bundles(std::string& detail) {
  int checks = 0, failed = 0;
  for (int kz2 = 3; kz2 <= 9; ++kz2)
    for (int c2 = 2; c2 <= kz2 - 2; ++c2) {
      ++checks;
      int dc = dual_c2({kz2, c2, c2});
      if (dual_c2({kz2, dc, dc}) != c2) ++failed;
    }
  for (int kz2 = 3; kz2 <= 9; ++kz2)
    for (int c2 = 2; c2 <= kz2 - 1; ++c2)
      for (int rank = 2; rank <= c2; ++rank) {
        ++checks;
        BundleSpec m1 = maximalize({kz2, rank, c2});
        BundleSpec m2 = maximalize(m1);
        if (m1.rank != m2.rank || m1.c2 != m2.c2 || validate_bundle(m1).h1 != 0 ||
            validate_bundle(m1).d != validate_bundle({kz2, rank, c2}).d)
          ++failed;
      }
  for (int d = 1; d <= 5; ++d)
    for (int n = 3; n <= 20; ++n) {
      if (d == 5 && n > 5) continue;
      ++checks;
      SplittingType t = quadric_splitting(d, n);
      int sum = 0;
      for (int v : t.a) sum += v;
      if (sum != d - 2 || t.k != d - 4) ++failed;
    }
  ++checks;
  if (catalog_maximal(BaseSurface::P2, 3).description != "O(-1)^3") ++failed;
  ++checks;
  if (catalog_maximal(BaseSurface::P2, 4).description != "O(-1)^2 + Omega(1)") ++failed;
  ++checks;
  if (catalog_maximal(BaseSurface::P1xP1, 2).description != "O(-1,-1)^2") ++failed;
  ++checks;
  if (catalog_maximal(BaseSurface::Z4, 2).uniqueness != BundleUniqueness::OneParameter)
    ++failed;
  std::ostringstream os;
  os << checks << " identities, " << failed << " failures";
  detail = os.str();
  return failed == 0;
}

// ---------- criterion 7: oracle equivalence ----------

// deterministic random marked lattices of signature (1, r-1)
std::vector<MarkedLattice> random_marked_lattices(int want) {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> entry(-6, 6);
  std::vector<MarkedLattice> out;
  const Int box_cap[7] = {0, 0, 48, 40, 28, 16, 11};
  int rank_cursor = 2;
  while (static_cast<int>(out.size()) < want) {
    int r = rank_cursor;
    rank_cursor = rank_cursor == 6 ? 2 : rank_cursor + 1;
    std::vector<std::vector<Int>> gram(r, std::vector<Int>(r));
    for (int i = 0; i < r; ++i)
      for (int j = i; j < r; ++j) gram[i][j] = gram[j][i] = entry(rng);
    IntegerLattice l(gram, {});
    Signature sig = signature(l);
    if (sig.positive != 1 || sig.zero != 0) continue;
    // smallest characteristic vector of positive square in a small box
    Vec best;
    std::function<bool(Vec&, int)> scan = [&](Vec& a, int pos) {
      if (pos == r) {
        if (is_characteristic(l, a) && l.pair(a, a) > 0) {
          best = a;
          return true;
        }
        return false;
      }
      for (Int v = 0; v <= 3; ++v)
        for (Int sgn : {1, -1}) {
          if (v == 0 && sgn < 0) continue;
          a[pos] = sgn * v;
          if (scan(a, pos + 1)) return true;
        }
      return false;
    };
    Vec a(r, 0);
    if (!scan(a, 0)) continue;
    MarkedLattice ml(l, best);
    // keep the oracle run tractable: certified boxes must stay small
    Int box = 1;
    bool ok = true;
    for (int s = 0; s <= 3 && ok; ++s) {
      ThetaResult t = theta(ml, s);
      box = std::max(box, t.certified_box);
      if (box > box_cap[r]) ok = false;
    }
    if (!ok) continue;
    out.push_back(std::move(ml));
  }
  return out;
}

bool criterion_oracle(std::string& detail) {
  int mismatches = 0, runs = 0;
  auto compare = [&](const MarkedLattice& ml) {
    Int box = 1;
    for (int s = 0; s <= 3; ++s) box = std::max(box, theta(ml, s).certified_box);
    for (int s = 0; s <= 3; ++s) {
      ++runs;
      if (theta(ml, s).elements != theta_bruteforce(ml, s, box).elements) ++mismatches;
    }
  };
  auto lattices = random_marked_lattices(200);
  for (const auto& ml : lattices) compare(ml);
  for (const auto& row : summary_table()) compare(summary_row_model(row).marked());
  std::ostringstream os;
  os << lattices.size() << " random + " << summary_table().size() << " table lattices, "
     << runs << " comparisons, " << mismatches << " mismatches";
  detail = os.str();
  return mismatches == 0;
}

// ---------- criterion 8: decomposition round trip ----------

bool criterion_decompose(std::string& detail) {
  int checks = 0, failed = 0, collapsed = 0;
  for (const auto& e : census()) {
    if (!e.primitive) continue;
    VarietyModel m = build_entry(e, 3);
    SpecialClasses base = special_classes(m.marked());
    std::string base_delta = "0";
    if (m.r() > 1) {
      Sublattice aperp = orthogonal_complement(m.marked().lattice(), {m.marked().a()});
      base_delta = format_components(dynkin_type(aperp.restricted).components);
    }
    auto matches_base = [&](const DecompositionReport& rep) {
      SpecialClasses core = special_classes(rep.core);
      return rep.core_d == m.d() && rep.core_r == m.r() && rep.core_delta == base_delta &&
             core.exceptional.count() == base.exceptional.count() &&
             core.p1.count() == base.p1.count() && core.p2.size() == base.p2.size();
    };
    int kmax = std::min<Int>(m.d() - 1, 3);
    for (int k = 1; k <= kmax; ++k) {
      ++checks;
      VarietyModel blown = blowup(m, k);
      DecompositionReport rep = decompose(blown);
      if (rep.k == k && matches_base(rep)) continue;
      // The maximum orthogonal set can exceed the blowup count: blowing up a
      // primitive bundle over the quadric surface collapses onto a deeper
      // rank-one core (different maximal sets have different sizes). Accept
      // exactly that situation when (a) the maximum core still matches a
      // primitive census entry and (b) the depth-k decomposition exists and
      // recovers the original invariants.
      bool deeper_ok = rep.k > k && !rep.core_entry.empty();
      auto witness = decompose_at_depth(blown.marked(), k);
      bool witness_ok = witness.has_value() && matches_base(*witness);
      if (deeper_ok && witness_ok) {
        ++collapsed;
        continue;
      }
      ++failed;
    }
  }
  std::ostringstream os;
  os << checks << " round trips, " << failed << " failures, " << collapsed
     << " deeper-core collapses verified via depth-k witnesses";
  detail = os.str();
  return failed == 0;
}

} // namespace

int main() {
  run(1, "summary-table reproduction", criterion_summary_table);
  run(2, "contraction solution sets", criterion_contraction_sets);
  run(3, "Xi rank and type classification", criterion_xi);
  run(4, "global bounds and degree-5 count", criterion_bounds);
  run(5, "rank-2 contraction table", criterion_r2);
  run(6, "bundle calculus identities", criterion_bundles);
  run(7, "oracle equivalence", criterion_oracle);
  run(8, "decomposition round trip", criterion_decompose);
  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
