#pragma once

// The summary table of root systems and special-class counts for every
// (d, r, family) class, the closed-form generators for roots and exceptional
// classes, and the row-by-row verification that enumeration, closed formulas
// and the stored table agree.

#include "delpezzo/census.hpp"
#include "delpezzo/models.hpp"

#include <string>
#include <vector>

namespace delpezzo {

struct SummaryRow {
  std::string block; // "A1".."A7", "D4".."D7", "E6".."E8" (the Xi type)
  char family = 'A'; // 'A', 'S', 'D', 'E'
  int d = 0;
  int r = 0;
  std::string delta;            // root system of a^perp, e.g. "E7", "A1+A3", "0"
  long long t1 = 0, t2 = 0, t3 = 0; // |Theta_1|, |Theta_2|, |P2-classes|
  bool primitive = false;

  bool starred() const { return family == 'S'; }
};

// All 50 rows, grouped by Xi block.
const std::vector<SummaryRow>& summary_table();

// The lattice model the row refers to (n = 3 representative).
VarietyModel summary_row_model(const SummaryRow& row);

// Closed-form root and exceptional-class generators, in the coordinates of
// summary_row_model(row). A separate code path from enumeration: families are
// indexed by (m, k) and empty index ranges yield empty sets.
struct ClosedFormSets {
  std::vector<Vec> roots;
  std::vector<Vec> exceptional;
};
ClosedFormSets closed_form_sets(const SummaryRow& row);

struct RowCheck {
  SummaryRow row;
  std::string computed_delta;
  long long c1 = 0, c2 = 0, c3 = 0;
  bool computed_primitive = false;
  bool counts_pass = false;
  bool delta_pass = false;
  bool primitive_pass = false;
  bool formulas_pass = false;

  bool pass() const { return counts_pass && delta_pass && primitive_pass && formulas_pass; }
};

// Builds every row's lattice, enumerates, compares against the stored table,
// and cross-checks the closed-form generators against the enumerated sets.
std::vector<RowCheck> verify_summary_table();

} // namespace delpezzo
