#pragma once

// The census of non-conical del Pezzo classes (d, r, family), global bound
// verification, preset construction, and birational decomposition into a
// primitive core.

#include "delpezzo/models.hpp"

#include <optional>
#include <string>
#include <vector>

namespace delpezzo {

// family: 'A' = plane-bundle tower (includes the two rank-one members of that
// chain), 'S' = the quadric-surface-bundle primitives paired with the (d,3)
// entries, 'D' = quadric-bundle tower, 'E' = low-degree rank-one tower.
struct CensusEntry {
  char family = 'A';
  int d = 0;
  int r = 0;
  std::string xi_type;
  int xi_rank = 0;
  bool n_unbounded = false;
  int n_max = 0; // valid when !n_unbounded; n ranges over 3..n_max
  std::string uniqueness; // "unique" | "pair" | "moduli"
  int moduli_dim = 0;     // valid when uniqueness == "moduli"
  bool primitive = false;
  bool maximal = false; // a maximal member exists (always at n = n_max)

  std::string preset(int n) const;
  std::string preset_base() const; // name with the n slot left out
};

const std::vector<CensusEntry>& census();

// Number of (d, r, n) isomorphism classes of the given degree; only defined
// when every matching entry is n-bounded (d >= 5).
long long isomorphism_class_count(int d);

struct BoundsReport {
  bool pass = true;
  std::vector<std::string> violations;
};
BoundsReport verify_bounds(const std::vector<CensusEntry>& entries);

VarietyModel build_entry(const CensusEntry& entry, int n);
// Names: X_d_r_n (family A), X_d_3_n_star (family S), XD_d_r_n, XE_d_r_n.
// X_d_1_n is accepted for every rank-one degree and resolves to its family.
VarietyModel build_preset(const std::string& name);
std::vector<std::string> preset_names(); // representative buildable presets

struct DecompositionReport {
  int k = 0;
  std::vector<Vec> exceptional_set; // pairwise orthogonal, maximum cardinality
  long long maximum_set_count = 0;  // how many maximum sets exist
  MarkedLattice core;
  Int core_d = 0;
  int core_r = 0;
  std::string core_delta;
  long long core_t1 = 0, core_t2 = 0, core_t3 = 0; // core special class counts
  std::string core_entry;                          // matched census preset base
};

// Maximum pairwise-orthogonal set of exceptional classes, its orthogonal
// complement marked by a + sum(E_i), and the census entry the core matches.
DecompositionReport decompose(const MarkedLattice& ml);
DecompositionReport decompose(const VarietyModel& m);

// A decomposition along an inclusion-maximal orthogonal set of size exactly k,
// when one exists. Cores of different depths can coexist (different maximal
// sets can have different sizes); this exhibits the depth-k one.
std::optional<DecompositionReport> decompose_at_depth(const MarkedLattice& ml, int k);

} // namespace delpezzo
