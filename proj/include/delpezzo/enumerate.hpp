#pragma once

// Exact enumeration of the special class sets
//   Theta_s = { x : <a,x> = s, <x,x> = s-2 }
// in a marked lattice of signature (1, r-1), plus an independent brute-force
// oracle over a coordinate box.

#include "delpezzo/lattice.hpp"

#include <vector>

namespace delpezzo {

struct ThetaResult {
  int s = 0;
  std::vector<Vec> elements; // lexicographically sorted, duplicate free
  bool coset_empty = false;  // s not in the image of <a,.>
  Int certified_box = 0;     // every solution has |coord| <= certified_box

  std::size_t count() const { return elements.size(); }
};

// Complete solution set, coset + close-vector enumeration with exact rational
// Cholesky bounds. Requires signature (1, rank-1).
ThetaResult theta(const MarkedLattice& m, int s);

// Exhaustive scan of the coordinate box |x_i| <= box. Independent of the
// Cholesky path: prunes only with interval bounds derived from the box and
// the positive semidefinite form <a,x>^2 - d<x,x>.
ThetaResult theta_bruteforce(const MarkedLattice& m, int s, Int box);

// For <a,a> = 1 and s in {1,2,3}: Theta_s = s*a + (vectors of square
// -(s^2-s+2) in a^perp). Must agree with theta().
ThetaResult theta_closed_form_d1(const MarkedLattice& m, int s);

// All x with <x,x> = norm in a negative definite lattice (norm < 0), sorted.
std::vector<Vec> shell(const IntegerLattice& negdef, Int norm);

// Theta_1..Theta_3 plus the set of P2-classes. A Theta_3 class is excluded
// exactly when it equals a + 2e for an exceptional class e; this is the only
// way a Theta_3 element can degenerate onto the a/e plane, and it can happen
// only for <a,a> = 1.
struct SpecialClasses {
  ThetaResult roots;       // s = 0
  ThetaResult exceptional; // s = 1
  ThetaResult p1;          // s = 2
  ThetaResult theta3;      // s = 3, before the exclusion
  std::vector<Vec> p2;     // Theta_3 with the exclusion applied
};
SpecialClasses special_classes(const MarkedLattice& m);

} // namespace delpezzo
