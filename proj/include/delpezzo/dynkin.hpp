#pragma once

// Roots of negative definite even lattices and their ADE classification.

#include "delpezzo/lattice.hpp"

#include <string>
#include <vector>

namespace delpezzo {

struct DynkinComponent {
  char letter = 'A'; // 'A', 'D' or 'E'
  int rank = 0;
  long long root_count = 0;

  bool operator==(const DynkinComponent&) const = default;
  bool operator<(const DynkinComponent& o) const {
    if (letter != o.letter) return letter < o.letter;
    return rank < o.rank;
  }
  std::string label() const { return std::string(1, letter) + std::to_string(rank); }
};

struct RootSystemReport {
  std::vector<DynkinComponent> components; // sorted
  long long total_roots = 0;
  std::vector<Vec> simple_roots;

  bool empty() const { return components.empty(); }
};

// Number of roots of the simply laced system of the given type.
long long classical_root_count(char letter, int rank);

// All x with <x,x> = -2 in a negative definite lattice, sorted.
std::vector<Vec> enumerate_roots(const IntegerLattice& negdef);

// Splits the root set by a deterministic generic functional, extracts simple
// roots, and classifies each component of the simple-root graph by shape.
// Cross-checks the total root count against the classical table.
RootSystemReport dynkin_type(const IntegerLattice& negdef);

// "D5", "A1+A3", "2A2", "0" for the empty system.
std::string format_components(const std::vector<DynkinComponent>& components);

// Parses labels like "E7", "A1+A3", "2A2", "A1xA3", "0".
std::vector<DynkinComponent> parse_components(const std::string& label);

} // namespace delpezzo
