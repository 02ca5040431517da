#pragma once

// Integer lattices with a symmetric bilinear form, given by a Gram matrix in a
// fixed labeled basis. Divisor classes are integer coordinate vectors in that
// basis. All derived linear algebra is exact.

#include "delpezzo/exact.hpp"

#include <string>
#include <vector>

namespace delpezzo {

using Int = long;
using Vec = std::vector<Int>; // a divisor class in the basis of its lattice

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool operator==(const Signature&) const = default;
};

class IntegerLattice {
public:
  IntegerLattice() = default;
  // Validates symmetry and label uniqueness.
  IntegerLattice(std::vector<std::vector<Int>> gram, std::vector<std::string> labels);

  int rank() const { return static_cast<int>(gram_.size()); }
  const std::vector<std::vector<Int>>& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Int pair(const Vec& x, const Vec& y) const;
  Vec pairing_functional(const Vec& a) const; // g with <a,x> = sum g[i] x[i]

  exact::MatZ gram_z() const;
  exact::MatQ gram_q() const;

private:
  std::vector<std::vector<Int>> gram_;
  std::vector<std::string> labels_;
};

// Default labels b1..bn when none are supplied.
std::vector<std::string> default_labels(int rank, const std::string& stem = "b");

Int pairing(const IntegerLattice& l, const Vec& x, const Vec& y);
Signature signature(const IntegerLattice& l);
bool is_characteristic(const IntegerLattice& l, const Vec& a);

// A saturated sublattice of an ambient lattice with the restricted form.
struct Sublattice {
  std::vector<Vec> basis;    // primitive, independent vectors in ambient coordinates
  IntegerLattice restricted; // Gram of the basis under the ambient form

  int rank() const { return static_cast<int>(basis.size()); }
  // ambient coordinates of a vector given in sublattice coordinates
  Vec to_ambient(const Vec& coords) const;
};

// Saturated kernel of v -> (<v,s>)_{s in constraints}; empty constraint set
// yields all of l.
Sublattice orthogonal_complement(const IntegerLattice& l, const std::vector<Vec>& constraints);

// Gram matrix of independent vectors under the form of l. Throws on dependence.
IntegerLattice restrict_form(const IntegerLattice& l, const std::vector<Vec>& basis,
                             std::vector<std::string> labels = {});

// Marked lattice (Lambda, a) with d = <a,a> > 0 and a characteristic.
class MarkedLattice {
public:
  MarkedLattice() = default;
  MarkedLattice(IntegerLattice lattice, Vec a);

  const IntegerLattice& lattice() const { return lattice_; }
  const Vec& a() const { return a_; }
  Int d() const { return d_; }
  int rank() const { return lattice_.rank(); }
  Int pair(const Vec& x, const Vec& y) const { return lattice_.pair(x, y); }

  // true iff signature is (1, rank-1); cached
  bool hyperbolic() const;

private:
  IntegerLattice lattice_;
  Vec a_;
  Int d_ = 0;
  mutable int hyperbolic_ = -1;
};

// True iff the integer span of the two generating sets coincides.
bool same_integer_span(int rank, const std::vector<Vec>& a, const std::vector<Vec>& b);

bool lex_less(const Vec& a, const Vec& b);
void sort_classes(std::vector<Vec>& v);

} // namespace delpezzo
