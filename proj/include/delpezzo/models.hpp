#pragma once

// Marked-lattice models of del Pezzo varieties: leaf constructors for the
// primitive families, blowups and linear sections, the embedding of the class
// lattice into the Picard lattice of a general surface section, and the
// orthogonal complement Xi with its ADE type.

#include "delpezzo/dynkin.hpp"
#include "delpezzo/enumerate.hpp"
#include "delpezzo/lattice.hpp"

#include <memory>
#include <string>
#include <vector>

namespace delpezzo {

struct Construction {
  std::string op; // rank_one | pbundle_p2 | pbundle_p1p1 | quadric_p1 | blowup | linear_section
  int d = 0;
  int n = 0;
  int k = 0; // blowup count
  std::shared_ptr<const Construction> of;
};

class VarietyModel {
public:
  VarietyModel(std::string name, int n, MarkedLattice marked, Construction construction);

  const std::string& name() const { return name_; }
  int n() const { return n_; }
  const MarkedLattice& marked() const { return marked_; }
  const Construction& construction() const { return construction_; }
  Int d() const { return marked_.d(); }
  int r() const { return marked_.rank(); }

private:
  std::string name_;
  int n_ = 0;
  MarkedLattice marked_;
  Construction construction_;
};

// r = 1 families: d in {1,2,3,4,5} rank-1 lattice [d]; d = 8 is projective
// 3-space, lattice [2] with a twice the generator.
VarietyModel rank_one(int d, int n);
// P^(n-2)-bundles over the plane: Gram [[1,3],[3,d]], basis (G, A).
VarietyModel pbundle_over_p2(int d, int n);
// P^(n-2)-bundles over a smooth quadric surface: basis (F1, F2, A).
VarietyModel pbundle_over_p1p1(int d, int n);
// Flat quadric bundles over the line: Gram [[0,2],[2,d]], basis (F, A).
VarietyModel quadric_bundle_over_p1(int d, int n);
// Blowup of k general points: k new basis vectors of square -1, a' = a - sum E_i.
VarietyModel blowup(const VarietyModel& m, int k = 1);
// General fundamental divisor: same lattice, n - 1.
VarietyModel linear_section(const VarietyModel& m);

VarietyModel from_construction(const Construction& c);

// Picard lattice of a general surface section, in one of two presentations.
struct SurfaceLattice {
  enum class Kind { PlaneBlowup, QuadricBlowup };
  Kind kind = Kind::PlaneBlowup;
  int points = 0; // number of blown-up points
  IntegerLattice lattice;
  Vec canonical; // K_S

  static SurfaceLattice plane_blowup(int points);
  static SurfaceLattice quadric_blowup(int points);
};

struct SectionEmbedding {
  SurfaceLattice target;
  std::vector<Vec> columns; // image of each Cl(X) basis vector in Cl(S)

  Vec apply(const Vec& x) const;
};

// Pairing-preserving embedding Cl(X) -> Cl(S) with a -> -K_S; verified on
// construction.
SectionEmbedding surface_embedding(const VarietyModel& m);

struct XiReport {
  Sublattice xi; // inside Cl(S)
  RootSystemReport report;
  int expected_rank = 0; // 10 - d - r

  std::string type_label() const { return format_components(report.components); }
};

// Orthogonal complement of the embedded class lattice in Cl(S), classified.
// Verifies rank = 10 - d - r, negative definiteness, containment in K_S^perp,
// and that the double complement recovers the embedded lattice.
XiReport xi(const VarietyModel& m);

struct ModelInvariants {
  Int d = 0;
  int r = 0;
  int n = 0;
  std::string xi_type;
  bool primitive = false;
};
ModelInvariants invariants(const VarietyModel& m);

} // namespace delpezzo
