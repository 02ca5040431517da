#pragma once

// Effective-cone generators from special classes, exact extremality testing,
// and the rank-2 contraction table.

#include "delpezzo/models.hpp"

#include <optional>
#include <string>
#include <vector>

namespace delpezzo {

enum class RayKind { Exceptional, P1, P2, BigH };
std::string ray_kind_name(RayKind k);

struct Ray {
  Vec divisor;
  RayKind kind = RayKind::Exceptional;
  bool extremal = false;
};

struct ConeReport {
  std::vector<Ray> rays;

  std::vector<Vec> extremal_rays() const;
};

// Candidate rays are Theta_1, Theta_2 and the P2-classes; a candidate is
// extremal iff it is not a nonnegative rational combination of the others.
ConeReport eff_cone(const VarietyModel& m);
// Same computation on a bare marked lattice of rank >= 2.
ConeReport eff_cone(const MarkedLattice& ml);

// v in cone(generators)? Exact rational feasibility (simplex with Bland's rule).
bool in_cone(const std::vector<Vec>& generators, const Vec& v);

struct R2Row {
  Int d = 0;
  std::string xi_type;
  RayKind kind1 = RayKind::Exceptional;
  RayKind kind2 = RayKind::Exceptional;
  // x1 D1 + x2 D2 = k A with coprime positive coefficients
  Int x1 = 0, x2 = 0, k = 0;
  std::string note; // set when the computed relation is flagged against a
                    // published variant
};

// The static table of the 13 rank-2 cases, ordered by (d, xi type).
const std::vector<R2Row>& r2_reference_table();

struct R2Result {
  R2Row row;           // computed
  Vec ray1, ray2;      // extremal rays, ray1 <= ray2 lexicographically
  int table_index = -1;
};

// Computes the two extremal rays, their kinds and the integer relation, and
// matches the result against the reference table.
R2Result r2_table(const VarietyModel& m);

// Extremal generators of the moving cone for r = 2: exceptional rays E are
// replaced by the big classes A + E.
std::vector<Vec> mov_generators_r2(const VarietyModel& m);

} // namespace delpezzo
