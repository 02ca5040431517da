#pragma once

// Integer calculus of del Pezzo bundle invariants on a del Pezzo surface Z:
// spec (K_Z^2, rank, c2) with c1 = K_Z fixed, plus the static catalog of
// maximal bundles and quadric-bundle splitting types.

#include <string>
#include <vector>

namespace delpezzo {

struct BundleSpec {
  int kz2 = 0; // K_Z^2, degree of the base surface, 1..9
  int rank = 0;
  int c2 = 0;
};

struct BundleInvariants {
  int d = 0; // kz2 - c2
  int n = 0; // rank + 1
  int h1 = 0; // c2 - rank
  bool maximal = false;
};

// Validates 2 <= c2 <= kz2 - 1, 2 <= rank <= c2 and returns the derived
// invariants. Throws DomainError naming the violated inequality.
BundleInvariants validate_bundle(const BundleSpec& b);

// c2 of the orthogonal dual bundle: kz2 - c2. Requires 2 <= c2 <= kz2 - 2.
int dual_c2(const BundleSpec& b);

// Saturates the rank: (kz2, c2, c2). Idempotent, degree preserving.
BundleSpec maximalize(const BundleSpec& b);

struct SplittingType {
  std::vector<int> a; // splitting exponents, length n + 1
  int k = 0;          // divisor twist, d - 4
};

// Splitting type of the quadric bundle of degree d and dimension n over the
// line: a = (0^{n+3-d}, 1^{d-2}) for d >= 2 and (-1, 0^n) for d = 1.
SplittingType quadric_splitting(int d, int n);

enum class BaseSurface { P2, P1xP1, F1, Z7, Z6, Z5, Z4 };
BaseSurface parse_base_surface(const std::string& name);
std::string base_surface_name(BaseSurface b);
int base_surface_degree(BaseSurface b);

enum class BundleUniqueness { Unique, OneParameter, PointParameterized };

struct BundleCatalogEntry {
  BaseSurface base = BaseSurface::P2;
  int c2 = 0;
  int rank = 0; // = c2 (maximal)
  int d = 0;
  std::string description; // structural description; "via duality (c2=k)" when
                           // only the dual side has an explicit one
  BundleUniqueness uniqueness = BundleUniqueness::Unique;
};

// Maximal del Pezzo bundle with the given base and c2.
BundleCatalogEntry catalog_maximal(BaseSurface base, int c2);

} // namespace delpezzo
