#include "delpezzo/bundles.hpp"

#include "delpezzo/errors.hpp"

#include <map>

namespace delpezzo {

BundleInvariants validate_bundle(const BundleSpec& b) {
  if (b.kz2 < 1 || b.kz2 > 9) throw DomainError("bundle: K_Z^2 must be in 1..9");
  if (b.c2 < 2) throw DomainError("bundle: c2 >= 2 violated");
  if (b.c2 > b.kz2 - 1) throw DomainError("bundle: c2 <= K_Z^2 - 1 violated");
  if (b.rank < 2) throw DomainError("bundle: rank >= 2 violated");
  if (b.rank > b.c2) throw DomainError("bundle: rank <= c2 violated");
  BundleInvariants inv;
  inv.d = b.kz2 - b.c2;
  inv.n = b.rank + 1;
  inv.h1 = b.c2 - b.rank;
  inv.maximal = b.rank == b.c2;
  return inv;
}

int dual_c2(const BundleSpec& b) {
  validate_bundle(b);
  if (b.c2 > b.kz2 - 2)
    throw DomainError("bundle: duality undefined for c2 = K_Z^2 - 1");
  return b.kz2 - b.c2;
}

BundleSpec maximalize(const BundleSpec& b) {
  validate_bundle(b);
  return BundleSpec{b.kz2, b.c2, b.c2};
}

SplittingType quadric_splitting(int d, int n) {
  if (d == 6)
    throw DomainError("quadric_splitting: degree 6 forces class rank 3, no rank-2 "
                      "quadric bundle exists");
  if (d < 1 || d > 5) throw DomainError("quadric_splitting: degree must be in 1..5");
  if (n < 3) throw DomainError("quadric_splitting: dimension must be at least 3");
  if (d == 5 && n > 5) throw DomainError("quadric_splitting: degree 5 requires n <= 5");
  SplittingType t;
  t.k = d - 4;
  if (d >= 2) {
    t.a.assign(n + 3 - d, 0);
    t.a.insert(t.a.end(), d - 2, 1);
  } else {
    t.a.assign(1, -1);
    t.a.insert(t.a.end(), n, 0);
  }
  int sum = 0;
  for (int v : t.a) sum += v;
  if (sum != d - 2 || static_cast<int>(t.a.size()) != n + 1)
    throw ConsistencyError("quadric_splitting: splitting sums violated");
  return t;
}

BaseSurface parse_base_surface(const std::string& name) {
  static const std::map<std::string, BaseSurface> names = {
      {"P2", BaseSurface::P2},   {"P1xP1", BaseSurface::P1xP1}, {"F1", BaseSurface::F1},
      {"Z7", BaseSurface::Z7},   {"Z6", BaseSurface::Z6},       {"Z5", BaseSurface::Z5},
      {"Z4", BaseSurface::Z4}};
  auto it = names.find(name);
  if (it == names.end()) throw DomainError("unknown base surface '" + name + "'");
  return it->second;
}

std::string base_surface_name(BaseSurface b) {
  switch (b) {
    case BaseSurface::P2: return "P2";
    case BaseSurface::P1xP1: return "P1xP1";
    case BaseSurface::F1: return "F1";
    case BaseSurface::Z7: return "Z7";
    case BaseSurface::Z6: return "Z6";
    case BaseSurface::Z5: return "Z5";
    case BaseSurface::Z4: return "Z4";
  }
  throw DomainError("unknown base surface");
}

int base_surface_degree(BaseSurface b) {
  switch (b) {
    case BaseSurface::P2: return 9;
    case BaseSurface::P1xP1: return 8;
    case BaseSurface::F1: return 8;
    case BaseSurface::Z7: return 7;
    case BaseSurface::Z6: return 6;
    case BaseSurface::Z5: return 5;
    case BaseSurface::Z4: return 4;
  }
  throw DomainError("unknown base surface");
}

namespace {

std::string explicit_description(BaseSurface base, int c2) {
  switch (base) {
    case BaseSurface::P2:
      switch (c2) {
        case 2: return "O(-1) + O(-2)";
        case 3: return "O(-1)^3";
        case 4: return "O(-1)^2 + Omega(1)";
        case 5: return "O(-1) + Omega(1)^2";
        case 6: return "Omega(1)^3";
        case 7: return "0 -> E -> O^9 -> O(1) + O(2) -> 0";
        case 8: return "0 -> E -> O^9 + O(1) -> O(2) + O(2) -> 0";
      }
      break;
    case BaseSurface::P1xP1:
      switch (c2) {
        case 2: return "O(-1,-1)^2";
        case 3: return "O(-1,-1) + O(-1,0) + O(0,-1)";
        case 4: return "O(-1,0)^2 + O(0,-1)^2";
        case 5: return "O(-1,0) + O(0,-1) + Omega_P3(1)|";
        case 6: return "Omega_P3(1)|^2";
        case 7: return "0 -> E -> O^8 + O(1,1) -> O(1,2) + O(2,1) -> 0";
      }
      break;
    case BaseSurface::F1:
      switch (c2) {
        case 2: return "O(-2h+e1) + O(-h)";
        case 3: return "O(-h+e1) + O(-h)^2";
        case 4: return "O(-h+e1) + O(-h) + Omega(h)";
      }
      break;
    case BaseSurface::Z7:
      switch (c2) {
        case 2: return "O(-2h+e1+e2) + O(-h)";
        case 3: return "O(-h+e1) + O(-h+e2) + O(-h)";
      }
      break;
    case BaseSurface::Z6:
      switch (c2) {
        case 2: return "O(-2h+e1+e2+e3) + O(-h)";
        case 3: return "O(-h+e1) + O(-h+e2) + O(-h+e3)";
      }
      break;
    case BaseSurface::Z5:
      switch (c2) {
        case 2: return "U (tautological restriction from Gr(2,5))";
        case 3: return "U^perp";
      }
      break;
    case BaseSurface::Z4:
      switch (c2) {
        case 2: return "S_t|_Z4, spinor-bundle restriction from a quadric through Z4";
      }
      break;
  }
  return "";
}

} // namespace

BundleCatalogEntry catalog_maximal(BaseSurface base, int c2) {
  const int kz2 = base_surface_degree(base);
  if (c2 < 2 || c2 > kz2 - 1)
    throw DomainError("catalog: c2 out of range 2..K_Z^2-1 for " + base_surface_name(base));
  BundleCatalogEntry entry;
  entry.base = base;
  entry.c2 = c2;
  entry.rank = c2;
  entry.d = kz2 - c2;
  if (base == BaseSurface::Z4 && c2 == 2)
    entry.uniqueness = BundleUniqueness::OneParameter;
  else if (c2 == kz2 - 1)
    entry.uniqueness = BundleUniqueness::PointParameterized;
  else
    entry.uniqueness = BundleUniqueness::Unique;
  entry.description = explicit_description(base, c2);
  if (entry.description.empty()) {
    if (c2 == kz2 - 1) {
      entry.description =
          "0 -> E -> H0(I_z(-K)) x O -> I_z(-K) -> 0 (z a general point)";
    } else {
      // the remaining intermediate cases carry no explicit description; the
      // bundle is the orthogonal dual of the listed one
      entry.description = "via duality (c2 = " + std::to_string(kz2 - c2) + ")";
    }
  }
  return entry;
}

} // namespace delpezzo
