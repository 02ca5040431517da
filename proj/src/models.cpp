#include "delpezzo/models.hpp"

#include "delpezzo/errors.hpp"

#include <algorithm>

namespace delpezzo {

namespace {

std::string preset_name(const std::string& family, int d, int r, int n) {
  return family + "_" + std::to_string(d) + "_" + std::to_string(r) + "_" + std::to_string(n);
}

void check_model(const VarietyModel& m) {
  if (!m.marked().hyperbolic())
    throw ConsistencyError("model lattice does not have signature (1, r-1)");
}

} // namespace

VarietyModel::VarietyModel(std::string name, int n, MarkedLattice marked,
                           Construction construction)
    : name_(std::move(name)), n_(n), marked_(std::move(marked)),
      construction_(std::move(construction)) {}

VarietyModel rank_one(int d, int n) {
  static const int allowed[] = {1, 2, 3, 4, 5, 8};
  if (std::find(std::begin(allowed), std::end(allowed), d) == std::end(allowed))
    throw DomainError("rank_one: degree must be one of 1,2,3,4,5,8");
  if (n < 3) throw DomainError("rank_one: dimension must be at least 3");
  if (d == 5 && n > 6) throw DomainError("rank_one: degree 5 requires n <= 6");
  if (d == 8 && n != 3) throw DomainError("rank_one: degree 8 requires n = 3");
  if (d == 6 || d == 7)
    throw DomainError("rank_one: degrees 6 and 7 force class rank >= 2");
  Construction c{"rank_one", d, n, 0, nullptr};
  if (d == 8) {
    // generator H is the hyperplane class, a = 2H
    MarkedLattice ml(IntegerLattice({{2}}, {"H"}), Vec{2});
    VarietyModel m(preset_name("X", d, 1, n), n, std::move(ml), c);
    check_model(m);
    return m;
  }
  MarkedLattice ml(IntegerLattice({{Int(d)}}, {"A"}), Vec{1});
  VarietyModel m(preset_name("X", d, 1, n), n, std::move(ml), c);
  check_model(m);
  return m;
}

VarietyModel pbundle_over_p2(int d, int n) {
  if (d < 1 || d > 7) throw DomainError("pbundle_over_p2: degree must be in 1..7");
  if (n < 3 || n > 10 - d)
    throw DomainError("pbundle_over_p2: bundle rank n-1 must satisfy 2 <= n-1 <= 9-d");
  Construction c{"pbundle_p2", d, n, 0, nullptr};
  MarkedLattice ml(IntegerLattice({{1, 3}, {3, Int(d)}}, {"G", "A"}), Vec{0, 1});
  VarietyModel m(preset_name("X", d, 2, n), n, std::move(ml), c);
  check_model(m);
  return m;
}

VarietyModel pbundle_over_p1p1(int d, int n) {
  if (d < 1 || d > 6) throw DomainError("pbundle_over_p1p1: degree must be in 1..6");
  if (n < 3 || n > 9 - d)
    throw DomainError("pbundle_over_p1p1: bundle rank n-1 must satisfy 2 <= n-1 <= 8-d");
  Construction c{"pbundle_p1p1", d, n, 0, nullptr};
  MarkedLattice ml(
      IntegerLattice({{0, 1, 2}, {1, 0, 2}, {2, 2, Int(d)}}, {"F1", "F2", "A"}),
      Vec{0, 0, 1});
  VarietyModel m(preset_name("X", d, 3, n) + "_star", n, std::move(ml), c);
  check_model(m);
  return m;
}

VarietyModel quadric_bundle_over_p1(int d, int n) {
  if (d < 1 || d > 6) throw DomainError("quadric_bundle_over_p1: degree must be in 1..6");
  if (n < 3) throw DomainError("quadric_bundle_over_p1: dimension must be at least 3");
  if (d == 5 && n > 5)
    throw DomainError("quadric_bundle_over_p1: degree 5 requires n <= 5");
  Construction c{"quadric_p1", d, n, 0, nullptr};
  MarkedLattice ml(IntegerLattice({{0, 2}, {2, Int(d)}}, {"F", "A"}), Vec{0, 1});
  VarietyModel m(preset_name("XD", d, 2, n), n, std::move(ml), c);
  check_model(m);
  return m;
}

VarietyModel blowup(const VarietyModel& m, int k) {
  if (k < 1) throw DomainError("blowup: k must be positive");
  if (m.d() - k < 1)
    throw DomainError("blowup: degree would drop below 1");
  const int r0 = m.r();
  const int r = r0 + k;
  std::vector<std::vector<Int>> gram(r, std::vector<Int>(r, 0));
  for (int i = 0; i < r0; ++i)
    for (int j = 0; j < r0; ++j) gram[i][j] = m.marked().lattice().gram()[i][j];
  std::vector<std::string> labels = m.marked().lattice().labels();
  int used = 0;
  for (const auto& lbl : labels)
    if (lbl.size() > 1 && lbl[0] == 'E') used = std::max(used, atoi(lbl.c_str() + 1));
  for (int t = 0; t < k; ++t) {
    gram[r0 + t][r0 + t] = -1;
    labels.push_back("E" + std::to_string(used + t + 1));
  }
  Vec a(r, 0);
  for (int i = 0; i < r0; ++i) a[i] = m.marked().a()[i];
  for (int t = 0; t < k; ++t) a[r0 + t] = -1;
  Construction c{"blowup", 0, m.n(), k, std::make_shared<Construction>(m.construction())};
  MarkedLattice ml(IntegerLattice(std::move(gram), std::move(labels)), std::move(a));
  VarietyModel out(m.name() + "_bl" + std::to_string(k), m.n(), std::move(ml), c);
  check_model(out);
  return out;
}

VarietyModel linear_section(const VarietyModel& m) {
  if (m.n() <= 3)
    throw DomainError("linear_section: a section of a threefold is a surface");
  Construction c{"linear_section", 0, m.n() - 1, 0,
                 std::make_shared<Construction>(m.construction())};
  return VarietyModel(m.name() + "_sec", m.n() - 1, m.marked(), c);
}

VarietyModel from_construction(const Construction& c) {
  if (c.op == "rank_one") return rank_one(c.d, c.n);
  if (c.op == "pbundle_p2") return pbundle_over_p2(c.d, c.n);
  if (c.op == "pbundle_p1p1") return pbundle_over_p1p1(c.d, c.n);
  if (c.op == "quadric_p1") return quadric_bundle_over_p1(c.d, c.n);
  if (c.op == "blowup") {
    if (!c.of) throw StructuralError("blowup construction without operand");
    return blowup(from_construction(*c.of), c.k ? c.k : 1);
  }
  if (c.op == "linear_section") {
    if (!c.of) throw StructuralError("linear_section construction without operand");
    return linear_section(from_construction(*c.of));
  }
  throw DomainError("unknown construction op '" + c.op + "'");
}

SurfaceLattice SurfaceLattice::plane_blowup(int points) {
  SurfaceLattice s;
  s.kind = Kind::PlaneBlowup;
  s.points = points;
  const int n = points + 1;
  std::vector<std::vector<Int>> gram(n, std::vector<Int>(n, 0));
  gram[0][0] = 1;
  std::vector<std::string> labels{"h"};
  for (int i = 1; i <= points; ++i) {
    gram[i][i] = -1;
    labels.push_back("e" + std::to_string(i));
  }
  s.lattice = IntegerLattice(std::move(gram), std::move(labels));
  s.canonical.assign(n, 1);
  s.canonical[0] = -3;
  return s;
}

SurfaceLattice SurfaceLattice::quadric_blowup(int points) {
  SurfaceLattice s;
  s.kind = Kind::QuadricBlowup;
  s.points = points;
  const int n = points + 2;
  std::vector<std::vector<Int>> gram(n, std::vector<Int>(n, 0));
  gram[0][1] = gram[1][0] = 1;
  std::vector<std::string> labels{"f1", "f2"};
  for (int i = 1; i <= points; ++i) {
    gram[i + 1][i + 1] = -1;
    labels.push_back("e" + std::to_string(i));
  }
  s.lattice = IntegerLattice(std::move(gram), std::move(labels));
  s.canonical.assign(n, 1);
  s.canonical[0] = s.canonical[1] = -2;
  return s;
}

Vec SectionEmbedding::apply(const Vec& x) const {
  if (x.size() != columns.size()) throw StructuralError("embedding: dimension mismatch");
  Vec out(target.lattice.rank(), 0);
  for (size_t i = 0; i < columns.size(); ++i)
    for (size_t j = 0; j < out.size(); ++j) out[j] += x[i] * columns[i][j];
  return out;
}

namespace {

Vec minus_canonical(const SurfaceLattice& s) {
  Vec v = s.canonical;
  for (auto& c : v) c = -c;
  return v;
}

SectionEmbedding leaf_embedding(const Construction& c) {
  SectionEmbedding e;
  if (c.op == "rank_one") {
    if (c.d == 8) {
      e.target = SurfaceLattice::quadric_blowup(0);
      e.columns = {Vec{1, 1}}; // H -> ruling sum; a = 2H -> -K
      return e;
    }
    e.target = SurfaceLattice::plane_blowup(9 - c.d);
    e.columns = {minus_canonical(e.target)};
    return e;
  }
  if (c.op == "pbundle_p2") {
    e.target = SurfaceLattice::plane_blowup(9 - c.d);
    Vec g(e.target.lattice.rank(), 0);
    g[0] = 1; // G -> h
    e.columns = {g, minus_canonical(e.target)};
    return e;
  }
  if (c.op == "pbundle_p1p1") {
    // present S as a plane blowup; the rulings pull back to conics through
    // one point each: F1 -> h - e1, F2 -> h - e2
    e.target = SurfaceLattice::plane_blowup(9 - c.d);
    Vec f1(e.target.lattice.rank(), 0), f2(e.target.lattice.rank(), 0);
    f1[0] = 1;
    f1[1] = -1;
    f2[0] = 1;
    f2[2] = -1;
    e.columns = {f1, f2, minus_canonical(e.target)};
    return e;
  }
  if (c.op == "quadric_p1") {
    // conic bundle section with 8-d degenerate fibers, one component
    // contracted in each: F -> f2
    e.target = SurfaceLattice::quadric_blowup(8 - c.d);
    Vec f(e.target.lattice.rank(), 0);
    f[1] = 1;
    e.columns = {f, minus_canonical(e.target)};
    return e;
  }
  throw StructuralError("surface_embedding: unsupported leaf '" + c.op + "'");
}

SectionEmbedding embedding_rec(const Construction& c) {
  if (c.op == "linear_section") return embedding_rec(*c.of);
  if (c.op != "blowup") return leaf_embedding(c);
  SectionEmbedding inner = embedding_rec(*c.of);
  const int k = c.k ? c.k : 1;
  SectionEmbedding e;
  int pts = inner.target.points + k;
  e.target = inner.target.kind == SurfaceLattice::Kind::PlaneBlowup
                 ? SurfaceLattice::plane_blowup(pts)
                 : SurfaceLattice::quadric_blowup(pts);
  const int old_rank = inner.target.lattice.rank();
  for (const auto& col : inner.columns) {
    Vec v(e.target.lattice.rank(), 0);
    std::copy(col.begin(), col.end(), v.begin());
    e.columns.push_back(std::move(v));
  }
  for (int t = 0; t < k; ++t) {
    Vec v(e.target.lattice.rank(), 0);
    v[old_rank + t] = 1; // E_t -> new exceptional class
    e.columns.push_back(std::move(v));
  }
  return e;
}

} // namespace

SectionEmbedding surface_embedding(const VarietyModel& m) {
  SectionEmbedding e = embedding_rec(m.construction());
  if (static_cast<int>(e.columns.size()) != m.r())
    throw ConsistencyError("surface_embedding: column count mismatch");
  // pairing preservation on the basis
  for (int i = 0; i < m.r(); ++i)
    for (int j = 0; j < m.r(); ++j) {
      Vec bi(m.r(), 0), bj(m.r(), 0);
      bi[i] = 1;
      bj[j] = 1;
      if (m.marked().pair(bi, bj) != e.target.lattice.pair(e.columns[i], e.columns[j]))
        throw ConsistencyError("surface_embedding: pairing not preserved");
    }
  // a maps to -K_S
  Vec image_a = e.apply(m.marked().a());
  if (image_a != minus_canonical(e.target))
    throw ConsistencyError("surface_embedding: a does not map to -K_S");
  return e;
}

XiReport xi(const VarietyModel& m) {
  SectionEmbedding e = surface_embedding(m);
  XiReport rep;
  rep.expected_rank = 10 - static_cast<int>(m.d()) - m.r();
  rep.xi = orthogonal_complement(e.target.lattice, e.columns);
  if (rep.xi.rank() != rep.expected_rank)
    throw ConsistencyError("xi: rank is not 10 - d - r");
  if (rep.xi.rank() > 0) {
    Signature sig = signature(rep.xi.restricted);
    if (sig.positive != 0 || sig.zero != 0)
      throw ConsistencyError("xi: complement is not negative definite");
  }
  // Xi lies in K_S^perp
  for (const auto& v : rep.xi.basis)
    if (e.target.lattice.pair(v, e.target.canonical) != 0)
      throw ConsistencyError("xi: complement not orthogonal to K_S");
  // double complement recovers the embedded class lattice
  Sublattice back = orthogonal_complement(e.target.lattice, rep.xi.basis);
  if (!same_integer_span(e.target.lattice.rank(), back.basis, e.columns))
    throw ConsistencyError("xi: double complement does not recover Cl(X)");
  rep.report = dynkin_type(rep.xi.restricted);
  if (static_cast<int>(rep.report.simple_roots.size()) != rep.xi.rank())
    throw ConsistencyError("xi: roots do not span the complement");
  return rep;
}

ModelInvariants invariants(const VarietyModel& m) {
  ModelInvariants inv;
  inv.d = m.d();
  inv.r = m.r();
  inv.n = m.n();
  inv.xi_type = xi(m).type_label();
  inv.primitive = theta(m.marked(), 1).elements.empty();
  return inv;
}

} // namespace delpezzo
