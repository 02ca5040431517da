#include "delpezzo/lattice.hpp"

#include "delpezzo/errors.hpp"

#include <algorithm>

namespace delpezzo {

namespace {

using exact::Z;

Int checked_narrow(const Z& z, const char* what) {
  if (!z.fits_slong_p()) throw StructuralError(std::string(what) + ": 64-bit overflow");
  return static_cast<Int>(z.get_si());
}

} // namespace

IntegerLattice::IntegerLattice(std::vector<std::vector<Int>> gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  const size_t n = gram_.size();
  for (const auto& row : gram_)
    if (row.size() != n) throw StructuralError("gram matrix is not square");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (gram_[i][j] != gram_[j][i]) throw StructuralError("gram matrix is not symmetric");
  if (labels_.empty()) labels_ = default_labels(static_cast<int>(n));
  if (labels_.size() != n) throw StructuralError("label count does not match rank");
  auto sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw StructuralError("basis labels are not unique");
}

Int IntegerLattice::pair(const Vec& x, const Vec& y) const {
  const size_t n = gram_.size();
  if (x.size() != n || y.size() != n) throw StructuralError("pairing: dimension mismatch");
  Z s = 0;
  for (size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Z row = 0;
    for (size_t j = 0; j < n; ++j) row += Z(gram_[i][j]) * y[j];
    s += Z(x[i]) * row;
  }
  return checked_narrow(s, "pairing");
}

Vec IntegerLattice::pairing_functional(const Vec& a) const {
  const size_t n = gram_.size();
  if (a.size() != n) throw StructuralError("pairing_functional: dimension mismatch");
  Vec g(n, 0);
  for (size_t i = 0; i < n; ++i) {
    Z s = 0;
    for (size_t j = 0; j < n; ++j) s += Z(gram_[i][j]) * a[j];
    g[i] = checked_narrow(s, "pairing_functional");
  }
  return g;
}

exact::MatZ IntegerLattice::gram_z() const {
  exact::MatZ m(rank(), exact::VecZ(rank()));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) m[i][j] = gram_[i][j];
  return m;
}

exact::MatQ IntegerLattice::gram_q() const {
  exact::MatQ m(rank(), exact::VecQ(rank()));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) m[i][j] = gram_[i][j];
  return m;
}

std::vector<std::string> default_labels(int rank, const std::string& stem) {
  std::vector<std::string> out;
  out.reserve(rank);
  for (int i = 1; i <= rank; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

Int pairing(const IntegerLattice& l, const Vec& x, const Vec& y) { return l.pair(x, y); }

Signature signature(const IntegerLattice& l) {
  auto counts = exact::diagonalize_signs(l.gram_q());
  return Signature{counts.positive, counts.negative, counts.zero};
}

bool is_characteristic(const IntegerLattice& l, const Vec& a) {
  // <a, b_i> = <b_i, b_i> mod 2 on basis vectors suffices: the defect
  // x -> <a,x> - <x,x> is linear mod 2.
  Vec g = l.pairing_functional(a);
  for (int i = 0; i < l.rank(); ++i)
    if (((g[i] - l.gram()[i][i]) % 2 + 2) % 2 != 0) return false;
  return true;
}

Vec Sublattice::to_ambient(const Vec& coords) const {
  if (coords.size() != basis.size()) throw StructuralError("to_ambient: dimension mismatch");
  if (basis.empty()) return {};
  Vec out(basis[0].size(), 0);
  for (size_t i = 0; i < basis.size(); ++i) {
    exact::Z c = coords[i];
    for (size_t j = 0; j < out.size(); ++j)
      out[j] = checked_narrow(exact::Z(out[j]) + c * basis[i][j], "to_ambient");
  }
  return out;
}

Sublattice orthogonal_complement(const IntegerLattice& l, const std::vector<Vec>& constraints) {
  const int n = l.rank();
  exact::MatZ m;
  for (const auto& s : constraints) {
    Vec g = l.pairing_functional(s);
    m.emplace_back(g.begin(), g.end());
  }
  std::vector<Vec> basis;
  if (m.empty()) {
    for (int i = 0; i < n; ++i) {
      Vec e(n, 0);
      e[i] = 1;
      basis.push_back(e);
    }
  } else {
    for (const auto& col : exact::kernel_basis(m)) {
      Vec v(n);
      for (int i = 0; i < n; ++i) v[i] = checked_narrow(col[i], "orthogonal_complement");
      basis.push_back(std::move(v));
    }
  }
  Sublattice sub;
  sub.restricted = restrict_form(l, basis, default_labels(static_cast<int>(basis.size()), "k"));
  sub.basis = std::move(basis);
  return sub;
}

IntegerLattice restrict_form(const IntegerLattice& l, const std::vector<Vec>& basis,
                             std::vector<std::string> labels) {
  const int k = static_cast<int>(basis.size());
  exact::MatZ b;
  for (const auto& v : basis) b.emplace_back(v.begin(), v.end());
  if (k > 0 && exact::rank(b) != k) throw StructuralError("restrict_form: dependent basis");
  std::vector<std::vector<Int>> gram(k, std::vector<Int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) gram[i][j] = gram[j][i] = l.pair(basis[i], basis[j]);
  if (labels.empty()) labels = default_labels(k, "k");
  return IntegerLattice(std::move(gram), std::move(labels));
}

MarkedLattice::MarkedLattice(IntegerLattice lattice, Vec a)
    : lattice_(std::move(lattice)), a_(std::move(a)) {
  if (static_cast<int>(a_.size()) != lattice_.rank())
    throw StructuralError("marked lattice: a has wrong length");
  d_ = lattice_.pair(a_, a_);
  if (d_ <= 0) throw StructuralError("marked lattice: <a,a> must be positive");
  if (!is_characteristic(lattice_, a_))
    throw StructuralError("marked lattice: a is not characteristic");
}

bool MarkedLattice::hyperbolic() const {
  if (hyperbolic_ < 0) {
    Signature s = signature(lattice_);
    hyperbolic_ = (s.positive == 1 && s.zero == 0 && s.negative == rank() - 1) ? 1 : 0;
  }
  return hyperbolic_ == 1;
}

bool same_integer_span(int rank, const std::vector<Vec>& a, const std::vector<Vec>& b) {
  auto contains = [rank](const std::vector<Vec>& gen, const std::vector<Vec>& probe) {
    exact::MatZ m = exact::zeros(rank, static_cast<int>(gen.size()));
    for (size_t j = 0; j < gen.size(); ++j)
      for (int i = 0; i < rank; ++i) m[i][j] = gen[j][i];
    for (const auto& v : probe) {
      exact::VecZ rhs(v.begin(), v.end());
      if (!exact::solve_integer_system(m, rhs)) return false;
    }
    return true;
  };
  return contains(a, b) && contains(b, a);
}

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_classes(std::vector<Vec>& v) { std::sort(v.begin(), v.end(), lex_less); }

} // namespace delpezzo
