#include "delpezzo/exact.hpp"

#include "delpezzo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace delpezzo::exact {

MatZ zeros(int rows, int cols) { return MatZ(rows, VecZ(cols, Z(0))); }

MatZ identity(int n) {
  MatZ m = zeros(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

MatZ transpose(const MatZ& m) {
  if (m.empty()) return {};
  MatZ t = zeros(static_cast<int>(m[0].size()), static_cast<int>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
  return t;
}

VecZ mat_vec(const MatZ& m, const VecZ& v) {
  VecZ r(m.size(), Z(0));
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw StructuralError("mat_vec: dimension mismatch");
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  }
  return r;
}

MatZ mat_mul(const MatZ& a, const MatZ& b) {
  if (a.empty() || b.empty()) return {};
  MatZ r = zeros(static_cast<int>(a.size()), static_cast<int>(b[0].size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k)
      if (a[i][k] != 0)
        for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Z dot(const VecZ& a, const VecZ& b) {
  if (a.size() != b.size()) throw StructuralError("dot: dimension mismatch");
  Z s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int rank(MatZ m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      // fraction-free row elimination
      Z g = gcd(m[r][c], m[i][c]);
      Z fr = m[i][c] / g, fi = m[r][c] / g;
      for (int j = c; j < cols; ++j) m[i][j] = m[i][j] * fi - m[r][j] * fr;
    }
    ++r;
  }
  return r;
}

std::vector<VecZ> kernel_basis(const MatZ& m) {
  if (m.empty()) return {};
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  MatZ a = m;
  MatZ u = identity(cols); // column transform: columns of u track column ops on a
  int lead = 0;            // columns < lead are pivot columns
  for (int i = 0; i < rows && lead < cols; ++i) {
    // gcd-reduce row i across columns >= lead until at most one nonzero remains
    while (true) {
      int jmin = -1;
      for (int j = lead; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        if (jmin < 0 || abs(a[i][j]) < abs(a[i][jmin])) jmin = j;
      }
      if (jmin < 0) break;
      bool clean = true;
      for (int j = lead; j < cols; ++j) {
        if (j == jmin || a[i][j] == 0) continue;
        clean = false;
        Z q = a[i][j] / a[i][jmin]; // truncated division shrinks the remainder
        if (q != 0) {
          for (int t = 0; t < rows; ++t) a[t][j] -= q * a[t][jmin];
          for (int t = 0; t < cols; ++t) u[t][j] -= q * u[t][jmin];
        }
        if (a[i][j] != 0) { // one Euclid step: swap roles
          std::swap(jmin, j);
        }
      }
      if (clean) {
        if (jmin != lead) {
          for (int t = 0; t < rows; ++t) std::swap(a[t][jmin], a[t][lead]);
          for (int t = 0; t < cols; ++t) std::swap(u[t][jmin], u[t][lead]);
        }
        ++lead;
        break;
      }
    }
  }
  std::vector<VecZ> basis;
  for (int j = lead; j < cols; ++j) {
    VecZ col(cols);
    for (int t = 0; t < cols; ++t) col[t] = u[t][j];
    basis.push_back(std::move(col));
  }
  return basis;
}

std::optional<VecZ> solve_linear_diophantine(const VecZ& g, const Z& s) {
  const int n = static_cast<int>(g.size());
  if (n == 0) return s == 0 ? std::optional<VecZ>(VecZ{}) : std::nullopt;
  // running gcd with cofactors: d_k = gcd(g_0..g_k) = sum c_i g_i
  Z d = g[0];
  MatZ coef(1, VecZ(n, Z(0)));
  coef[0][0] = 1;
  VecZ c(n, Z(0));
  c[0] = 1;
  for (int i = 1; i < n; ++i) {
    Z gq, x, y;
    mpz_gcdext(gq.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), d.get_mpz_t(), g[i].get_mpz_t());
    for (int j = 0; j < n; ++j) c[j] *= x;
    c[i] += y;
    d = gq;
  }
  if (d == 0) return s == 0 ? std::optional<VecZ>(VecZ(n, Z(0))) : std::nullopt;
  if (s % d != 0) return std::nullopt;
  Z f = s / d;
  for (auto& v : c) v *= f;
  return c;
}

std::optional<VecZ> solve_integer_system(const MatZ& m, const VecZ& b) {
  if (m.empty()) return VecZ{};
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  // Column-reduce [m] with transform u; then solve in echelon form.
  MatZ a = m;
  MatZ u = identity(cols);
  int lead = 0;
  std::vector<int> pivot_row;
  for (int i = 0; i < rows && lead < cols; ++i) {
    while (true) {
      int jmin = -1;
      for (int j = lead; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        if (jmin < 0 || abs(a[i][j]) < abs(a[i][jmin])) jmin = j;
      }
      if (jmin < 0) break;
      bool clean = true;
      for (int j = lead; j < cols; ++j) {
        if (j == jmin || a[i][j] == 0) continue;
        clean = false;
        Z q = a[i][j] / a[i][jmin];
        if (q != 0) {
          for (int t = 0; t < rows; ++t) a[t][j] -= q * a[t][jmin];
          for (int t = 0; t < cols; ++t) u[t][j] -= q * u[t][jmin];
        }
        if (a[i][j] != 0) std::swap(jmin, j);
      }
      if (clean) {
        if (jmin != lead) {
          for (int t = 0; t < rows; ++t) std::swap(a[t][jmin], a[t][lead]);
          for (int t = 0; t < cols; ++t) std::swap(u[t][jmin], u[t][lead]);
        }
        pivot_row.push_back(i);
        ++lead;
        break;
      }
    }
  }
  // Back-substitute: a * y = b with a column-echelon, then x = u y.
  VecZ y(cols, Z(0));
  VecZ residual = b;
  for (int j = 0; j < lead; ++j) {
    int i = pivot_row[j];
    if (residual[i] % a[i][j] != 0) return std::nullopt;
    y[j] = residual[i] / a[i][j];
    for (int t = 0; t < rows; ++t) residual[t] -= y[j] * a[t][j];
  }
  for (int t = 0; t < rows; ++t)
    if (residual[t] != 0) return std::nullopt;
  return mat_vec(u, y);
}

SignCounts diagonalize_signs(MatQ m) {
  SignCounts out;
  const int n = static_cast<int>(m.size());
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && sgn(m[i][i]) != 0) { p = i; break; }
    if (p < 0) {
      // all remaining diagonal entries vanish; a congruence move m_i += m_j
      // creates 2*m[i][j] on the diagonal when some off-diagonal survives
      int bi = -1, bj = -1;
      for (int i = 0; i < n && bi < 0; ++i) {
        if (done[i]) continue;
        for (int j = 0; j < n; ++j) {
          if (done[j] || j == i) continue;
          if (sgn(m[i][j]) != 0) { bi = i; bj = j; break; }
        }
      }
      if (bi < 0) {
        for (int i = 0; i < n; ++i)
          if (!done[i]) ++out.zero;
        return out;
      }
      for (int t = 0; t < n; ++t) m[bi][t] += m[bj][t];
      for (int t = 0; t < n; ++t) m[t][bi] += m[t][bj];
      p = bi;
    }
    Q piv = m[p][p];
    if (sgn(piv) > 0) ++out.positive; else ++out.negative;
    done[p] = true;
    for (int i = 0; i < n; ++i) {
      if (done[i] || sgn(m[i][p]) == 0) continue;
      Q f = m[i][p] / piv;
      for (int j = 0; j < n; ++j) m[i][j] -= f * m[p][j];
      for (int j = 0; j < n; ++j) m[j][i] -= f * m[j][p]; // keep symmetry
    }
  }
  return out;
}

MatQ invert(MatQ m) {
  const int n = static_cast<int>(m.size());
  MatQ inv(n, VecQ(n, Q(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (sgn(m[i][c]) != 0) { p = i; break; }
    if (p < 0) throw StructuralError("invert: singular matrix");
    std::swap(m[c], m[p]);
    std::swap(inv[c], inv[p]);
    Q piv = m[c][c];
    for (int j = 0; j < n; ++j) { m[c][j] /= piv; inv[c][j] /= piv; }
    for (int i = 0; i < n; ++i) {
      if (i == c || sgn(m[i][c]) == 0) continue;
      Q f = m[i][c];
      for (int j = 0; j < n; ++j) { m[i][j] -= f * m[c][j]; inv[i][j] -= f * inv[c][j]; }
    }
  }
  return inv;
}

Cholesky cholesky(const MatQ& n0) {
  const int n = static_cast<int>(n0.size());
  MatQ a = n0;
  Cholesky ch;
  ch.d.assign(n, Q(0));
  ch.l.assign(n, VecQ(n, Q(0)));
  for (int i = 0; i < n; ++i) {
    ch.d[i] = a[i][i];
    if (sgn(ch.d[i]) <= 0) throw ConsistencyError("cholesky: matrix not positive definite");
    for (int j = i + 1; j < n; ++j) ch.l[i][j] = a[i][j] / ch.d[i];
    for (int j = i + 1; j < n; ++j)
      for (int k = j; k < n; ++k) a[j][k] -= ch.d[i] * ch.l[i][j] * ch.l[i][k];
  }
  return ch;
}

namespace {

// largest integer z with (z - c)^2 <= t or z <= c
Z adjust_floor(const Q& c, const Q& t, Z guess) {
  auto ok = [&](const Z& z) {
    Q diff = Q(z) - c;
    if (sgn(diff) <= 0) return true;
    return diff * diff <= t;
  };
  while (ok(guess + 1)) guess += 1;
  while (!ok(guess)) guess -= 1;
  return guess;
}

} // namespace

Z floor_plus_sqrt(const Q& c, const Q& t) {
  if (sgn(t) < 0) throw StructuralError("floor_plus_sqrt: negative radicand");
  double approx = c.get_d() + std::sqrt(t.get_d());
  Z guess(static_cast<long>(std::floor(approx)));
  return adjust_floor(c, t, guess);
}

Z ceil_minus_sqrt(const Q& c, const Q& t) {
  return -floor_plus_sqrt(-c, t);
}

long to_ll(const Z& z) {
  if (!z.fits_slong_p()) throw StructuralError("integer overflow: value exceeds 64 bits");
  return z.get_si();
}

} // namespace delpezzo::exact
