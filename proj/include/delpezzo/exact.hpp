#pragma once

// Exact integer/rational linear algebra on small dense matrices (rank <= 12).
// Everything here is allocation-heavy and unoptimized on purpose; callers are
// combinatorial routines where exactness matters and sizes are tiny.

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace delpezzo::exact {

using Z = mpz_class;
using Q = mpq_class;
using VecZ = std::vector<Z>;
using MatZ = std::vector<std::vector<Z>>; // row major
using VecQ = std::vector<Q>;
using MatQ = std::vector<std::vector<Q>>;

MatZ zeros(int rows, int cols);
MatZ identity(int n);
MatZ transpose(const MatZ& m);
VecZ mat_vec(const MatZ& m, const VecZ& v);
MatZ mat_mul(const MatZ& a, const MatZ& b);
Z dot(const VecZ& a, const VecZ& b);

int rank(MatZ m);

// Basis of { x : m x = 0 }, as columns. The kernel of an integer matrix is a
// saturated subgroup, so the returned basis generates all integer solutions.
std::vector<VecZ> kernel_basis(const MatZ& m);

// One integer solution of sum(g[i] x[i]) = s, via iterated extended gcd.
std::optional<VecZ> solve_linear_diophantine(const VecZ& g, const Z& s);

// One integer solution of m x = b (m need not be square).
std::optional<VecZ> solve_integer_system(const MatZ& m, const VecZ& b);

// Signs of a symmetric rational matrix under congruence diagonalization.
struct SignCounts {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
SignCounts diagonalize_signs(MatQ m);

// Inverse of a nonsingular rational matrix (Gauss-Jordan).
MatQ invert(MatQ m);

// N = sum_i d[i] * (y_i + sum_{j>i} l[i][j] y_j)^2 for positive definite N.
// Throws ConsistencyError if N is not positive definite.
struct Cholesky {
  VecQ d;
  MatQ l; // unit upper triangular, only entries j > i used
};
Cholesky cholesky(const MatQ& n);

// floor(c + sqrt(t)) and ceil(c - sqrt(t)) for rational c and t >= 0.
Z floor_plus_sqrt(const Q& c, const Q& t);
Z ceil_minus_sqrt(const Q& c, const Q& t);

inline Q to_q(const Z& z) { return Q(z); }
long to_ll(const Z& z); // throws StructuralError on overflow

} // namespace delpezzo::exact
