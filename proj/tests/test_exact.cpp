#include <doctest.h>

#include "delpezzo/errors.hpp"
#include "delpezzo/exact.hpp"

#include <random>

using namespace delpezzo::exact;

namespace {

// fraction-free determinant (Bareiss)
Z determinant(MatZ m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Z sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

} // namespace

TEST_CASE("sign counts against the leading-minor rule") {
  // when all leading principal minors are nonzero, the number of negative
  // eigenvalues equals the number of sign changes along (1, D1, ..., Dn)
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> entry(-5, 5);
  int done = 0;
  while (done < 200) {
    int n = 2 + static_cast<int>(rng() % 4);
    MatZ m(n, VecZ(n));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m[i][j] = m[j][i] = entry(rng);
    std::vector<Z> minors(n);
    bool ok = true;
    for (int k = 1; k <= n && ok; ++k) {
      MatZ sub(k, VecZ(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub[i][j] = m[i][j];
      minors[k - 1] = determinant(sub);
      if (minors[k - 1] == 0) ok = false;
    }
    if (!ok) continue;
    ++done;
    int changes = 0;
    Z prev = 1;
    for (int k = 0; k < n; ++k) {
      if (sgn(minors[k]) != sgn(prev)) ++changes;
      prev = minors[k];
    }
    MatQ q(n, VecQ(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) q[i][j] = m[i][j];
    SignCounts counts = diagonalize_signs(q);
    CHECK(counts.zero == 0);
    CHECK(counts.negative == changes);
    CHECK(counts.positive == n - changes);
  }
}

TEST_CASE("degenerate forms report zero directions") {
  MatQ zero2(2, VecQ(2, Q(0)));
  SignCounts c = diagonalize_signs(zero2);
  CHECK(c.zero == 2);

  // rank-one positive form
  MatQ rank1 = {{Q(1), Q(2)}, {Q(2), Q(4)}};
  c = diagonalize_signs(rank1);
  CHECK(c.positive == 1);
  CHECK(c.zero == 1);

  // zero diagonal but nonzero pairing: hyperbolic plane
  MatQ hyp = {{Q(0), Q(1)}, {Q(1), Q(0)}};
  c = diagonalize_signs(hyp);
  CHECK(c.positive == 1);
  CHECK(c.negative == 1);
}

TEST_CASE("cholesky accepts positive definite and rejects the rest") {
  MatQ pd = {{Q(2), Q(1)}, {Q(1), Q(2)}};
  Cholesky ch = cholesky(pd);
  CHECK(ch.d[0] == 2);
  CHECK(ch.d[1] == Q(3, 2));
  CHECK(ch.l[0][1] == Q(1, 2));
  MatQ indef = {{Q(1), Q(2)}, {Q(2), Q(1)}};
  CHECK_THROWS_AS(cholesky(indef), delpezzo::ConsistencyError);
}

TEST_CASE("exact square-root brackets") {
  CHECK(floor_plus_sqrt(Q(0), Q(2)) == 1);
  CHECK(floor_plus_sqrt(Q(0), Q(4)) == 2);
  CHECK(floor_plus_sqrt(Q(1, 2), Q(9, 4)) == 2);        // 1/2 + 3/2 = 2 exactly
  CHECK(ceil_minus_sqrt(Q(1, 2), Q(9, 4)) == -1);       // 1/2 - 3/2 = -1 exactly
  CHECK(floor_plus_sqrt(Q(-7), Q(2)) == -6);            // -7 + 1.41...
  CHECK(ceil_minus_sqrt(Q(-7), Q(2)) == -8);
  CHECK(floor_plus_sqrt(Q(3), Q(0)) == 3);
  CHECK_THROWS_AS(floor_plus_sqrt(Q(0), Q(-1)), delpezzo::StructuralError);
}

TEST_CASE("matrix inverse round trip") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-4, 4);
  int done = 0;
  while (done < 50) {
    int n = 1 + static_cast<int>(rng() % 4);
    MatQ m(n, VecQ(n));
    MatZ mz(n, VecZ(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int v = entry(rng);
        m[i][j] = v;
        mz[i][j] = v;
      }
    if (determinant(mz) == 0) continue;
    ++done;
    MatQ inv = invert(m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Q sum(0);
        for (int k = 0; k < n; ++k) sum += m[i][k] * inv[k][j];
        CHECK(sum == (i == j ? Q(1) : Q(0)));
      }
  }
}

TEST_CASE("kernel basis spans exactly the integer kernel") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 300; ++trial) {
    int rows = 1 + rng() % 3, cols = 1 + rng() % 4;
    MatZ m(rows, VecZ(cols));
    for (auto& r : m)
      for (auto& v : r) v = entry(rng);
    auto ker = kernel_basis(m);
    MatZ copy = m;
    CHECK(static_cast<int>(ker.size()) == cols - rank(copy));
    for (const auto& k : ker) {
      auto img = mat_vec(m, k);
      for (const auto& v : img) CHECK(v == 0);
    }
  }
}

TEST_CASE("diophantine solver refuses unsolvable targets") {
  CHECK_FALSE(solve_linear_diophantine({Z(4), Z(6)}, Z(3)).has_value());
  auto sol = solve_linear_diophantine({Z(4), Z(6)}, Z(10));
  REQUIRE(sol);
  CHECK(Z(4) * (*sol)[0] + Z(6) * (*sol)[1] == 10);
  CHECK_FALSE(solve_linear_diophantine({Z(0), Z(0)}, Z(1)).has_value());
  auto zero = solve_linear_diophantine({Z(0), Z(0)}, Z(0));
  REQUIRE(zero);
}
