#include "delpezzo/enumerate.hpp"

#include "delpezzo/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace delpezzo {

namespace {

using exact::Q;
using exact::Z;

// All z in Z^n with (z - w)^T N (z - w) == target, N positive definite.
std::vector<Vec> enumerate_ellipsoid(const exact::MatQ& n_mat, const exact::VecQ& w,
                                     const Q& target) {
  const int n = static_cast<int>(n_mat.size());
  std::vector<Vec> out;
  if (sgn(target) < 0) return out;
  if (n == 0) {
    if (sgn(target) == 0) out.push_back(Vec{});
    return out;
  }
  exact::Cholesky ch = exact::cholesky(n_mat);

  Vec z(n, 0);
  // used[i] = contribution of levels > i; offsets u_i computed on the fly
  std::vector<Q> used(n + 1, Q(0));

  // depth-first from the last coordinate down
  struct Frame {
    Z lo, hi, cur;
  };
  std::vector<Frame> stack(n);
  int level = n - 1;
  used[n] = 0;

  auto offset = [&](int i) {
    Q u(0);
    for (int j = i + 1; j < n; ++j) u += ch.l[i][j] * (Q(z[j]) - w[j]);
    return u;
  };

  auto enter = [&](int i) -> bool {
    Q rem = target - used[i + 1];
    if (sgn(rem) < 0) return false;
    Q c = w[i] - offset(i);
    Q t = rem / ch.d[i];
    Z lo = exact::ceil_minus_sqrt(c, t);
    Z hi = exact::floor_plus_sqrt(c, t);
    if (lo > hi) return false;
    stack[i] = Frame{lo, hi, lo};
    return true;
  };

  if (!enter(level)) return out;
  while (true) {
    Frame& f = stack[level];
    if (f.cur > f.hi) {
      ++level;
      if (level >= n) break;
      stack[level].cur += 1;
      continue;
    }
    z[level] = exact::to_ll(f.cur);
    Q diff = Q(z[level]) - w[level] + offset(level);
    Q contrib = ch.d[level] * diff * diff;
    used[level] = used[level + 1] + contrib;
    if (level == 0) {
      if (used[0] == target) out.push_back(z);
      f.cur += 1;
      continue;
    }
    if (!enter(level - 1)) {
      f.cur += 1;
      continue;
    }
    --level;
  }
  sort_classes(out);
  return out;
}

struct CosetProblem {
  bool coset_empty = true;
  Vec x0;
  Sublattice aperp;
  exact::MatQ n_mat; // negated restricted Gram, positive definite
  exact::VecQ w;     // ellipsoid center
  Q radius;          // squared radius; solutions (z-w)N(z-w) = radius
};

CosetProblem coset_problem(const MarkedLattice& m, int s) {
  if (!m.hyperbolic())
    throw StructuralError("theta: marked lattice must have signature (1, rank-1)");
  CosetProblem p;
  const IntegerLattice& l = m.lattice();
  Vec g = l.pairing_functional(m.a());
  exact::VecZ gz(g.begin(), g.end());
  auto x0 = exact::solve_linear_diophantine(gz, Z(s));
  if (!x0) return p;
  p.coset_empty = false;
  p.x0.resize(l.rank());
  for (int i = 0; i < l.rank(); ++i) p.x0[i] = exact::to_ll((*x0)[i]);
  p.aperp = orthogonal_complement(l, {m.a()});
  const int k = p.aperp.rank();
  p.n_mat.assign(k, exact::VecQ(k, Q(0)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) p.n_mat[i][j] = -p.aperp.restricted.gram()[i][j];
  exact::VecQ b(k, Q(0));
  for (int i = 0; i < k; ++i) b[i] = l.pair(p.x0, p.aperp.basis[i]);
  Q t0 = Q(l.pair(p.x0, p.x0)) - Q(s - 2);
  if (k == 0) {
    p.radius = t0;
    return p;
  }
  exact::MatQ n_inv = exact::invert(p.n_mat);
  p.w.assign(k, Q(0));
  Q btw(0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) p.w[i] += n_inv[i][j] * b[j];
    btw += b[i] * p.w[i];
  }
  p.radius = t0 + btw;
  return p;
}

Int certified_box_bound(const CosetProblem& p) {
  if (p.coset_empty) return 0;
  const int k = p.aperp.rank();
  Z box = 0;
  for (Int c : p.x0) box = std::max(box, Z(std::labs(c)));
  if (k == 0 || sgn(p.radius) < 0) return exact::to_ll(box);
  exact::MatQ n_inv = exact::invert(p.n_mat);
  // every solution is x = c + B (z - w) with |z_i - w_i| <= sqrt(R (N^-1)_ii),
  // where c = x0 + B w is the ellipsoid center in ambient coordinates
  std::vector<Z> zext(k);
  for (int i = 0; i < k; ++i) {
    Q t = p.radius * n_inv[i][i];
    Z ext = exact::floor_plus_sqrt(Q(0), t);
    if (Q(ext) * Q(ext) < t) ext += 1; // exact ceiling of the square root
    zext[i] = ext;
  }
  const int n = static_cast<int>(p.x0.size());
  box = 0;
  for (int j = 0; j < n; ++j) {
    Q center = p.x0[j];
    for (int i = 0; i < k; ++i) center += p.w[i] * p.aperp.basis[i][j];
    Z bound = exact::floor_plus_sqrt(abs(center), Q(0)) + 1; // >= |center_j|
    for (int i = 0; i < k; ++i) bound += zext[i] * abs(Z(p.aperp.basis[i][j]));
    box = std::max(box, bound);
  }
  return exact::to_ll(box);
}

} // namespace

ThetaResult theta(const MarkedLattice& m, int s) {
  ThetaResult res;
  res.s = s;
  CosetProblem p = coset_problem(m, s);
  if (p.coset_empty) {
    res.coset_empty = true;
    return res;
  }
  res.certified_box = certified_box_bound(p);
  if (p.aperp.rank() == 0) {
    if (m.pair(p.x0, p.x0) == s - 2) res.elements.push_back(p.x0);
    return res;
  }
  for (const auto& z : enumerate_ellipsoid(p.n_mat, p.w, p.radius)) {
    Vec x = p.x0;
    Vec shift = p.aperp.to_ambient(z);
    for (size_t j = 0; j < x.size(); ++j) x[j] += shift[j];
    res.elements.push_back(std::move(x));
  }
  sort_classes(res.elements);
  return res;
}

std::vector<Vec> shell(const IntegerLattice& negdef, Int norm) {
  if (norm >= 0) throw StructuralError("shell: norm must be negative");
  const int n = negdef.rank();
  Signature sig = signature(negdef);
  if (sig.positive != 0 || sig.zero != 0)
    throw StructuralError("shell: lattice is not negative definite");
  exact::MatQ nm(n, exact::VecQ(n, Q(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) nm[i][j] = -negdef.gram()[i][j];
  exact::VecQ w(n, Q(0));
  return enumerate_ellipsoid(nm, w, Q(-norm));
}

ThetaResult theta_closed_form_d1(const MarkedLattice& m, int s) {
  if (m.d() != 1) throw DomainError("theta_closed_form_d1: requires <a,a> = 1");
  if (s < 1 || s > 3) throw DomainError("theta_closed_form_d1: s must be in {1,2,3}");
  if (!m.hyperbolic())
    throw StructuralError("theta_closed_form_d1: signature must be (1, rank-1)");
  ThetaResult res;
  res.s = s;
  Sublattice aperp = orthogonal_complement(m.lattice(), {m.a()});
  const Int norm = -(Int(s) * s - s + 2);
  std::vector<Vec> zs;
  if (aperp.rank() == 0) {
    if (norm == 0) zs.push_back(Vec{});
  } else {
    zs = shell(aperp.restricted, norm);
  }
  for (const auto& z : zs) {
    Vec x = aperp.to_ambient(z);
    for (int j = 0; j < m.rank(); ++j) x[j] += Int(s) * m.a()[j];
    res.elements.push_back(std::move(x));
  }
  sort_classes(res.elements);
  return res;
}

ThetaResult theta_bruteforce(const MarkedLattice& m, int s, Int box) {
  if (box <= 0) throw DomainError("theta_bruteforce: box bound must be positive");
  if (!m.hyperbolic())
    throw StructuralError("theta_bruteforce: signature must be (1, rank-1)");
  const IntegerLattice& l = m.lattice();
  const int n = l.rank();
  const Vec g = l.pairing_functional(m.a());
  const Int d = m.d();
  const Int target_p = Int(s) * s - d * (s - 2); // x^T (gg^T - dG) x on solutions

  Z gram_max = 0, g_max = 0;
  for (int i = 0; i < n; ++i) {
    g_max = std::max(g_max, Z(abs(Z(g[i]))));
    for (int j = 0; j < n; ++j) gram_max = std::max(gram_max, Z(abs(Z(l.gram()[i][j]))));
  }
  if (gram_max * n * n * Z(box) * Z(box) > Z("2000000000000000000") ||
      g_max * n * Z(box) > Z("2000000000000000000"))
    throw StructuralError("theta_bruteforce: box too large for 64-bit search");

  // solve the linear equation for the pivot coordinate (smallest |g_i|)
  int pivot = 0;
  for (int i = 1; i < n; ++i)
    if (g[i] != 0 && (g[pivot] == 0 || std::labs(g[i]) < std::labs(g[pivot]))) pivot = i;
  if (g[pivot] == 0) throw ConsistencyError("theta_bruteforce: degenerate marking");
  std::vector<int> order;
  for (int i = 0; i < n; ++i)
    if (i != pivot) order.push_back(i);
  const int depth_max = static_cast<int>(order.size());
  order.push_back(pivot);

  // Pruning data. P = gg^T - dG is positive semidefinite; eliminating the
  // not-yet-assigned variables from x^T P x by Schur steps gives, for each
  // prefix depth j, the exact minimum of the完 form over real completions:
  // a PSD rational form S_j on the first j coordinates. A subtree is dead
  // when that minimum already exceeds the target.
  std::vector<std::vector<std::vector<__int128>>> schur(depth_max + 1);
  std::vector<__int128> schur_den(depth_max + 1, 1);
  {
    exact::MatQ pq(n, exact::VecQ(n, Q(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) pq[i][j] = Q(Z(g[i]) * g[j] - Z(d) * l.gram()[i][j]);
    for (int t = n - 1; t >= 1; --t) {
      int v = order[t];
      if (sgn(pq[v][v]) != 0) {
        for (int a = 0; a < t; ++a)
          for (int b = 0; b < t; ++b)
            pq[order[a]][order[b]] -= pq[order[a]][v] * pq[v][order[b]] / pq[v][v];
      } else {
        for (int a = 0; a < t; ++a)
          if (sgn(pq[order[a]][v]) != 0)
            throw ConsistencyError("theta_bruteforce: form not positive semidefinite");
      }
      if (t > depth_max) continue;
      Z den = 1;
      for (int a = 0; a < t; ++a)
        for (int b = a; b < t; ++b) den = lcm(den, pq[order[a]][order[b]].get_den());
      Z scale_max = 0;
      std::vector<std::vector<__int128>> mat(t, std::vector<__int128>(t));
      for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b) {
          Z num = pq[order[a]][order[b]].get_num() * (den / pq[order[a]][order[b]].get_den());
          scale_max = std::max(scale_max, Z(abs(num)));
          if (!num.fits_slong_p())
            throw StructuralError("theta_bruteforce: pruning form overflows");
          mat[a][b] = num.get_si();
        }
      if (scale_max * n * n * Z(box) * Z(box) > Z("160000000000000000000000000000000000"))
        throw StructuralError("theta_bruteforce: box too large for exact pruning");
      if (!den.fits_slong_p())
        throw StructuralError("theta_bruteforce: pruning denominator overflows");
      schur[t] = std::move(mat);
      schur_den[t] = den.get_si();
    }
  }
  // reachable window of the linear functional over the remaining coordinates
  std::vector<Int> lin_suffix(n + 1, 0);
  for (int t = n - 1; t >= 0; --t)
    lin_suffix[t] = lin_suffix[t + 1] + std::labs(g[order[t]]) * box;

  ThetaResult res;
  res.s = s;
  res.certified_box = box;
  Vec x(n, 0);
  std::vector<Int> gacc(n, 0); // gacc[t] = sum_fixed gram[t][i] x_i
  Int lin = 0;

  auto leaf = [&]() {
    Int num = Int(s) - lin;
    if (num % g[pivot] != 0) return;
    Int t = num / g[pivot];
    if (std::labs(t) > box) return;
    Int q = 0;
    for (int j = 0; j < depth_max; ++j) q += x[order[j]] * gacc[order[j]];
    q += 2 * t * gacc[pivot] + t * t * l.gram()[pivot][pivot];
    if (q == Int(s) - 2) {
      x[pivot] = t;
      res.elements.push_back(x);
      x[pivot] = 0;
    }
  };

  auto prune = [&](int depth) {
    // linear equation unreachable on the box
    if (std::labs(Int(s) - lin) > lin_suffix[depth + 1]) return true;
    // exact real minimum of the PSD form over all completions
    const int j = depth + 1;
    if (schur[j].empty()) return false;
    __int128 val = 0;
    for (int a = 0; a < j; ++a) {
      __int128 row = 0;
      for (int b = 0; b < j; ++b) row += schur[j][a][b] * x[order[b]];
      val += row * x[order[a]];
    }
    return val > (__int128)target_p * schur_den[j];
  };

  std::vector<Int> val(depth_max + 1, 0);
  int depth = 0;
  if (depth_max == 0) {
    leaf();
    sort_classes(res.elements);
    return res;
  }
  val[0] = -box - 1;
  while (depth >= 0) {
    int idx = order[depth];
    if (val[depth] >= -box) {
      Int v = val[depth];
      for (int t = 0; t < n; ++t) gacc[t] -= v * l.gram()[t][idx];
      lin -= v * g[idx];
      x[idx] = 0;
    }
    if (val[depth] >= box) {
      --depth;
      continue;
    }
    Int v = ++val[depth];
    x[idx] = v;
    lin += v * g[idx];
    for (int t = 0; t < n; ++t) gacc[t] += v * l.gram()[t][idx];
    if (prune(depth)) continue;
    if (depth + 1 == depth_max) {
      leaf();
      continue;
    }
    ++depth;
    val[depth] = -box - 1;
  }
  sort_classes(res.elements);
  return res;
}

SpecialClasses special_classes(const MarkedLattice& m) {
  SpecialClasses sc;
  sc.roots = theta(m, 0);
  sc.exceptional = theta(m, 1);
  sc.p1 = theta(m, 2);
  sc.theta3 = theta(m, 3);
  std::set<Vec> exc(sc.exceptional.elements.begin(), sc.exceptional.elements.end());
  for (const auto& x : sc.theta3.elements) {
    // excluded iff x = a + 2e with e exceptional
    Vec e(x.size());
    bool integral = true;
    for (size_t i = 0; i < x.size(); ++i) {
      Int diff = x[i] - m.a()[i];
      if (diff % 2 != 0) {
        integral = false;
        break;
      }
      e[i] = diff / 2;
    }
    if (integral && exc.count(e)) continue;
    sc.p2.push_back(x);
  }
  return sc;
}

} // namespace delpezzo
