#include "delpezzo/summary.hpp"

#include "delpezzo/errors.hpp"

#include <algorithm>

namespace delpezzo {

const std::vector<SummaryRow>& summary_table() {
  static const std::vector<SummaryRow> rows = [] {
    std::vector<SummaryRow> t;
    auto row = [&](const char* block, char fam, int d, int r, const char* delta, long long t1,
                   long long t2, long long t3, bool prim) {
      t.push_back(SummaryRow{block, fam, d, r, delta, t1, t2, t3, prim});
    };
    // Xi = A1
    row("A1", 'A', 1, 8, "E7", 126, 756, 4032, false);
    row("A1", 'A', 2, 7, "D6", 32, 60, 192, false);
    row("A1", 'A', 3, 6, "A5", 15, 15, 30, false);
    row("A1", 'A', 4, 5, "A1+A3", 8, 6, 8, false);
    row("A1", 'A', 5, 4, "A2", 4, 3, 3, false);
    row("A1", 'A', 6, 3, "A1", 2, 1, 2, false);
    row("A1", 'S', 6, 3, "A2", 0, 3, 0, true);
    row("A1", 'A', 7, 2, "0", 1, 0, 1, false);
    row("A1", 'A', 8, 1, "0", 0, 0, 0, true);
    // Xi = A2
    row("A2", 'A', 1, 7, "E6", 72, 270, 864, false);
    row("A2", 'A', 2, 6, "A5", 20, 30, 60, false);
    row("A2", 'A', 3, 5, "2A2", 9, 9, 12, false);
    row("A2", 'A', 4, 4, "2A1", 4, 4, 4, false);
    row("A2", 'A', 5, 3, "A1", 1, 2, 2, false);
    row("A2", 'A', 6, 2, "A1", 0, 0, 2, true);
    // Xi = A3
    row("A3", 'A', 1, 6, "D5", 40, 90, 160, false);
    row("A3", 'A', 2, 5, "A1+A3", 12, 14, 16, false);
    row("A3", 'A', 3, 4, "2A1", 5, 5, 4, false);
    row("A3", 'A', 4, 3, "0", 2, 2, 2, false);
    row("A3", 'S', 4, 3, "2A1", 0, 4, 0, true);
    row("A3", 'A', 5, 2, "0", 0, 1, 1, true);
    // Xi = A4
    row("A4", 'A', 1, 5, "A4", 20, 30, 40, false);
    row("A4", 'A', 2, 4, "A2", 6, 6, 6, false);
    row("A4", 'A', 3, 3, "A1", 2, 2, 2, false);
    row("A4", 'A', 4, 2, "0", 1, 0, 1, false);
    row("A4", 'A', 5, 1, "0", 0, 0, 0, true);
    // Xi = A5
    row("A5", 'A', 1, 4, "A1+A2", 8, 12, 12, false);
    row("A5", 'A', 2, 3, "A1", 2, 2, 4, false);
    row("A5", 'S', 2, 3, "A2", 0, 6, 0, true);
    row("A5", 'A', 3, 2, "A1", 0, 0, 2, true);
    // Xi = A6
    row("A6", 'A', 1, 3, "A1", 2, 4, 4, false);
    row("A6", 'A', 2, 2, "0", 0, 0, 2, true);
    // Xi = A7
    row("A7", 'A', 1, 2, "0", 0, 0, 2, true);
    // Xi = D4
    row("D4", 'D', 1, 5, "D4", 24, 24, 0, false);
    row("D4", 'D', 2, 4, "3A1", 8, 6, 0, false);
    row("D4", 'D', 3, 3, "0", 3, 3, 0, false);
    row("D4", 'D', 4, 2, "0", 0, 2, 0, true);
    // Xi = D5
    row("D5", 'D', 1, 4, "A3", 12, 6, 0, false);
    row("D5", 'D', 2, 3, "A1", 4, 2, 0, false);
    row("D5", 'D', 3, 2, "0", 1, 1, 0, false);
    row("D5", 'D', 4, 1, "0", 0, 0, 0, true);
    // Xi = D6
    row("D6", 'D', 1, 3, "2A1", 4, 4, 0, false);
    row("D6", 'D', 2, 2, "A1", 0, 2, 0, true);
    // Xi = D7
    row("D7", 'D', 1, 2, "0", 0, 2, 0, true);
    // Xi = E6
    row("E6", 'E', 1, 3, "A2", 6, 0, 0, false);
    row("E6", 'E', 2, 2, "0", 2, 0, 0, false);
    row("E6", 'E', 3, 1, "0", 0, 0, 0, true);
    // Xi = E7
    row("E7", 'E', 1, 2, "A1", 2, 0, 0, false);
    row("E7", 'E', 2, 1, "0", 0, 0, 0, true);
    // Xi = E8
    row("E8", 'E', 1, 1, "0", 0, 0, 0, true);
    return t;
  }();
  return rows;
}

VarietyModel summary_row_model(const SummaryRow& row) {
  // Constructions in the bases the closed formulas are written in: plane
  // bundles for unstarred A rows, quadric bundles for D rows, rank-one
  // blowups for E rows.
  const int d = row.d, r = row.r;
  switch (row.family) {
    case 'A': {
      if (r == 1) return rank_one(d, 3);
      const int k = r - 2;
      if (k == 0) return pbundle_over_p2(d, 3);
      return blowup(pbundle_over_p2(d + k, 3), k);
    }
    case 'S':
      return pbundle_over_p1p1(d, 3);
    case 'D': {
      if (r == 1) return rank_one(d, 3);
      const int k = r - 2;
      if (k == 0) return quadric_bundle_over_p1(d, 3);
      return blowup(quadric_bundle_over_p1(d + k, 3), k);
    }
    case 'E': {
      if (r == 1) return rank_one(d, 3);
      return blowup(rank_one(d + r - 1, 3), r - 1);
    }
  }
  throw ConsistencyError("summary_row_model: unknown family");
}

namespace {

// ----- index machinery for the closed-form families -----

using Subset = std::vector<int>; // strictly increasing indices in 1..k

std::vector<Subset> subsets(int k, int size) {
  std::vector<Subset> out;
  if (size < 0 || size > k) return out;
  Subset cur(size);
  // iterative enumeration of size-subsets of {1..k}
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i + 1;
  while (true) {
    out.push_back(Subset(idx.begin(), idx.end()));
    int p = size - 1;
    while (p >= 0 && idx[p] == k - (size - 1 - p)) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < size; ++q) idx[q] = idx[q - 1] + 1;
    if (size == 0) break;
  }
  if (size == 0) out = {Subset{}};
  return out;
}

void push_with_negative(std::vector<Vec>& out, const Vec& v) {
  out.push_back(v);
  Vec neg(v.size());
  for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  out.push_back(neg);
}

// Type A family in the basis (h, e0, e_1..e_k) mapped to the model basis
// (G, A0, E_1..E_k): h = G, e0 = 3G - A0, e_i = E_i.
struct TypeABuilder {
  int m, k;

  Vec make(Int ch, Int ce0, const Subset& ones, const Subset& twos = {},
           Int all_e_coeff = 0) const {
    // vector ch*h + ce0*e0 + all_e_coeff*e - sum_{ones} e_i - 2 sum_{twos} e_i
    Vec model(2 + k, 0);
    model[0] = ch + 3 * ce0;
    model[1] = -ce0;
    for (int i = 1; i <= k; ++i) model[1 + i] = all_e_coeff;
    for (int i : ones) model[1 + i] -= 1;
    for (int i : twos) model[1 + i] -= 2;
    return model;
  }

  std::vector<Vec> roots() const {
    std::vector<Vec> out;
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        Vec v(2 + k, 0);
        v[1 + i] = 1;
        v[1 + j] = -1; // e_i - e_j
        push_with_negative(out, v);
      }
    for (const auto& s : subsets(k, 3)) push_with_negative(out, make(1, 0, s));
    if (m == 1 && k == 6) push_with_negative(out, make(2, 0, {}, {}, -1));
    if (m <= 2 && k >= 2 - m)
      for (const auto& s : subsets(k, 2 - m)) push_with_negative(out, make(1, -1, s));
    if (m <= 5 && k >= 5 - m)
      for (const auto& s : subsets(k, 5 - m)) push_with_negative(out, make(2, -1, s));
    if (m <= 6 && k == 7 - m)
      for (int i = 1; i <= k; ++i) push_with_negative(out, make(3, -1, {i}, {}, -1));
    return out;
  }

  std::vector<Vec> exceptional() const {
    std::vector<Vec> out;
    for (int i = 1; i <= k; ++i) {
      Vec v(2 + k, 0);
      v[1 + i] = 1; // the class e_i itself
      out.push_back(v);
    }
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) out.push_back(make(1, 0, {i, j}));
    if (m == 1) out.push_back(make(1, -1, {}));
    for (const auto& s : subsets(k, 5)) out.push_back(make(2, 0, s));
    if (m <= 4 && k >= 4 - m)
      for (const auto& s : subsets(k, 4 - m)) out.push_back(make(2, -1, s));
    if (m <= 5 && k >= 6 - m)
      for (const auto& s : subsets(k, 5 - m))
        for (int t = 1; t <= k; ++t) {
          if (std::find(s.begin(), s.end(), t) != s.end()) continue;
          out.push_back(make(3, -1, s, {t}));
        }
    if (m <= 4 && k == 7 - m)
      for (const auto& s : subsets(k, 4 - m)) {
        Vec v = make(4, -1, {}, {}, -2);
        for (int i : s) v[1 + i] += 1;
        out.push_back(v);
      }
    if (m <= 2 && k == 7 - m)
      for (const auto& s : subsets(k, 5)) {
        Vec v = make(4, -2, {}, {}, -2);
        for (int i : s) v[1 + i] += 1;
        out.push_back(v);
      }
    if (m == 1 && k == 7 - m) out.push_back(make(5, -1, {}, {}, -2));
    if (m <= 5 && k == 7 - m)
      for (const auto& s : subsets(k, 2)) {
        Vec v = make(5, -2, {}, {}, -2);
        for (int i : s) v[1 + i] += 1;
        out.push_back(v);
      }
    if (m <= 6 && k == 7 - m)
      for (int i = 1; i <= k; ++i) out.push_back(make(6, -2, {i}, {}, -2));
    return out;
  }
};

// Type D family in the basis (b0 = 2f1 - e0, b1 = f2, e_1..e_k) mapped to the
// model basis (F, A0, E_1..E_k): b0 = A0 - 2F, b1 = F.
struct TypeDBuilder {
  int m, k;

  Vec make(Int cb0, Int cb1, const Subset& ones, const Subset& twos = {},
           Int all_e_coeff = 0) const {
    Vec model(2 + k, 0);
    model[0] = cb1 - 2 * cb0; // F coefficient
    model[1] = cb0;           // A0 coefficient
    for (int i = 1; i <= k; ++i) model[1 + i] = all_e_coeff;
    for (int i : ones) model[1 + i] -= 1;
    for (int i : twos) model[1 + i] -= 2;
    return model;
  }

  std::vector<Vec> roots() const {
    std::vector<Vec> out;
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        Vec v(2 + k, 0);
        v[1 + i] = 1;
        v[1 + j] = -1; // e_i - e_j
        push_with_negative(out, v);
      }
    for (const auto& s : subsets(k, 2)) push_with_negative(out, make(0, 1, s));
    if (m <= 6 && k >= 6 - m)
      for (const auto& s : subsets(k, 6 - m)) push_with_negative(out, make(1, 1, s));
    if (m <= 6 && k == 7 - m)
      for (int i = 1; i <= k; ++i) push_with_negative(out, make(1, 2, {i}, {}, -1));
    return out;
  }

  std::vector<Vec> exceptional() const {
    std::vector<Vec> out;
    for (int i = 1; i <= k; ++i) {
      Vec v(2 + k, 0);
      v[1 + i] = 1; // the class e_i itself
      out.push_back(v);
    }
    for (int i = 1; i <= k; ++i) out.push_back(make(0, 1, {i}));
    if (m <= 5 && k >= 5 - m)
      for (const auto& s : subsets(k, 5 - m)) out.push_back(make(1, 1, s));
    if (m <= 5 && k >= 6 - m)
      for (const auto& s : subsets(k, 5 - m))
        for (int t = 1; t <= k; ++t) {
          if (std::find(s.begin(), s.end(), t) != s.end()) continue;
          out.push_back(make(1, 2, s, {t}));
        }
    if (m <= 5 && k == 7 - m)
      for (const auto& s : subsets(k, 5 - m)) {
        Vec v = make(1, 3, {}, {}, -2);
        for (int i : s) v[1 + i] += 1;
        out.push_back(v);
      }
    if (m <= 6 && k == 7 - m)
      for (int i = 1; i <= k; ++i) {
        Vec v = make(2, 3, {}, {}, -2);
        v[1 + i] += 1;
        out.push_back(v);
      }
    if (m <= 6 && k == 7 - m)
      for (int i = 1; i <= k; ++i) out.push_back(make(2, 4, {i}, {}, -2));
    return out;
  }
};

// Starred rows in the basis (F1, F2, A); no exceptional classes.
std::vector<Vec> starred_roots(int d) {
  std::vector<Vec> out;
  push_with_negative(out, Vec{1, -1, 0});
  if (d == 2) {
    push_with_negative(out, Vec{-1, 0, 1});
    push_with_negative(out, Vec{0, -1, 1});
  } else if (d == 4) {
    push_with_negative(out, Vec{-1, -1, 1});
  } else if (d == 6) {
    push_with_negative(out, Vec{-2, -1, 1});
    push_with_negative(out, Vec{-1, -2, 1});
  }
  return out;
}

// Type E family in the basis (A0, E_1..E_k).
struct TypeEBuilder {
  int m, k;

  std::vector<Vec> roots() const {
    std::vector<Vec> out;
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        Vec v(1 + k, 0);
        v[i] = 1;
        v[j] = -1;
        push_with_negative(out, v);
      }
    if (k == 8 - m)
      for (int i = 1; i <= k; ++i) {
        Vec v(1 + k, -1);
        v[0] = 1;
        v[i] -= 1;
        push_with_negative(out, v);
      }
    return out;
  }

  std::vector<Vec> exceptional() const {
    std::vector<Vec> out;
    for (int i = 1; i <= k; ++i) {
      Vec v(1 + k, 0);
      v[i] = 1;
      out.push_back(v);
    }
    if (m == 6)
      for (int i = 1; i <= k; ++i) {
        Vec v(1 + k, 0);
        v[0] = 1;
        v[i] = -2;
        out.push_back(v);
      }
    if (k == 8 - m)
      for (int i = 1; i <= k; ++i) {
        Vec v(1 + k, -2);
        v[0] = 2;
        v[i] -= 1;
        out.push_back(v);
      }
    return out;
  }
};

} // namespace

ClosedFormSets closed_form_sets(const SummaryRow& row) {
  ClosedFormSets sets;
  const int m = 10 - row.d - row.r;
  if (row.family == 'S') {
    sets.roots = starred_roots(row.d);
  } else if (row.r == 1) {
    // rank-one class groups have no roots and no exceptional classes
  } else if (row.family == 'A') {
    TypeABuilder b{m, row.r - 2};
    sets.roots = b.roots();
    sets.exceptional = b.exceptional();
  } else if (row.family == 'D') {
    TypeDBuilder b{m, row.r - 2};
    sets.roots = b.roots();
    sets.exceptional = b.exceptional();
  } else if (row.family == 'E') {
    TypeEBuilder b{m, row.r - 1};
    sets.roots = b.roots();
    sets.exceptional = b.exceptional();
  }
  sort_classes(sets.roots);
  sort_classes(sets.exceptional);
  sets.roots.erase(std::unique(sets.roots.begin(), sets.roots.end()), sets.roots.end());
  sets.exceptional.erase(std::unique(sets.exceptional.begin(), sets.exceptional.end()),
                         sets.exceptional.end());
  return sets;
}

std::vector<RowCheck> verify_summary_table() {
  std::vector<RowCheck> checks;
  for (const auto& row : summary_table()) {
    RowCheck chk;
    chk.row = row;
    VarietyModel model = summary_row_model(row);
    const MarkedLattice& ml = model.marked();
    SpecialClasses sc = special_classes(ml);
    chk.c1 = static_cast<long long>(sc.exceptional.count());
    chk.c2 = static_cast<long long>(sc.p1.count());
    chk.c3 = static_cast<long long>(sc.p2.size());
    chk.computed_primitive = chk.c1 == 0;
    if (ml.rank() > 1) {
      Sublattice aperp = orthogonal_complement(ml.lattice(), {ml.a()});
      chk.computed_delta = format_components(dynkin_type(aperp.restricted).components);
    } else {
      chk.computed_delta = "0";
    }
    chk.counts_pass = chk.c1 == row.t1 && chk.c2 == row.t2 && chk.c3 == row.t3;
    chk.delta_pass =
        parse_components(chk.computed_delta) == parse_components(row.delta);
    chk.primitive_pass = chk.computed_primitive == row.primitive;
    ClosedFormSets cf = closed_form_sets(row);
    chk.formulas_pass =
        cf.roots == sc.roots.elements && cf.exceptional == sc.exceptional.elements;
    checks.push_back(chk);
  }
  return checks;
}

} // namespace delpezzo
