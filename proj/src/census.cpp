#include "delpezzo/census.hpp"

#include "delpezzo/errors.hpp"

#include <algorithm>
#include <bitset>
#include <functional>
#include <set>
#include <sstream>

namespace delpezzo {

namespace {

std::string xi_label(char letter, int rank) {
  return std::string(1, letter) + std::to_string(rank);
}

} // namespace

std::string CensusEntry::preset_base() const {
  std::string stem = family == 'D' ? "XD" : family == 'E' ? "XE" : "X";
  std::string name = stem + "_" + std::to_string(d) + "_" + std::to_string(r);
  return name;
}

std::string CensusEntry::preset(int n) const {
  std::string name = preset_base() + "_" + std::to_string(n);
  if (family == 'S') name += "_star";
  return name;
}

const std::vector<CensusEntry>& census() {
  static const std::vector<CensusEntry> entries = [] {
    std::vector<CensusEntry> out;
    auto moduli_pairs = std::set<std::pair<int, int>>{{1, 6}, {1, 7}, {1, 8}, {2, 7}};
    auto pair_pairs = std::set<std::pair<int, int>>{{2, 3}, {4, 3}, {6, 3}};

    auto add_a = [&](int d, int r, bool primitive) {
      CensusEntry e;
      e.family = 'A';
      e.d = d;
      e.r = r;
      e.xi_rank = 10 - d - r;
      e.xi_type = xi_label('A', e.xi_rank);
      e.n_unbounded = false;
      e.n_max = 12 - d - r;
      if (moduli_pairs.count({d, r})) {
        e.uniqueness = "moduli";
        e.moduli_dim = 2 * r - d - 9;
      } else if (pair_pairs.count({d, r})) {
        e.uniqueness = "pair";
      } else {
        e.uniqueness = "unique";
      }
      e.primitive = primitive;
      e.maximal = true;
      out.push_back(e);
    };

    // rank-one members of the plane-bundle tower
    add_a(5, 1, true);
    add_a(8, 1, true);
    // the (d, r) grid with r >= 2
    for (int r = 2; r <= 8; ++r)
      for (int d = 1; d + r <= 9; ++d) {
        bool primitive = (r == 2) && d != 4 && d != 7;
        add_a(d, r, primitive);
      }

    // quadric-surface-bundle primitives, paired with the (d, 3) entries
    for (int d : {2, 4, 6}) {
      CensusEntry e;
      e.family = 'S';
      e.d = d;
      e.r = 3;
      e.xi_rank = 7 - d;
      e.xi_type = xi_label('A', e.xi_rank);
      e.n_unbounded = false;
      e.n_max = 9 - d;
      e.uniqueness = "pair";
      e.primitive = true;
      e.maximal = true;
      out.push_back(e);
    }

    auto add_tower = [&](char family, int d0, int r0, char xi_letter) {
      for (int k = 0; d0 - k >= 1; ++k) {
        CensusEntry e;
        e.family = family;
        e.d = d0 - k;
        e.r = r0 + k;
        e.xi_rank = 10 - e.d - e.r;
        e.xi_type = xi_label(xi_letter, e.xi_rank);
        e.n_unbounded = true;
        e.uniqueness = "unique";
        e.primitive = k == 0;
        e.maximal = false;
        out.push_back(e);
      }
    };
    // quadric-bundle towers over the line and the rank-one (2,2)-intersection
    add_tower('D', 4, 2, 'D'); // D4 chain
    add_tower('D', 4, 1, 'D'); // D5 chain
    add_tower('D', 2, 2, 'D'); // D6 chain
    add_tower('D', 1, 2, 'D'); // D7 chain
    // low-degree rank-one towers
    add_tower('E', 3, 1, 'E');
    add_tower('E', 2, 1, 'E');
    add_tower('E', 1, 1, 'E');
    return out;
  }();
  return entries;
}

long long isomorphism_class_count(int d) {
  long long total = 0;
  bool any = false;
  for (const auto& e : census()) {
    if (e.d != d) continue;
    any = true;
    if (e.n_unbounded)
      throw DomainError("isomorphism classes of degree " + std::to_string(d) +
                        " are not n-bounded");
    total += e.n_max - 2; // n ranges over 3..n_max
  }
  if (!any) throw DomainError("no census entries of degree " + std::to_string(d));
  return total;
}

BoundsReport verify_bounds(const std::vector<CensusEntry>& entries) {
  BoundsReport rep;
  auto fail = [&](const CensusEntry& e, const std::string& what) {
    rep.pass = false;
    std::ostringstream os;
    os << e.preset_base() << " (family " << e.family << "): " << what;
    rep.violations.push_back(os.str());
  };
  for (const auto& e : entries) {
    if (e.d + e.r > 9) fail(e, "d + r > 9");
    if (e.family == 'A' || e.family == 'S') {
      if (e.n_unbounded) fail(e, "type A entry with unbounded n");
      else if (e.d + e.r + e.n_max > 12) fail(e, "d + r + n exceeds 12");
    }
    if (e.family == 'D') {
      if (e.d > 4) fail(e, "type D entry with d > 4");
      if (e.d + e.r > 6) fail(e, "type D entry with d + r > 6");
    }
    if (e.family == 'E') {
      if (e.d > 3) fail(e, "type E entry with d > 3");
      if (e.d + e.r > 6) fail(e, "type E entry with d + r > 6");
    }
  }
  return rep;
}

VarietyModel build_entry(const CensusEntry& e, int n) {
  if (n < 3) throw DomainError("dimension must be at least 3");
  if (!e.n_unbounded && n > e.n_max)
    throw DomainError("dimension exceeds " + std::to_string(e.n_max) + " for " +
                      e.preset_base());
  switch (e.family) {
    case 'A': {
      if (e.r == 1) return rank_one(e.d, n);
      if (e.d + e.r == 9) {
        // the top chain of the type A map: iterated point blowups of
        // projective 3-space, presented in the (H, E_1, ..., E_k) basis
        return blowup(rank_one(8, n), e.r - 1);
      }
      const int k = e.r - 2;
      if (k == 0) return pbundle_over_p2(e.d, n);
      return blowup(pbundle_over_p2(e.d + k, n), k);
    }
    case 'S':
      return pbundle_over_p1p1(e.d, n);
    case 'D': {
      if (e.r == 1) return rank_one(e.d, n);
      const int k = e.r - 2;
      if (k == 0) return quadric_bundle_over_p1(e.d, n);
      return blowup(quadric_bundle_over_p1(e.d + k, n), k);
    }
    case 'E': {
      if (e.r == 1) return rank_one(e.d, n);
      const int k = e.r - 1;
      return blowup(rank_one(e.d + k, n), k);
    }
  }
  throw ConsistencyError("build_entry: unknown family");
}

namespace {

const CensusEntry* find_entry(char family, int d, int r) {
  for (const auto& e : census())
    if (e.family == family && e.d == d && e.r == r) return &e;
  return nullptr;
}

} // namespace

VarietyModel build_preset(const std::string& name) {
  // grammar: (X|XD|XE)_d_r_n[_star]
  std::vector<std::string> parts;
  std::string cur;
  for (char c : name) {
    if (c == '_') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  bool starred = !parts.empty() && parts.back() == "star";
  if (starred) parts.pop_back();
  if (parts.size() != 4) throw DomainError("bad preset name '" + name + "'");
  const std::string& stem = parts[0];
  int d, r, n;
  try {
    d = std::stoi(parts[1]);
    r = std::stoi(parts[2]);
    n = std::stoi(parts[3]);
  } catch (...) {
    throw DomainError("bad preset name '" + name + "'");
  }
  char family;
  if (stem == "XD") family = 'D';
  else if (stem == "XE") family = 'E';
  else if (stem == "X") family = starred ? 'S' : 'A';
  else throw DomainError("bad preset name '" + name + "'");
  if (family == 'A' && r == 1) {
    // rank-one degrees resolve to their tower
    if (d == 4) family = 'D';
    else if (d <= 3) family = 'E';
  }
  const CensusEntry* e = find_entry(family, d, r);
  if (!e) throw DomainError("unknown preset '" + name + "'");
  return build_entry(*e, n);
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& e : census()) names.push_back(e.preset(e.n_unbounded ? 3 : e.n_max));
  return names;
}

namespace {

constexpr size_t kMaxCandidates = 192;

struct CliqueSearch {
  int n = 0;
  std::vector<std::bitset<kMaxCandidates>> adj;
  int best = -1;
  std::vector<int> best_set;
  long long count = 0;
  std::vector<int> current;

  void run(std::bitset<kMaxCandidates> cand, int from) {
    int size = static_cast<int>(current.size());
    int avail = static_cast<int>(cand.count());
    if (size + avail < best) return; // cannot reach the maximum
    if (avail == 0) {
      if (size > best) {
        best = size;
        best_set = current;
        count = 1;
      } else if (size == best) {
        ++count;
      }
      return;
    }
    // also account for closing the clique here when nothing extends it to
    // a larger one: handled by the loop below plus the empty-cand base case
    bool any = false;
    for (int v = from; v < n; ++v) {
      if (!cand[v]) continue;
      any = true;
      current.push_back(v);
      run(cand & adj[v], v + 1);
      current.pop_back();
    }
    if (!any) {
      if (size > best) {
        best = size;
        best_set = current;
        count = 1;
      } else if (size == best) {
        ++count;
      }
    }
  }
};

} // namespace

namespace {

// complete a chosen orthogonal exceptional set into a full report
DecompositionReport finish_report(const MarkedLattice& ml, std::vector<Vec> chosen,
                                  long long set_count) {
  DecompositionReport rep;
  rep.k = static_cast<int>(chosen.size());
  rep.maximum_set_count = set_count;
  rep.exceptional_set = std::move(chosen);
  if (rep.exceptional_set.empty()) {
    rep.core = ml;
  } else {
    Sublattice comp = orthogonal_complement(ml.lattice(), rep.exceptional_set);
    Vec a0(ml.rank(), 0);
    for (int i = 0; i < ml.rank(); ++i) a0[i] = ml.a()[i];
    for (const auto& e : rep.exceptional_set)
      for (int i = 0; i < ml.rank(); ++i) a0[i] += e[i];
    // express a0 in core coordinates
    exact::MatZ cols = exact::zeros(ml.rank(), comp.rank());
    for (int j = 0; j < comp.rank(); ++j)
      for (int i = 0; i < ml.rank(); ++i) cols[i][j] = comp.basis[j][i];
    exact::VecZ rhs(a0.begin(), a0.end());
    auto coords = exact::solve_integer_system(cols, rhs);
    if (!coords) throw ConsistencyError("decompose: marked class not in the core");
    Vec a_core(comp.rank());
    for (int i = 0; i < comp.rank(); ++i) a_core[i] = exact::to_ll((*coords)[i]);
    rep.core = MarkedLattice(comp.restricted, a_core);
  }

  rep.core_d = rep.core.d();
  rep.core_r = rep.core.rank();
  if (rep.core_d != ml.d() + rep.k)
    throw ConsistencyError("decompose: core degree is not d + k");
  SpecialClasses sc = special_classes(rep.core);
  if (!sc.exceptional.elements.empty())
    throw ConsistencyError("decompose: core is not primitive");
  rep.core_t1 = static_cast<long long>(sc.exceptional.count());
  rep.core_t2 = static_cast<long long>(sc.p1.count());
  rep.core_t3 = static_cast<long long>(sc.p2.size());
  if (rep.core_r > 1) {
    Sublattice aperp = orthogonal_complement(rep.core.lattice(), {rep.core.a()});
    rep.core_delta = format_components(dynkin_type(aperp.restricted).components);
  } else {
    rep.core_delta = "0";
  }
  // match the core against the primitive census entries
  for (const auto& e : census()) {
    if (!e.primitive || e.d != rep.core_d || e.r != rep.core_r) continue;
    VarietyModel model = build_entry(e, 3);
    SpecialClasses msc = special_classes(model.marked());
    std::string mdelta = "0";
    if (model.r() > 1) {
      Sublattice aperp = orthogonal_complement(model.marked().lattice(), {model.marked().a()});
      mdelta = format_components(dynkin_type(aperp.restricted).components);
    }
    if (mdelta == rep.core_delta && msc.exceptional.count() == (size_t)rep.core_t1 &&
        msc.p1.count() == (size_t)rep.core_t2 && msc.p2.size() == (size_t)rep.core_t3) {
      rep.core_entry = e.preset_base();
      break;
    }
  }
  return rep;
}

} // namespace

DecompositionReport decompose(const MarkedLattice& ml) {
  ThetaResult t1 = theta(ml, 1);
  const auto& exc = t1.elements;
  const int n = static_cast<int>(exc.size());
  if (n > static_cast<int>(kMaxCandidates))
    throw StructuralError("decompose: too many exceptional classes");
  if (n == 0) return finish_report(ml, {}, 1);

  CliqueSearch cs;
  cs.n = n;
  cs.adj.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && ml.pair(exc[i], exc[j]) == 0) cs.adj[i][j] = true;
  std::bitset<kMaxCandidates> all;
  for (int i = 0; i < n; ++i) all[i] = true;
  cs.best = 0;
  cs.run(all, 0);
  std::vector<Vec> chosen;
  for (int v : cs.best_set) chosen.push_back(exc[v]);
  return finish_report(ml, std::move(chosen), cs.count);
}

DecompositionReport decompose(const VarietyModel& m) { return decompose(m.marked()); }

std::optional<DecompositionReport> decompose_at_depth(const MarkedLattice& ml, int k) {
  if (k < 0) throw DomainError("decompose_at_depth: negative depth");
  ThetaResult t1 = theta(ml, 1);
  const auto& exc = t1.elements;
  const int n = static_cast<int>(exc.size());
  std::vector<std::vector<bool>> orth(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) orth[i][j] = i != j && ml.pair(exc[i], exc[j]) == 0;
  std::vector<int> current;
  long long found = 0;
  std::vector<int> first;
  std::function<void(int)> search = [&](int from) {
    if (static_cast<int>(current.size()) == k) {
      // inclusion-maximal: nothing outside is orthogonal to the whole set
      for (int v = 0; v < n; ++v) {
        bool extends = true;
        for (int c : current)
          if (!orth[c][v]) {
            extends = false;
            break;
          }
        if (extends) return;
      }
      if (found == 0) first = current;
      ++found;
      return;
    }
    for (int v = from; v < n; ++v) {
      bool ok = true;
      for (int c : current)
        if (!orth[c][v]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(v);
      search(v + 1);
      current.pop_back();
    }
  };
  if (k == 0) {
    if (n > 0) return std::nullopt; // extendable, not maximal
    return finish_report(ml, {}, 1);
  }
  search(0);
  if (found == 0) return std::nullopt;
  std::vector<Vec> chosen;
  for (int v : first) chosen.push_back(exc[v]);
  return finish_report(ml, std::move(chosen), found);
}

} // namespace delpezzo
