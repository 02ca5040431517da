#include "delpezzo/dynkin.hpp"

#include "delpezzo/enumerate.hpp"
#include "delpezzo/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace delpezzo {

long long classical_root_count(char letter, int rank) {
  switch (letter) {
    case 'A': return static_cast<long long>(rank) * (rank + 1);
    case 'D': return 2LL * rank * (rank - 1);
    case 'E':
      if (rank == 6) return 72;
      if (rank == 7) return 126;
      if (rank == 8) return 240;
      break;
  }
  throw DomainError("classical_root_count: unknown type");
}

std::vector<Vec> enumerate_roots(const IntegerLattice& negdef) {
  if (negdef.rank() == 0) return {};
  return shell(negdef, -2);
}

namespace {

// Deterministic functional positive on no root's kernel: weights 1, M, M^2...
// Each root annihilates only finitely many M, so the scan terminates.
std::vector<Vec> positive_roots(const std::vector<Vec>& roots, int rank) {
  for (Int base = 2;; ++base) {
    std::vector<exact::Z> weights(rank);
    exact::Z w = 1;
    for (int i = 0; i < rank; ++i) {
      weights[i] = w;
      w *= base;
    }
    bool degenerate = false;
    std::vector<Vec> pos;
    for (const auto& r : roots) {
      exact::Z phi = 0;
      for (int i = 0; i < rank; ++i) phi += weights[i] * r[i];
      int sg = sgn(phi);
      if (sg == 0) {
        degenerate = true;
        break;
      }
      if (sg > 0) pos.push_back(r);
    }
    if (!degenerate) return pos;
  }
}

struct ComponentShape {
  char letter;
  int rank;
};

// Classify a connected simply laced diagram by its degree profile.
ComponentShape classify_component(const std::vector<int>& nodes,
                                  const std::vector<std::vector<int>>& adj) {
  const int m = static_cast<int>(nodes.size());
  int branch = -1;
  for (int v : nodes) {
    const int deg = static_cast<int>(adj[v].size());
    if (deg > 3) throw ConsistencyError("dynkin: node of degree > 3");
    if (deg == 3) {
      if (branch >= 0) throw ConsistencyError("dynkin: two branch nodes in one component");
      branch = v;
    }
  }
  if (branch < 0) return {'A', m}; // a path (or a single node)
  // arm lengths from the branch node
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (true) {
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', m};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', m};
  throw ConsistencyError("dynkin: non-simply-laced or invalid diagram shape");
}

} // namespace

RootSystemReport dynkin_type(const IntegerLattice& negdef) {
  RootSystemReport report;
  std::vector<Vec> roots = enumerate_roots(negdef);
  report.total_roots = static_cast<long long>(roots.size());
  if (roots.empty()) return report;

  std::vector<Vec> pos = positive_roots(roots, negdef.rank());
  std::set<Vec> pos_set(pos.begin(), pos.end());

  // simple = indecomposable positive root
  std::vector<Vec> simple;
  for (const auto& r : pos) {
    bool decomposable = false;
    for (const auto& s : pos) {
      Vec diff(r.size());
      for (size_t i = 0; i < r.size(); ++i) diff[i] = r[i] - s[i];
      if (diff == Vec(r.size(), 0)) continue;
      if (pos_set.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(r);
  }
  sort_classes(simple);
  report.simple_roots = simple;

  const int k = static_cast<int>(simple.size());
  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Int p = negdef.pair(simple[i], simple[j]);
      if (p == 0) continue;
      if (p != 1)
        throw ConsistencyError("dynkin: simple-root pairing outside {0,1}");
      adj[i].push_back(j);
      adj[j].push_back(i);
    }

  // connected components
  std::vector<int> comp(k, -1);
  int ncomp = 0;
  for (int i = 0; i < k; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  long long expected_total = 0;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> nodes;
    for (int i = 0; i < k; ++i)
      if (comp[i] == c) nodes.push_back(i);
    ComponentShape shape = classify_component(nodes, adj);
    DynkinComponent dc;
    dc.letter = shape.letter;
    dc.rank = shape.rank;
    dc.root_count = classical_root_count(dc.letter, dc.rank);
    expected_total += dc.root_count;
    report.components.push_back(dc);
  }
  std::sort(report.components.begin(), report.components.end());
  if (expected_total != report.total_roots)
    throw ConsistencyError("dynkin: root count does not match the classical table");
  return report;
}

std::string format_components(const std::vector<DynkinComponent>& components) {
  if (components.empty()) return "0";
  std::string out;
  size_t i = 0;
  while (i < components.size()) {
    size_t j = i;
    while (j < components.size() && components[j].letter == components[i].letter &&
           components[j].rank == components[i].rank)
      ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += components[i].label();
    i = j;
  }
  return out;
}

std::vector<DynkinComponent> parse_components(const std::string& label) {
  std::vector<DynkinComponent> out;
  if (label.empty() || label == "0" || label == "-") return out;
  size_t i = 0;
  while (i < label.size()) {
    int mult = 0;
    while (i < label.size() && isdigit(label[i])) mult = mult * 10 + (label[i++] - '0');
    if (mult == 0) mult = 1;
    if (i >= label.size() || (label[i] != 'A' && label[i] != 'D' && label[i] != 'E'))
      throw DomainError("parse_components: bad label '" + label + "'");
    char letter = label[i++];
    int rank = 0;
    while (i < label.size() && isdigit(label[i])) rank = rank * 10 + (label[i++] - '0');
    if (rank == 0) throw DomainError("parse_components: bad label '" + label + "'");
    DynkinComponent dc;
    dc.letter = letter;
    dc.rank = rank;
    dc.root_count = classical_root_count(letter, rank);
    for (int t = 0; t < mult; ++t) out.push_back(dc);
    if (i < label.size() && (label[i] == '+' || label[i] == 'x')) ++i;
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace delpezzo
