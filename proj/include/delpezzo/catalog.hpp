#pragma once

// Static catalog of explicit models for the bounded-dimension classes:
// equations, ambient spaces and singular loci, stored as strings.

#include <optional>
#include <string>
#include <vector>

namespace delpezzo {

struct VarietyRecord {
  std::string name; // X_d_r_n, optionally _star
  int d = 0;
  int r = 0;
  int n = 0;
  std::string equation;
  std::string ambient;
  std::string singular_locus;
  std::string notes;
  bool maximal = false;
};

const std::vector<VarietyRecord>& variety_catalog();
std::optional<VarietyRecord> catalog_lookup(const std::string& name);

} // namespace delpezzo
