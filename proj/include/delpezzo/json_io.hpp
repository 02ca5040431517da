#pragma once

// JSON encodings of lattices, models and reports. These are the stable
// machine-readable formats used by the CLI and the shared-library API.

#include "delpezzo/summary.hpp"
#include "delpezzo/bundles.hpp"
#include "delpezzo/catalog.hpp"
#include "delpezzo/census.hpp"
#include "delpezzo/cones.hpp"
#include "delpezzo/models.hpp"

#include <json.hpp>

namespace delpezzo {

using json = nlohmann::ordered_json;

// {"rank": int, "gram": [[int]], "labels": [string]}, marked adds {"a": [int]}
json lattice_to_json(const IntegerLattice& l);
json marked_to_json(const MarkedLattice& m);
IntegerLattice lattice_from_json(const json& j);
MarkedLattice marked_from_json(const json& j);

// {"op": ..., "d": ..., "n": ..., "k": ..., "of": {...}}
Construction construction_from_json(const json& j);
json construction_to_json(const Construction& c);

json theta_to_json(const ThetaResult& r);
json dynkin_to_json(const RootSystemReport& r);
json invariants_to_json(const VarietyModel& m);
json xi_to_json(const VarietyModel& m);
json cone_to_json(const ConeReport& r);
json r2_to_json(const R2Result& r, const std::vector<Vec>& mov);
json census_to_json();
json bounds_to_json(const BoundsReport& r);
json summary_checks_to_json(const std::vector<RowCheck>& checks);
json decomposition_to_json(const DecompositionReport& r);
json bundle_invariants_to_json(const BundleSpec& spec, const BundleInvariants& inv);
json splitting_to_json(const SplittingType& t);
json bundle_catalog_to_json(const BundleCatalogEntry& e);
json variety_record_to_json(const VarietyRecord& r);

} // namespace delpezzo
