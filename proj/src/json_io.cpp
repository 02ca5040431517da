#include "delpezzo/json_io.hpp"

#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

json vec_to_json(const Vec& v) { return json(v); }

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("expected an integer array");
  Vec v;
  for (const auto& c : j) v.push_back(c.get<Int>());
  return v;
}

} // namespace

json lattice_to_json(const IntegerLattice& l) {
  json j;
  j["rank"] = l.rank();
  j["gram"] = l.gram();
  j["labels"] = l.labels();
  return j;
}

json marked_to_json(const MarkedLattice& m) {
  json j = lattice_to_json(m.lattice());
  j["a"] = m.a();
  j["d"] = m.d();
  return j;
}

IntegerLattice lattice_from_json(const json& j) {
  if (!j.contains("gram")) throw DomainError("lattice json: missing 'gram'");
  std::vector<std::vector<Int>> gram;
  for (const auto& row : j.at("gram")) gram.push_back(vec_from_json(row));
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  IntegerLattice l(std::move(gram), std::move(labels));
  if (j.contains("rank") && j.at("rank").get<int>() != l.rank())
    throw DomainError("lattice json: 'rank' does not match the gram matrix");
  return l;
}

MarkedLattice marked_from_json(const json& j) {
  IntegerLattice l = lattice_from_json(j);
  if (!j.contains("a")) throw DomainError("marked lattice json: missing 'a'");
  return MarkedLattice(std::move(l), vec_from_json(j.at("a")));
}

Construction construction_from_json(const json& j) {
  Construction c;
  c.op = j.at("op").get<std::string>();
  if (j.contains("d")) c.d = j.at("d").get<int>();
  if (j.contains("n")) c.n = j.at("n").get<int>();
  if (j.contains("k")) c.k = j.at("k").get<int>();
  if (j.contains("of")) c.of = std::make_shared<Construction>(construction_from_json(j.at("of")));
  return c;
}

json construction_to_json(const Construction& c) {
  json j;
  j["op"] = c.op;
  if (c.op == "blowup") {
    j["k"] = c.k ? c.k : 1;
  } else if (c.op != "linear_section") {
    j["d"] = c.d;
    j["n"] = c.n;
  }
  if (c.of) j["of"] = construction_to_json(*c.of);
  return j;
}

json theta_to_json(const ThetaResult& r) {
  json j;
  j["s"] = r.s;
  j["count"] = r.elements.size();
  json elems = json::array();
  for (const auto& e : r.elements) elems.push_back(vec_to_json(e));
  j["elements"] = elems;
  if (r.coset_empty) j["coset_empty"] = true;
  j["certified_box"] = r.certified_box;
  return j;
}

json dynkin_to_json(const RootSystemReport& r) {
  json comps = json::array();
  for (const auto& c : r.components) comps.push_back({{"type", c.label()}, {"roots", c.root_count}});
  json j;
  j["components"] = comps;
  j["total"] = r.total_roots;
  j["label"] = format_components(r.components);
  return j;
}

json invariants_to_json(const VarietyModel& m) {
  ModelInvariants inv = invariants(m);
  json j;
  j["name"] = m.name();
  j["d"] = inv.d;
  j["r"] = inv.r;
  j["n"] = inv.n;
  j["xi_type"] = inv.xi_type;
  j["primitive"] = inv.primitive;
  return j;
}

json xi_to_json(const VarietyModel& m) {
  XiReport rep = xi(m);
  json j;
  j["rank"] = rep.xi.rank();
  j["expected_rank"] = rep.expected_rank;
  j["type"] = rep.type_label();
  j["dynkin"] = dynkin_to_json(rep.report);
  json basis = json::array();
  for (const auto& v : rep.xi.basis) basis.push_back(vec_to_json(v));
  j["basis_in_surface"] = basis;
  return j;
}

json cone_to_json(const ConeReport& r) {
  json rays = json::array();
  for (const auto& ray : r.rays) {
    rays.push_back({{"class", vec_to_json(ray.divisor)},
                    {"kind", ray_kind_name(ray.kind)},
                    {"extremal", ray.extremal}});
  }
  json j;
  j["rays"] = rays;
  json ext = json::array();
  for (const auto& v : r.extremal_rays()) ext.push_back(vec_to_json(v));
  j["extremal_rays"] = ext;
  return j;
}

json r2_to_json(const R2Result& r, const std::vector<Vec>& mov) {
  json j;
  j["d"] = r.row.d;
  j["xi_type"] = r.row.xi_type;
  j["ray1"] = {{"class", vec_to_json(r.ray1)}, {"kind", ray_kind_name(r.row.kind1)}};
  j["ray2"] = {{"class", vec_to_json(r.ray2)}, {"kind", ray_kind_name(r.row.kind2)}};
  j["relation"] = {{"x1", r.row.x1}, {"x2", r.row.x2}, {"k", r.row.k}};
  if (!r.row.note.empty()) j["note"] = r.row.note;
  json movs = json::array();
  for (const auto& v : mov) movs.push_back(vec_to_json(v));
  j["mov_generators"] = movs;
  return j;
}

json census_to_json() {
  json rows = json::array();
  for (const auto& e : census()) {
    json j;
    j["family"] = std::string(1, e.family);
    j["d"] = e.d;
    j["r"] = e.r;
    j["xi_type"] = e.xi_type;
    if (e.n_unbounded) j["n_max"] = "unbounded";
    else j["n_max"] = e.n_max;
    j["uniqueness"] = e.uniqueness;
    if (e.uniqueness == "moduli") j["moduli_dim"] = e.moduli_dim;
    j["primitive"] = e.primitive;
    j["maximal"] = e.maximal;
    j["preset"] = e.preset(e.n_unbounded ? 3 : e.n_max);
    rows.push_back(j);
  }
  return json{{"entries", rows}, {"count", rows.size()}};
}

json bounds_to_json(const BoundsReport& r) {
  return json{{"pass", r.pass}, {"violations", r.violations}};
}

json summary_checks_to_json(const std::vector<RowCheck>& checks) {
  json rows = json::array();
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.pass();
    json j;
    j["block"] = c.row.block;
    j["d"] = c.row.d;
    j["r"] = c.row.r;
    j["starred"] = c.row.starred();
    j["expected"] = {{"delta", c.row.delta},
                     {"t1", c.row.t1},
                     {"t2", c.row.t2},
                     {"t3", c.row.t3},
                     {"primitive", c.row.primitive}};
    j["computed"] = {{"delta", c.computed_delta},
                     {"t1", c.c1},
                     {"t2", c.c2},
                     {"t3", c.c3},
                     {"primitive", c.computed_primitive}};
    j["formulas_pass"] = c.formulas_pass;
    j["pass"] = c.pass();
    rows.push_back(j);
  }
  return json{{"rows", rows}, {"all_pass", all}};
}

json decomposition_to_json(const DecompositionReport& r) {
  json j;
  j["k"] = r.k;
  json exc = json::array();
  for (const auto& e : r.exceptional_set) exc.push_back(vec_to_json(e));
  j["exceptional_set"] = exc;
  j["maximum_set_count"] = r.maximum_set_count;
  j["core"] = marked_to_json(r.core);
  j["core_d"] = r.core_d;
  j["core_r"] = r.core_r;
  j["core_delta"] = r.core_delta;
  j["core_theta"] = {r.core_t1, r.core_t2, r.core_t3};
  j["core_entry"] = r.core_entry;
  return j;
}

json bundle_invariants_to_json(const BundleSpec& spec, const BundleInvariants& inv) {
  json j;
  j["kz2"] = spec.kz2;
  j["rank"] = spec.rank;
  j["c2"] = spec.c2;
  j["d"] = inv.d;
  j["n"] = inv.n;
  j["h1"] = inv.h1;
  j["maximal"] = inv.maximal;
  return j;
}

json splitting_to_json(const SplittingType& t) {
  return json{{"a", t.a}, {"k", t.k}};
}

json bundle_catalog_to_json(const BundleCatalogEntry& e) {
  json j;
  j["base"] = base_surface_name(e.base);
  j["c2"] = e.c2;
  j["rank"] = e.rank;
  j["d"] = e.d;
  j["description"] = e.description;
  switch (e.uniqueness) {
    case BundleUniqueness::Unique: j["uniqueness"] = "unique"; break;
    case BundleUniqueness::OneParameter: j["uniqueness"] = "one-parameter"; break;
    case BundleUniqueness::PointParameterized: j["uniqueness"] = "point-parameterized"; break;
  }
  return j;
}

json variety_record_to_json(const VarietyRecord& r) {
  json j;
  j["name"] = r.name;
  j["d"] = r.d;
  j["r"] = r.r;
  j["n"] = r.n;
  j["equation"] = r.equation;
  j["ambient"] = r.ambient;
  j["singular_locus"] = r.singular_locus;
  j["notes"] = r.notes;
  j["maximal"] = r.maximal;
  return j;
}

} // namespace delpezzo
