#include "delpezzo.h"

#include "delpezzo/errors.hpp"
#include "delpezzo/json_io.hpp"

#include <cstring>
#include <string>

using namespace delpezzo;

struct dpz_lattice {
  MarkedLattice ml;
};

struct dpz_model {
  VarietyModel vm;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
dpz_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const DomainError& e) {
    g_last_error = e.what();
    return DPZ_ERR_DOMAIN;
  } catch (const StructuralError& e) {
    g_last_error = e.what();
    return DPZ_ERR_STRUCTURAL;
  } catch (const ConsistencyError& e) {
    g_last_error = e.what();
    return DPZ_ERR_INTERNAL;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return DPZ_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DPZ_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return DPZ_ERR_INTERNAL;
  }
}

bool missing(const void* p) { return p == nullptr; }

dpz_status null_arg() {
  g_last_error = "null argument";
  return DPZ_ERR_DOMAIN;
}

json delta_dynkin_json(const MarkedLattice& ml) {
  if (ml.rank() <= 1) {
    RootSystemReport empty;
    return dynkin_to_json(empty);
  }
  Sublattice aperp = orthogonal_complement(ml.lattice(), {ml.a()});
  return dynkin_to_json(dynkin_type(aperp.restricted));
}

} // namespace

extern "C" {

DPZ_API const char* dpz_last_error(void) { return g_last_error.c_str(); }

DPZ_API void dpz_string_free(char* s) { std::free(s); }
DPZ_API void dpz_lattice_free(dpz_lattice* l) { delete l; }
DPZ_API void dpz_model_free(dpz_model* m) { delete m; }

DPZ_API dpz_status dpz_lattice_from_json(const char* text, dpz_lattice** out) {
  if (missing(text) || missing(out)) return null_arg();
  return guarded([&] {
    *out = new dpz_lattice{marked_from_json(json::parse(text))};
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_lattice_to_json(const dpz_lattice* l, char** json_out) {
  if (missing(l) || missing(json_out)) return null_arg();
  return guarded([&] {
    *json_out = dup_string(marked_to_json(l->ml).dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_model_from_preset(const char* name, dpz_model** out) {
  if (missing(name) || missing(out)) return null_arg();
  return guarded([&] {
    *out = new dpz_model{build_preset(name)};
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_model_from_json(const char* text, dpz_model** out) {
  if (missing(text) || missing(out)) return null_arg();
  return guarded([&] {
    Construction c = construction_from_json(json::parse(text));
    *out = new dpz_model{from_construction(c)};
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_model_lattice(const dpz_model* m, dpz_lattice** out) {
  if (missing(m) || missing(out)) return null_arg();
  return guarded([&] {
    *out = new dpz_lattice{m->vm.marked()};
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_model_to_json(const dpz_model* m, char** json_out) {
  if (missing(m) || missing(json_out)) return null_arg();
  return guarded([&] {
    json j = marked_to_json(m->vm.marked());
    j["name"] = m->vm.name();
    j["n"] = m->vm.n();
    j["construction"] = construction_to_json(m->vm.construction());
    *json_out = dup_string(j.dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_theta(const dpz_lattice* l, int s, char** json_out) {
  if (missing(l) || missing(json_out)) return null_arg();
  return guarded([&] {
    *json_out = dup_string(theta_to_json(theta(l->ml, s)).dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_theta_bruteforce(const dpz_lattice* l, int s, long long box, char** json_out) {
  if (missing(l) || missing(json_out)) return null_arg();
  return guarded([&] {
    *json_out = dup_string(theta_to_json(theta_bruteforce(l->ml, s, box)).dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_theta_closed_form_d1(const dpz_lattice* l, int s, char** json_out) {
  if (missing(l) || missing(json_out)) return null_arg();
  return guarded([&] {
    *json_out = dup_string(theta_to_json(theta_closed_form_d1(l->ml, s)).dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_delta_dynkin(const dpz_lattice* l, char** json_out) {
  if (missing(l) || missing(json_out)) return null_arg();
  return guarded([&] {
    *json_out = dup_string(delta_dynkin_json(l->ml).dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_dynkin_of_json(const char* lattice_json, char** json_out) {
  if (missing(lattice_json) || missing(json_out)) return null_arg();
  return guarded([&] {
    IntegerLattice l = lattice_from_json(json::parse(lattice_json));
    *json_out = dup_string(dynkin_to_json(dynkin_type(l)).dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_roots_of_json(const char* lattice_json, char** json_out) {
  if (missing(lattice_json) || missing(json_out)) return null_arg();
  return guarded([&] {
    IntegerLattice l = lattice_from_json(json::parse(lattice_json));
    std::vector<Vec> roots = enumerate_roots(l);
    json arr = json::array();
    for (const auto& r : roots) arr.push_back(json(r));
    *json_out = dup_string(json{{"count", roots.size()}, {"roots", arr}}.dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_decompose_lattice(const dpz_lattice* l, char** json_out) {
  if (missing(l) || missing(json_out)) return null_arg();
  return guarded([&] {
    *json_out = dup_string(decomposition_to_json(decompose(l->ml)).dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_invariants(const dpz_model* m, char** json_out) {
  if (missing(m) || missing(json_out)) return null_arg();
  return guarded([&] {
    *json_out = dup_string(invariants_to_json(m->vm).dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_xi(const dpz_model* m, char** json_out) {
  if (missing(m) || missing(json_out)) return null_arg();
  return guarded([&] {
    *json_out = dup_string(xi_to_json(m->vm).dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_eff_cone(const dpz_model* m, char** json_out) {
  if (missing(m) || missing(json_out)) return null_arg();
  return guarded([&] {
    *json_out = dup_string(cone_to_json(eff_cone(m->vm)).dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_r2_table(const dpz_model* m, char** json_out) {
  if (missing(m) || missing(json_out)) return null_arg();
  return guarded([&] {
    R2Result r = r2_table(m->vm);
    *json_out = dup_string(r2_to_json(r, mov_generators_r2(m->vm)).dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_decompose(const dpz_model* m, char** json_out) {
  if (missing(m) || missing(json_out)) return null_arg();
  return guarded([&] {
    *json_out = dup_string(decomposition_to_json(decompose(m->vm)).dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_census(char** json_out) {
  if (missing(json_out)) return null_arg();
  return guarded([&] {
    *json_out = dup_string(census_to_json().dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_verify_bounds(char** json_out) {
  if (missing(json_out)) return null_arg();
  return guarded([&] {
    BoundsReport rep = verify_bounds(census());
    *json_out = dup_string(bounds_to_json(rep).dump());
    if (!rep.pass) {
      g_last_error = "census bound verification failed";
      return DPZ_ERR_VERIFY;
    }
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_summary_verify(char** json_out) {
  if (missing(json_out)) return null_arg();
  return guarded([&] {
    auto checks = verify_summary_table();
    json j = summary_checks_to_json(checks);
    *json_out = dup_string(j.dump());
    if (!j["all_pass"].get<bool>()) {
      g_last_error = "summary table verification failed";
      return DPZ_ERR_VERIFY;
    }
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_summary_table(char** json_out) {
  if (missing(json_out)) return null_arg();
  return guarded([&] {
    json rows = json::array();
    for (const auto& row : summary_table()) {
      rows.push_back({{"block", row.block},
                      {"d", row.d},
                      {"r", row.r},
                      {"starred", row.starred()},
                      {"delta", row.delta},
                      {"t1", row.t1},
                      {"t2", row.t2},
                      {"t3", row.t3},
                      {"primitive", row.primitive}});
    }
    *json_out = dup_string(json{{"rows", rows}}.dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_catalog_lookup(const char* name, char** json_out) {
  if (missing(name) || missing(json_out)) return null_arg();
  return guarded([&] {
    auto rec = catalog_lookup(name);
    if (!rec) {
      g_last_error = std::string("catalog: no record named '") + name + "'";
      return DPZ_ERR_DOMAIN;
    }
    *json_out = dup_string(variety_record_to_json(*rec).dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_catalog_list(char** json_out) {
  if (missing(json_out)) return null_arg();
  return guarded([&] {
    json rows = json::array();
    for (const auto& r : variety_catalog()) rows.push_back(variety_record_to_json(r));
    *json_out = dup_string(json{{"records", rows}}.dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_bundle_validate(int kz2, int rank, int c2, char** json_out) {
  if (missing(json_out)) return null_arg();
  return guarded([&] {
    BundleSpec spec{kz2, rank, c2};
    BundleInvariants inv = validate_bundle(spec);
    *json_out = dup_string(bundle_invariants_to_json(spec, inv).dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_bundle_dual_c2(int kz2, int c2, int* out) {
  if (missing(out)) return null_arg();
  return guarded([&] {
    *out = dual_c2(BundleSpec{kz2, c2, c2});
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_bundle_maximalize(int kz2, int rank, int c2, char** json_out) {
  if (missing(json_out)) return null_arg();
  return guarded([&] {
    BundleSpec spec = maximalize(BundleSpec{kz2, rank, c2});
    BundleInvariants inv = validate_bundle(spec);
    *json_out = dup_string(bundle_invariants_to_json(spec, inv).dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_quadric_splitting(int d, int n, char** json_out) {
  if (missing(json_out)) return null_arg();
  return guarded([&] {
    *json_out = dup_string(splitting_to_json(quadric_splitting(d, n)).dump());
    return DPZ_OK;
  });
}

DPZ_API dpz_status dpz_bundle_catalog(const char* base, int c2, char** json_out) {
  if (missing(base) || missing(json_out)) return null_arg();
  return guarded([&] {
    BundleCatalogEntry e = catalog_maximal(parse_base_surface(base), c2);
    *json_out = dup_string(bundle_catalog_to_json(e).dump());
    return DPZ_OK;
  });
}

} // extern "C"
