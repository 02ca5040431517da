/* C interface to the del Pezzo lattice library.
 *
 * All functions return a dpz_status; DPZ_OK means success. On any failure the
 * thread-local message from dpz_last_error() describes the problem. Objects
 * are opaque handles released with their _free function; strings returned
 * through char** are heap-allocated JSON and released with dpz_string_free.
 */
#ifndef DELPEZZO_H
#define DELPEZZO_H

#if defined(_WIN32)
#define DPZ_API __declspec(dllexport)
#elif defined(__GNUC__)
#define DPZ_API __attribute__((visibility("default")))
#else
#define DPZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dpz_status {
  DPZ_OK = 0,
  DPZ_ERR_DOMAIN = 1,     /* bad parameters, unknown preset, malformed input */
  DPZ_ERR_STRUCTURAL = 2, /* shape/invariant violations in supplied data */
  DPZ_ERR_INTERNAL = 3,   /* internal consistency check failed */
  DPZ_ERR_VERIFY = 4      /* a verification ran and reported failures */
} dpz_status;

typedef struct dpz_lattice dpz_lattice; /* marked integer lattice */
typedef struct dpz_model dpz_model;     /* variety model (lattice + provenance) */

DPZ_API const char* dpz_last_error(void);
DPZ_API void dpz_string_free(char* s);
DPZ_API void dpz_lattice_free(dpz_lattice* l);
DPZ_API void dpz_model_free(dpz_model* m);

/* construction ------------------------------------------------------- */

/* {"rank":..,"gram":[[..]],"labels":[..],"a":[..]} */
DPZ_API dpz_status dpz_lattice_from_json(const char* json, dpz_lattice** out);
DPZ_API dpz_status dpz_lattice_to_json(const dpz_lattice* l, char** json_out);

/* preset names: X_d_r_n, X_d_3_n_star, XD_d_r_n, XE_d_r_n */
DPZ_API dpz_status dpz_model_from_preset(const char* name, dpz_model** out);
/* {"op":"blowup","k":1,"of":{"op":"pbundle_p2","d":6,"n":4}} */
DPZ_API dpz_status dpz_model_from_json(const char* json, dpz_model** out);
DPZ_API dpz_status dpz_model_lattice(const dpz_model* m, dpz_lattice** out);
DPZ_API dpz_status dpz_model_to_json(const dpz_model* m, char** json_out);

/* queries on marked lattices ------------------------------------------ */

DPZ_API dpz_status dpz_theta(const dpz_lattice* l, int s, char** json_out);
DPZ_API dpz_status dpz_theta_bruteforce(const dpz_lattice* l, int s, long long box, char** json_out);
DPZ_API dpz_status dpz_theta_closed_form_d1(const dpz_lattice* l, int s, char** json_out);
/* roots and ADE type of a^perp */
DPZ_API dpz_status dpz_delta_dynkin(const dpz_lattice* l, char** json_out);
/* ADE type of a negative definite lattice given as unmarked json */
DPZ_API dpz_status dpz_dynkin_of_json(const char* lattice_json, char** json_out);
/* all vectors of square -2 in a negative definite lattice */
DPZ_API dpz_status dpz_roots_of_json(const char* lattice_json, char** json_out);
DPZ_API dpz_status dpz_decompose_lattice(const dpz_lattice* l, char** json_out);

/* queries on models ---------------------------------------------------- */

DPZ_API dpz_status dpz_invariants(const dpz_model* m, char** json_out);
DPZ_API dpz_status dpz_xi(const dpz_model* m, char** json_out);
DPZ_API dpz_status dpz_eff_cone(const dpz_model* m, char** json_out);
DPZ_API dpz_status dpz_r2_table(const dpz_model* m, char** json_out);
DPZ_API dpz_status dpz_decompose(const dpz_model* m, char** json_out);

/* global data ----------------------------------------------------------- */

DPZ_API dpz_status dpz_census(char** json_out);
/* DPZ_OK when all bounds hold, DPZ_ERR_VERIFY otherwise (json always emitted) */
DPZ_API dpz_status dpz_verify_bounds(char** json_out);
/* full summary-table verification; DPZ_ERR_VERIFY when any row fails */
DPZ_API dpz_status dpz_summary_verify(char** json_out);
DPZ_API dpz_status dpz_summary_table(char** json_out);
DPZ_API dpz_status dpz_catalog_lookup(const char* name, char** json_out);
DPZ_API dpz_status dpz_catalog_list(char** json_out);

/* bundle calculus -------------------------------------------------------- */

DPZ_API dpz_status dpz_bundle_validate(int kz2, int rank, int c2, char** json_out);
DPZ_API dpz_status dpz_bundle_dual_c2(int kz2, int c2, int* out);
DPZ_API dpz_status dpz_bundle_maximalize(int kz2, int rank, int c2, char** json_out);
DPZ_API dpz_status dpz_quadric_splitting(int d, int n, char** json_out);
DPZ_API dpz_status dpz_bundle_catalog(const char* base, int c2, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* DELPEZZO_H */
