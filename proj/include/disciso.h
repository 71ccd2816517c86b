/*
 * disciso: disc-triangulation isoperimetry toolkit, C API.
 *
 * All functions return a status code; DISCISO_OK (0) on success.  Failed
 * calls leave a message retrievable with disciso_last_error() (thread
 * local).  Strings returned through char** out-parameters are heap
 * allocated and must be released with disciso_string_free(); triangulation
 * handles with disciso_tri_free().
 *
 * Reports are JSON documents.  Each carries "identities_ok" (exact counting
 * identities) and "findings" (closed-form bound violations); findings are
 * data, not errors.
 */
#ifndef DISCISO_H
#define DISCISO_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct disciso_tri disciso_tri; /* opaque */

enum {
  DISCISO_OK = 0,
  DISCISO_EINVAL = 1,    /* malformed input or invariant violation */
  DISCISO_EINTERNAL = 2  /* internal consistency failure */
};

const char* disciso_version(void);
const char* disciso_last_error(void);
void disciso_string_free(char* s);
void disciso_tri_free(disciso_tri* t);

/* --- construction ------------------------------------------------------ */

/* Parses and fully validates a disc-tri/1 JSON document. */
int disciso_tri_parse(const char* json_text, disciso_tri** out);

/* Parses a simple disc map (faces of any length) and completes it to a
 * triangulation by inserting diagonals. */
int disciso_map_parse_and_complete(const char* json_text, disciso_tri** out);

int disciso_build_hexagon(const int sides[6], disciso_tri** out);
int disciso_build_extremal(int n, disciso_tri** out);
int disciso_build_ball(int degree, int radius, long long vertex_cap,
                       disciso_tri** out);
int disciso_build_patch(int radius, disciso_tri** out);

/* Rebuilds a triangulation from its canonical code. */
int disciso_tri_decode(const char* code, disciso_tri** out);

/* --- queries ------------------------------------------------------------ */

int disciso_tri_serialize(const disciso_tri* t, char** json_out);
int disciso_tri_counts(const disciso_tri* t, long long* v, long long* e,
                       long long* f, long long* n);
int disciso_tri_canonical_code(const disciso_tri* t, char** code_out);
int disciso_tri_isomorphic(const disciso_tri* a, const disciso_tri* b,
                           int* result_out);

/* --- reports ------------------------------------------------------------ */

int disciso_check(const disciso_tri* t, char** report_json_out);
int disciso_strip(const disciso_tri* t, char** report_json_out);
int disciso_layers(const disciso_tri* t, char** report_json_out);

/* CSV: n,weil_bound,layered_sum,equal */
int disciso_bounds_table(long long n_min, long long n_max, char** csv_out);

/* CSV: R,V_R,S_R,bfs_V,bfs_S; the recursion is cross-verified against BFS
 * on a constructed ball and fails hard on mismatch. */
int disciso_growth_table(int degree, int r_max, long long vertex_cap,
                         char** csv_out);

/* Exhaustive enumeration of isomorphism classes (boundary n, min internal
 * degree delta_min, at most vertex_cap vertices; 0 picks the default cap).
 * catalog_out (optional) receives one canonical code per line, sorted. */
int disciso_enumerate(int n, int delta_min, long long vertex_cap, int threads,
                      char** summary_json_out, char** catalog_out);

/* Cap-escalation protocol for the true maximal volume. */
int disciso_max_volume(int n, int delta_min, int escalation_limit,
                       int threads, char** report_json_out);

/* Exact minimal edge boundaries of connected lattice sets up to v_max. */
int disciso_animals(int v_max, char** csv_out, char** report_json_out);

/* Degree-7 coverage and isoperimetric profile.  family: "balls" or
 * "connected-sets" (size_limit applies to the latter). */
int disciso_profile(const disciso_tri* t, int radius, const char* family,
                    int size_limit, char** report_json_out);

/* Straight-line SVG drawing; crossings_out (optional) reports overlaps. */
int disciso_render_svg(const disciso_tri* t, int tint_layers, char** svg_out,
                       int* crossings_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DISCISO_H */
