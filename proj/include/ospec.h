/* ospec — order-spectrum poset toolkit, C API.
 *
 * Opaque handles + integer error codes.  Every function returning int yields
 * OSPEC_OK (0) on success or a negative OSPEC_ERR_* code; the matching
 * message is available from ospec_last_error() on the same thread.  Strings
 * returned through char** are heap-allocated and must be released with
 * ospec_string_free().
 */
#ifndef OSPEC_H
#define OSPEC_H

#include <stddef.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#if defined(OSPEC_BUILD)
#define OSPEC_API __declspec(dllexport)
#else
#define OSPEC_API __declspec(dllimport)
#endif
#else
#define OSPEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define OSPEC_OK 0
#define OSPEC_ERR_INVALID_ARGUMENT (-1)
#define OSPEC_ERR_VALIDATION (-2)
#define OSPEC_ERR_CAP_EXCEEDED (-3)
#define OSPEC_ERR_DOMAIN (-4)
#define OSPEC_ERR_PARSE (-5)
#define OSPEC_ERR_IO (-6)
#define OSPEC_ERR_UNKNOWN (-99)

typedef struct ospec_group_t ospec_group_t;
typedef struct ospec_poset_t ospec_poset_t;   /* analyzed spectrum poset */
typedef struct ospec_report_t ospec_report_t; /* theorem verification run */

OSPEC_API const char* ospec_version(void);

/* Message for the most recent failure on this thread ("" if none). */
OSPEC_API const char* ospec_last_error(void);

OSPEC_API void ospec_string_free(char* s);

/* ---- groups ------------------------------------------------------------ */

/* spec: "cyclic:N" | "dihedral:N" | "heisenberg:P" | "elem-abelian:P:K" |
 * "cayley:PATH" */
OSPEC_API int ospec_group_parse(const char* spec, ospec_group_t** out);
OSPEC_API void ospec_group_free(ospec_group_t* g);

OSPEC_API int ospec_group_order(const ospec_group_t* g);
OSPEC_API int ospec_group_exponent(const ospec_group_t* g);
OSPEC_API int ospec_group_element_order(const ospec_group_t* g, int element);
/* 1 = p-group, 0 = not; *prime_out gets p (0 for the trivial group). */
OSPEC_API int ospec_group_is_p_group(const ospec_group_t* g, int* prime_out);
OSPEC_API int ospec_group_describe(const ospec_group_t* g, char** out);

/* ---- spectrum posets --------------------------------------------------- */

/* Builds the poset of subgroup classes with equal order spectra and analyzes
 * it (chain/lattice/modular/distributive verdicts, N5/M3 witnesses). */
OSPEC_API int ospec_poset_build(const ospec_group_t* g, ospec_poset_t** out);
/* Same, for D_n straight from the closed form (no group table). */
OSPEC_API int ospec_poset_build_dihedral(long n, ospec_poset_t** out);
OSPEC_API void ospec_poset_free(ospec_poset_t* p);

OSPEC_API int ospec_poset_class_count(const ospec_poset_t* p);
/* Each flag pointer may be NULL. */
OSPEC_API int ospec_poset_properties(const ospec_poset_t* p, int* chain,
                                     int* lattice, int* modular,
                                     int* distributive);
OSPEC_API int ospec_poset_class_spectrum(const ospec_poset_t* p, int index,
                                         char** out);
OSPEC_API int ospec_poset_summary(const ospec_poset_t* p, char** out);
OSPEC_API int ospec_poset_to_dot(const ospec_poset_t* p, char** out);
OSPEC_API int ospec_poset_to_json(const ospec_poset_t* p, char** out);

/* *isomorphic gets 0/1; when 1 and mapping_text is non-NULL it receives the
 * class-to-class bijection, one pair per line. */
OSPEC_API int ospec_poset_iso(const ospec_poset_t* a, const ospec_poset_t* b,
                              int* isomorphic, char** mapping_text);

/* ---- theorem verification ---------------------------------------------- */

/* theorem_id: "chain-iff-p-group" | "c2-classification" | "cyclic-iso" |
 * "dihedral-lattice" | "product-iso" | "no-m3" | "n5-characterization" |
 * "modular-classification" | "listing-vs-bruteforce".
 * max_n <= 0 keeps the default range.  atlas: optional cayley-table files
 * added to the group atlas of the chain/c2 checks. */
OSPEC_API int ospec_verify_run(const char* theorem_id, long max_n,
                               const char* const* atlas, size_t atlas_len,
                               ospec_report_t** out);
OSPEC_API void ospec_report_free(ospec_report_t* r);

OSPEC_API int ospec_report_all_passed(const ospec_report_t* r);
/* 0 when some case was skipped because of an enumeration cap. */
OSPEC_API int ospec_report_complete(const ospec_report_t* r);
OSPEC_API int ospec_report_counts(const ospec_report_t* r, int* passed,
                                  int* failed, int* skipped);
OSPEC_API int ospec_report_summary(const ospec_report_t* r, char** out);
OSPEC_API int ospec_report_to_json(const ospec_report_t* r, char** out);

#ifdef __cplusplus
}
#endif

#endif /* OSPEC_H */
