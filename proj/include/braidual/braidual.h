/* C interface to the braidual library. All objects are opaque handles owned by
 * the caller and released with the matching *_free function. Every call returns
 * a bd_status; on failure bd_last_error() describes the problem (per thread). */
#ifndef BRAIDUAL_H
#define BRAIDUAL_H

#include <stddef.h>

#if defined(BRAIDUAL_BUILDING)
#define BD_API __attribute__((visibility("default")))
#else
#define BD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bd_structure bd_structure;
typedef struct bd_report bd_report;

typedef enum {
    BD_OK = 0,
    BD_ERR_PARSE,
    BD_ERR_SHAPE,
    BD_ERR_SINGULAR,
    BD_ERR_NO_ANTIPODE,
    BD_ERR_PRECHECK,
    BD_ERR_ANTIPODE_NOT_INVERTIBLE,
    BD_ERR_INVALID,
    BD_ERR_NOT_CLOSED,
    BD_ERR_VALIDATION,
    BD_ERR_LIMIT,
    BD_ERR_IO,
    BD_ERR_INTERNAL
} bd_status;

typedef enum { BD_PASS = 0, BD_FAIL = 1, BD_SKIPPED = 2 } bd_verdict;

typedef enum {
    BD_DUAL_BIALGEBRA = 0,
    BD_DUAL_HOPF,
    BD_DUAL_PAIR_VERIFY,
    BD_DUAL_DOUBLE
} bd_dualize_what;

typedef enum {
    BD_COMODULE_TO_MODULE = 0,
    BD_MODULE_TO_COMODULE,
    BD_DUALIZE,
    BD_FLIP_SIDE,
    BD_ANTIPODE_FLIP,
    BD_NATURAL_ACTION
} bd_direction;

/* Default cap on the total dimension of any map's domain or codomain; the
 * BRAIDUAL_MAX_DIM environment variable overrides it. */
#define BRAIDUAL_DEFAULT_MAX_DIM 4096

BD_API const char* bd_status_name(bd_status s);
BD_API const char* bd_last_error(void);
/* Position of the last parse error, 0 when not a parse error. */
BD_API size_t bd_last_error_line(void);
BD_API size_t bd_last_error_column(void);

/* Built-in instances: Hopf algebras first, then `<base>/<kind>` (co)modules. */
BD_API size_t bd_catalog_count(void);
BD_API const char* bd_catalog_name(size_t i);
BD_API int bd_is_catalog_name(const char* name);

/* A catalog name, a catalog module name, or a path to a structure file. */
BD_API bd_status bd_load(const char* name_or_path, bd_structure** out);
BD_API bd_status bd_parse(const char* text, bd_structure** out);
/* Text of the structure file; release with bd_string_free. */
BD_API bd_status bd_write(const bd_structure* s, char** text);
BD_API bd_status bd_save(const bd_structure* s, const char* path);
BD_API void bd_structure_free(bd_structure* s);
BD_API void bd_string_free(char* s);

BD_API const char* bd_structure_kind(const bd_structure* s);
/* Dimension of the underlying (acting) space. */
BD_API size_t bd_structure_dim(const bd_structure* s);
BD_API bd_status bd_same(const bd_structure* a, const bd_structure* b, int* equal);

/* Full checker suite for the structure's kind. cutoff >= 0 restricts a graded
 * Hopf algebra to degrees <= cutoff first; pass -1 for no restriction. */
BD_API bd_status bd_check(const bd_structure* s, int cutoff, bd_report** report);
/* out may be NULL; it receives nothing for BD_DUAL_PAIR_VERIFY. Module and
 * comodule inputs are dualized onto the dual carrier whatever `what` says. */
BD_API bd_status bd_dualize(const bd_structure* s, bd_dualize_what what, bd_structure** out,
                     bd_report** report);
/* braiding_inverse != 0 puts Psi^{-1} on the result. */
BD_API bd_status bd_twist(const bd_structure* s, int k, int n, int braiding_inverse, bd_structure** out,
                   bd_report** report);
BD_API bd_status bd_convert(const bd_structure* s, bd_direction d, bd_structure** out, bd_report** report);
/* Right comodules and left modules only. */
BD_API bd_status bd_round_trip(const bd_structure* s, bd_structure** out, bd_report** report);

BD_API int bd_report_passed(const bd_report* r);
BD_API size_t bd_report_size(const bd_report* r);
BD_API bd_status bd_report_entry(const bd_report* r, size_t i, const char** equation, bd_verdict* verdict);
BD_API void bd_report_counts(const bd_report* r, size_t* pass, size_t* fail, size_t* skipped);
/* Keeps entries whose equation id is in the comma-separated list; unknown ids
 * give BD_ERR_INVALID. */
BD_API bd_status bd_report_filter(const bd_report* r, const char* csv, bd_report** out);
/* meta_csv holds key=value pairs separated by commas, or NULL. */
BD_API bd_status bd_report_render(const bd_report* r, int json, const char* meta_csv, char** text);
BD_API void bd_report_free(bd_report* r);

#ifdef __cplusplus
}
#endif

#endif
