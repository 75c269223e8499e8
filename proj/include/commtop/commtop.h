#ifndef COMMTOP_H
#define COMMTOP_H

/* C interface to the commtop library. All handles are opaque; every
 * function returning ct_status leaves a message for ct_last_error() on
 * failure. Strings returned by the library stay valid until the owning
 * handle is freed (ct_last_error: until the next failing call on the same
 * thread). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CT_API __declspec(dllexport)
#else
#define CT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ct_status {
  CT_OK = 0,
  CT_ERR_INTERNAL = 1,  /* unexpected failure */
  CT_ERR_INPUT = 2,     /* parse or validation error */
  CT_ERR_BUDGET = 3,    /* enumeration budget exceeded */
  CT_ERR_INVARIANT = 4  /* a mathematical check failed */
} ct_status;

typedef struct ct_group ct_group;
typedef struct ct_extension ct_extension;
typedef struct ct_cocycle ct_cocycle;
typedef struct ct_report ct_report;

CT_API const char* ct_version(void);
CT_API const char* ct_last_error(void);

/* Groups: a spec file, spec text, or a catalog name such as "Q8". */
CT_API ct_status ct_group_load(const char* path, ct_group** out);
CT_API ct_status ct_group_parse(const char* json_text, ct_group** out);
CT_API ct_status ct_group_catalog(const char* name, ct_group** out);
CT_API size_t ct_group_order(const ct_group* g);
CT_API const char* ct_group_label(const ct_group* g);
CT_API void ct_group_free(ct_group* g);

/* Torus extensions: spec file, spec text, or catalog name such as "O2". */
CT_API ct_status ct_extension_load(const char* path, ct_extension** out);
CT_API ct_status ct_extension_parse(const char* json_text, ct_extension** out);
CT_API ct_status ct_extension_catalog(const char* name, ct_extension** out);
CT_API size_t ct_extension_rank(const ct_extension* e);
CT_API const char* ct_extension_label(const ct_extension* e);
CT_API void ct_extension_free(ct_extension* e);

/* Cocycles are read relative to an extension (element names, rank). */
CT_API ct_status ct_cocycle_load(const char* path, const ct_extension* e, ct_cocycle** out);
CT_API ct_status ct_cocycle_parse(const char* json_text, const ct_extension* e, ct_cocycle** out);
CT_API void ct_cocycle_free(ct_cocycle* c);

typedef struct ct_options {
  size_t max_dim;            /* default 2 */
  size_t denominator;        /* default 12 */
  size_t search_denominator; /* 0 = denominator * |F| */
  uint64_t budget;           /* default 10^7 */
  unsigned threads;          /* 0 = hardware concurrency */
  const char* fixtures_path; /* NULL = no regression pins */
} ct_options;

CT_API void ct_options_init(ct_options* o);

CT_API size_t ct_command_count(void);
CT_API const char* ct_command_name(size_t i);

/* Runs a subcommand. Inputs the command does not use may be NULL. When a
 * check fails the report is still produced and CT_ERR_INVARIANT returned;
 * the caller frees *out in both cases. */
CT_API ct_status ct_run(const char* command, const ct_group* g, const ct_extension* e, const ct_cocycle* c,
                        const ct_options* o, ct_report** out);

CT_API int ct_report_ok(const ct_report* r);
CT_API const char* ct_report_text(const ct_report* r);
CT_API const char* ct_report_json(const ct_report* r);
CT_API void ct_report_free(ct_report* r);

#ifdef __cplusplus
}
#endif

#endif
