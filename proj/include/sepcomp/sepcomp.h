/* sepcomp - separating homomorphisms, weighted compositions and code
 * equivalence over finite groups.
 *
 * C interface to the shared library. Handles are opaque; every entry point
 * returns a status code from sepcomp_status. Workspace files use the
 * line-oriented group/fgroup/hom/code formats described in the README.
 */

#ifndef SEPCOMP_H
#define SEPCOMP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sepcomp_workspace sepcomp_workspace;
typedef struct sepcomp_report sepcomp_report;

typedef enum sepcomp_status {
  SEPCOMP_OK = 0,
  SEPCOMP_ERROR_ARGUMENT = 1,   /* null handle or name */
  SEPCOMP_ERROR_INPUT = 2,      /* parse or validation failure; see last_error */
  SEPCOMP_ERROR_INTERNAL = 3
} sepcomp_status;

sepcomp_workspace* sepcomp_workspace_new(void);
void sepcomp_workspace_free(sepcomp_workspace* ws);

/* Parses a workspace file or an in-memory buffer. Definitions accumulate;
 * cross-file references are resolved when a command needs them. */
sepcomp_status sepcomp_workspace_load_file(sepcomp_workspace* ws,
                                           const char* path);
sepcomp_status sepcomp_workspace_load_text(sepcomp_workspace* ws,
                                           const char* origin,
                                           const char* text);

/* Bound on generated function-group closures (default 1000000 elements). */
sepcomp_status sepcomp_workspace_set_max_closure(sepcomp_workspace* ws,
                                                 unsigned long long bound);

/* Details of the most recent failure on this workspace. The strings stay
 * valid until the next failing call. exit is the CLI exit category (4 for
 * input errors). */
const char* sepcomp_workspace_last_error(const sepcomp_workspace* ws);
const char* sepcomp_workspace_last_error_kind(const sepcomp_workspace* ws);
int sepcomp_workspace_last_error_exit(const sepcomp_workspace* ws);

/* Commands. On SEPCOMP_OK the caller owns *out and must free it. The report
 * carries the full deterministic text (JSON when as_json is nonzero) and the
 * process exit code: 0 success, 2 hypothesis failure, 3 not equivalent,
 * 4 input error. Nonzero-exit reports end with one machine-parseable line
 * `ERR <code> <kind>: <reason>`. */
sepcomp_status sepcomp_command_analyze(sepcomp_workspace* ws,
                                       const char* fgroup_name, int as_json,
                                       sepcomp_report** out);
sepcomp_status sepcomp_command_represent(sepcomp_workspace* ws,
                                         const char* hom_name, int as_json,
                                         sepcomp_report** out);
sepcomp_status sepcomp_command_equiv(sepcomp_workspace* ws, const char* code1,
                                     const char* code2, int as_json,
                                     sepcomp_report** out);
sepcomp_status sepcomp_command_aut(sepcomp_workspace* ws, const char* code_name,
                                   int as_json, sepcomp_report** out);
sepcomp_status sepcomp_command_wenum(sepcomp_workspace* ws,
                                     const char* code_name, int as_json,
                                     sepcomp_report** out);

const char* sepcomp_report_text(const sepcomp_report* report);
int sepcomp_report_exit_code(const sepcomp_report* report);
void sepcomp_report_free(sepcomp_report* report);

const char* sepcomp_version(void);

#ifdef __cplusplus
}
#endif

#endif /* SEPCOMP_H */
