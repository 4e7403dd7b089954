/* C interface to the tanlift verification engine.
 *
 * Objects are opaque and owned by the caller once returned; release them with
 * the matching *_free function. Every call that can fail returns a tl_status
 * and records a thread-local message readable with tl_last_error_message.
 */
#ifndef TANLIFT_TANLIFT_H
#define TANLIFT_TANLIFT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define TL_API __attribute__((visibility("default")))
#else
#define TL_API
#endif

typedef struct tl_definition tl_definition;
typedef struct tl_report tl_report;

typedef enum tl_status {
  TL_OK = 0,
  TL_ERR_INVALID_ARGUMENT,
  TL_ERR_PARSE,
  TL_ERR_VARIABLE_MISMATCH,
  TL_ERR_MISSING_ASSIGNMENT,
  TL_ERR_EPSILON_MISMATCH,
  TL_ERR_NOT_UNIMODULAR,
  TL_ERR_INEXACT_DIVISION,
  TL_ERR_CHART_MISMATCH,
  TL_ERR_VALENCE_MISMATCH,
  TL_ERR_MISSING_CONNECTION,
  TL_ERR_MISSING_METRIC,
  TL_ERR_UNSUPPORTED,
  TL_ERR_ODD_DIMENSION,
  TL_ERR_INTERNAL
} tl_status;

typedef enum tl_mode {
  TL_MODE_DEFAULT = 0, /* keep the definition's own mode */
  TL_MODE_PAPER_LITERAL,
  TL_MODE_CONSISTENT
} tl_mode;

typedef enum tl_signature { TL_RIEMANNIAN = 0, TL_LORENTZIAN } tl_signature;

typedef enum tl_format { TL_FORMAT_HUMAN = 0, TL_FORMAT_MACHINE } tl_format;

typedef struct tl_run_options {
  tl_mode mode;
  uint64_t seed;
} tl_run_options;

/* Default mode and the fixed default seed. */
TL_API void tl_run_options_init(tl_run_options* options);
TL_API uint64_t tl_default_seed(void);

TL_API const char* tl_status_string(tl_status status);
/* Message of the last failed call on this thread, "" if none. */
TL_API const char* tl_last_error_message(void);
/* 1-based location of the last parse error, 0 when not a parse error. */
TL_API size_t tl_last_error_line(void);
TL_API size_t tl_last_error_column(void);

TL_API tl_status tl_definition_parse(const char* text, size_t length, tl_definition** out);
TL_API tl_status tl_definition_canonical(int n, int r, int epsilon, tl_signature signature, tl_mode mode,
                                         tl_definition** out);
/* Canonical text; release with tl_string_free. */
TL_API tl_status tl_definition_emit(const tl_definition* def, char** out);
/* 1 if equal, 0 if not or if either argument is NULL. */
TL_API int tl_definition_equal(const tl_definition* a, const tl_definition* b);
TL_API size_t tl_definition_task_count(const tl_definition* def);
TL_API void tl_definition_free(tl_definition* def);

/* Runs `tasks` (newline-separated task lines) or, when NULL, the
 * definition's own task list. options may be NULL for defaults. */
TL_API tl_status tl_run(const tl_definition* def, const char* tasks, const tl_run_options* options,
                        tl_report** out);
TL_API tl_status tl_run_demo(const tl_run_options* options, tl_report** out);

TL_API tl_status tl_report_render(const tl_report* report, tl_format format, char** out);
TL_API int tl_report_passed(const tl_report* report);
/* 0 iff every non-informational verdict passed, else 1. */
TL_API int tl_report_exit_status(const tl_report* report);
TL_API void tl_report_free(tl_report* report);

TL_API void tl_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* TANLIFT_TANLIFT_H */
