/* Copyright 2026 The hopfmod Authors
 * SPDX-License-Identifier: Apache-2.0 */

/* C interface of the hopfmod shared library. Reports are opaque handles;
 * strings returned by the library are released with hm_string_free. */

#ifndef HOPFMOD_H_
#define HOPFMOD_H_

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define HM_API __attribute__((visibility("default")))
#else
#define HM_API
#endif

typedef enum hm_status {
  HM_OK = 0,
  HM_VERIFY_FAILED = 1, /* the command ran but a check failed */
  HM_USAGE = 2,         /* bad command, flag, case or polynomial */
  HM_ERROR = 3          /* pipeline or I/O error; see hm_last_error */
} hm_status;

typedef enum hm_format { HM_FORMAT_JSON = 0, HM_FORMAT_MARKDOWN = 1 } hm_format;

typedef struct hm_report hm_report;

typedef struct hm_options {
  const char* command;      /* catalog, disc, ramify, order-p, ... */
  unsigned long p;          /* 0 with verify-fixtures: all primes */
  const char* poly;         /* NULL or polynomial text */
  const char* case_id;      /* NULL or id / 1-based index */
  long budget;              /* generator search budget; 0: default */
  long precision;           /* maximal p-adic precision; 0: default */
  int substitute_p;         /* nonzero: identifier p in poly means the prime */
  const char* fixtures_dir; /* NULL: HOPFMOD_FIXTURES or the built-in path */
} hm_options;

/* Fills *opts with defaults (p = 3, budget 2000, precision 320). */
HM_API void hm_options_init(hm_options* opts);

/* Runs a command. On HM_OK and HM_VERIFY_FAILED *out receives a report that
 * must be released with hm_report_free; otherwise *out is set to NULL. */
HM_API hm_status hm_run(const hm_options* opts, hm_report** out);

/* Renders a report; returns NULL on error. */
HM_API char* hm_report_render(const hm_report* r, hm_format fmt);
/* Parses the JSON rendering back into a report. */
HM_API hm_status hm_report_parse_json(const char* text, hm_report** out);
HM_API int hm_report_passed(const hm_report* r);
/* Number of failures, and the i-th failure message (owned by the report). */
HM_API unsigned long hm_report_failure_count(const hm_report* r);
HM_API const char* hm_report_failure(const hm_report* r, unsigned long i);
HM_API void hm_report_free(hm_report* r);
HM_API void hm_string_free(char* s);

/* Message of the last error on this thread, or "" if none. */
HM_API const char* hm_last_error(void);
/* Newline-separated list of commands; static storage. */
HM_API const char* hm_commands(void);
HM_API const char* hm_version(void);

#ifdef __cplusplus
}
#endif

#endif /* HOPFMOD_H_ */
