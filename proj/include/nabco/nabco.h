/* Copyright 2026 The nabco authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface of the nabco library: exact computations with graded Lie
 * algebra extensions (validation, cohomology, graded-section varieties,
 * the stage-by-stage lifting tower, section normalization) and the
 * Laurent-cocycle check for the multiplicative group.
 *
 * All strings handed out through out-parameters are heap-allocated and
 * owned by the caller; release them with nabco_free.  Every function is
 * safe to call from multiple threads as long as each nabco_document is
 * used by one thread at a time.
 */

#ifndef NABCO_NABCO_H_
#define NABCO_NABCO_H_

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nabco_status {
  NABCO_OK = 0,
  /* Malformed or mathematically invalid input; details in out_error or,
   * for the validate command, in the report. */
  NABCO_INVALID_INPUT = 1,
  /* A computation-level failure (an internal invariant did not hold). */
  NABCO_COMPUTE_ERROR = 2
} nabco_status;

/* Opaque parsed input document. */
typedef struct nabco_document nabco_document;

/* Parses a JSON input document.  On success *out_doc receives a handle to
 * free with nabco_document_free.  On failure *out_doc is NULL and
 * *out_error (when out_error is not NULL) receives a message with one line
 * per problem. */
nabco_status nabco_parse(const char* text, nabco_document** out_doc,
                         char** out_error);

void nabco_document_free(nabco_document* doc);

/* Runs one command against a parsed document and stores the report text in
 * *out_report.  Commands: "validate", "cohomology", "sections", "tower",
 * "normalize".  options_json may be NULL or "{}"; recognized keys:
 *   max_stage (int), algebra (string), module (string), section (string:
 *   the text of a section override file).
 * The validate command reports problems in the report text and returns
 * NABCO_INVALID_INPUT while still setting *out_report. */
nabco_status nabco_run(const nabco_document* doc, const char* command,
                       const char* options_json, char** out_report,
                       char** out_error);

/* Verifies that the twist-d Laurent cocycles within the given degree bound
 * are exactly the coboundaries, over the named coefficient algebra
 * ("rationals", "dual", "split", "t3").  Needs no document. */
nabco_status nabco_gm_check(long d, long max_degree, const char* algebra,
                            char** out_report, char** out_error);

/* Frees a string returned through an out-parameter.  NULL is allowed. */
void nabco_free(char* text);

/* Static version string, not to be freed. */
const char* nabco_version(void);

#ifdef __cplusplus
}
#endif

#endif /* NABCO_NABCO_H_ */
