#ifndef VFR_H
#define VFR_H

/* This file is generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Which operator pool a search uses.
typedef enum VfrMode {
  VFR_MODE_STANDARD = 0,
  VFR_MODE_FILTERED = 1,
} VfrMode;

// Result of every API call.
typedef enum VfrStatus {
  VFR_STATUS_OK = 0,
  // A required pointer argument was null.
  VFR_STATUS_NULL_POINTER,
  // A string argument was not valid UTF-8.
  VFR_STATUS_INVALID_UTF8,
  // The source text failed to parse; the error message lists every
  // diagnostic.
  VFR_STATUS_PARSE_ERROR,
  // No agent with the given name is declared in the document.
  VFR_STATUS_UNKNOWN_AGENT,
  // A step names an operator the document does not declare.
  VFR_STATUS_UNKNOWN_OPERATOR,
  // The goal is not valid for the agent's value filter.
  VFR_STATUS_INVALID_GOAL,
  // The step sequence does not replay to a goal-satisfying state.
  VFR_STATUS_INVALID_PLAN,
  // An argument combination is unsupported, e.g. filtered search
  // without an agent.
  VFR_STATUS_INVALID_ARGUMENT,
  // An internal failure; the error message has details.
  VFR_STATUS_INTERNAL,
} VfrStatus;

// An opaque parsed document.
typedef struct VfrDocument VfrDocument;

// Search parameters for [`vfr_plan_json`] and [`vfr_validate_json`].
typedef struct VfrSearchOptions {
  enum VfrMode mode;
  // Drop operators whose cleaning class is violating (filtered mode).
  bool require_cleaning;
  // Require every rejected proposition to be false in a final state.
  bool strict_goal;
  // Longest plan considered; 0 selects the default bound.
  uint32_t max_depth;
} VfrSearchOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses `source` and stores the document handle in `out_document`.
//
// # Safety
// `source` must be a valid C string; `out_document` must be a valid
// pointer. On success the handle must be released with
// [`vfr_document_free`].
enum VfrStatus vfr_document_parse(const char *source, struct VfrDocument **out_document);

// Releases a document handle. Null is ignored.
//
// # Safety
// `document` must be null or a handle from [`vfr_document_parse`] that
// has not been freed already.
void vfr_document_free(struct VfrDocument *document);

// Renders the document back to canonical source text.
//
// # Safety
// `document` must be a live handle; `out_source` must be valid. The
// returned string must be released with [`vfr_string_free`].
enum VfrStatus vfr_document_render(const struct VfrDocument *document, char **out_source);

// Writes the clean base partition for `agent` as JSON.
//
// # Safety
// `document` must be a live handle; `agent` must be a valid C string;
// `out_json` must be valid and the result freed with
// [`vfr_string_free`].
enum VfrStatus vfr_filter_json(const struct VfrDocument *document,
                               const char *agent,
                               char **out_json);

// Writes the per-operator admissibility and cleaning table as JSON.
//
// # Safety
// As for [`vfr_filter_json`].
enum VfrStatus vfr_classify_json(const struct VfrDocument *document,
                                 const char *agent,
                                 char **out_json);

// Writes the four-way clean base comparison of two agents as JSON.
//
// # Safety
// As for [`vfr_filter_json`], with two agent names.
enum VfrStatus vfr_compare_json(const struct VfrDocument *document,
                                const char *first,
                                const char *second,
                                char **out_json);

// Enumerates plans and writes the result as JSON. `agent` may be null
// for a standard, unfiltered search.
//
// # Safety
// `document` must be a live handle; `agent` null or a valid C string;
// `options` and `out_json` must be valid pointers.
enum VfrStatus vfr_plan_json(const struct VfrDocument *document,
                             const char *agent,
                             const struct VfrSearchOptions *options,
                             char **out_json);

// Replays a comma-separated step sequence and writes the verdict as
// JSON. The report is written even when the plan is invalid; the
// status then is `VFR_STATUS_INVALID_PLAN`.
//
// # Safety
// As for [`vfr_plan_json`], plus `steps` must be a valid C string.
enum VfrStatus vfr_validate_json(const struct VfrDocument *document,
                                 const char *agent,
                                 const char *steps,
                                 const struct VfrSearchOptions *options,
                                 char **out_json);

// Replays steps and writes the two-agent cooperation verdict as JSON.
//
// # Safety
// As for [`vfr_compare_json`], plus `steps` must be a valid C string
// (it may be empty to check only the initial state).
enum VfrStatus vfr_coop_json(const struct VfrDocument *document,
                             const char *first,
                             const char *second,
                             const char *steps,
                             char **out_json);

// Returns a copy of the calling thread's last error message, or null
// when the last call succeeded.
//
// # Safety
// The returned string must be released with [`vfr_string_free`].
char *vfr_last_error_message(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `string` must be null or an unreleased string from this library.
void vfr_string_free(char *string);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VFR_H */
