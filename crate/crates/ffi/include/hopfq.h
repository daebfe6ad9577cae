#ifndef HOPFQ_H
#define HOPFQ_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HopfqKind {
  HOPFQ_KIND_QUASIGROUP = 0,
  HOPFQ_KIND_COQUASIGROUP = 1,
} HopfqKind;

// Result codes shared by every entry point.
typedef enum HopfqStatus {
  HOPFQ_STATUS_OK = 0,
  // The call succeeded and produced a report in which some law fails.
  HOPFQ_STATUS_LAW_FAILED = 1,
  HOPFQ_STATUS_PARSE_ERROR = 2,
  HOPFQ_STATUS_IO_ERROR = 3,
  HOPFQ_STATUS_INVALID_ARGUMENT = 4,
  HOPFQ_STATUS_NULL_POINTER = 5,
  // A construction rejected its input; the report, if any, names the laws.
  HOPFQ_STATUS_CONSTRUCTION_FAILED = 6,
  HOPFQ_STATUS_PANIC = 7,
} HopfqStatus;

// The outcome of a verification.
typedef struct HopfqReport HopfqReport;

// A Hopf quasigroup or coquasigroup.
typedef struct HopfqStructure HopfqStructure;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The last error message on this thread, or null. Valid until the next call
// into this library on the same thread; do not free.
const char *hopfq_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void hopfq_string_free(char *s);

// Library version as a static string.
const char *hopfq_version(void);

// Parses a structure file from text.
//
// # Safety
// `text` must be a valid C string and `out` a valid pointer.
enum HopfqStatus hopfq_structure_parse(const char *text, struct HopfqStructure **out);

// Loads a structure file from disk.
//
// # Safety
// `path` must be a valid C string and `out` a valid pointer.
enum HopfqStatus hopfq_structure_load(const char *path, struct HopfqStructure **out);

// Builds the loop algebra of a Cayley table given as text, over `field`
// (`"Q"` or `"F <p>"`).
//
// # Safety
// `cayley` and `field` must be valid C strings and `out` a valid pointer.
enum HopfqStatus hopfq_loop_algebra(const char *cayley,
                                    const char *field,
                                    struct HopfqStructure **out);

// Builds the smash product of a `smash` bundle file.
//
// # Safety
// `bundle` must be a valid C string and `out` a valid pointer.
enum HopfqStatus hopfq_smash_build(const char *bundle, struct HopfqStructure **out);

// Builds the smash coproduct of a `cosmash` bundle file.
//
// # Safety
// `bundle` must be a valid C string and `out` a valid pointer.
enum HopfqStatus hopfq_cosmash_build(const char *bundle, struct HopfqStructure **out);

// Releases a structure. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void hopfq_structure_free(struct HopfqStructure *s);

// Dimension of the underlying space, or 0 for null.
//
// # Safety
// `s` must be null or a live handle.
size_t hopfq_structure_dim(const struct HopfqStructure *s);

// Declared kind of a structure.
//
// # Safety
// `s` must be a live handle.
enum HopfqStatus hopfq_structure_kind(const struct HopfqStructure *s, enum HopfqKind *out);

// The dual structure, of the opposite kind.
//
// # Safety
// `s` must be a live handle and `out` a valid pointer.
enum HopfqStatus hopfq_structure_dual(const struct HopfqStructure *s, struct HopfqStructure **out);

// Writes the structure in the text format. Free the result with
// [`hopfq_string_free`].
//
// # Safety
// `s` must be a live handle and `out` a valid pointer.
enum HopfqStatus hopfq_structure_serialize(const struct HopfqStructure *s, char **out);

// Runs the full suite for the structure's kind. Returns `Ok` when every law
// passes and `LawFailed` otherwise; the report is produced in both cases.
//
// # Safety
// `s` must be a live handle and `out` a valid pointer.
enum HopfqStatus hopfq_verify(const struct HopfqStructure *s, struct HopfqReport **out);

// Checks the dimodule laws and the D-equation for a `dimodule` bundle.
// `is_identity` receives whether the induced map is the identity.
//
// # Safety
// `bundle` must be a valid C string; `out` and `is_identity` valid pointers.
enum HopfqStatus hopfq_dequation(const char *bundle, bool *is_identity, struct HopfqReport **out);

// Releases a report. Null is ignored.
//
// # Safety
// `r` must come from this library and not have been freed.
void hopfq_report_free(struct HopfqReport *r);

// Whether every non-informational law passed. False for null.
//
// # Safety
// `r` must be null or a live handle.
bool hopfq_report_all_pass(const struct HopfqReport *r);

// Number of laws in the report, or 0 for null.
//
// # Safety
// `r` must be null or a live handle.
size_t hopfq_report_law_count(const struct HopfqReport *r);

// Number of non-informational laws that failed, or 0 for null.
//
// # Safety
// `r` must be null or a live handle.
size_t hopfq_report_failed_count(const struct HopfqReport *r);

// Writes the JSON report document. Free the result with [`hopfq_string_free`].
//
// # Safety
// `r` must be a live handle and `out` a valid pointer.
enum HopfqStatus hopfq_report_json(const struct HopfqReport *r, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPFQ_H */
