#ifndef PROTORIC_H
#define PROTORIC_H

/* C interface to the protoric library. Every command returns a result handle
 * holding the text for standard output, the diagnostics for the error
 * stream, and a status. Strings returned by accessors stay valid until the
 * owning handle is freed. */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(PROTORIC_BUILDING_LIBRARY)
#    define PROTORIC_API __declspec(dllexport)
#  else
#    define PROTORIC_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) || defined(__clang__)
#  define PROTORIC_API __attribute__((visibility("default")))
#else
#  define PROTORIC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct protoric_document protoric_document;
typedef struct protoric_result protoric_result;

typedef enum protoric_status {
    PROTORIC_OK = 0,
    PROTORIC_ERR_VALIDATION = 1,
    PROTORIC_ERR_PARSE = 2,
    PROTORIC_ERR_USAGE = 3,
    PROTORIC_ERR_INTERNAL = 4
} protoric_status;

typedef enum protoric_format {
    PROTORIC_FORMAT_TEXT = 0,
    PROTORIC_FORMAT_JSON = 1
} protoric_format;

PROTORIC_API const char* protoric_version(void);
PROTORIC_API const char* protoric_status_name(protoric_status status);
/* 0 for PROTORIC_OK, 1 for validation and internal failures, 2 for parse and
 * usage errors. */
PROTORIC_API int protoric_status_exit_code(protoric_status status);

/* Parses and elaborates a tower description. On success *out_doc receives a
 * document handle. On failure *out_doc is NULL and, when out_report is not
 * NULL, *out_report receives a result carrying the diagnostics. */
PROTORIC_API protoric_status protoric_document_parse(const char* source, size_t length, const char* filename,
                                                     protoric_format format, protoric_document** out_doc,
                                                     protoric_result** out_report);
PROTORIC_API void protoric_document_free(protoric_document* doc);
/* Number of levels, or 0 for a NULL handle. */
PROTORIC_API size_t protoric_document_depth(const protoric_document* doc);

/* Canonical printed form of the document. */
PROTORIC_API protoric_result* protoric_document_render(const protoric_document* doc, protoric_format format);
PROTORIC_API protoric_result* protoric_document_check(const protoric_document* doc, protoric_format format);
/* what: "generators", "hilbert", "inequalities" or "ideal"; degree bounds the
 * binomials listed by "ideal" and 0 selects the default. */
PROTORIC_API protoric_result* protoric_document_level(const protoric_document* doc, size_t index, const char* what,
                                                      size_t degree, protoric_format format);
/* depth 0 selects the document depth. */
PROTORIC_API protoric_result* protoric_document_embed(const protoric_document* doc, size_t depth,
                                                      protoric_format format);
PROTORIC_API protoric_result* protoric_document_dualize(const protoric_document* doc, protoric_format format);
/* values: "(a,b/c,...)" per generator; eval: "(m1,...)" or NULL. */
PROTORIC_API protoric_result* protoric_document_point(const protoric_document* doc, size_t level,
                                                      const char* values, const char* eval, protoric_format format);

PROTORIC_API protoric_result* protoric_pair(const char* omega, const char* finsupp, protoric_format format);
/* name: "cauchy-algebra" or "incomplete-subsemigroup". */
PROTORIC_API protoric_result* protoric_demo(const char* name, protoric_format format);

PROTORIC_API protoric_status protoric_result_status(const protoric_result* result);
PROTORIC_API const char* protoric_result_output(const protoric_result* result);
PROTORIC_API const char* protoric_result_diagnostics(const protoric_result* result);
PROTORIC_API void protoric_result_free(protoric_result* result);

#ifdef __cplusplus
}
#endif

#endif /* PROTORIC_H */
