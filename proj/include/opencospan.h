/* C API for the opencospan shared library.
 *
 * All functions return a status code; OCS_OK is 0. On failure,
 * ocs_last_error() returns a thread-local human-readable message and
 * ocs_status_name() the stable error identifier. Documents are opaque
 * handles created by the parse/build functions and released with
 * ocs_document_free(). Strings returned through char** are owned by the
 * caller and released with ocs_string_free().
 */
#ifndef OPENCOSPAN_H
#define OPENCOSPAN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ocs_status {
  OCS_OK = 0,
  OCS_MISMATCHED_BOUNDARY,
  OCS_NON_COMMUTING_COCONE,
  OCS_LABEL_CONFLICT,
  OCS_RATE_CONFLICT,
  OCS_NOT_INVERTIBLE,
  OCS_NONPOSITIVE_RESISTANCE,
  OCS_ILL_TYPED_COMPOSE,
  OCS_MALFORMED_JSON,
  OCS_SCHEMA_VIOLATION,
  OCS_INDEX_OUT_OF_RANGE,
  OCS_DUPLICATE_NAME,
  OCS_INVALID_STRUCTURE,
  OCS_INTERNAL_ERROR
} ocs_status;

typedef struct ocs_document ocs_document;

const char* ocs_status_name(ocs_status status);
const char* ocs_last_error(void);
void ocs_string_free(char* text);
void ocs_document_free(ocs_document* document);

/* Parsing and printing open-network documents. */
ocs_status ocs_parse(const char* json_text, ocs_document** out);
ocs_status ocs_read_file(const char* path, ocs_document** out);
ocs_status ocs_print(const ocs_document* document, int canonical, char** out);
ocs_status ocs_write_file(const ocs_document* document, int canonical,
                          const char* path);
ocs_status ocs_export_dot(const ocs_document* document, char** out);

/* Structured-cospan operations. */
ocs_status ocs_identity_document(const char* instance, size_t size,
                                 ocs_document** out);
ocs_status ocs_compose(const ocs_document* first, const ocs_document* second,
                       ocs_document** out);
ocs_status ocs_tensor(const ocs_document* first, const ocs_document* second,
                      ocs_document** out);
/* *isomorphic is 1 or 0; on 1, *witness receives the bijections as JSON. */
ocs_status ocs_isomorphic(const ocs_document* first, const ocs_document* second,
                          int* isomorphic, char** witness);

/* Frobenius law report for an object of the given size; *all_hold is 1 when
 * every law passes. */
ocs_status ocs_frobenius_report(const char* instance, size_t size, char** out,
                                int* all_hold);

/* Circuit semantics. */
ocs_status ocs_circuit_blackbox(const ocs_document* circuit, char** out);
ocs_status ocs_resistor_relation(const char* resistance, char** out);

/* Petri-net semantics. */
ocs_status ocs_petri_to_cmc(const ocs_document* net, char** out);
ocs_status ocs_petri_reachable(const ocs_document* net, const char* from,
                               const char* to, size_t max_steps, int* reachable,
                               char** witness);

/* Mass-action dynamics; markings and states are "name:value" lists. */
ocs_status ocs_dynamics_eval(const ocs_document* net, const char* state,
                             char** out);
ocs_status ocs_dynamics_steady(const ocs_document* net, const char* state,
                               int* steady);
ocs_status ocs_dynamics_euler(const ocs_document* net, const char* state,
                              const char* step, size_t steps, char** out);

#ifdef __cplusplus
}
#endif

#endif /* OPENCOSPAN_H */
