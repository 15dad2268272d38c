#ifndef FIRMCOR_H
#define FIRMCOR_H

#include <stdbool.h>

/**
 * Result codes shared by every function.
 */
typedef enum FirmcorStatus {
  FIRMCOR_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  FIRMCOR_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  FIRMCOR_STATUS_INVALID_UTF8 = 2,
  /**
   * The instance text could not be parsed or failed validation.
   */
  FIRMCOR_STATUS_INVALID_INPUT = 3,
  /**
   * No bundled instance has the given name.
   */
  FIRMCOR_STATUS_UNKNOWN_INSTANCE = 4,
  /**
   * The command name is not recognised.
   */
  FIRMCOR_STATUS_UNKNOWN_COMMAND = 5,
  /**
   * The computation stopped on a structural error.
   */
  FIRMCOR_STATUS_COMPUTATION_FAILED = 6,
  /**
   * A panic was caught at the boundary.
   */
  FIRMCOR_STATUS_INTERNAL = 7,
} FirmcorStatus;

/**
 * An instance bundle owned by the library.
 */
typedef struct FirmcorInstance FirmcorInstance;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Loads a bundled instance by name into `*out`.
 *
 * # Safety
 * `name` must be a nul-terminated string and `out` a valid pointer.
 */
enum FirmcorStatus firmcor_instance_bundled(const char *name, struct FirmcorInstance **out);

/**
 * Parses and validates a `firmcor-1` JSON document into `*out`.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum FirmcorStatus firmcor_instance_from_json(const char *text, struct FirmcorInstance **out);

/**
 * Frees an instance. Null is ignored.
 *
 * # Safety
 * `inst` must come from this library and not be used afterwards.
 */
void firmcor_instance_free(struct FirmcorInstance *inst);

/**
 * Canonical JSON text of the instance, into `*out`.
 *
 * # Safety
 * `inst` must be a live instance and `out` a valid pointer.
 */
enum FirmcorStatus firmcor_instance_to_json(const struct FirmcorInstance *inst, char **out);

/**
 * Runs `command` on the instance and writes the JSON report to `*report`
 * and whether every check passed to `*passed`. A failed check is not an
 * error: the status is `Ok` and `*passed` is false.
 *
 * # Safety
 * `inst` must be a live instance, `command` a nul-terminated string and
 * `report` and `passed` valid pointers.
 */
enum FirmcorStatus firmcor_run(const struct FirmcorInstance *inst,
                               const char *command,
                               char **report,
                               bool *passed);

/**
 * Frees a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void firmcor_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *firmcor_last_error(void);

/**
 * Library version as a static string.
 */
const char *firmcor_version(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* FIRMCOR_H */
