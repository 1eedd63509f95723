#ifndef FREESPACE_H
#define FREESPACE_H

/* C interface to the freespace library: exact Kantorovich-Rubinstein norms
 * over finite pointed metric spaces and extremal classification of molecules
 * of the free-space unit ball, with machine-checkable evidence.
 *
 * Conventions:
 *   - every function returns an fs_status; FS_OK is 0;
 *   - on failure, fs_last_error() returns a thread-local message that stays
 *     valid until the next failing call on the same thread;
 *   - scalars cross the boundary as exact rational strings "p/q" (or "p");
 *   - structured data crosses as JSON text; returned char* buffers belong to
 *     the caller and are released with fs_string_free;
 *   - points are addressed by index; index 0 is the base point.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined _WIN32 || defined __CYGWIN__
#define FS_API __declspec(dllexport)
#else
#define FS_API __attribute__((visibility("default")))
#endif

typedef enum fs_status {
    FS_OK = 0,
    FS_ERR_INVALID_ARGUMENT = 1,
    FS_ERR_PARSE = 2,
    FS_ERR_INVALID_SPACE = 3,
    FS_ERR_SPACE_MISMATCH = 4,
    FS_ERR_EMPTY_SPACE = 5,
    FS_ERR_DEGENERATE_INPUT = 6,
    FS_ERR_UNKNOWN_GALLERY = 7,
    FS_ERR_TOO_LARGE = 8,
    FS_ERR_CHECK_FAILED = 9,
    FS_ERR_INTERNAL = 10
} fs_status;

typedef struct fs_space fs_space;       /* pointed finite metric space */
typedef struct fs_function fs_function; /* real function on the points */
typedef struct fs_element fs_element;   /* zero-sum element of the free space */

FS_API const char* fs_version(void);
FS_API const char* fs_last_error(void);
FS_API void fs_string_free(char* text);

/* ---- spaces ---------------------------------------------------------------- */

FS_API fs_status fs_space_parse_json(const char* json_text, fs_space** out);
FS_API fs_status fs_space_gallery(const char* name, int depth, fs_space** out);
FS_API fs_status fs_space_snowflake(const fs_space* space, const char* exponent, int force_float,
                                    fs_space** out);
FS_API void fs_space_free(fs_space* space);

FS_API int fs_space_point_count(const fs_space* space);
FS_API const char* fs_space_label(const fs_space* space, int index); /* NULL out of range */
FS_API fs_status fs_space_point_index(const fs_space* space, const char* label, int* out);
FS_API fs_status fs_space_distance(const fs_space* space, int i, int j, char** out);
FS_API fs_status fs_space_to_json(const fs_space* space, char** out);

/* Violations of the metric axioms as a JSON report (valid spaces give an
 * empty list). Accepts text that the strict parser would reject. */
FS_API fs_status fs_validate_json(const char* json_text, char** report_json);

/* Segment report for the pair (x,y): members of [x,y] plus triviality. */
FS_API fs_status fs_segment(const fs_space* space, int x, int y, char** report_json);

/* ---- Lipschitz functions ----------------------------------------------------- */

FS_API fs_status fs_function_parse_json(const fs_space* space, const char* json_text,
                                        fs_function** out);
FS_API fs_status fs_function_fxy(const fs_space* space, int x, int y, fs_function** out);
FS_API fs_status fs_function_fdent(const fs_space* space, int x, int y, const char* eps,
                                   const char* tau, fs_function** out);
FS_API fs_status fs_function_bump(const fs_space* space, int x, int y, int z, const char* eps,
                                  fs_function** out);
/* McShane extension of values on a subset; base_shift = 1 renormalises the
 * result to vanish at the base point. */
FS_API fs_status fs_function_mcshane(const fs_space* space, const int* domain,
                                     const char* const* values, size_t count, int base_shift,
                                     fs_function** out);
FS_API void fs_function_free(fs_function* function);

FS_API fs_status fs_function_value(const fs_function* function, int point, char** out);
FS_API fs_status fs_function_lip_norm(const fs_function* function, char** value, int* argmax_u,
                                      int* argmax_v); /* argmax = -1,-1 for constants */
FS_API fs_status fs_function_to_json(const fs_function* function, char** out);

/* ---- free-space elements ------------------------------------------------------ */

FS_API fs_status fs_element_parse_json(const fs_space* space, const char* json_text,
                                       fs_element** out);
FS_API fs_status fs_element_molecule(const fs_space* space, int x, int y, fs_element** out);
FS_API void fs_element_free(fs_element* element);
FS_API fs_status fs_element_to_json(const fs_element* element, char** out);

FS_API fs_status fs_pair(const fs_function* function, const fs_element* element, char** out);

/* KR norm; method is "dual", "primal" or "both". The report carries the
 * value, the dual witness function and/or the primal transport plan. */
FS_API fs_status fs_norm(const fs_space* space, const fs_element* element, const char* method,
                         char** report_json);

/* ---- slices -------------------------------------------------------------------- */

FS_API fs_status fs_slice(const fs_space* space, const fs_function* function, const char* alpha,
                          int restrict_to_molecules, char** report_json);

/* ---- extremal structure --------------------------------------------------------- */

/* eps_grid_json: JSON array of rational strings, or NULL for the default
 * grid {1, 1/2, 1/4, 1/8, 1/16}. depth <= 0 selects the default (20). */
FS_API fs_status fs_classify_pair(const fs_space* space, int x, int y, long depth,
                                  const char* eps_grid_json, char** report_json);
FS_API fs_status fs_classify_all(const fs_space* space, long depth, const char* eps_grid_json,
                                 char** report_json);
FS_API fs_status fs_oracle(const fs_space* space, char** report_json);

/* ---- norm attainment -------------------------------------------------------------- */

FS_API fs_status fs_attain_function(const fs_space* space, const fs_function* function,
                                    char** report_json);
FS_API fs_status fs_attain_random(const fs_space* space, int samples, unsigned long long seed,
                                  char** report_json);

/* ---- report checking ---------------------------------------------------------------- */

/* Re-verifies the evidence embedded in a report. FS_OK means every item
 * passed; FS_ERR_CHECK_FAILED means the result JSON lists failures. */
FS_API fs_status fs_check_report(const char* report_json, char** result_json);

#ifdef __cplusplus
}
#endif

#endif /* FREESPACE_H */
