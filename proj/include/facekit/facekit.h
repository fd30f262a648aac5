/* facekit C API.
 *
 * Every function returns an fk_status. On failure the message is available
 * from fk_last_error() on the calling thread until the next API call there.
 * Strings returned through char** are owned by the caller and released with
 * fk_string_free. JSON outputs follow the schemas documented in README.md.
 */
#ifndef FACEKIT_H
#define FACEKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FK_API __declspec(dllexport)
#else
#define FK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fk_status {
  FK_OK = 0,
  FK_ERR_INPUT = 1,        /* malformed or inconsistent arguments */
  FK_ERR_PARSE = 2,        /* text does not follow the documented syntax */
  FK_ERR_RESOURCE = 3,     /* a size bound was exceeded */
  FK_ERR_PRECONDITION = 4, /* e.g. the point is outside the set */
  FK_ERR_UNSUPPORTED = 5,  /* outside the decidable fragment */
  FK_ERR_INTERNAL = 6
} fk_status;

typedef enum fk_format { FK_FORMAT_TEXT = 0, FK_FORMAT_JSON = 1, FK_FORMAT_CSV = 2 } fk_format;

typedef struct fk_polytope fk_polytope;

FK_API const char* fk_version(void);
FK_API const char* fk_last_error(void);
/* Line number of the last parse error, 0 if unknown. */
FK_API size_t fk_last_error_line(void);
FK_API const char* fk_status_name(fk_status s);
FK_API void fk_string_free(char* s);

/* Polytopes in the "dim n" text format. */
FK_API fk_status fk_polytope_parse(const char* text, fk_polytope** out);
FK_API fk_status fk_polytope_load(const char* path, fk_polytope** out);
FK_API void fk_polytope_free(fk_polytope* p);
FK_API fk_status fk_polytope_dim(const fk_polytope* p, size_t* out);
FK_API fk_status fk_polytope_vertex_count(const fk_polytope* p, size_t* out);
FK_API fk_status fk_polytope_format(const fk_polytope* p, char** out);

/* Face lattice, honouring FACEKIT_ENUM_BOUND. */
FK_API fk_status fk_faces(const fk_polytope* p, fk_format fmt, char** out);

/* Minimal face and the four interior flags of a whitespace-separated
 * rational point. flags, if non-null, receives ri|icr<<1|fri<<2|qri<<3. */
FK_API fk_status fk_classify(const fk_polytope* p, const char* point, fk_format fmt, char** out, int* flags);

/* Sequence-space claim sets. */
FK_API fk_status fk_models_list(char** out_json);
FK_API fk_status fk_models_run(const char* name, fk_format fmt, char** out, int* all_pass);

/* Property registry. trials == 0 selects the default count. An unknown exact
 * id is FK_ERR_INPUT; a glob matching nothing yields an empty report. */
FK_API fk_status fk_check_list(char** out_json);
FK_API fk_status fk_check_run(const char* filter, uint64_t seed, size_t trials, fk_format fmt, char** out,
                              int* all_pass);

#ifdef __cplusplus
}
#endif

#endif
