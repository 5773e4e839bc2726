#ifndef DELZANT_DELZANT_H
#define DELZANT_DELZANT_H

/* C interface to the toric polytope toolkit. Reports are returned as
   NUL-terminated JSON strings owned by the caller (release with
   dz_string_free). On failure the message is available through
   dz_last_error() until the next call on the same thread. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DZ_API __declspec(dllexport)
#else
#define DZ_API __attribute__((visibility("default")))
#endif

typedef enum dz_status {
  DZ_OK = 0,
  DZ_ERR_INVALID_ARGUMENT = 1,
  DZ_ERR_PARSE = 2,
  DZ_ERR_INFEASIBLE = 3, /* empty or unbounded polytope */
  DZ_ERR_CHECK_FAILED = 4,
  DZ_ERR_NOT_DELZANT = 5,
  DZ_ERR_NUMERIC = 6,
  DZ_ERR_INTERNAL = 7
} dz_status;

typedef struct dz_polytope dz_polytope;

DZ_API dz_status dz_polytope_from_json(const char* text, dz_polytope** out);
/* Built-in fixture ("example-3.7", "example-3.8:<m>", "cpn:<n>[:<degree>]",
   "hirzebruch:<k>", "cp1xcp1"). Unknown names give DZ_ERR_PARSE. */
DZ_API dz_status dz_polytope_from_fixture(const char* name, dz_polytope** out);
DZ_API void dz_polytope_free(dz_polytope* p);

DZ_API dz_status dz_polytope_to_json(const dz_polytope* p, char** out);
DZ_API dz_status dz_analyze(const dz_polytope* p, char** out);
/* vertex < 0 selects the lexicographically smallest vertex. Both commands
   first multiply the offsets by the lcm of their denominators. */
DZ_API dz_status dz_width(const dz_polytope* p, long vertex, char** out);
DZ_API dz_status dz_embed(const dz_polytope* p, long vertex, char** out);
/* The report is written even when some check fails (DZ_ERR_CHECK_FAILED). */
DZ_API dz_status dz_verify(const dz_polytope* p, uint64_t seed, size_t samples, char** out);

DZ_API void dz_string_free(char* s);
DZ_API const char* dz_last_error(void);
DZ_API const char* dz_status_name(dz_status s);

#ifdef __cplusplus
}
#endif

#endif
