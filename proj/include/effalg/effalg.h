/* C interface to the effect-algebra library. */
#ifndef EFFALG_EFFALG_H
#define EFFALG_EFFALG_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(EFFALG_BUILDING)
#    define EA_API __declspec(dllexport)
#  else
#    define EA_API __declspec(dllimport)
#  endif
#else
#  define EA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ea_algebra ea_algebra;

typedef enum ea_status {
  EA_OK = 0,
  EA_ERR_SYNTAX = 1,
  EA_ERR_UNKNOWN_NAME = 2,
  EA_ERR_AXIOM = 3,
  EA_ERR_DUPLICATE = 4,
  EA_ERR_ZERO_EQUALS_ONE = 5,
  EA_ERR_CAP = 6,
  EA_ERR_UNKNOWN_ELEMENT = 7,
  EA_ERR_NOT_BELOW = 8,
  EA_ERR_PRECONDITION = 9,
  EA_ERR_BUDGET = 10,
  EA_ERR_UNKNOWN_BUILTIN = 11,
  EA_ERR_INVALID_ARGUMENT = 12,
  EA_ERR_OTHER = 13
} ea_status;

typedef struct ea_options {
  int machine;       /* nonzero: key=value records */
  int all_witnesses; /* nonzero: every witness, not just the first */
  long long budget;  /* search node budget; <= 0 selects the default */
} ea_options;

/* Message of the last failure on the calling thread; never NULL. */
EA_API const char* ea_last_error(void);

EA_API ea_status ea_algebra_parse(const char* text, ea_algebra** out);
EA_API ea_status ea_algebra_builtin(const char* name, ea_algebra** out);
EA_API void ea_algebra_free(ea_algebra* a);

EA_API int ea_algebra_size(const ea_algebra* a);
EA_API ea_status ea_element_id(const ea_algebra* a, const char* name, int* out);
/* Borrowed pointer, valid while `a` lives; NULL for a bad id. */
EA_API const char* ea_element_name(const ea_algebra* a, int id);

/* *defined is set to 0 when x + y is undefined. */
EA_API ea_status ea_sum(const ea_algebra* a, int x, int y, int* defined, int* out);
EA_API ea_status ea_leq(const ea_algebra* a, int x, int y, int* out);
EA_API ea_status ea_complement(const ea_algebra* a, int x, int* out);
/* y - x; EA_ERR_NOT_BELOW unless x <= y. */
EA_API ea_status ea_ominus(const ea_algebra* a, int y, int x, int* out);
EA_API ea_status ea_ord(const ea_algebra* a, int x, int* out);

/* Element sets as bit masks: bit i stands for element id i. */
EA_API ea_status ea_sharp_set(const ea_algebra* a, uint64_t* out);
EA_API ea_status ea_mea_set(const ea_algebra* a, uint64_t* out);
EA_API ea_status ea_hmea_set(const ea_algebra* a, uint64_t* out);
EA_API ea_status ea_umea_set(const ea_algebra* a, uint64_t* out);
EA_API ea_status ea_is_homogeneous(const ea_algebra* a, int* out);
/* Writes up to `capacity` block masks; *count receives the total. */
EA_API ea_status ea_blocks(const ea_algebra* a, long long budget, uint64_t* out, int capacity, int* count);

/* Runs a CLI command (validate, classify, props, blocks, theorems,
 * scan-joins, dot, example, mvgen) on `input`; the report is returned in
 * *text (free with ea_string_free) and the exit code in *exit_code. */
EA_API ea_status ea_run(const char* command, const char* input, const ea_options* options, char** text, int* exit_code);

EA_API ea_status ea_builtin_text(const char* name, char** out);
EA_API ea_status ea_mvgen_text(const char* spec, char** out);
/* The embedding spec behind builtin ex1/ex2/ex3. */
EA_API ea_status ea_builtin_mvgen_spec(const char* name, char** out);
EA_API void ea_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
