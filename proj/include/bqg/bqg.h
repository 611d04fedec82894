#ifndef BQG_H
#define BQG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define BQG_API __declspec(dllexport)
#else
#define BQG_API __attribute__((visibility("default")))
#endif

typedef struct bqg_group bqg_group;

typedef enum bqg_status {
  BQG_OK = 0,
  BQG_ERR_INVALID_INPUT = 1,
  BQG_ERR_NOT_A_GROUP = 2,
  BQG_ERR_CAP_EXCEEDED = 3,
  BQG_ERR_UNKNOWN_NAME = 4,
  BQG_ERR_UNSUPPORTED_PARAM = 5,
  BQG_ERR_NOT_CENTRAL = 6,
  BQG_ERR_WRONG_ORDER = 7,
  BQG_ERR_NOT_NILPOTENT = 8,
  BQG_ERR_NOT_ABELIAN = 9,
  BQG_ERR_ABELIAN_INPUT = 10,
  BQG_ERR_SIZE_CAP = 11,
  BQG_ERR_NOT_ABELIAN_COLLECTION = 12,
  BQG_ERR_INDEX_MISMATCH = 13,
  BQG_ERR_NOT_TC = 14,
  BQG_ERR_NOT_SOLVABLE = 15,
  BQG_ERR_TOO_LARGE = 16,
  BQG_ERR_COLIMIT_NOT_FINITE = 17,
  BQG_ERR_INTERNAL = 18,
  BQG_ERR_NULL_ARGUMENT = 100
} bqg_status;

typedef enum bqg_format { BQG_FORMAT_TEXT = 0, BQG_FORMAT_JSON = 1 } bqg_format;

typedef struct bqg_options {
  int q;                          /* default 2 */
  unsigned long long prime;       /* 0: every prime dividing |G| */
  int max_deg;                    /* -1: 3 for |G| <= 32, else 2 */
  unsigned long long coset_cap;   /* default 1000000 */
  bqg_format format;              /* default BQG_FORMAT_TEXT */
} bqg_options;

BQG_API void bqg_options_init(bqg_options* options);

/* "catalog:<name>:<params>" or "@file.json" */
BQG_API bqg_status bqg_group_from_spec(const char* spec, bqg_group** out);
/* {"order","table"}, {"degree","permutations"} or {"catalog","params"} */
BQG_API bqg_status bqg_group_from_json(const char* json, bqg_group** out);
BQG_API void bqg_group_free(bqg_group* group);
BQG_API size_t bqg_group_order(const bqg_group* group);

/* Reports; *out is allocated by the library and released with bqg_string_free.
   command is one of group-info, poset, colimit, higher-limits, homology,
   universal-cover, coset-poset, splitting, ktheory. */
BQG_API bqg_status bqg_run(const char* command, const bqg_group* group,
                           const bqg_options* options, char** out);

/* Runs the acceptance suite; *all_passed is 1 when every check passed. */
BQG_API bqg_status bqg_verify(const char* suite, const bqg_options* options, char** out,
                              int* all_passed);

BQG_API void bqg_string_free(char* s);
/* Message of the last failure on this thread ("" after success). */
BQG_API const char* bqg_last_error(void);
BQG_API const char* bqg_status_name(bqg_status status);

#ifdef __cplusplus
}
#endif

#endif
