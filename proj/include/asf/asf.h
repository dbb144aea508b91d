#ifndef ASF_ASF_H
#define ASF_ASF_H

/* C interface to the almost symmetric function engine.
 *
 * Every call returns an asf_status. On failure the message is available from
 * asf_context_last_error until the next call on the same context. A context
 * must not be used from two threads at once; separate contexts are
 * independent. Strings returned through char** are owned by the caller and
 * released with asf_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ASF_API __declspec(dllexport)
#else
#define ASF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum asf_status {
  ASF_OK = 0,
  ASF_E_INVALID_ARGUMENT = 1, /* null pointer or unknown enum value */
  ASF_E_PARSE = 2,            /* malformed composition, partition or pair */
  ASF_E_DOMAIN = 3,           /* well-formed input outside the supported range */
  ASF_E_RESOURCE_GUARD = 4,   /* symmetrizer cost limit exceeded */
  ASF_E_MISMATCH = 5,         /* two algorithms disagreed or a check failed */
  ASF_E_MATH = 6,             /* pole in a specialization, failed stabilization */
  ASF_E_INTERNAL = 7
} asf_status;

typedef enum asf_format { ASF_FORMAT_TEXT = 0, ASF_FORMAT_JSON = 1 } asf_format;
typedef enum asf_basis { ASF_BASIS_MONOMIAL = 0, ASF_BASIS_SCHUR = 1 } asf_basis;
typedef enum asf_algorithm {
  ASF_ALGORITHM_RECURSION = 0,
  ASF_ALGORITHM_COMBINATORIAL = 1,
  ASF_ALGORITHM_BOTH = 2
} asf_algorithm;

typedef struct asf_context asf_context;
typedef struct asf_expansion asf_expansion;
typedef struct asf_report asf_report;

ASF_API const char* asf_version(void);
ASF_API const char* asf_status_name(asf_status status);
ASF_API void asf_string_free(char* s);

ASF_API asf_context* asf_context_new(void);
ASF_API void asf_context_free(asf_context* ctx);
ASF_API const char* asf_context_last_error(const asf_context* ctx);
/* Largest n - k accepted by the Hecke and Weyl symmetrizers (default 7). */
ASF_API asf_status asf_context_set_max_sym_cost(asf_context* ctx, int cost);
/* Worker threads for verification suites (default 1). */
ASF_API asf_status asf_context_set_jobs(asf_context* ctx, int jobs);
/* Directory for the on-disk key polynomial cache; NULL or "" disables it. */
ASF_API asf_status asf_context_set_cache_dir(asf_context* ctx, const char* dir);

/* Key polynomial of alpha ("0,1,2"). vars pads alpha with zeros and must be
 * at least its length; pass 0 to use the length of alpha. */
ASF_API asf_status asf_key_polynomial(asf_context* ctx, const char* alpha, int vars, asf_format format, char** out);

/* Non-symmetric Macdonald polynomial E_mu over Q(q,t). */
ASF_API asf_status asf_macdonald_e(asf_context* ctx, const char* mu, asf_format format, char** out);

/* s_(mu|lambda) for a pair "mu=2;lambda=3,1". With ASF_ALGORITHM_BOTH a
 * disagreement returns ASF_E_MISMATCH. */
ASF_API asf_status asf_almost_schur(asf_context* ctx, const char* pair, asf_basis basis, asf_algorithm algorithm,
                                    asf_expansion** out);

ASF_API size_t asf_expansion_size(const asf_expansion* e);
ASF_API int asf_expansion_threshold(const asf_expansion* e);
ASF_API asf_basis asf_expansion_basis(const asf_expansion* e);
/* Borrowed views, valid until the expansion is freed. */
ASF_API asf_status asf_expansion_term(const asf_expansion* e, size_t index, const int** head, size_t* head_length,
                                      const int** tail, size_t* tail_length, const char** coefficient);
ASF_API asf_status asf_expansion_render(const asf_expansion* e, asf_format format, char** out);
ASF_API void asf_expansion_free(asf_expansion* e);

/* eps applied to E_(mu*lambda*0...) in n variables, over Q(q,t). */
ASF_API asf_status asf_stable_truncation(asf_context* ctx, const char* pair, int n, asf_format format, char** out);

/* K^(mu|lambda)_(alpha|nu) by counting labellings. */
ASF_API asf_status asf_kostka(asf_context* ctx, const char* pair, const char* alpha, const char* nu, int64_t* out);
/* The labellings counted by asf_kostka. */
ASF_API asf_status asf_kostka_labellings(asf_context* ctx, const char* pair, const char* alpha, const char* nu,
                                         asf_format format, char** out);

/* Suites: relations, specialization, positivity, stability, structure.
 * samples <= 0 selects the default of 100 randomized instances. */
ASF_API asf_status asf_verify(asf_context* ctx, const char* suite, int degree, uint64_t seed, int samples,
                              asf_report** out);
ASF_API size_t asf_report_size(const asf_report* r);
ASF_API asf_status asf_report_entry(const asf_report* r, size_t index, const char** name, long* checked, long* failed,
                                    const char** first_failure);
ASF_API int asf_report_passed(const asf_report* r);
ASF_API asf_status asf_report_render(const asf_report* r, asf_format format, char** out);
ASF_API void asf_report_free(asf_report* r);

#ifdef __cplusplus
}
#endif

#endif
