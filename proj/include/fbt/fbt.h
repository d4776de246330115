#ifndef FBT_FBT_H
#define FBT_FBT_H

#include <stddef.h>

#if defined(FBT_BUILDING_LIBRARY)
#define FBT_API __attribute__((visibility("default")))
#else
#define FBT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fbt_status {
  FBT_OK = 0,
  FBT_ERR_DOMAIN = 1,
  FBT_ERR_USAGE = 2,
  FBT_ERR_NUMERIC = 3,
  FBT_ERR_PRECONDITION = 4,
  FBT_ERR_IO = 5,
  FBT_ERR_INTERNAL = 6
} fbt_status;

typedef struct fbt_grid fbt_grid;
typedef struct fbt_function fbt_function;
typedef struct fbt_interval_set fbt_interval_set;
typedef struct fbt_matrix fbt_matrix;

FBT_API const char* fbt_version(void);
/* Message of the last failed call on this thread; empty if none. */
FBT_API const char* fbt_last_error(void);
FBT_API void fbt_set_threads(size_t n);

FBT_API fbt_status fbt_gamma(double x, double* out);
FBT_API fbt_status fbt_bessel_j(double alpha, double x, double* out);
FBT_API fbt_status fbt_bessel_j_poisson(double alpha, double x, int nodes, double* out);
FBT_API fbt_status fbt_kappa_alpha(double alpha, double* out);

FBT_API fbt_status fbt_interval_set_parse(const char* text, fbt_interval_set** out);
FBT_API void fbt_interval_set_destroy(fbt_interval_set* s);
FBT_API size_t fbt_interval_set_size(const fbt_interval_set* s);
FBT_API fbt_status fbt_interval_set_get(const fbt_interval_set* s, size_t i, double* lo, double* hi);
FBT_API fbt_status fbt_mu_alpha(double alpha, const fbt_interval_set* s, double* out);
FBT_API fbt_status fbt_lebesgue(const fbt_interval_set* s, double* out);

FBT_API fbt_status fbt_grid_create(double alpha, double radius, int n, fbt_grid** out);
FBT_API void fbt_grid_destroy(fbt_grid* g);
FBT_API size_t fbt_grid_size(const fbt_grid* g);
/* Copies up to cap nodes or weights; returns the number copied. */
FBT_API size_t fbt_grid_nodes(const fbt_grid* g, double* out, size_t cap);
FBT_API size_t fbt_grid_weights(const fbt_grid* g, double* out, size_t cap);

/* Samples a named test function (gaussian, gaussian-poly, bump, bessel-mode). */
FBT_API fbt_status fbt_function_sample(const fbt_grid* g, const char* name, double lambda, fbt_function** out);
FBT_API fbt_status fbt_function_from_values(const fbt_grid* g, const double* values, size_t count, fbt_function** out);
FBT_API void fbt_function_destroy(fbt_function* f);
FBT_API size_t fbt_function_values(const fbt_function* f, double* out, size_t cap);
FBT_API fbt_status fbt_function_norm(const fbt_function* f, double p, double* out);
FBT_API fbt_status fbt_hankel(const fbt_function* f, const fbt_grid* out_grid, fbt_function** out);

FBT_API fbt_status fbt_hankel_matrix(const fbt_grid* in, const fbt_grid* out_grid, fbt_matrix** out);
FBT_API void fbt_matrix_destroy(fbt_matrix* m);
FBT_API fbt_status fbt_matrix_dims(const fbt_matrix* m, size_t* rows, size_t* cols);
FBT_API fbt_status fbt_matrix_apply(const fbt_matrix* m, const fbt_function* f, fbt_function** out);
FBT_API fbt_status fbt_matrix_save(const fbt_matrix* m, const char* path);

FBT_API fbt_status fbt_annihilation_constants(double alpha, const fbt_interval_set* s, const fbt_interval_set* sigma,
                                              double* op_norm, double* d, double* c);

/* Runs a named experiment with a JSON config overlay (NULL or "" for the
   defaults). On FBT_OK, *report and *csv (may be empty) must be released with
   fbt_free_string, and *passed is 1 iff every asserted inequality held. */
FBT_API fbt_status fbt_run_experiment(const char* command, const char* config_json, char** report, char** csv,
                                      int* passed);
/* Resolved config for a command as JSON. */
FBT_API fbt_status fbt_default_config(const char* command, char** out);
FBT_API void fbt_free_string(char* s);

#ifdef __cplusplus
}
#endif

#endif
