#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "fbt/fbt.h"

static int failures = 0;

#define EXPECT(cond)                                            \
  do {                                                          \
    if (!(cond)) {                                              \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                               \
    }                                                           \
  } while (0)

int main(void) {
  double v = 0.0;
  EXPECT(strlen(fbt_version()) > 0);
  EXPECT(fbt_gamma(5.0, &v) == FBT_OK && fabs(v - 24.0) < 1e-12);
  EXPECT(fbt_gamma(-1.0, &v) == FBT_ERR_DOMAIN);
  EXPECT(strlen(fbt_last_error()) > 0);
  EXPECT(fbt_bessel_j(0.5, 2.0, &v) == FBT_OK && fabs(v - sqrt(2.0 / M_PI) * sin(2.0) / 2.0) < 1e-14);
  EXPECT(fbt_bessel_j(-0.7, 1.0, &v) == FBT_ERR_DOMAIN);
  EXPECT(fbt_bessel_j_poisson(0.0, 5.0, 128, &v) == FBT_OK);
  EXPECT(fbt_kappa_alpha(0.5, &v) == FBT_OK && fabs(v - sqrt(2.0 / M_PI)) < 1e-8);

  fbt_interval_set* s = NULL;
  EXPECT(fbt_interval_set_parse("0,1;1,2;3,4", &s) == FBT_OK);
  EXPECT(fbt_interval_set_size(s) == 2);
  double lo = 0, hi = 0;
  EXPECT(fbt_interval_set_get(s, 1, &lo, &hi) == FBT_OK && lo == 3.0 && hi == 4.0);
  EXPECT(fbt_interval_set_get(s, 5, &lo, &hi) == FBT_ERR_DOMAIN);
  EXPECT(fbt_lebesgue(s, &v) == FBT_OK && v == 3.0);
  EXPECT(fbt_mu_alpha(0.0, s, &v) == FBT_OK && fabs(v - M_PI * (4.0 + 7.0)) < 1e-12);
  fbt_interval_set* bad = NULL;
  EXPECT(fbt_interval_set_parse("2,1", &bad) == FBT_ERR_DOMAIN && bad == NULL);

  fbt_grid* g = NULL;
  EXPECT(fbt_grid_create(0.0, 8.0, 256, &g) == FBT_OK);
  EXPECT(fbt_grid_size(g) == 256);
  double* nodes = malloc(256 * sizeof(double));
  EXPECT(fbt_grid_nodes(g, nodes, 256) == 256 && nodes[0] > 0.0 && nodes[255] < 8.0);
  free(nodes);
  fbt_function* f = NULL;
  fbt_function* ff = NULL;
  EXPECT(fbt_function_sample(g, "gaussian", 1.0, &f) == FBT_OK);
  EXPECT(fbt_function_sample(g, "square", 1.0, &ff) == FBT_ERR_DOMAIN);
  EXPECT(fbt_hankel(f, g, &ff) == FBT_OK);
  double n1 = 0, n2 = 0;
  EXPECT(fbt_function_norm(f, 2.0, &n1) == FBT_OK && fbt_function_norm(ff, 2.0, &n2) == FBT_OK);
  EXPECT(fabs(n1 - n2) < 1e-12 * n1);

  fbt_matrix* m = NULL;
  size_t rows = 0, cols = 0;
  EXPECT(fbt_hankel_matrix(g, g, &m) == FBT_OK);
  EXPECT(fbt_matrix_dims(m, &rows, &cols) == FBT_OK && rows == 256 && cols == 256);
  fbt_function* mf = NULL;
  EXPECT(fbt_matrix_apply(m, f, &mf) == FBT_OK);
  double a[256], b[256];
  fbt_function_values(mf, a, 256);
  fbt_function_values(ff, b, 256);
  EXPECT(fabs(a[10] - b[10]) < 1e-13);
  EXPECT(fbt_matrix_save(m, "/nonexistent-dir/m.bin") == FBT_ERR_IO);

  fbt_interval_set* s0 = NULL;
  fbt_interval_set_parse("0,0.3", &s0);
  double op = 0, d = 0, c = 0;
  EXPECT(fbt_annihilation_constants(0.0, s0, s0, &op, &d, &c) == FBT_OK);
  EXPECT(op > 0.0 && op < 1.0 && fabs(c - 1.0 - d) < 1e-12);

  char* report = NULL;
  char* csv = NULL;
  int passed = 0;
  EXPECT(fbt_run_experiment("thin-example", "{\"eps\": 0.05}", &report, &csv, &passed) == FBT_OK);
  EXPECT(passed == 1 && strstr(report, "\"is_thin\": true") != NULL);
  fbt_free_string(report);
  fbt_free_string(csv);
  EXPECT(fbt_run_experiment("thin-example", "{\"eps\": \"x\"}", &report, &csv, &passed) == FBT_ERR_USAGE);
  EXPECT(fbt_run_experiment("thin-example", "{not json", &report, &csv, &passed) == FBT_ERR_USAGE);
  EXPECT(fbt_run_experiment(NULL, NULL, &report, &csv, &passed) == FBT_ERR_DOMAIN);
  char* cfg = NULL;
  EXPECT(fbt_default_config("lp", &cfg) == FBT_OK && strstr(cfg, "eps_list") != NULL);
  fbt_free_string(cfg);

  fbt_function_destroy(mf);
  fbt_matrix_destroy(m);
  fbt_function_destroy(ff);
  fbt_function_destroy(f);
  fbt_grid_destroy(g);
  fbt_interval_set_destroy(s0);
  fbt_interval_set_destroy(s);

  if (failures) {
    fprintf(stderr, "%d C API checks failed\n", failures);
    return 1;
  }
  printf("all C API checks passed\n");
  return 0;
}
