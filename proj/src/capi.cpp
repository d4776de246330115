#include "fbt/fbt.h"

#include <cstring>
#include <new>
#include <string>

#include "fbt/errors.hpp"
#include "fbt/experiments.hpp"
#include "fbt/io.hpp"
#include "fbt/localization.hpp"
#include "fbt/parallel.hpp"
#include "fbt/testfunctions.hpp"

struct fbt_grid {
  fbt::GridPtr grid;
};

struct fbt_function {
  fbt::RadialFunction f;
};

struct fbt_interval_set {
  fbt::IntervalSet set;
};

struct fbt_matrix {
  fbt::OperatorMatrix m;
};

namespace {

thread_local std::string last_error;

template <class F>
fbt_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return FBT_OK;
  } catch (const fbt::UsageError& e) {
    last_error = e.what();
    return FBT_ERR_USAGE;
  } catch (const fbt::DomainError& e) {
    last_error = e.what();
    return FBT_ERR_DOMAIN;
  } catch (const fbt::PreconditionError& e) {
    last_error = e.what();
    return FBT_ERR_PRECONDITION;
  } catch (const fbt::NumericError& e) {
    last_error = e.what();
    return FBT_ERR_NUMERIC;
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return FBT_ERR_USAGE;
  } catch (const std::ios_base::failure& e) {
    last_error = e.what();
    return FBT_ERR_IO;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FBT_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return FBT_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw fbt::DomainError(std::string(what) + " must not be null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

size_t copy_out(const std::vector<double>& v, double* out, size_t cap) {
  const size_t n = std::min(cap, v.size());
  if (out && n) std::memcpy(out, v.data(), n * sizeof(double));
  return n;
}

}  // namespace

extern "C" {

const char* fbt_version(void) { return fbt::library_version(); }

const char* fbt_last_error(void) { return last_error.c_str(); }

void fbt_set_threads(size_t n) { fbt::set_worker_count(n); }

fbt_status fbt_gamma(double x, double* out) {
  return guard([&] {
    require(out, "out");
    *out = fbt::gamma(x);
  });
}

fbt_status fbt_bessel_j(double alpha, double x, double* out) {
  return guard([&] {
    require(out, "out");
    *out = fbt::bessel_j(fbt::Alpha(alpha), x);
  });
}

fbt_status fbt_bessel_j_poisson(double alpha, double x, int nodes, double* out) {
  return guard([&] {
    require(out, "out");
    *out = fbt::bessel_j_poisson(fbt::Alpha(alpha), x, nodes);
  });
}

fbt_status fbt_kappa_alpha(double alpha, double* out) {
  return guard([&] {
    require(out, "out");
    *out = fbt::kappa_alpha(fbt::Alpha(alpha));
  });
}

fbt_status fbt_interval_set_parse(const char* text, fbt_interval_set** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new fbt_interval_set{fbt::parse_interval_set(text)};
  });
}

void fbt_interval_set_destroy(fbt_interval_set* s) { delete s; }

size_t fbt_interval_set_size(const fbt_interval_set* s) { return s ? s->set.size() : 0; }

fbt_status fbt_interval_set_get(const fbt_interval_set* s, size_t i, double* lo, double* hi) {
  return guard([&] {
    require(s, "set");
    if (i >= s->set.size()) throw fbt::DomainError("interval index out of range");
    if (lo) *lo = s->set.intervals()[i].lo;
    if (hi) *hi = s->set.intervals()[i].hi;
  });
}

fbt_status fbt_mu_alpha(double alpha, const fbt_interval_set* s, double* out) {
  return guard([&] {
    require(s, "set");
    require(out, "out");
    *out = fbt::mu_alpha(fbt::Alpha(alpha), s->set);
  });
}

fbt_status fbt_lebesgue(const fbt_interval_set* s, double* out) {
  return guard([&] {
    require(s, "set");
    require(out, "out");
    *out = fbt::lebesgue(s->set);
  });
}

fbt_status fbt_grid_create(double alpha, double radius, int n, fbt_grid** out) {
  return guard([&] {
    require(out, "out");
    *out = new fbt_grid{fbt::make_grid(fbt::Alpha(alpha), radius, n)};
  });
}

void fbt_grid_destroy(fbt_grid* g) { delete g; }

size_t fbt_grid_size(const fbt_grid* g) { return g ? g->grid->size() : 0; }

size_t fbt_grid_nodes(const fbt_grid* g, double* out, size_t cap) { return g ? copy_out(g->grid->nodes(), out, cap) : 0; }

size_t fbt_grid_weights(const fbt_grid* g, double* out, size_t cap) {
  return g ? copy_out(g->grid->weights(), out, cap) : 0;
}

fbt_status fbt_function_sample(const fbt_grid* g, const char* name, double lambda, fbt_function** out) {
  return guard([&] {
    require(g, "grid");
    require(name, "name");
    require(out, "out");
    auto fn = fbt::zoo_function(name, g->grid->alpha(), lambda);
    *out = new fbt_function{fbt::RadialFunction::sample(g->grid, fn)};
  });
}

fbt_status fbt_function_from_values(const fbt_grid* g, const double* values, size_t count, fbt_function** out) {
  return guard([&] {
    require(g, "grid");
    require(values, "values");
    require(out, "out");
    if (count != g->grid->size()) throw fbt::DomainError("value count does not match grid size");
    *out = new fbt_function{fbt::RadialFunction(g->grid, std::vector<double>(values, values + count))};
  });
}

void fbt_function_destroy(fbt_function* f) { delete f; }

size_t fbt_function_values(const fbt_function* f, double* out, size_t cap) {
  return f ? copy_out(f->f.values(), out, cap) : 0;
}

fbt_status fbt_function_norm(const fbt_function* f, double p, double* out) {
  return guard([&] {
    require(f, "function");
    require(out, "out");
    *out = fbt::norm(f->f, p);
  });
}

fbt_status fbt_hankel(const fbt_function* f, const fbt_grid* out_grid, fbt_function** out) {
  return guard([&] {
    require(f, "function");
    require(out_grid, "grid");
    require(out, "out");
    *out = new fbt_function{fbt::hankel(f->f, out_grid->grid)};
  });
}

fbt_status fbt_hankel_matrix(const fbt_grid* in, const fbt_grid* out_grid, fbt_matrix** out) {
  return guard([&] {
    require(in, "grid");
    require(out_grid, "grid");
    require(out, "out");
    *out = new fbt_matrix{fbt::hankel_matrix(in->grid, out_grid->grid)};
  });
}

void fbt_matrix_destroy(fbt_matrix* m) { delete m; }

fbt_status fbt_matrix_dims(const fbt_matrix* m, size_t* rows, size_t* cols) {
  return guard([&] {
    require(m, "matrix");
    if (rows) *rows = static_cast<size_t>(m->m.rows());
    if (cols) *cols = static_cast<size_t>(m->m.cols());
  });
}

fbt_status fbt_matrix_apply(const fbt_matrix* m, const fbt_function* f, fbt_function** out) {
  return guard([&] {
    require(m, "matrix");
    require(f, "function");
    require(out, "out");
    *out = new fbt_function{m->m.apply(f->f)};
  });
}

fbt_status fbt_matrix_save(const fbt_matrix* m, const char* path) {
  return guard([&] {
    require(m, "matrix");
    require(path, "path");
    try {
      fbt::save_matrix(path, m->m);
    } catch (const std::runtime_error& e) {
      throw std::ios_base::failure(e.what());
    }
  });
}

fbt_status fbt_annihilation_constants(double alpha, const fbt_interval_set* s, const fbt_interval_set* sigma,
                                      double* op_norm, double* d, double* c) {
  return guard([&] {
    require(s, "S");
    require(sigma, "Sigma");
    const auto k = fbt::annihilation_constants(s->set, sigma->set, fbt::Alpha(alpha));
    if (op_norm) *op_norm = k.norm;
    if (d) *d = k.D;
    if (c) *c = k.C;
  });
}

fbt_status fbt_run_experiment(const char* command, const char* config_json, char** report, char** csv, int* passed) {
  return guard([&] {
    require(command, "command");
    require(report, "report");
    nlohmann::json cfg;
    if (config_json && *config_json) cfg = nlohmann::json::parse(config_json);
    const fbt::ExperimentResult r = fbt::run_experiment(command, cfg);
    std::string text = r.report.dump(2);
    text.push_back('\n');
    char* rep = dup_string(text);
    char* c = nullptr;
    if (csv) {
      try {
        c = dup_string(r.csv);
      } catch (...) {
        std::free(rep);
        throw;
      }
      *csv = c;
    }
    *report = rep;
    if (passed) *passed = r.passed ? 1 : 0;
  });
}

fbt_status fbt_default_config(const char* command, char** out) {
  return guard([&] {
    require(command, "command");
    require(out, "out");
    *out = dup_string(fbt::default_config(command).dump(2));
  });
}

void fbt_free_string(char* s) { std::free(s); }

}  // extern "C"
