#include "fbt/translation.hpp"

#include <algorithm>
#include <sstream>

#include "fbt/errors.hpp"
#include "fbt/parallel.hpp"
#include "fbt/quadrature.hpp"

namespace fbt {

double translation_constant(Alpha a) {
  const double al = a.value();
  return std::exp(std::lgamma(al + 1.0) - std::lgamma(al + 0.5)) / std::sqrt(M_PI);
}

namespace {

// W with the two distances to the ends of (|x-y|, x+y) supplied separately.
double kernel_w_offsets(double al, double c, double x, double y, double t, double from_lo, double to_hi) {
  const double lo = std::abs(x - y);
  const double delta = std::sqrt(to_hi * (x + y + t)) * std::sqrt(from_lo * (t + lo));
  return c * std::pow(delta, 2.0 * al - 1.0) / std::pow(x * y * t, 2.0 * al);
}

double kernel_w_constant(double al, double theta_const) {
  return std::pow(2.0, -3.0 * al) * theta_const / std::pow(M_PI, al + 1.0);
}

}  // namespace

double kernel_W(Alpha a, double x, double y, double t) {
  if (!(x > 0.0) || !(y > 0.0) || !(t > 0.0)) return 0.0;
  const double lo = std::abs(x - y), hi = x + y;
  if (!(t > lo) || !(t < hi)) return 0.0;
  const double al = a.value();
  return kernel_w_offsets(al, kernel_w_constant(al, translation_constant(a)), x, y, t, t - lo, hi - t);
}

double translate_value(const ScalarFn& f, Alpha a, double x, double y, const TranslateOptions& opt) {
  if (x < 0.0 || y < 0.0) throw DomainError("translation arguments must be nonnegative");
  if (x == 0.0) return f(y);
  if (y == 0.0) return f(x);
  const double rho = opt.support;
  const double d = x - y;
  if (std::abs(d) >= rho) return 0.0;
  const double al = a.value();
  const double xy2 = 2.0 * x * y;
  const double cmin = std::isfinite(rho) ? ((x - y) * (x - y) - rho * rho) / xy2 + 1.0 : -INFINITY;

  if (cmin <= -0.9) {
    const auto rule = normalized_gegenbauer(opt.order, al - 0.5);
    double s = 0.0;
    for (std::size_t i = 0; i < rule->size(); ++i) {
      const double one_minus_c = 1.0 - rule->nodes[i];
      s += rule->weights[i] * f(std::sqrt(d * d + xy2 * one_minus_c));
    }
    return s;
  }

  // c in [cmin, 1] with the (1-c)^{a-1/2} endpoint carried by the rule
  const auto rule = cached_gauss_jacobi(opt.order, al - 0.5, 0.0);
  const double span = 0.5 * (1.0 - cmin);
  double s = 0.0;
  for (std::size_t i = 0; i < rule->size(); ++i) {
    const double one_minus_c = span * (1.0 - rule->nodes[i]);
    const double one_plus_c = 2.0 - one_minus_c;
    s += rule->weights[i] * std::pow(one_plus_c, al - 0.5) * f(std::sqrt(d * d + xy2 * one_minus_c));
  }
  return translation_constant(a) * std::pow(span, al + 0.5) * s;
}

double translate_value_w(const ScalarFn& f, Alpha a, double x, double y) {
  if (x < 0.0 || y < 0.0) throw DomainError("translation arguments must be nonnegative");
  if (x == 0.0) return f(y);
  if (y == 0.0) return f(x);
  const double al = a.value();
  const double c = kernel_w_constant(al, translation_constant(a));
  const double scale = std::pow(2.0 * M_PI, al + 1.0);
  const double lo = std::abs(x - y), hi = x + y;
  return tanh_sinh(
      [&](double t, double from_lo, double to_hi) {
        return f(t) * kernel_w_offsets(al, c, x, y, t, from_lo, to_hi) * scale * std::pow(t, 2.0 * al + 1.0);
      },
      lo, hi);
}

namespace {

double effective_support(const RadialFunction& f) {
  double peak = 0.0;
  for (double v : f.values()) peak = std::max(peak, std::abs(v));
  const auto& x = f.grid()->nodes();
  for (std::size_t i = f.size(); i-- > 0;)
    if (std::abs(f[i]) > 1e-12 * peak) return x[i];
  return 0.0;
}

}  // namespace

RadialFunction translate(const RadialFunction& f, double x, int order) {
  if (!(x >= 0.0)) throw DomainError("translate: shift must be nonnegative");
  const GridPtr& g = f.grid();
  if (x == 0.0) return f;
  const double supp = effective_support(f);
  if (x + supp > g->radius()) {
    std::ostringstream msg;
    msg << "translate: support [0, " << supp + x << "] exceeds grid radius " << g->radius();
    warn(msg.str());
  }
  const ScalarFn fn = [&](double r) { return f(r); };
  TranslateOptions opt;
  opt.order = order;
  opt.support = g->radius();
  std::vector<double> out(f.size());
  parallel_for(out.size(), [&](std::size_t i) { out[i] = translate_value(fn, g->alpha(), x, g->nodes()[i], opt); });
  return RadialFunction(g, std::move(out));
}

RadialFunction convolve(const RadialFunction& f, const RadialFunction& g, int order) {
  if (f.grid() != g.grid() && f.grid()->nodes() != g.grid()->nodes())
    throw DomainError("convolve: functions live on different grids");
  const GridPtr& grid = f.grid();
  const auto& t = grid->nodes();
  const auto& w = grid->weights();
  const ScalarFn gn = [&](double r) { return g(r); };
  TranslateOptions opt;
  opt.order = order;
  opt.support = grid->radius();
  std::vector<double> out(f.size());
  parallel_for(out.size(), [&](std::size_t i) {
    CompensatedSum s;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (f[k] == 0.0) continue;
      s.add(w[k] * f[k] * translate_value(gn, grid->alpha(), t[i], t[k], opt));
    }
    out[i] = s.value();
  });
  return RadialFunction(grid, std::move(out));
}

}  // namespace fbt
