#include "fbt/uncertainty.hpp"

#include <cmath>

#include "fbt/errors.hpp"
#include "fbt/quadrature.hpp"

namespace fbt {

namespace {

void check_regime1(double s, Alpha a) {
  if (!(s > 0.0 && s < a.value() + 1.0)) throw DomainError("faris_K: need 0 < s < alpha + 1");
}

void check_regime2(double s, Alpha a) {
  if (!(s > a.value() + 1.0) || !std::isfinite(s)) throw DomainError("faris_Kprime: need s > alpha + 1");
}

}  // namespace

double faris_a(double s, Alpha a) {
  check_regime1(s, a);
  const double al = a.value();
  return std::pow(M_PI, 0.5 * (al + 1.0)) / (std::sqrt(std::pow(2.0, al) * (al + 1.0 - s)) * gamma(al + 1.0));
}

double faris_K(double s, Alpha a) {
  const double c = faris_a(s, a);
  const double q = a.value() + 1.0 - s;
  // convex in u = log r
  auto bound = [&](double u) { return std::exp(-s * u) + c * std::exp(q * u); };
  double lo = -1.0, hi = 1.0;
  while (bound(lo) < bound(lo + 0.5)) lo -= 2.0 * (1.0 - lo);
  while (bound(hi) < bound(hi - 0.5)) hi += 2.0 * (1.0 + hi);
  return golden_section_min(bound, lo, hi, 1e-15).value;
}

double faris_K_closed_form(double s, Alpha a) {
  const double c = faris_a(s, a);
  const double p = a.value() + 1.0;
  return p / (p - s) * std::pow(c * (p - s) / s, s / p);
}

double faris_K_printed(double s, Alpha a) {
  const double c = faris_a(s, a);
  const double p = a.value() + 1.0;
  return p / (p - s) * std::pow(c * (p - s) / s, p / s);
}

double faris_integral(double s, Alpha a) {
  check_regime2(s, a);
  const double al = a.value();
  const double scale = std::pow(2.0 * M_PI, al + 1.0);
  const double inner = tanh_sinh(
      [&](double, double x, double) { return std::pow(x, 2.0 * al + 1.0) / (1.0 + std::pow(x, 2.0 * s)); }, 0.0, 1.0);
  // x = 1/u on the tail
  const double beta = 2.0 * s - 2.0 * al - 3.0;
  const double outer =
      tanh_sinh([&](double, double u, double) { return std::pow(u, beta) / (std::pow(u, 2.0 * s) + 1.0); }, 0.0, 1.0);
  return scale * (inner + outer);
}

double faris_Kprime(double s, Alpha a) {
  const double t = s / (a.value() + 1.0);
  const double bracket = t * std::pow(t - 1.0, (1.0 - t) / t) * faris_integral(s, a);
  return j_at_zero(a) * std::sqrt(bracket);
}

double faris_Kprime_minimized(double s, Alpha a) {
  check_regime2(s, a);
  const double p = 2.0 * (a.value() + 1.0);
  const double q = p - 2.0 * s;
  auto bound = [&](double u) { return std::exp(p * u) + std::exp(q * u); };
  double lo = -1.0, hi = 1.0;
  while (bound(lo) < bound(lo + 0.5)) lo -= 2.0 * (1.0 - lo);
  while (bound(hi) < bound(hi - 0.5)) hi += 2.0 * (1.0 + hi);
  const double m = golden_section_min(bound, lo, hi, 1e-15).value;
  return j_at_zero(a) * std::sqrt(faris_integral(s, a) * m);
}

LocalReport verify_local(const RadialFunction& f, const RadialFunction& transformed, const IntervalSet& e, double s) {
  const Alpha a = f.grid()->alpha();
  const double p = a.value() + 1.0;
  if (s == p) throw DomainError("verify_local: s = alpha + 1 lies outside both regimes");
  LocalReport r;
  r.s = s;
  r.regime = s < p ? 1 : 2;
  const auto& w = transformed.grid()->weights();
  const auto& y = transformed.grid()->nodes();
  CompensatedSum acc;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (e.contains(y[i])) acc.add(w[i] * transformed[i] * transformed[i]);
  r.lhs = std::sqrt(acc.value());
  const double m = mu_alpha(a, e);
  const double moment = weighted_norm(f, s);
  if (r.regime == 1) {
    r.constant = faris_K(s, a);
    r.rhs = r.constant * std::pow(m, s / (2.0 * p)) * moment;
  } else {
    r.constant = faris_Kprime_minimized(s, a);
    r.rhs = r.constant * std::sqrt(m) * std::pow(norm(f, 2.0), 1.0 - p / s) * std::pow(moment, p / s);
  }
  r.ratio = r.rhs > 0.0 ? r.lhs / r.rhs : (r.lhs > 0.0 ? INFINITY : 0.0);
  r.holds = r.lhs <= r.rhs * (1.0 + 1e-6);
  return r;
}

LocalReport verify_local(const RadialFunction& f, const IntervalSet& e, double s) {
  return verify_local(f, hankel(f, f.grid()), e, s);
}

}  // namespace fbt
