#include "fbt/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "fbt/errors.hpp"

namespace fbt {

Alpha::Alpha(double value) : v_(value) {
  if (!(value > -0.5) || !std::isfinite(value))
    throw DomainError("alpha must be a finite real > -1/2, got " + std::to_string(value));
}

double gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("gamma: argument must be positive and finite");
  const double g = std::tgamma(x);
  if (!std::isfinite(g)) throw NumericError("gamma: overflow");
  return g;
}

double kernel_normalization(Alpha a) { return std::pow(2.0, a.value()) * gamma(a.value() + 1.0); }

double j_at_zero(Alpha a) { return 1.0 / kernel_normalization(a); }

namespace {

int poisson_nodes_for(double x) {
  const double need = x + 10.0 * std::cbrt(std::max(x, 1.0)) + 24.0;
  int n = static_cast<int>(std::ceil(need / 2.0));
  return (n + 7) / 8 * 8;
}

}  // namespace

BesselKernel::BesselKernel(Alpha a) : a_(a), j0_(j_at_zero(a)) {
  const double nu = a.value();
  x_series_ = 4.0;
  x_asym_ = 20.0 + 0.5 * nu * nu;

  coeffs_.push_back(j0_);
  for (int n = 1; n < 80; ++n) {
    const double c = -coeffs_.back() / (4.0 * n * (n + nu));
    if (c == 0.0) break;
    coeffs_.push_back(c);
  }

  asym_.push_back(1.0);
  const double mu = 4.0 * nu * nu;
  for (int k = 1; k < 120; ++k) {
    const double m = 2.0 * k - 1.0;
    asym_.push_back(asym_.back() * (mu - m * m) / (8.0 * k));
  }

  rule_ = normalized_gegenbauer(poisson_nodes_for(x_asym_), nu - 0.5);
}

double BesselKernel::series(double x) const {
  const double u = x * x;
  CompensatedSum s;
  double p = 1.0;
  for (double c : coeffs_) {
    const double term = c * p;
    s.add(term);
    if (std::abs(term) < 1e-18 * j0_ && p > 1.0) break;
    p *= u;
  }
  return s.value();
}

double BesselKernel::poisson(double x) const {
  const auto& r = *rule_;
  const std::size_t n = r.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n / 2; ++i) s += 2.0 * r.weights[i] * std::cos(x * r.nodes[i]);
  if (n % 2 == 1) s += r.weights[n / 2];
  return j0_ * s;
}

double BesselKernel::asymptotic(double x) const {
  const double nu = a_.value();
  double p = 0.0, q = 0.0;
  double xk = 1.0;
  double last = INFINITY;
  for (std::size_t k = 0; k < asym_.size(); ++k) {
    const double term = asym_[k] / xk;
    const double mag = std::abs(term);
    if (k > 1 && mag > last) break;
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0)
      p += sign * term;
    else
      q += sign * term;
    if (mag < 1e-17 && k > 1) break;
    if (asym_[k] == 0.0) break;
    last = mag;
    xk *= x;
  }
  const double chi = x - (0.5 * nu + 0.25) * M_PI;
  const double big_j = std::sqrt(2.0 / (M_PI * x)) * (p * std::cos(chi) - q * std::sin(chi));
  return big_j * std::pow(x, -nu);
}

double BesselKernel::operator()(double x) const {
  x = std::abs(x);
  if (x <= x_series_) return series(x);
  if (x < x_asym_) return poisson(x);
  return asymptotic(x);
}

const BesselKernel& bessel_kernel(Alpha a) {
  static std::mutex m;
  static std::map<double, std::unique_ptr<BesselKernel>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto& slot = cache[a.value()];
  if (!slot) slot = std::make_unique<BesselKernel>(a);
  return *slot;
}

double bessel_j(Alpha a, double x) {
  if (!(x >= 0.0)) throw DomainError("bessel_j: argument must be nonnegative");
  return bessel_kernel(a)(x);
}

double bessel_j_poisson(Alpha a, double x, int nodes) {
  if (nodes < 8) throw DomainError("bessel_j_poisson: need at least 8 nodes");
  const auto rule = normalized_gegenbauer(nodes, a.value() - 0.5);
  CompensatedSum s;
  for (std::size_t i = 0; i < rule->size(); ++i) s.add(rule->weights[i] * std::cos(x * rule->nodes[i]));
  return j_at_zero(a) * s.value();
}

namespace {

double compute_kappa(Alpha a) {
  const BesselKernel& j = bessel_kernel(a);
  const double p = a.value() + 0.5;
  auto env = [&](double t) { return std::abs(j(t)) * std::pow(t, p); };
  const int n = 100000;
  const double lo = std::log(1e-4), hi = std::log(500.0);
  double best = 0.0;
  int arg = 0;
  for (int i = 0; i < n; ++i) {
    const double t = std::exp(lo + (hi - lo) * i / (n - 1));
    const double v = env(t);
    if (v > best) {
      best = v;
      arg = i;
    }
  }
  const double tl = std::exp(lo + (hi - lo) * std::max(arg - 1, 0) / (n - 1));
  const double tr = std::exp(lo + (hi - lo) * std::min(arg + 1, n - 1) / (n - 1));
  const auto refined = golden_section_min([&](double t) { return -env(t); }, tl, tr, 1e-14);
  best = std::max(best, -refined.value);
  // below order 1/2 the envelope increases towards its limit at infinity
  if (a.value() <= 0.5) best = std::max(best, std::sqrt(2.0 / M_PI));
  return best;
}

}  // namespace

double kappa_alpha(Alpha a) {
  static std::mutex m;
  static std::map<double, double> cache;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(a.value());
    if (it != cache.end()) return it->second;
  }
  const double k = compute_kappa(a);
  std::lock_guard<std::mutex> lock(m);
  cache[a.value()] = k;
  return k;
}

}  // namespace fbt
