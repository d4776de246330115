#pragma once

#include <cmath>
#include <limits>
#include <memory>
#include <utility>
#include <vector>

namespace fbt {

// Nodes ascending on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }
};

// Gauss rule for the weight (1-s)^a (1+s)^b on [-1, 1], built by Golub–Welsch.
Rule gauss_jacobi(int n, double a, double b);
Rule gauss_legendre(int n);

// Thread-safe memoized variant; the returned rule is immutable.
std::shared_ptr<const Rule> cached_gauss_jacobi(int n, double a, double b);

// Gegenbauer rule for (1-s^2)^{lambda} rescaled so the weights sum to one.
std::shared_ptr<const Rule> normalized_gegenbauer(int n, double lambda);

// Double-exponential quadrature on (a, b). The integrand receives the node and
// its exact distances to both ends, so endpoint singularities can be evaluated
// without cancellation: f(t, t - a, b - t).
template <class F>
double tanh_sinh(F&& f, double a, double b, double h = 1.0 / 32.0, double tmax = 6.5) {
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  const int kmax = static_cast<int>(std::ceil(tmax / h));
  for (int k = -kmax; k <= kmax; ++k) {
    const double t = k * h;
    const double u = 0.5 * M_PI * std::sinh(t);
    const double e = std::exp(-2.0 * std::abs(u));
    // distance from the nearer endpoint, exact through the exponential form
    const double near = (b - a) * e / (1.0 + e);
    if (near <= 0.0) continue;
    const double far = (b - a) - near;
    const double ch = std::cosh(u);
    const double w = half * 0.5 * M_PI * std::cosh(t) / (ch * ch) * h;
    if (!(w > 0.0) || !std::isfinite(w)) continue;
    const double left = (u < 0.0) ? near : far;
    const double right = (u < 0.0) ? far : near;
    const double x = (u < 0.0) ? a + near : b - near;
    sum += w * f(x, left, right);
  }
  return sum;
}

struct MinResult {
  double x;
  double value;
};

// Golden-section search for a unimodal function on [lo, hi].
template <class F>
MinResult golden_section_min(F&& f, double lo, double hi, double tol = 1e-12, int max_iter = 400) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > tol * (1.0 + std::abs(a) + std::abs(b)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? MinResult{c, fc} : MinResult{d, fd};
}

// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace fbt
