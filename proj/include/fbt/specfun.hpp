#pragma once

#include <memory>
#include <vector>

#include "fbt/quadrature.hpp"

namespace fbt {

class Alpha {
 public:
  explicit Alpha(double value);
  double value() const noexcept { return v_; }
  friend bool operator==(Alpha a, Alpha b) { return a.v_ == b.v_; }

 private:
  double v_;
};

double gamma(double x);

// j_a(0) = 1 / (2^a Gamma(a+1)).
double j_at_zero(Alpha a);

// 2^a Gamma(a+1): the factor relating the kernel j_a to the normalized kernel
// that equals 1 at the origin.
double kernel_normalization(Alpha a);

// Evaluator for j_a(x) = J_a(x)/x^a with per-order precomputation.
class BesselKernel {
 public:
  explicit BesselKernel(Alpha a);
  double operator()(double x) const;
  Alpha alpha() const { return a_; }

  double series(double x) const;
  double poisson(double x) const;
  double asymptotic(double x) const;

  double series_limit() const { return x_series_; }
  double asymptotic_limit() const { return x_asym_; }

 private:
  Alpha a_;
  double j0_;
  double x_series_;
  double x_asym_;
  std::vector<double> coeffs_;
  std::vector<double> asym_;
  std::shared_ptr<const Rule> rule_;
};

// Shared evaluator, built once per order.
const BesselKernel& bessel_kernel(Alpha a);

double bessel_j(Alpha a, double x);
double bessel_j_poisson(Alpha a, double x, int nodes);
double kappa_alpha(Alpha a);

}  // namespace fbt
