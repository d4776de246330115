#pragma once

#include <string>

#include "fbt/spectral.hpp"

namespace fbt {

// a_a = pi^{(a+1)/2} / (sqrt(2^a (a+1-s)) Gamma(a+1)), the coefficient of the
// low-radius term in the regime-1 bound.
double faris_a(double s, Alpha a);

// Regime 1 (0 < s < a+1): min over r of r^{-s} + a_a r^{a+1-s}.
double faris_K(double s, Alpha a);
// Stationary point of the same bound in closed form.
double faris_K_closed_form(double s, Alpha a);
// Closed form with exponent (a+1)/s in place of s/(a+1); kept for comparison, it is not the minimum.
double faris_K_printed(double s, Alpha a);

// Integral of dmu_a / (1 + x^{2s}), s > a+1.
double faris_integral(double s, Alpha a);
// Regime 2 (s > a+1): closed form and the r-minimized two-term bound.
double faris_Kprime(double s, Alpha a);
double faris_Kprime_minimized(double s, Alpha a);

struct LocalReport {
  int regime = 1;
  double s = 0.0;
  double constant = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool holds = true;
};

LocalReport verify_local(const RadialFunction& f, const IntervalSet& e, double s);
LocalReport verify_local(const RadialFunction& f, const RadialFunction& transformed, const IntervalSet& e, double s);

}  // namespace fbt
