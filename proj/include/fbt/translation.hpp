#pragma once

#include <cmath>
#include <functional>

#include "fbt/spectral.hpp"

namespace fbt {

using ScalarFn = std::function<double(double)>;

// Gamma(a+1) / (sqrt(pi) Gamma(a+1/2)).
double translation_constant(Alpha a);

// Translation kernel, normalized so that W(x, y, .) dmu_a is a probability measure.
double kernel_W(Alpha a, double x, double y, double t);

struct TranslateOptions {
  int order = 256;
  // f is taken to vanish beyond this radius; the angular integral is then
  // restricted to the part of the arc where the argument stays inside it.
  double support = INFINITY;
};

// T_x f (y) through the angular integral.
double translate_value(const ScalarFn& f, Alpha a, double x, double y, const TranslateOptions& opt = {});
// T_x f (y) through the kernel W, integrated directly in t.
double translate_value_w(const ScalarFn& f, Alpha a, double x, double y);

RadialFunction translate(const RadialFunction& f, double x, int order = 256);
RadialFunction convolve(const RadialFunction& f, const RadialFunction& g, int order = 128);

}  // namespace fbt
