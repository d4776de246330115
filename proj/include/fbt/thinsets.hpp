#pragma once

#include <optional>
#include <vector>

#include "fbt/measure.hpp"

namespace fbt {

// The test window at position x: [x, x+1] for x <= 1, [x, x+1/x] beyond.
Interval thin_window(double x);

struct ThinReport {
  bool is_thin = true;
  double worst_ratio = 0.0;
  std::optional<Interval> witness;
  std::size_t windows_scanned = 0;
};

ThinReport is_thin(const IntervalSet& s, double eps, Alpha a, double radius);

IntervalSet make_thin_example(double eps, double c, long k_min, long k_max);

struct CoveringReport {
  double ratio = 0.0;
  double c_cover = 0.0;
  bool bound_ok = false;
  std::size_t steps = 0;
  std::vector<double> sequence;
};

// Constant of the covering argument: mu_a([a, 2b-a]) <= 2^{2a+2} mu_a([a, b]).
double covering_constant(Alpha a);
CoveringReport covering_check(const IntervalSet& s, double a, double b, double eps, Alpha alpha);

struct AnnulusRegime {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds() const { return lhs <= rhs * (1.0 + 1e-12); }
};

struct AnnulusBounds {
  std::optional<AnnulusRegime> near;  // r/x <= x
  std::optional<AnnulusRegime> far;   // r/x >= x/2
};

AnnulusBounds annulus_measure_bounds(Alpha a, double x, double r);

}  // namespace fbt
