#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fbt/measure.hpp"
#include "fbt/translation.hpp"

namespace fbt {

// Portable draws from mt19937_64: the standard distributions are not
// specified bit-for-bit across library implementations.
class Random {
 public:
  explicit Random(std::uint64_t seed) : eng_(seed) {}
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  long integer(long lo, long hi) { return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  std::uint64_t next() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

// Per-instance seed derived from a run seed, so sweeps do not depend on the
// order in which workers consume draws.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

// gaussian, gaussian-poly, bump, bessel-mode; lambda dilates the first three
// and sets the frequency of the last.
ScalarFn zoo_function(const std::string& name, Alpha a, double lambda = 1.0);
std::vector<std::string> zoo_names();

// Sum of c_m x^{2m} exp(-pi t x^2) terms; smooth, rapidly decaying and with a
// rapidly decaying transform.
struct RandomSmooth {
  std::vector<double> coeff;
  std::vector<int> power;
  std::vector<double> width;
  double operator()(double x) const;
  static RandomSmooth draw(Random& rng, int terms = 4, double tmin = 0.5, double tmax = 2.0);
};

IntervalSet random_interval_set(Random& rng, double lo, double hi, int max_pieces, double max_fraction = 1.0);

}  // namespace fbt
