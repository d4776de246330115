#include "fbt/testfunctions.hpp"

#include <algorithm>
#include <cmath>

#include "fbt/errors.hpp"

namespace fbt {

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<std::string> zoo_names() { return {"gaussian", "gaussian-poly", "bump", "bessel-mode"}; }

ScalarFn zoo_function(const std::string& name, Alpha a, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("zoo_function: lambda must be positive");
  if (name == "gaussian") return [lambda](double x) { return std::exp(-M_PI * (x / lambda) * (x / lambda)); };
  if (name == "gaussian-poly")
    return [lambda](double x) {
      const double u = x / lambda;
      return u * u * std::exp(-M_PI * u * u);
    };
  if (name == "bump")
    return [lambda](double x) {
      const double u = x / lambda;
      return u < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - u * u)) : 0.0;
    };
  if (name == "bessel-mode") {
    const BesselKernel& j = bessel_kernel(a);
    return [&j, lambda](double x) { return j(lambda * x); };
  }
  throw DomainError("unknown test function: " + name);
}

double RandomSmooth::operator()(double x) const {
  double sum = 0.0;
  const double x2 = x * x;
  for (std::size_t i = 0; i < coeff.size(); ++i) sum += coeff[i] * std::pow(x2, power[i]) * std::exp(-M_PI * width[i] * x2);
  return sum;
}

RandomSmooth RandomSmooth::draw(Random& rng, int terms, double tmin, double tmax) {
  RandomSmooth f;
  for (int i = 0; i < terms; ++i) {
    f.coeff.push_back(rng.uniform(-1.0, 1.0));
    f.power.push_back(static_cast<int>(rng.integer(0, 2)));
    f.width.push_back(rng.uniform(tmin, tmax));
  }
  return f;
}

IntervalSet random_interval_set(Random& rng, double lo, double hi, int max_pieces, double max_fraction) {
  const int pieces = static_cast<int>(rng.integer(1, max_pieces));
  std::vector<double> cuts;
  for (int i = 0; i < 2 * pieces; ++i) cuts.push_back(rng.uniform(lo, hi));
  std::sort(cuts.begin(), cuts.end());
  std::vector<Interval> iv;
  for (int i = 0; i < pieces; ++i) {
    const double a = cuts[2 * i];
    const double b = a + max_fraction * (cuts[2 * i + 1] - a);
    iv.push_back({a, b});
  }
  return IntervalSet(std::move(iv));
}

}  // namespace fbt
