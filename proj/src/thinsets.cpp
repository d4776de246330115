#include "fbt/thinsets.hpp"

#include <algorithm>
#include <cmath>

#include "fbt/errors.hpp"
#include "fbt/quadrature.hpp"

namespace fbt {

Interval thin_window(double x) { return x <= 1.0 ? Interval{x, x + 1.0} : Interval{x, x + 1.0 / x}; }

namespace {

double window_ratio(const IntervalSet& s, Alpha a, double x) {
  const Interval w = thin_window(x);
  const double denom = mu_alpha(a, w);
  if (!(denom > 0.0)) return 0.0;
  return mu_alpha(a, set_intersection(s, w)) / denom;
}

}  // namespace

ThinReport is_thin(const IntervalSet& s, double eps, Alpha a, double radius) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("is_thin: eps must lie in (0, 1)");
  if (!(radius > 0.0)) throw DomainError("is_thin: radius must be positive");
  ThinReport rep;
  if (s.empty()) return rep;

  std::vector<double> cand{0.0, 1.0, radius};
  for (double e : s.endpoints()) {
    cand.push_back(e);
    cand.push_back(e - 1.0);
    if (e >= 2.0) cand.push_back(0.5 * (e + std::sqrt(e * e - 4.0)));
  }
  std::erase_if(cand, [&](double x) { return !(x >= 0.0 && x <= radius); });
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  double worst = -1.0, arg = 0.0;
  auto consider = [&](double x) {
    const double r = window_ratio(s, a, x);
    ++rep.windows_scanned;
    if (r > worst) {
      worst = r;
      arg = x;
    }
    return r;
  };

  const int dense = 10;
  struct Cell {
    double lo, hi, best;
  };
  std::vector<Cell> cells;
  for (std::size_t k = 0; k < cand.size(); ++k) {
    consider(cand[k]);
    if (k + 1 == cand.size()) break;
    const double lo = cand[k], hi = cand[k + 1];
    double best = -1.0;
    for (int i = 1; i < dense; ++i) best = std::max(best, consider(lo + (hi - lo) * i / dense));
    cells.push_back({lo, hi, best});
  }
  // refine the most promising cells for interior maxima
  std::sort(cells.begin(), cells.end(), [](const Cell& p, const Cell& q) { return p.best > q.best; });
  const std::size_t refine = std::min<std::size_t>(cells.size(), 16);
  for (std::size_t k = 0; k < refine; ++k) {
    const auto m = golden_section_min([&](double x) { return -window_ratio(s, a, x); }, cells[k].lo, cells[k].hi, 1e-12);
    consider(m.x);
  }

  rep.worst_ratio = std::max(worst, 0.0);
  rep.is_thin = rep.worst_ratio <= eps;
  if (rep.worst_ratio > 0.0) rep.witness = thin_window(arg);
  return rep;
}

IntervalSet make_thin_example(double eps, double c, long k_min, long k_max) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("make_thin_example: eps must lie in (0, 1)");
  if (!(c > 0.0)) throw DomainError("make_thin_example: c must be positive");
  if (k_min < 1 || k_max < k_min) throw DomainError("make_thin_example: need 1 <= k_min <= k_max");
  std::vector<Interval> iv;
  iv.reserve(static_cast<std::size_t>(k_max - k_min + 1));
  for (long k = k_min; k <= k_max; ++k) {
    const double kk = static_cast<double>(k);
    iv.push_back({kk, kk + eps / (c * kk)});
  }
  return IntervalSet(iv);
}

double covering_constant(Alpha a) { return std::pow(2.0, 2.0 * a.value() + 2.0); }

CoveringReport covering_check(const IntervalSet& s, double a, double b, double eps, Alpha alpha) {
  if (!(eps > 0.0 && eps < 1.0)) throw PreconditionError("covering_check: eps must lie in (0, 1)");
  const bool first_clause = (a == 0.0 && b > 1.0);
  const bool second_clause = (a >= 1.0 && b - a >= 1.0 / a);
  if (!first_clause && !second_clause)
    throw PreconditionError("covering_check: need a >= 1 with b - a >= 1/a, or a = 0 with b > 1");
  CoveringReport rep;
  rep.c_cover = covering_constant(alpha);
  rep.ratio = mu_alpha(alpha, set_intersection(s, Interval{a, b})) / (eps * mu_alpha(alpha, a, b));

  double x = first_clause ? 1.0 : a;
  rep.sequence.push_back(x);
  const std::size_t cap = 100000000;
  while (x < b && rep.sequence.size() < cap) {
    x += 1.0 / x;
    rep.sequence.push_back(x);
  }
  rep.steps = rep.sequence.size() - 1;
  if (rep.sequence.size() > 64) {
    rep.sequence.erase(rep.sequence.begin() + 32, rep.sequence.end() - 32);
  }
  const bool exited = x >= b;
  rep.bound_ok = exited && rep.ratio <= rep.c_cover;
  return rep;
}

AnnulusBounds annulus_measure_bounds(Alpha a, double x, double r) {
  if (!(x > 0.0) || !(r > 0.0)) throw DomainError("annulus_measure_bounds: x and r must be positive");
  const double al = a.value();
  const double d = r / x;
  AnnulusBounds out;
  if (d <= x) {
    out.near = AnnulusRegime{mu_alpha(a, x - d, x + d), std::pow(8.0 * M_PI, al + 1.0) * r * std::pow(x, 2.0 * al)};
  }
  if (d >= 0.5 * x) {
    out.far = AnnulusRegime{mu_alpha(a, 0.0, x + d), std::pow(18.0 * M_PI, al + 1.0) * std::pow(d, 2.0 * al + 2.0)};
  }
  return out;
}

}  // namespace fbt
