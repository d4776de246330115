#pragma once

#include <string>
#include <vector>

#include "fbt/specfun.hpp"

namespace fbt {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Finite union of half-open intervals [lo, hi) in [0, inf), kept sorted,
// disjoint and merged. Empty intervals are dropped.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> intervals);
  static IntervalSet single(double lo, double hi) { return IntervalSet({{lo, hi}}); }

  const std::vector<Interval>& intervals() const { return iv_; }
  bool empty() const { return iv_.empty(); }
  std::size_t size() const { return iv_.size(); }
  bool contains(double x) const;
  double sup() const { return iv_.empty() ? 0.0 : iv_.back().hi; }
  std::vector<double> endpoints() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> iv_;
};

// Accepts "a,b;c,d" as well as the JSON array form.
IntervalSet parse_interval_set(const std::string& text);
std::string format_interval_set(const IntervalSet& s);

double mu_alpha(Alpha a, double lo, double hi);
double mu_alpha(Alpha a, const Interval& i);
double mu_alpha(Alpha a, const IntervalSet& s);
double lebesgue(const IntervalSet& s);

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_complement(const IntervalSet& a, double radius);
IntervalSet set_intersection(const IntervalSet& a, const Interval& window);

double doubling_ratio(Alpha a, const Interval& i);

}  // namespace fbt
