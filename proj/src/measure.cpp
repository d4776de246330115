#include "fbt/measure.hpp"

#include <algorithm>
#include <cmath>
#include "json.hpp"
#include <sstream>

#include "fbt/errors.hpp"

namespace fbt {

IntervalSet::IntervalSet(std::vector<Interval> intervals) {
  for (const auto& i : intervals) {
    if (!std::isfinite(i.lo) || !std::isfinite(i.hi)) throw DomainError("interval endpoints must be finite");
    if (i.lo < 0.0) throw DomainError("interval endpoints must be nonnegative");
    if (i.lo > i.hi) throw DomainError("interval with lo > hi");
  }
  std::erase_if(intervals, [](const Interval& i) { return !(i.hi > i.lo); });
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (const auto& i : intervals) {
    if (!iv_.empty() && i.lo <= iv_.back().hi)
      iv_.back().hi = std::max(iv_.back().hi, i.hi);
    else
      iv_.push_back(i);
  }
}

bool IntervalSet::contains(double x) const {
  auto it = std::upper_bound(iv_.begin(), iv_.end(), x, [](double v, const Interval& i) { return v < i.lo; });
  if (it == iv_.begin()) return false;
  --it;
  return x >= it->lo && x < it->hi;
}

std::vector<double> IntervalSet::endpoints() const {
  std::vector<double> e;
  e.reserve(2 * iv_.size());
  for (const auto& i : iv_) {
    e.push_back(i.lo);
    e.push_back(i.hi);
  }
  return e;
}

IntervalSet parse_interval_set(const std::string& text) {
  std::string t = text;
  auto first = t.find_first_not_of(" \t\n");
  if (first == std::string::npos) return {};
  std::vector<Interval> out;
  if (t[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      throw DomainError(std::string("interval set: ") + e.what());
    }
    if (!j.is_array()) throw DomainError("interval set JSON must be an array of [lo, hi] pairs");
    for (const auto& p : j) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
        throw DomainError("interval set JSON must be an array of [lo, hi] pairs");
      out.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return IntervalSet(out);
  }
  std::stringstream ss(t);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.find_first_not_of(" \t") == std::string::npos) continue;
    auto comma = part.find(',');
    if (comma == std::string::npos) throw DomainError("interval '" + part + "' must be written lo,hi");
    try {
      std::size_t used = 0;
      const std::string a = part.substr(0, comma), b = part.substr(comma + 1);
      const double lo = std::stod(a, &used);
      if (a.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(a);
      const double hi = std::stod(b, &used);
      if (b.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(b);
      out.push_back({lo, hi});
    } catch (const std::logic_error&) {
      throw DomainError("interval '" + part + "' is not numeric");
    }
  }
  return IntervalSet(out);
}

std::string format_interval_set(const IntervalSet& s) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& i : s.intervals()) j.push_back({i.lo, i.hi});
  return j.dump();
}

double mu_alpha(Alpha a, double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  const double p = 2.0 * a.value() + 2.0;
  const double c = std::pow(2.0 * M_PI, a.value() + 1.0) / p;
  // hi^p - lo^p without cancellation for thin intervals far from 0
  const double diff = (lo > 0.0) ? std::pow(hi, p) * -std::expm1(p * std::log1p(-(hi - lo) / hi)) : std::pow(hi, p);
  return c * diff;
}

double mu_alpha(Alpha a, const Interval& i) { return mu_alpha(a, i.lo, i.hi); }

double mu_alpha(Alpha a, const IntervalSet& s) {
  CompensatedSum sum;
  for (const auto& i : s.intervals()) sum.add(mu_alpha(a, i));
  return sum.value();
}

double lebesgue(const IntervalSet& s) {
  CompensatedSum sum;
  for (const auto& i : s.intervals()) sum.add(i.length());
  return sum.value();
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return IntervalSet(all);
}

IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  const auto& x = a.intervals();
  const auto& y = b.intervals();
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    const double lo = std::max(x[i].lo, y[j].lo);
    const double hi = std::min(x[i].hi, y[j].hi);
    if (hi > lo) out.push_back({lo, hi});
    if (x[i].hi < y[j].hi)
      ++i;
    else
      ++j;
  }
  return IntervalSet(out);
}

IntervalSet set_intersection(const IntervalSet& a, const Interval& window) {
  std::vector<Interval> out;
  const auto& v = a.intervals();
  auto it = std::lower_bound(v.begin(), v.end(), window.lo, [](const Interval& i, double x) { return i.hi <= x; });
  for (; it != v.end() && it->lo < window.hi; ++it) {
    const double lo = std::max(it->lo, window.lo);
    const double hi = std::min(it->hi, window.hi);
    if (hi > lo) out.push_back({lo, hi});
  }
  return IntervalSet(out);
}

IntervalSet set_complement(const IntervalSet& a, double radius) {
  if (!(radius > 0.0)) throw DomainError("complement needs a positive bounding radius");
  std::vector<Interval> out;
  double cursor = 0.0;
  for (const auto& i : a.intervals()) {
    if (i.lo >= radius) break;
    if (i.lo > cursor) out.push_back({cursor, i.lo});
    cursor = std::max(cursor, i.hi);
  }
  if (cursor < radius) out.push_back({cursor, radius});
  return IntervalSet(out);
}

double doubling_ratio(Alpha a, const Interval& i) {
  if (!(i.hi > i.lo) || i.lo < 0.0) throw DomainError("doubling_ratio needs a nondegenerate interval in [0, inf)");
  const double w = i.hi - i.lo;
  return mu_alpha(a, std::max(0.0, i.lo - w), i.hi + w) / mu_alpha(a, i);
}

}  // namespace fbt
