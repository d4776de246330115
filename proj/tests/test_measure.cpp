#include <cmath>

#include "doctest.h"
#include "fbt/errors.hpp"
#include "fbt/measure.hpp"
#include "fbt/testfunctions.hpp"

using namespace fbt;

namespace {

double mu_direct(double a, double lo, double hi) {
  return std::pow(2.0 * M_PI, a + 1.0) * (std::pow(hi, 2 * a + 2) - std::pow(lo, 2 * a + 2)) / (2 * a + 2);
}

}  // namespace

TEST_SUITE("measure") {
  TEST_CASE("canonical form sorts, merges and drops empty intervals") {
    const IntervalSet s({{2, 3}, {0, 1}, {1, 1.5}, {4, 4}});
    REQUIRE(s.size() == 2);
    CHECK(s.intervals()[0] == Interval{0, 1.5});
    CHECK(s.intervals()[1] == Interval{2, 3});
    CHECK(IntervalSet(s.intervals()) == s);
    CHECK_THROWS_AS(IntervalSet({{-1, 1}}), DomainError);
    CHECK_THROWS_AS(IntervalSet({{2, 1}}), DomainError);
    CHECK_THROWS_AS(IntervalSet({{0, INFINITY}}), DomainError);
  }

  TEST_CASE("half-open membership") {
    const IntervalSet s({{0, 1}, {2, 3}});
    CHECK(s.contains(0.0));
    CHECK(!s.contains(1.0));
    CHECK(s.contains(2.5));
    CHECK(!s.contains(3.0));
  }

  TEST_CASE("mu_alpha examples") {
    CHECK(mu_alpha(Alpha(0), IntervalSet::single(0, 1)) == doctest::Approx(M_PI).epsilon(1e-15));
    CHECK(mu_alpha(Alpha(0), IntervalSet::single(1, 2)) == doctest::Approx(3 * M_PI).epsilon(1e-15));
    CHECK(mu_alpha(Alpha(1.3), IntervalSet{}) == 0.0);
    for (double a : {-0.3, 0.0, 0.5, 2.5})
      for (auto [lo, hi] : {std::pair{0.0, 1.0}, {1.0, 1.001}, {7.0, 9.0}, {100.0, 100.0 + 1e-6}})
        CHECK(mu_alpha(Alpha(a), lo, hi) == doctest::Approx(mu_direct(a, lo, hi)).epsilon(1e-8));
  }

  TEST_CASE("mu_alpha keeps relative accuracy on thin intervals far out") {
    const double lo = 1000.0, hi = lo + 1e-9, w = hi - lo;
    const double expected = std::pow(2 * M_PI, 1.5) * std::pow(lo, 2.0) * w;  // density times width, a = 0.5
    CHECK(mu_alpha(Alpha(0.5), lo, hi) == doctest::Approx(expected).epsilon(1e-8));
  }

  TEST_CASE("lebesgue") {
    CHECK(lebesgue(IntervalSet({{0, 1}, {2, 3}})) == 2.0);
    CHECK(lebesgue(IntervalSet{}) == 0.0);
    CHECK(lebesgue(IntervalSet::single(1, 1)) == 0.0);
  }

  TEST_CASE("set operations") {
    CHECK(set_intersection(IntervalSet::single(0, 2), IntervalSet::single(1, 3)) == IntervalSet::single(1, 2));
    CHECK(set_complement(IntervalSet::single(0, 5), 5.0).empty());
    CHECK(set_union(IntervalSet::single(0, 1), IntervalSet::single(1, 2)) == IntervalSet::single(0, 2));
    CHECK(set_complement(IntervalSet({{1, 2}, {3, 4}}), 5.0) == IntervalSet({{0, 1}, {2, 3}, {4, 5}}));
    CHECK_THROWS_AS(set_complement(IntervalSet{}, 0.0), DomainError);
    CHECK(set_intersection(IntervalSet({{0, 1}, {2, 5}}), Interval{0.5, 3}) == IntervalSet({{0.5, 1}, {2, 3}}));
  }

  TEST_CASE("measures are additive and monotone on random sets") {
    Random rng(11);
    for (int k = 0; k < 200; ++k) {
      const Alpha a(rng.uniform(-0.4, 3.0));
      const IntervalSet s = random_interval_set(rng, 0, 10, 4);
      const IntervalSet t = random_interval_set(rng, 0, 10, 4);
      const double lhs = mu_alpha(a, set_union(s, t)) + mu_alpha(a, set_intersection(s, t));
      CHECK(lhs == doctest::Approx(mu_alpha(a, s) + mu_alpha(a, t)).epsilon(1e-12));
      CHECK(mu_alpha(a, set_intersection(s, t)) <= mu_alpha(a, s) * (1 + 1e-14));
      CHECK(mu_alpha(a, s) <= mu_alpha(a, set_union(s, t)) * (1 + 1e-14));
      CHECK(mu_alpha(a, s) + mu_alpha(a, set_complement(s, 10.0)) ==
            doctest::Approx(mu_alpha(a, 0, 10)).epsilon(1e-12));
    }
  }

  TEST_CASE("doubling ratio") {
    CHECK(doubling_ratio(Alpha(0), {1, 2}) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(doubling_ratio(Alpha(0), {10, 11}) == doctest::Approx(3.0).epsilon(1e-13));
    CHECK_THROWS_AS(doubling_ratio(Alpha(0), {1, 1}), DomainError);
    Random rng(5);
    for (double a : {0.0, 0.5, 2.5}) {
      double worst = 0.0;
      for (int k = 0; k < 2000; ++k) {
        const double lo = rng.uniform(0, 100), w = rng.uniform(1e-3, 100 - lo + 1e-3);
        const double r = doubling_ratio(Alpha(a), {lo, lo + w});
        worst = std::max(worst, r);
        if (lo >= 10 && w <= 1) CHECK((r >= 1.0 && r <= 3.5));
      }
      // origin-anchored intervals dominate: mu([0, 3w]) / mu([0, w]) = 3^{2a+2}
      CHECK(worst <= std::pow(3.0, 2 * a + 2) * (1 + 1e-12));
    }
  }

  TEST_CASE("parse and format round trip") {
    const IntervalSet s = parse_interval_set("0,1; 2.5,3");
    CHECK(s == IntervalSet({{0, 1}, {2.5, 3}}));
    CHECK(parse_interval_set(format_interval_set(s)) == s);
    CHECK(parse_interval_set("[[0,1],[1,2]]") == IntervalSet::single(0, 2));
    CHECK(parse_interval_set("").empty());
    CHECK_THROWS_AS(parse_interval_set("0,1,2"), DomainError);
    CHECK_THROWS_AS(parse_interval_set("[[0,1],[2]]"), DomainError);
    CHECK_THROWS_AS(parse_interval_set("a,b"), DomainError);
  }
}
