#include <cmath>

#include "doctest.h"
#include "fbt/testfunctions.hpp"
#include "fbt/translation.hpp"

using namespace fbt;

TEST_SUITE("translation") {
  TEST_CASE("product formula with the kernel normalization") {
    for (double a : {-0.3, 0.0, 0.5, 1.0, 2.5}) {
      const Alpha al(a);
      const BesselKernel& j = bessel_kernel(al);
      const double c = kernel_normalization(al);
      for (double lam : {0.5, 1.0, 3.0})
        for (double x : {0.2, 1.0, 2.7})
          for (double y : {0.1, 1.3, 2.9}) {
            const double t = translate_value([&](double r) { return j(lam * r); }, al, x, y);
            CHECK(std::abs(t - c * j(lam * x) * j(lam * y)) <= 1e-12);
          }
    }
  }

  TEST_CASE("the translation kernel is a probability density") {
    Random rng(2);
    for (double a : {-0.3, 0.0, 1.0, 2.5})
      for (int k = 0; k < 20; ++k) {
        const double x = rng.uniform(0.01, 6), y = rng.uniform(0.01, 6);
        CHECK(translate_value_w([](double) { return 1.0; }, Alpha(a), x, y) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(translate_value([](double) { return 1.0; }, Alpha(a), x, y) == doctest::Approx(1.0).epsilon(1e-13));
      }
  }

  TEST_CASE("the kernel vanishes outside the triangle and is symmetric") {
    const Alpha a(0.5);
    CHECK(kernel_W(a, 1.0, 2.0, 0.5) == 0.0);
    CHECK(kernel_W(a, 1.0, 2.0, 3.5) == 0.0);
    CHECK(kernel_W(a, 1.0, 2.0, 2.2) > 0.0);
    CHECK(kernel_W(a, 1.0, 2.0, 1.7) == doctest::Approx(kernel_W(a, 2.0, 1.0, 1.7)).epsilon(1e-14));
    CHECK(kernel_W(a, 1.0, 2.0, 1.7) == doctest::Approx(kernel_W(a, 1.7, 2.0, 1.0)).epsilon(1e-14));
  }

  TEST_CASE("angular and kernel routes agree") {
    Random rng(4);
    for (double a : {0.0, 0.5, 2.5})
      for (int k = 0; k < 20; ++k) {
        const double x = rng.uniform(0.05, 4), y = rng.uniform(0.05, 4);
        const ScalarFn even = [](double r) { return (1 + r * r) * std::exp(-r * r); };
        CHECK(std::abs(translate_value(even, Alpha(a), x, y) - translate_value_w(even, Alpha(a), x, y)) <= 1e-12);
        // odd powers of r put a branch point just off the angular interval when |x - y| << xy
        const ScalarFn f = [](double r) { return (1 + r) * std::exp(-r * r); };
        CHECK(std::abs(translate_value(f, Alpha(a), x, y) - translate_value_w(f, Alpha(a), x, y)) <= 1e-9);
      }
  }

  TEST_CASE("translation by zero is the identity and support propagates") {
    const ScalarFn bump = zoo_function("bump", Alpha(0.0), 0.5);
    CHECK(translate_value(bump, Alpha(0.0), 0.0, 0.3) == bump(0.3));
    CHECK(translate_value(bump, Alpha(0.0), 0.3, 0.0) == bump(0.3));
    TranslateOptions opt;
    opt.support = 0.5;
    for (double y : {0.1, 0.6, 1.4})
      CHECK(translate_value(bump, Alpha(0.0), 2.0, y, opt) == 0.0);
    CHECK(translate_value(bump, Alpha(0.0), 2.0, 1.8, opt) > 0.0);
    // reference from a 30-digit adaptive quadrature of the angular integral
    CHECK(std::abs(translate_value(bump, Alpha(0.0), 2.0, 1.8, opt) - 0.036615666141393596) <= 1e-13);
    CHECK(std::abs(translate_value_w(bump, Alpha(0.0), 2.0, 1.8) - 0.036615666141393596) <= 1e-6);
  }

  TEST_CASE("convolution of gaussians has the closed form") {
    // F(e^{-pi t x^2}) = t^{-a-1} e^{-pi y^2 / t}, and F(f*g) = c_a Ff Fg.
    for (double a : {0.0, 1.0}) {
      const GridPtr g = make_grid(Alpha(a), 6.0, 256);
      const auto f = RadialFunction::sample(g, [](double x) { return std::exp(-M_PI * x * x); });
      const auto h = convolve(f, f);
      const double c = kernel_normalization(Alpha(a));
      for (std::size_t i = 0; i < h.size(); i += 7) {
        const double x = g->nodes()[i];
        CHECK(std::abs(h[i] - c * std::pow(2.0, -a - 1) * std::exp(-M_PI * x * x / 2)) <= 1e-10);
      }
    }
  }

  TEST_CASE("translated grid functions follow the angular formula") {
    const GridPtr g = make_grid(Alpha(0.5), 8.0, 512);
    const auto f = RadialFunction::sample(g, [](double x) { return std::exp(-M_PI * x * x); });
    const auto t = translate(f, 1.1);
    const ScalarFn fn = [](double x) { return std::exp(-M_PI * x * x); };
    for (std::size_t i = 0; i < t.size(); i += 13)
      CHECK(std::abs(t[i] - translate_value(fn, Alpha(0.5), 1.1, g->nodes()[i])) <= 1e-11);
  }
}
