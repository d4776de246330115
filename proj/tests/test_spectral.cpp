#include <Eigen/SVD>
#include <cmath>

#include "doctest.h"
#include "fbt/errors.hpp"
#include "fbt/spectral.hpp"
#include "fbt/testfunctions.hpp"

using namespace fbt;

namespace {

double gaussian_width(double t, double a, double y) { return std::pow(t, -a - 1.0) * std::exp(-M_PI * y * y / t); }

double max_abs_diff(const RadialFunction& f, const std::function<double(double)>& g, double upto) {
  double e = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.grid()->nodes()[i] <= upto) e = std::max(e, std::abs(f[i] - g(f.grid()->nodes()[i])));
  return e;
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("grid weights integrate monomials against mu_alpha") {
    for (double a : {-0.3, 0.0, 0.5, 2.5}) {
      const GridPtr g = make_grid(Alpha(a), 3.0, 256);
      for (int k : {0, 1, 4, 9}) {
        double s = 0.0;
        for (std::size_t i = 0; i < g->size(); ++i) s += g->weights()[i] * std::pow(g->nodes()[i], k);
        const double exact = std::pow(2 * M_PI, a + 1) * std::pow(3.0, 2 * a + 2 + k) / (2 * a + 2 + k);
        CHECK(s == doctest::Approx(exact).epsilon(1e-13));
      }
    }
    CHECK_THROWS_AS(make_grid(Alpha(0), 0.0, 64), DomainError);
    CHECK_THROWS_AS(make_grid(Alpha(0), 1.0, 100), DomainError);
  }

  TEST_CASE("breakpoint grids contain their breakpoints") {
    const GridPtr g = RadialGrid::with_breakpoints(Alpha(0), 4.0, {0.3, 1.7, 1.7, 9.0}, 0.5, 8);
    const auto& e = g->edges();
    CHECK(std::find(e.begin(), e.end(), 0.3) != e.end());
    CHECK(std::find(e.begin(), e.end(), 1.7) != e.end());
    CHECK(e.back() == 4.0);
    for (std::size_t p = 1; p < e.size(); ++p) CHECK(e[p] - e[p - 1] <= 0.5 + 1e-12);
    const auto ind = g->indicator(IntervalSet::single(0.3, 1.7));
    double m = 0.0;
    for (std::size_t i = 0; i < ind.size(); ++i) m += ind[i] * g->weights()[i];
    CHECK(m == doctest::Approx(mu_alpha(Alpha(0), 0.3, 1.7)).epsilon(1e-13));
  }

  TEST_CASE("panel interpolation is spectrally accurate") {
    const GridPtr g = make_grid(Alpha(0.5), 8.0, 512);
    const auto f = RadialFunction::sample(g, [](double x) { return std::cos(3 * x) * std::exp(-0.1 * x); });
    for (double x = 0.0; x <= 8.0; x += 0.0137)
      CHECK(std::abs(f(x) - std::cos(3 * x) * std::exp(-0.1 * x)) <= 1e-12);
    CHECK(f(8.5) == 0.0);
    CHECK(f(-1.0) == 0.0);
  }

  TEST_CASE("gaussians of every width map to gaussians") {
    for (double a : {-0.3, 0.0, 0.5, 1.0, 2.5}) {
      const GridPtr g = make_grid(Alpha(a), 8.0, 1024);
      for (double t : {0.5, 1.0, 2.0}) {
        const auto f = RadialFunction::sample(g, [t](double x) { return std::exp(-M_PI * t * x * x); });
        const auto ff = hankel(f, g);
        CHECK(max_abs_diff(ff, [&](double y) { return gaussian_width(t, a, y); }, 8.0) <= 1e-12 * std::pow(t, -a - 1));
      }
    }
  }

  TEST_CASE("x^2 times a gaussian maps to a second Laguerre mode") {
    for (double a : {0.0, 1.0, 2.5}) {
      const GridPtr g = make_grid(Alpha(a), 8.0, 1024);
      const auto f = RadialFunction::sample(g, [](double x) { return x * x * std::exp(-M_PI * x * x); });
      const auto ff = hankel(f, g);
      CHECK(max_abs_diff(ff, [&](double y) { return ((a + 1) / M_PI - y * y) * std::exp(-M_PI * y * y); }, 8.0) <= 1e-12);
    }
  }

  TEST_CASE("matrix and direct transforms agree; the transform is an involution") {
    const GridPtr g = make_grid(Alpha(1.0), 8.0, 512);
    const auto m = hankel_matrix(g, g);
    Random rng(3);
    for (int k = 0; k < 5; ++k) {
      const auto f = RadialFunction::sample(g, RandomSmooth::draw(rng));
      const auto a = m.apply(f), b = hankel(f, g);
      CHECK(norm(a - b) <= 1e-14 * norm(f));
      CHECK(norm(inverse_hankel(b, g) - f) <= 1e-10 * norm(f));
      const auto h = RadialFunction::sample(g, RandomSmooth::draw(rng));
      CHECK(inner(a, m.apply(h)) == doctest::Approx(inner(f, h)).epsilon(1e-10));
    }
  }

  TEST_CASE("the weighted transform matrix is orthogonal on resolved functions") {
    const GridPtr g = make_grid(Alpha(0.0), 6.0, 256);
    const Eigen::MatrixXd w = hankel_matrix(g, g).weighted();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(w);
    CHECK(svd.singularValues()(0) <= 1.0 + 1e-6);
  }

  TEST_CASE("transform is bounded from L1 to Linf by j_a(0)") {
    const GridPtr g = make_grid(Alpha(0.5), 8.0, 512);
    Random rng(9);
    for (int k = 0; k < 20; ++k) {
      const auto f = RadialFunction::sample(g, RandomSmooth::draw(rng));
      const auto ff = hankel(f, g);
      double sup = 0.0;
      for (std::size_t i = 0; i < ff.size(); ++i) sup = std::max(sup, std::abs(ff[i]));
      CHECK(sup <= j_at_zero(Alpha(0.5)) * norm(f, 1.0) * (1 + 1e-12));
    }
  }

  TEST_CASE("dilation intertwines with the transform") {
    const double a = 0.5, lam = 1.5;
    const GridPtr g = make_grid(Alpha(a), 8.0, 1024);
    const auto f = RadialFunction::sample(g, [](double x) { return (1 + x * x) * std::exp(-M_PI * x * x); });
    const auto lhs = hankel(dilate(f, lam), g);
    const auto rhs = dilate(hankel(f, g), 1.0 / lam);
    CHECK(norm(lhs - rhs) <= 1e-10 * norm(f));
    CHECK(norm(dilate(f, lam)) == doctest::Approx(norm(f)).epsilon(1e-10));
    CHECK_THROWS_AS(dilate(f, 0.0), DomainError);
  }

  TEST_CASE("heisenberg ratio is one for the gaussian and at least one otherwise") {
    for (double a : {0.0, 1.0}) {
      const GridPtr g = make_grid(Alpha(a), 8.0, 1024);
      const auto gauss = RadialFunction::sample(g, [](double x) { return std::exp(-M_PI * x * x); });
      CHECK(heisenberg_ratio(gauss) == doctest::Approx(1.0).epsilon(1e-10));
      const auto poly = RadialFunction::sample(g, [](double x) { return x * x * std::exp(-M_PI * x * x); });
      CHECK(heisenberg_ratio(poly) > 1.0);
    }
    CHECK(heisenberg_constant(Alpha(0.0)) == doctest::Approx(1 / (2 * M_PI)));
  }

  TEST_CASE("set quadrature measures the set") {
    const IntervalSet s({{0.0, 0.7}, {1.3, 4.1}});
    for (double a : {-0.3, 0.0, 2.5}) {
      const SetQuadrature q = set_quadrature(Alpha(a), s, 0.25, 8);
      double m = 0.0, x2 = 0.0;
      for (std::size_t i = 0; i < q.size(); ++i) {
        m += q.weights[i];
        x2 += q.weights[i] * q.nodes[i] * q.nodes[i];
      }
      CHECK(m == doctest::Approx(mu_alpha(Alpha(a), s)).epsilon(1e-13));
      double exact = 0.0;
      for (const auto& i : s.intervals())
        exact += std::pow(2 * M_PI, a + 1) * (std::pow(i.hi, 2 * a + 4) - std::pow(i.lo, 2 * a + 4)) / (2 * a + 4);
      CHECK(x2 == doctest::Approx(exact).epsilon(1e-13));
    }
  }

  TEST_CASE("norms") {
    const GridPtr g = make_grid(Alpha(0.0), 8.0, 512);
    const auto f = RadialFunction::sample(g, [](double x) { return std::exp(-M_PI * x * x); });
    // integral of exp(-pi x^2) 2 pi x dx = 1; of exp(-2 pi x^2) 2 pi x dx = 1/2
    CHECK(norm(f, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(norm(f) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
    CHECK_THROWS_AS(norm(f, 3.0), DomainError);
    // integral of x^2 exp(-2 pi x^2) 2 pi x dx = 1 / (4 pi)
    CHECK(weighted_norm(f, 1.0) == doctest::Approx(std::sqrt(1 / (4 * M_PI))).epsilon(1e-13));
  }
}
