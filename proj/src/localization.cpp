#include "fbt/localization.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "fbt/errors.hpp"
#include "fbt/parallel.hpp"

namespace fbt {

RadialFunction project_time(const RadialFunction& f, const IntervalSet& s) {
  const auto chi = f.grid()->indicator(s);
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = chi[i] * f[i];
  return RadialFunction(f.grid(), std::move(v));
}

RadialFunction project_freq(const RadialFunction& f, const IntervalSet& sigma, const OperatorMatrix& hankel) {
  RadialFunction spectrum = hankel.apply(f);
  spectrum = project_time(spectrum, sigma);
  return hankel.apply(spectrum);
}

RadialFunction project_freq(const RadialFunction& f, const IntervalSet& sigma) {
  return hankel(project_time(hankel(f, f.grid()), sigma), f.grid());
}

OperatorMatrix composite_kernel(const IntervalSet& s, const IntervalSet& sigma, const OperatorMatrix& hankel) {
  const GridPtr& g = hankel.out_grid();
  if (!g || hankel.in_grid() != g) throw DomainError("composite_kernel needs a square transform on one grid");
  if (s.sup() > g->radius() * (1 + 1e-12) || sigma.sup() > g->radius() * (1 + 1e-12))
    throw DomainError("composite_kernel: sets exceed the grid radius");
  const auto chi_s = g->indicator(s);
  const auto chi_sigma = g->indicator(sigma);
  const Eigen::MatrixXd& m = hankel.matrix();
  Eigen::MatrixXd left = m;
  for (Eigen::Index k = 0; k < left.cols(); ++k) left.col(k) *= chi_sigma[k];
  Eigen::MatrixXd right = m;
  for (Eigen::Index k = 0; k < right.cols(); ++k) right.col(k) *= chi_s[k];
  return OperatorMatrix(left * right, g, g);
}

OperatorMatrix composite_kernel(const IntervalSet& s, const IntervalSet& sigma, const GridPtr& grid) {
  return composite_kernel(s, sigma, hankel_matrix(grid, grid));
}

OperatorMatrix frequency_kernel(Alpha a, const IntervalSet& s, const IntervalSet& sigma, int order) {
  const double top = std::max({s.sup(), sigma.sup(), 1.0});
  const double width = std::min(0.5, 2.0 / top);
  const SetQuadrature qs = set_quadrature(a, s, width, order);
  const SetQuadrature qy = set_quadrature(a, sigma, width, order);
  const BesselKernel& j = bessel_kernel(a);
  Eigen::MatrixXd m(qy.size(), qs.size());
  parallel_for(qy.size(), [&](std::size_t i) {
    for (std::size_t k = 0; k < qs.size(); ++k) m(i, k) = j(2.0 * M_PI * qy.nodes[i] * qs.nodes[k]) * qs.weights[k];
  });
  return OperatorMatrix(std::move(m), qs.weights, qy.weights);
}

double hs_norm(const OperatorMatrix& m) { return m.weighted().norm(); }

double largest_singular_value(const Eigen::MatrixXd& b, const PowerIteration& opt) {
  if (b.size() == 0) return 0.0;
  if (b.norm() == 0.0) return 0.0;
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(b.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = gauss(rng);
  v.normalize();
  const bool tall = b.rows() >= b.cols();
  const Eigen::MatrixXd gram = tall ? Eigen::MatrixXd(b.transpose() * b) : Eigen::MatrixXd();
  auto apply = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    if (tall) return gram * x;
    return b.transpose() * (b * x);
  };
  const double resid_tol = std::sqrt(opt.tol);
  double lambda = 0.0;
  for (int it = 0; it < opt.max_iter; ++it) {
    Eigen::VectorXd w = apply(v);
    lambda = v.dot(w);
    const double wn = w.norm();
    if (wn == 0.0) return 0.0;
    const double resid = (w - lambda * v).norm();
    if (resid <= resid_tol * lambda) return std::sqrt(std::max(lambda, 0.0));
    v = w / wn;
  }
  throw NumericError("op_norm: power iteration did not converge");
}

double op_norm(const OperatorMatrix& m, const PowerIteration& opt) {
  const Eigen::MatrixXd b = m.weighted();
  const double s = largest_singular_value(b, opt);
  return std::min(s, b.norm());
}

double hs_bound(Alpha a, const IntervalSet& s, const IntervalSet& sigma) {
  return kappa_alpha(a) * std::sqrt(2.0 * M_PI * lebesgue(s) * lebesgue(sigma));
}

AnnihilationConstants constants_from_norm(double norm) {
  AnnihilationConstants c;
  c.norm = norm;
  if (norm < 1.0) {
    c.D = 1.0 / (1.0 - norm);
    c.C = 1.0 + c.D;
    c.certified = true;
    c.status = "certified";
  } else {
    c.D = INFINITY;
    c.C = INFINITY;
    c.certified = false;
    c.status = "no certificate at this resolution";
  }
  return c;
}

AnnihilationConstants annihilation_constants(const IntervalSet& s, const IntervalSet& sigma, Alpha a) {
  if (s.empty() || sigma.empty()) {
    AnnihilationConstants c = constants_from_norm(0.0);
    c.hs_bound = hs_bound(a, s, sigma);
    return c;
  }
  const OperatorMatrix k = frequency_kernel(a, s, sigma);
  const double hs = hs_norm(k);
  AnnihilationConstants c = constants_from_norm(std::min(op_norm(k), hs));
  c.hs_norm = hs;
  c.hs_bound = hs_bound(a, s, sigma);
  return c;
}

AnnihilationConstants annihilation_constants(const IntervalSet& s, const IntervalSet& sigma, const GridPtr& grid) {
  if (s.sup() > grid->radius() * (1 + 1e-12) || sigma.sup() > grid->radius() * (1 + 1e-12))
    throw DomainError("annihilation_constants: sets exceed the grid radius");
  return annihilation_constants(s, sigma, grid->alpha());
}

namespace {

double restricted_norm(const RadialFunction& f, const IntervalSet& keep_out) {
  const auto& w = f.grid()->weights();
  const auto& x = f.grid()->nodes();
  CompensatedSum acc;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!keep_out.contains(x[i])) acc.add(w[i] * f[i] * f[i]);
  return std::sqrt(acc.value());
}

}  // namespace

StrongAnnihilationReport verify_strong_annihilation(const RadialFunction& f, const RadialFunction& transformed,
                                                    const IntervalSet& s, const IntervalSet& sigma, double c) {
  StrongAnnihilationReport r;
  r.norm_f = norm(f, 2.0);
  r.norm_outside_s = restricted_norm(f, s);
  r.norm_transform_outside_sigma = restricted_norm(transformed, sigma);
  r.rhs = c * (r.norm_outside_s + r.norm_transform_outside_sigma);
  r.holds = r.norm_f <= r.rhs * (1.0 + 1e-6) + 1e-300;
  return r;
}

StrongAnnihilationReport verify_strong_annihilation(const RadialFunction& f, const IntervalSet& s,
                                                    const IntervalSet& sigma, double c) {
  return verify_strong_annihilation(f, hankel(f, f.grid()), s, sigma, c);
}

Eigen::MatrixXd dilate_gram_matrix(const RadialFunction& f, const std::vector<double>& lambdas) {
  if (lambdas.empty()) throw DomainError("dilate_gram: need at least one dilation");
  std::vector<double> sorted = lambdas;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("dilate_gram: dilation factors must be distinct");
  std::vector<RadialFunction> d;
  d.reserve(lambdas.size());
  for (double l : lambdas) d.push_back(dilate(f, l));
  const auto n = static_cast<Eigen::Index>(lambdas.size());
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k <= i; ++k) g(i, k) = g(k, i) = inner(d[i], d[k]);
  return g;
}

double dilate_gram(const RadialFunction& f, const std::vector<double>& lambdas) {
  const Eigen::MatrixXd g = dilate_gram_matrix(f, lambdas);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace fbt
