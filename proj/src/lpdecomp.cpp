#include "fbt/lpdecomp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>

#include "fbt/errors.hpp"
#include "fbt/parallel.hpp"
#include "fbt/thinsets.hpp"
#include "fbt/translation.hpp"

namespace fbt {

double psi0(double x) {
  if (x <= 1.0) return 1.0;
  if (x >= 2.0) return 0.0;
  const double a = std::exp(-1.0 / (2.0 - x));
  const double b = std::exp(-1.0 / (x - 1.0));
  return a / (a + b);
}

double psi(int j, double x) {
  if (j < 0) throw DomainError("psi: scale index must be nonnegative");
  if (j == 0) return psi0(x);
  return psi0(std::ldexp(x, -j)) - psi0(std::ldexp(x, -j + 1));
}

int scale_cap(double radius) {
  if (!(radius > 0.0)) throw DomainError("scale_cap: radius must be positive");
  return std::max(0, static_cast<int>(std::ceil(std::log2(radius))));
}

namespace {

constexpr double kTablePanel = 0.125;
constexpr int kTableOrder = 24;

// Hankel transform of a profile supported in [lo, hi], tabulated on [0, T]
// where T is the last radius at which it still exceeds tol times its value at 0.
RadialFunction tabulate_transform(Alpha a, double (*profile)(double), double lo, double hi, double tol) {
  const BesselKernel& j = bessel_kernel(a);
  for (double reach : {64.0, 128.0, 256.0}) {
    const double width = 3.0 / reach;
    const SetQuadrature q = set_quadrature(a, IntervalSet::single(lo, hi), width, 32);
    std::vector<double> pw(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) pw[k] = profile(q.nodes[k]) * q.weights[k];
    auto transform = [&](double r) {
      CompensatedSum s;
      const double c = 2.0 * M_PI * r;
      for (std::size_t k = 0; k < q.size(); ++k) s.add(pw[k] * j(c * q.nodes[k]));
      return s.value();
    };
    const double at0 = std::abs(transform(0.0));
    const double step = 1.0 / 32.0;
    const int steps = static_cast<int>(reach / step);
    std::vector<double> probe(steps + 1);
    parallel_for(probe.size(), [&](std::size_t i) { probe[i] = std::abs(transform(i * step)); });
    int last = 0;
    for (int i = 0; i <= steps; ++i)
      if (probe[i] > tol * at0) last = i;
    const double tail = std::ceil((last * step + 1.0) / kTablePanel) * kTablePanel;
    if (tail >= reach - 1.0) continue;
    GridPtr g = RadialGrid::with_breakpoints(a, tail, {}, kTablePanel, kTableOrder);
    std::vector<double> v(g->size());
    parallel_for(v.size(), [&](std::size_t i) { v[i] = transform(g->nodes()[i]); });
    return RadialFunction(g, std::move(v));
  }
  throw NumericError("Littlewood–Paley table: transform did not decay below tolerance within radius 256");
}

double psi1_profile(double x) { return psi(1, x); }

int angular_order(double phase) {
  static constexpr std::array<int, 14> orders{16, 24, 32, 48, 64, 96, 128, 192, 256, 384, 512, 768, 1024, 1536};
  const double need = phase / 4.0 * 1.3 + 16.0;
  for (int o : orders)
    if (o >= need) return o;
  return orders.back();
}

std::pair<int, int> active_range(double x) {
  if (x < 2.0) return {0, 1};
  const int m = static_cast<int>(std::floor(std::log2(x)));
  return {m, m + 1};
}

}  // namespace

LittlewoodPaley::LittlewoodPaley(Alpha a, double tail_tol) : a_(a), norm_(kernel_normalization(a)) {
  if (!(tail_tol > 0.0 && tail_tol < 1e-3)) throw DomainError("Littlewood–Paley: tail tolerance must lie in (0, 1e-3)");
  phi_tab_.emplace(tabulate_transform(a, &psi0, 0.0, 2.0, tail_tol));
  psi1_tab_.emplace(tabulate_transform(a, &psi1_profile, 1.0, 4.0, tail_tol));
  tail_ = phi_tab_->grid()->radius();
  phi_l1_ = norm(*phi_tab_, 1.0);
  psi1_l1_ = psi_l1(1);
}

double LittlewoodPaley::phi(double r) const { return (*phi_tab_)(r); }

double LittlewoodPaley::phi_j(int j, double r) const {
  return std::pow(2.0, 2.0 * (a_.value() + 1.0) * j) * phi(std::ldexp(r, j));
}

double LittlewoodPaley::phi_radius(int j) const { return std::ldexp(tail_, -j); }

double LittlewoodPaley::phi_hat(int j, double xi) const { return psi0(std::ldexp(xi, -j)); }

double LittlewoodPaley::psi_hat(int j, double r) const {
  if (j == 0) return phi(r);
  const int s = j - 1;
  return std::pow(2.0, 2.0 * (a_.value() + 1.0) * s) * (*psi1_tab_)(std::ldexp(r, s));
}

double LittlewoodPaley::psi_hat_radius(int j) const {
  if (j == 0) return tail_;
  return std::ldexp(psi1_tab_->grid()->radius(), -(j - 1));
}

double LittlewoodPaley::psi_l1(int j) const {
  const double lo = (j == 0) ? 0.0 : std::ldexp(1.0, j - 1);
  const double hi = std::ldexp(1.0, j + 1);
  const SetQuadrature q = set_quadrature(a_, IntervalSet::single(lo, hi), (hi - lo) / 64.0, 32);
  CompensatedSum s;
  for (std::size_t k = 0; k < q.size(); ++k) s.add(q.weights[k] * std::abs(psi(j, q.nodes[k])));
  return s.value();
}

double LittlewoodPaley::translate_phi(int j, double x, double y) const {
  const double rho = phi_radius(j);
  if (std::abs(x - y) >= rho) return 0.0;
  const double span = std::min(x + y, rho) - std::abs(x - y);
  TranslateOptions opt;
  opt.support = rho;
  opt.order = angular_order(4.0 * M_PI * std::ldexp(1.0, j) * span);
  const ScalarFn f = [this, j](double r) { return phi_j(j, r); };
  return translate_value(f, a_, y, x, opt);
}

double LittlewoodPaley::translate_psi_hat(int j, double x, double y) const {
  const double rho = psi_hat_radius(j);
  if (std::abs(x - y) >= rho) return 0.0;
  const double span = std::min(x + y, rho) - std::abs(x - y);
  TranslateOptions opt;
  opt.support = rho;
  opt.order = angular_order(4.0 * M_PI * std::ldexp(1.0, j) * span);
  const ScalarFn f = [this, j](double r) { return psi_hat(j, r); };
  return translate_value(f, a_, x, y, opt);
}

int LittlewoodPaley::active_terms(double x, int cap) const {
  auto [lo, hi] = active_range(x);
  int n = 0;
  for (int j = lo; j <= std::min(hi, cap); ++j)
    if (psi(j, x) != 0.0) ++n;
  return n;
}

double LittlewoodPaley::kernel_A(double x, double y, int cap) const {
  auto [lo, hi] = active_range(x);
  double s = 0.0;
  for (int j = lo; j <= std::min(hi, cap); ++j) {
    const double p = psi(j, x);
    if (p != 0.0) s += p * translate_phi(j, x, y);
  }
  return s / norm_;
}

double LittlewoodPaley::kernel_B(double x, double y) const {
  double s = 0.0;
  for (int j = 0; std::ldexp(y, -j) > 1.0; ++j) {
    const double factor = 1.0 - psi0(std::ldexp(y, -j));
    if (factor != 0.0) s += translate_psi_hat(j, x, y) * factor;
  }
  return s / norm_;
}

double LittlewoodPaley::kernel_B_identity(double x, double y, int cap) const {
  auto [lo, hi] = active_range(y);
  double s = 0.0;
  for (int k = std::max(lo, 1); k <= std::min(hi, cap); ++k) {
    const double p = psi(k, y);
    if (p != 0.0) s += p * translate_phi(k - 1, y, x);
  }
  return s / norm_;
}

const LittlewoodPaley& littlewood_paley(Alpha a) {
  static std::mutex m;
  static std::map<double, std::unique_ptr<LittlewoodPaley>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto& slot = cache[a.value()];
  if (!slot) slot = std::make_unique<LittlewoodPaley>(a);
  return *slot;
}

Eigen::MatrixXd kernel_values_A(const LittlewoodPaley& lp, const std::vector<double>& xs, const std::vector<double>& ys,
                                int cap) {
  Eigen::MatrixXd k(xs.size(), ys.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    for (std::size_t c = 0; c < ys.size(); ++c) k(i, c) = lp.kernel_A(xs[i], ys[c], cap);
  });
  return k;
}

Eigen::MatrixXd kernel_values_B(const LittlewoodPaley& lp, const std::vector<double>& xs, const std::vector<double>& ys,
                                int cap) {
  Eigen::MatrixXd k(xs.size(), ys.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    for (std::size_t c = 0; c < ys.size(); ++c) k(i, c) = lp.kernel_B_identity(xs[i], ys[c], cap);
  });
  return k;
}

SchurBounds schur_bounds(const Eigen::MatrixXd& kernel, const std::vector<double>& wx, const std::vector<double>& wy) {
  if (static_cast<Eigen::Index>(wx.size()) != kernel.rows() || static_cast<Eigen::Index>(wy.size()) != kernel.cols())
    throw DomainError("schur_bounds: weight lengths do not match the kernel");
  SchurBounds b;
  const Eigen::MatrixXd a = kernel.cwiseAbs();
  const Eigen::Map<const Eigen::VectorXd> vx(wx.data(), wx.size());
  const Eigen::Map<const Eigen::VectorXd> vy(wy.data(), wy.size());
  if (a.size() == 0) return b;
  b.sup_row = (a * vy).maxCoeff();
  b.sup_col = (a.transpose() * vx).maxCoeff();
  return b;
}

namespace {

struct ScaleTerm {
  double weight;
  double conv;
};

// For every node x_i, the active pairs (psi_j(x_i), (phi_j * f)(x_i)).
std::vector<std::vector<ScaleTerm>> scale_terms(const LittlewoodPaley& lp, const RadialFunction& f) {
  const GridPtr& g = f.grid();
  if (g->alpha().value() != lp.alpha().value()) throw DomainError("Littlewood–Paley system and function differ in alpha");
  const int cap = scale_cap(g->radius());
  const auto& x = g->nodes();
  const auto& w = g->weights();
  std::vector<std::vector<ScaleTerm>> out(x.size());
  parallel_for(x.size(), [&](std::size_t i) {
    auto [lo, hi] = active_range(x[i]);
    for (int j = lo; j <= std::min(hi, cap); ++j) {
      const double p = psi(j, x[i]);
      if (p == 0.0) continue;
      CompensatedSum s;
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (f[k] == 0.0) continue;
        s.add(w[k] * f[k] * lp.translate_phi(j, x[i], x[k]));
      }
      out[i].push_back({p, s.value() / lp.normalization()});
    }
  });
  return out;
}

}  // namespace

RadialFunction apply_K(const LittlewoodPaley& lp, const RadialFunction& f) {
  const auto terms = scale_terms(lp, f);
  std::vector<double> v(f.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& t : terms[i]) v[i] += t.weight * t.conv;
  return RadialFunction(f.grid(), std::move(v));
}

RadialFunction apply_L(const LittlewoodPaley& lp, const RadialFunction& f) {
  const auto terms = scale_terms(lp, f);
  std::vector<double> v(f.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& t : terms[i]) v[i] += t.weight * (f[i] - t.conv);
  return RadialFunction(f.grid(), std::move(v));
}

DecompositionMatrices decomposition_matrices(const LittlewoodPaley& lp, const GridPtr& grid) {
  if (grid->alpha().value() != lp.alpha().value()) throw DomainError("Littlewood–Paley system and grid differ in alpha");
  const int cap = scale_cap(grid->radius());
  const auto& x = grid->nodes();
  const auto& w = grid->weights();
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  parallel_for(x.size(), [&](std::size_t i) {
    auto [lo, hi] = active_range(x[i]);
    const auto r = static_cast<Eigen::Index>(i);
    for (int j = lo; j <= std::min(hi, cap); ++j) {
      const double p = psi(j, x[i]);
      if (p == 0.0) continue;
      for (Eigen::Index c = 0; c < n; ++c) {
        const double conv = w[c] * lp.translate_phi(j, x[i], x[c]) / lp.normalization();
        k(r, c) += p * conv;
        l(r, c) -= p * conv;
      }
      l(r, r) += p;
    }
  });
  return {OperatorMatrix(std::move(k), grid, grid), OperatorMatrix(std::move(l), grid, grid)};
}

namespace {

double top_singular(const Eigen::MatrixXd& k, const std::vector<double>& wx, const std::vector<double>& wy) {
  if (k.size() == 0) return 0.0;
  Eigen::MatrixXd b = k;
  for (Eigen::Index i = 0; i < b.rows(); ++i) b.row(i) *= std::sqrt(wx[i]);
  for (Eigen::Index c = 0; c < b.cols(); ++c) b.col(c) *= std::sqrt(wy[c]);
  return largest_singular_value(b);
}

}  // namespace

ThinSchurReport thin_schur_experiment(const LittlewoodPaley& lp, const IntervalSet& s, const IntervalSet& sigma,
                                      double eps, const GridPtr& grid) {
  const Alpha a = lp.alpha();
  if (grid->alpha().value() != a.value()) throw DomainError("thin_schur_experiment: grid alpha differs");
  const ThinReport ts = is_thin(s, eps, a, grid->radius());
  const ThinReport tsig = is_thin(sigma, eps, a, grid->radius());
  if (!ts.is_thin || !tsig.is_thin) throw PreconditionError("thin_schur_experiment: sets are not (eps, alpha)-thin");

  ThinSchurReport rep;
  rep.eps = eps;
  rep.alpha = a.value();
  const int cap = scale_cap(grid->radius());
  const auto& gx = grid->nodes();
  const auto& gw = grid->weights();

  if (!s.empty()) {
    const SetQuadrature q = set_quadrature(a, s, 0.0625, 8);
    const Eigen::MatrixXd k = kernel_values_A(lp, gx, q.nodes, cap);
    rep.schur_A_on_S = schur_bounds(k, gw, q.weights).sup_row;
    rep.norm_KE = top_singular(k, gw, q.weights);
  }
  if (!sigma.empty()) {
    const SetQuadrature q = set_quadrature(a, sigma, 0.0625, 8);
    const Eigen::MatrixXd k = kernel_values_B(lp, q.nodes, gx, cap);
    rep.schur_B_on_Sigma = schur_bounds(k, q.weights, gw).sup_col;
    rep.norm_FL = top_singular(k, q.weights, gw);
  }
  rep.composite_bound = rep.norm_KE + rep.norm_FL;
  const AnnihilationConstants c = constants_from_norm(rep.composite_bound);
  rep.certified = c.certified;
  rep.certificate_C = c.C;
  rep.eps0_estimate = rep.composite_bound > 0.0 ? eps / (rep.composite_bound * rep.composite_bound) : INFINITY;
  return rep;
}

}  // namespace fbt
