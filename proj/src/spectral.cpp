#include "fbt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fbt/errors.hpp"
#include "fbt/parallel.hpp"

namespace fbt {

namespace {

struct PanelRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes and mu_alpha-weights on [lo, hi]; Jacobi-weighted when lo is the origin.
PanelRule panel_rule(Alpha a, double lo, double hi, int order) {
  const double al = a.value();
  const double scale = std::pow(2.0 * M_PI, al + 1.0);
  const double half = 0.5 * (hi - lo);
  PanelRule p;
  p.nodes.resize(order);
  p.weights.resize(order);
  if (lo == 0.0) {
    const auto r = cached_gauss_jacobi(order, 0.0, 2.0 * al + 1.0);
    const double c = scale * std::pow(half, 2.0 * al + 2.0);
    for (int i = 0; i < order; ++i) {
      p.nodes[i] = half * (1.0 + r->nodes[i]);
      p.weights[i] = c * r->weights[i];
    }
  } else {
    const auto r = cached_gauss_jacobi(order, 0.0, 0.0);
    for (int i = 0; i < order; ++i) {
      const double x = lo + half * (1.0 + r->nodes[i]);
      p.nodes[i] = x;
      p.weights[i] = scale * std::pow(x, 2.0 * al + 1.0) * half * r->weights[i];
    }
  }
  return p;
}

}  // namespace

RadialGrid::RadialGrid(Alpha a, double radius, std::vector<double> edges, int order)
    : alpha_(a), radius_(radius), order_(order), edges_(std::move(edges)) {
  const std::size_t np = edges_.size() - 1;
  nodes_.reserve(np * order);
  weights_.reserve(np * order);
  bary_.reserve(np * order);
  local_.reserve(np * order);
  for (std::size_t p = 0; p < np; ++p) {
    const double lo = edges_[p], hi = edges_[p + 1];
    const PanelRule r = panel_rule(a, lo, hi, order);
    std::vector<double> s(order), lam(order, 1.0);
    for (int i = 0; i < order; ++i) s[i] = (2.0 * r.nodes[i] - lo - hi) / (hi - lo);
    double big = 0.0;
    for (int i = 0; i < order; ++i) {
      for (int j = 0; j < order; ++j)
        if (j != i) lam[i] *= 2.0 / (s[i] - s[j]);
      big = std::max(big, std::abs(lam[i]));
    }
    for (int i = 0; i < order; ++i) {
      nodes_.push_back(r.nodes[i]);
      weights_.push_back(r.weights[i]);
      local_.push_back(s[i]);
      bary_.push_back(lam[i] / big);
    }
  }
}

GridPtr RadialGrid::make(Alpha a, double radius, int n) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("grid radius must be positive");
  if (n < 16) throw DomainError("grid needs at least 16 nodes");
  int order = 0;
  for (int o : {n >= 512 ? 32 : 16, 16, 8}) {
    if (n % o == 0) {
      order = o;
      break;
    }
  }
  if (order == 0) throw DomainError("grid size must be a multiple of 8");
  const int np = n / order;
  std::vector<double> edges(np + 1);
  for (int p = 0; p <= np; ++p) edges[p] = radius * p / np;
  edges[np] = radius;
  auto g = std::shared_ptr<RadialGrid>(new RadialGrid(a, radius, std::move(edges), order));
  g->uniform_ = true;
  return g;
}

GridPtr RadialGrid::with_breakpoints(Alpha a, double radius, std::vector<double> breakpoints, double max_panel_width,
                                     int order) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("grid radius must be positive");
  if (!(max_panel_width > 0.0)) throw DomainError("panel width must be positive");
  if (order < 2 || order > 64) throw DomainError("panel order must lie in [2, 64]");
  breakpoints.push_back(0.0);
  breakpoints.push_back(radius);
  std::erase_if(breakpoints, [&](double b) { return !(b >= 0.0 && b <= radius); });
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
  std::vector<double> edges{0.0};
  for (std::size_t k = 1; k < breakpoints.size(); ++k) {
    const double lo = breakpoints[k - 1], hi = breakpoints[k];
    const int m = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_panel_width - 1e-9)));
    for (int i = 1; i < m; ++i) edges.push_back(lo + (hi - lo) * i / m);
    edges.push_back(hi);
  }
  const double first = edges[1] - edges[0];
  bool equal = true;
  for (std::size_t p = 1; p + 1 < edges.size(); ++p)
    if (std::abs((edges[p + 1] - edges[p]) - first) > 1e-12 * first) equal = false;
  auto g = std::shared_ptr<RadialGrid>(new RadialGrid(a, radius, std::move(edges), order));
  g->uniform_ = equal;
  return g;
}

std::size_t RadialGrid::panel_of(double r) const {
  const std::size_t np = panels();
  if (uniform_) {
    const double pos = r / radius_ * static_cast<double>(np);
    if (!(pos > 0.0)) return 0;
    return std::min(static_cast<std::size_t>(pos), np - 1);
  }
  auto it = std::upper_bound(edges_.begin(), edges_.end(), r);
  if (it == edges_.begin()) return 0;
  return std::min(static_cast<std::size_t>(it - edges_.begin()) - 1, np - 1);
}

double RadialGrid::interpolate(const std::vector<double>& values, double r) const {
  if (!(r >= 0.0) || r > radius_) return 0.0;
  const std::size_t p = panel_of(r);
  const double lo = edges_[p], hi = edges_[p + 1];
  const double t = (2.0 * r - lo - hi) / (hi - lo);
  const std::size_t base = p * static_cast<std::size_t>(order_);
  double num = 0.0, den = 0.0;
  for (int i = 0; i < order_; ++i) {
    const double d = t - local_[base + i];
    if (d == 0.0) return values[base + i];
    const double c = bary_[base + i] / d;
    num += c * values[base + i];
    den += c;
  }
  return num / den;
}

std::vector<double> RadialGrid::indicator(const IntervalSet& s) const {
  std::vector<double> v(nodes_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s.contains(nodes_[i]) ? 1.0 : 0.0;
  return v;
}

RadialFunction::RadialFunction(GridPtr grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw DomainError("radial function needs a grid");
  if (values_.size() != grid_->size()) throw DomainError("radial function length does not match its grid");
}

RadialFunction::RadialFunction(GridPtr grid) : grid_(std::move(grid)) {
  if (!grid_) throw DomainError("radial function needs a grid");
  values_.assign(grid_->size(), 0.0);
}

namespace {
void check_same_grid(const RadialFunction& a, const RadialFunction& b) {
  if (a.grid() != b.grid() && a.grid()->nodes() != b.grid()->nodes())
    throw DomainError("radial functions live on different grids");
}
}  // namespace

RadialFunction& RadialFunction::operator+=(const RadialFunction& o) {
  check_same_grid(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

RadialFunction& RadialFunction::operator-=(const RadialFunction& o) {
  check_same_grid(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

RadialFunction& RadialFunction::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

RadialFunction operator+(RadialFunction a, const RadialFunction& b) { return a += b; }
RadialFunction operator-(RadialFunction a, const RadialFunction& b) { return a -= b; }
RadialFunction operator*(double s, RadialFunction a) { return a *= s; }

OperatorMatrix::OperatorMatrix(Eigen::MatrixXd m, GridPtr in, GridPtr out)
    : m_(std::move(m)), in_(std::move(in)), out_(std::move(out)) {
  if (in_) {
    if (static_cast<std::size_t>(m_.cols()) != in_->size())
      throw DomainError("operator matrix columns do not match the input grid");
    w_in_ = in_->weights();
  }
  if (out_) {
    if (static_cast<std::size_t>(m_.rows()) != out_->size())
      throw DomainError("operator matrix rows do not match the output grid");
    w_out_ = out_->weights();
  }
}

OperatorMatrix::OperatorMatrix(Eigen::MatrixXd m, std::vector<double> in_weights, std::vector<double> out_weights)
    : m_(std::move(m)), w_in_(std::move(in_weights)), w_out_(std::move(out_weights)) {
  if (!w_in_.empty() && static_cast<Eigen::Index>(w_in_.size()) != m_.cols())
    throw DomainError("operator matrix columns do not match the input weights");
  if (!w_out_.empty() && static_cast<Eigen::Index>(w_out_.size()) != m_.rows())
    throw DomainError("operator matrix rows do not match the output weights");
}

RadialFunction OperatorMatrix::apply(const RadialFunction& f) const {
  if (!out_) throw DomainError("operator matrix has no output grid");
  if (static_cast<Eigen::Index>(f.size()) != m_.cols()) throw DomainError("operator matrix input size mismatch");
  if (in_ && f.grid()->alpha().value() != in_->alpha().value()) throw DomainError("alpha mismatch");
  std::vector<double> out(m_.rows());
  Eigen::Map<Eigen::VectorXd>(out.data(), m_.rows()) = m_ * f.vec();
  return RadialFunction(out_, std::move(out));
}

Eigen::MatrixXd OperatorMatrix::weighted() const {
  Eigen::MatrixXd w = m_;
  for (std::size_t i = 0; i < w_out_.size(); ++i) w.row(i) *= std::sqrt(w_out_[i]);
  for (std::size_t k = 0; k < w_in_.size(); ++k) w.col(k) /= std::sqrt(w_in_[k]);
  return w;
}

SetQuadrature set_quadrature(Alpha a, const IntervalSet& s, double max_width, int order) {
  if (!(max_width > 0.0)) throw DomainError("panel width must be positive");
  SetQuadrature q;
  for (const auto& iv : s.intervals()) {
    const int m = std::max(1, static_cast<int>(std::ceil(iv.length() / max_width - 1e-9)));
    for (int p = 0; p < m; ++p) {
      const double lo = iv.lo + iv.length() * p / m;
      const double hi = (p + 1 == m) ? iv.hi : iv.lo + iv.length() * (p + 1) / m;
      const PanelRule r = panel_rule(a, lo, hi, order);
      q.nodes.insert(q.nodes.end(), r.nodes.begin(), r.nodes.end());
      q.weights.insert(q.weights.end(), r.weights.begin(), r.weights.end());
    }
  }
  return q;
}

namespace {
void check_alpha(const GridPtr& in, const GridPtr& out) {
  if (!in || !out) throw DomainError("transform needs both grids");
  if (in->alpha().value() != out->alpha().value()) throw DomainError("input and output grids have different alpha");
}
}  // namespace

OperatorMatrix hankel_matrix(const GridPtr& in, const GridPtr& out) {
  check_alpha(in, out);
  const BesselKernel& j = bessel_kernel(in->alpha());
  const auto& x = in->nodes();
  const auto& w = in->weights();
  const auto& y = out->nodes();
  Eigen::MatrixXd m(y.size(), x.size());
  parallel_for(y.size(), [&](std::size_t i) {
    const double s = 2.0 * M_PI * y[i];
    for (std::size_t k = 0; k < x.size(); ++k) m(i, k) = j(s * x[k]) * w[k];
  });
  return OperatorMatrix(std::move(m), in, out);
}

RadialFunction hankel(const RadialFunction& f, const GridPtr& out) {
  const GridPtr& in = f.grid();
  check_alpha(in, out);
  const BesselKernel& j = bessel_kernel(in->alpha());
  const auto& x = in->nodes();
  const auto& w = in->weights();
  const auto& y = out->nodes();
  std::vector<double> fw(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) fw[k] = f[k] * w[k];
  std::vector<double> res(y.size());
  parallel_for(y.size(), [&](std::size_t i) {
    const double s = 2.0 * M_PI * y[i];
    double acc = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) acc += j(s * x[k]) * fw[k];
    res[i] = acc;
  });
  return RadialFunction(out, std::move(res));
}

RadialFunction inverse_hankel(const RadialFunction& transformed, const GridPtr& out) { return hankel(transformed, out); }

double inner(const RadialFunction& f, const RadialFunction& g) {
  check_same_grid(f, g);
  const auto& w = f.grid()->weights();
  CompensatedSum s;
  for (std::size_t i = 0; i < w.size(); ++i) s.add(w[i] * f[i] * g[i]);
  return s.value();
}

double norm(const RadialFunction& f, double p) {
  const auto& w = f.grid()->weights();
  CompensatedSum s;
  if (p == 1.0) {
    for (std::size_t i = 0; i < w.size(); ++i) s.add(w[i] * std::abs(f[i]));
    return s.value();
  }
  if (p == 2.0) {
    for (std::size_t i = 0; i < w.size(); ++i) s.add(w[i] * f[i] * f[i]);
    return std::sqrt(s.value());
  }
  throw DomainError("norm: only p = 1 and p = 2 are supported");
}

double weighted_norm(const RadialFunction& f, double s) {
  if (!(s >= 0.0)) throw DomainError("weighted_norm: exponent must be nonnegative");
  const auto& w = f.grid()->weights();
  const auto& x = f.grid()->nodes();
  CompensatedSum acc;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double v = std::pow(x[i], s) * f[i];
    acc.add(w[i] * v * v);
  }
  return std::sqrt(acc.value());
}

RadialFunction dilate(const RadialFunction& f, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("dilation factor must be positive");
  const GridPtr& g = f.grid();
  const double al = g->alpha().value();
  if (lambda > 1.0) {
    double peak = 0.0, lost = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      peak = std::max(peak, std::abs(f[i]));
      if (g->nodes()[i] > g->radius() / lambda) lost = std::max(lost, std::abs(f[i]));
    }
    if (lost > 1e-8 * peak) {
      std::ostringstream msg;
      msg << "dilate: support leaves [0, " << g->radius() << "] at lambda = " << lambda
          << "; relative mass truncated ~" << lost / peak;
      warn(msg.str());
    }
  }
  const double c = std::pow(lambda, -(al + 1.0));
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * f(g->nodes()[i] / lambda);
  return RadialFunction(g, std::move(v));
}

double heisenberg_constant(Alpha a) { return (a.value() + 1.0) / (2.0 * M_PI); }

double heisenberg_ratio(const RadialFunction& f, const RadialFunction& transformed) {
  const double n2 = inner(f, f);
  if (!(n2 > 0.0)) throw DomainError("heisenberg_ratio: function is zero");
  return weighted_norm(f, 1.0) * weighted_norm(transformed, 1.0) / (heisenberg_constant(f.grid()->alpha()) * n2);
}

double heisenberg_ratio(const RadialFunction& f) { return heisenberg_ratio(f, hankel(f, f.grid())); }

}  // namespace fbt
