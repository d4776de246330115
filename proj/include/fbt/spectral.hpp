#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "fbt/measure.hpp"
#include "fbt/specfun.hpp"

namespace fbt {

// Nodes and mu_alpha-weights of a composite rule on [0, R]. Panels are
// Gauss–Legendre except the one touching the origin, which uses the
// Gauss–Jacobi rule for x^{2a+1} so the weight singularity is exact.
class RadialGrid {
 public:
  static std::shared_ptr<const RadialGrid> make(Alpha a, double radius, int n);
  static std::shared_ptr<const RadialGrid> with_breakpoints(Alpha a, double radius, std::vector<double> breakpoints,
                                                            double max_panel_width, int order);

  Alpha alpha() const { return alpha_; }
  double radius() const { return radius_; }
  int order() const { return order_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t panels() const { return edges_.size() - 1; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& edges() const { return edges_; }

  std::size_t panel_of(double r) const;
  // Barycentric Lagrange interpolation on the panel containing r; 0 outside [0, R].
  double interpolate(const std::vector<double>& values, double r) const;
  std::vector<double> indicator(const IntervalSet& s) const;

 private:
  RadialGrid(Alpha a, double radius, std::vector<double> edges, int order);

  Alpha alpha_;
  double radius_;
  int order_;
  bool uniform_ = false;
  std::vector<double> edges_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> local_;
  std::vector<double> bary_;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

inline GridPtr make_grid(Alpha a, double radius, int n) { return RadialGrid::make(a, radius, n); }

class RadialFunction {
 public:
  RadialFunction(GridPtr grid, std::vector<double> values);
  explicit RadialFunction(GridPtr grid);

  template <class F>
  static RadialFunction sample(GridPtr grid, F&& f) {
    std::vector<double> v(grid->size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(grid->nodes()[i]);
    return RadialFunction(std::move(grid), std::move(v));
  }

  const GridPtr& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double operator()(double r) const { return grid_->interpolate(values_, r); }
  Eigen::Map<const Eigen::VectorXd> vec() const { return {values_.data(), static_cast<Eigen::Index>(values_.size())}; }

  RadialFunction& operator+=(const RadialFunction& o);
  RadialFunction& operator-=(const RadialFunction& o);
  RadialFunction& operator*=(double s);

 private:
  GridPtr grid_;
  std::vector<double> values_;
};

RadialFunction operator+(RadialFunction a, const RadialFunction& b);
RadialFunction operator-(RadialFunction a, const RadialFunction& b);
RadialFunction operator*(double s, RadialFunction a);

// Dense matrix acting on sample vectors. Each side carries quadrature weights
// (from a grid or a set rule); an empty weight vector means unit weights.
class OperatorMatrix {
 public:
  OperatorMatrix(Eigen::MatrixXd m, GridPtr in, GridPtr out);
  OperatorMatrix(Eigen::MatrixXd m, std::vector<double> in_weights, std::vector<double> out_weights);
  explicit OperatorMatrix(Eigen::MatrixXd m) : OperatorMatrix(std::move(m), GridPtr{}, GridPtr{}) {}

  const Eigen::MatrixXd& matrix() const { return m_; }
  Eigen::Index rows() const { return m_.rows(); }
  Eigen::Index cols() const { return m_.cols(); }
  const GridPtr& in_grid() const { return in_; }
  const GridPtr& out_grid() const { return out_; }
  const std::vector<double>& in_weights() const { return w_in_; }
  const std::vector<double>& out_weights() const { return w_out_; }

  RadialFunction apply(const RadialFunction& f) const;
  // W_out^{1/2} M W_in^{-1/2}: the matrix whose Euclidean norms are the
  // L^2_a norms of the operator.
  Eigen::MatrixXd weighted() const;

 private:
  Eigen::MatrixXd m_;
  GridPtr in_, out_;
  std::vector<double> w_in_, w_out_;
};

struct SetQuadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }
};

// mu_alpha quadrature restricted to S, with panels no wider than max_width.
SetQuadrature set_quadrature(Alpha a, const IntervalSet& s, double max_width, int order);

OperatorMatrix hankel_matrix(const GridPtr& in, const GridPtr& out);
RadialFunction hankel(const RadialFunction& f, const GridPtr& out);
RadialFunction inverse_hankel(const RadialFunction& transformed, const GridPtr& out);

double inner(const RadialFunction& f, const RadialFunction& g);
double norm(const RadialFunction& f, double p = 2.0);
double weighted_norm(const RadialFunction& f, double s);
RadialFunction dilate(const RadialFunction& f, double lambda);

double heisenberg_constant(Alpha a);
double heisenberg_ratio(const RadialFunction& f);
double heisenberg_ratio(const RadialFunction& f, const RadialFunction& transformed);

}  // namespace fbt
