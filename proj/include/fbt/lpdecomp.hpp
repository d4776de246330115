#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "fbt/localization.hpp"
#include "fbt/spectral.hpp"

namespace fbt {

double psi0(double x);
double psi(int j, double x);

// Scale cap for a domain [0, R]: ceil(log2 R).
int scale_cap(double radius);

// The dyadic system built on psi_0 for one alpha. phi = F psi_0 and F psi_1 are
// tabulated once; every other member follows by dilation.
class LittlewoodPaley {
 public:
  explicit LittlewoodPaley(Alpha a, double tail_tol = 1e-14);

  Alpha alpha() const { return a_; }
  double tail_radius() const { return tail_; }
  // 2^a Gamma(a+1); the convolution used by K and L is divided by it so that
  // F(phi_j * f) = F(phi_j) F(f).
  double normalization() const { return norm_; }

  double phi(double r) const;
  double phi_j(int j, double r) const;
  double phi_radius(int j) const;
  double phi_hat(int j, double xi) const;
  double psi_hat(int j, double r) const;
  double psi_hat_radius(int j) const;
  double phi_l1() const { return phi_l1_; }
  double psi_l1(int j) const;

  // T_y phi_j (x) and T_x F(psi_j) (y).
  double translate_phi(int j, double x, double y) const;
  double translate_psi_hat(int j, double x, double y) const;

  int active_terms(double x, int cap = 64) const;
  double kernel_A(double x, double y, int cap = 64) const;
  double kernel_B(double x, double y) const;
  double kernel_B_identity(double x, double y, int cap = 64) const;

  const RadialFunction& phi_table() const { return *phi_tab_; }
  const RadialFunction& psi_hat_table() const { return *psi1_tab_; }

 private:
  Alpha a_;
  double norm_;
  double tail_;
  double phi_l1_ = 0.0;
  double psi1_l1_ = 0.0;
  std::optional<RadialFunction> phi_tab_;
  std::optional<RadialFunction> psi1_tab_;
};

// Shared instance per alpha.
const LittlewoodPaley& littlewood_paley(Alpha a);

// Kernel values K(x_i, y_k) of A (or B by the identity form) on node lists.
Eigen::MatrixXd kernel_values_A(const LittlewoodPaley& lp, const std::vector<double>& xs,
                                const std::vector<double>& ys, int cap = 64);
Eigen::MatrixXd kernel_values_B(const LittlewoodPaley& lp, const std::vector<double>& xs,
                                const std::vector<double>& ys, int cap = 64);

struct SchurBounds {
  double sup_row = 0.0;
  double sup_col = 0.0;
  double bound() const { return std::sqrt(sup_row * sup_col); }
};

SchurBounds schur_bounds(const Eigen::MatrixXd& kernel, const std::vector<double>& wx, const std::vector<double>& wy);

RadialFunction apply_K(const LittlewoodPaley& lp, const RadialFunction& f);
RadialFunction apply_L(const LittlewoodPaley& lp, const RadialFunction& f);

// K and L as matrices on a grid, for applying them to many functions.
struct DecompositionMatrices {
  OperatorMatrix K;
  OperatorMatrix L;
};
DecompositionMatrices decomposition_matrices(const LittlewoodPaley& lp, const GridPtr& grid);

struct ThinSchurReport {
  double eps = 0.0;
  double alpha = 0.0;
  double schur_A_on_S = 0.0;
  double schur_B_on_Sigma = 0.0;
  double norm_KE = 0.0;
  double norm_FL = 0.0;
  double composite_bound = 0.0;
  double certificate_C = 0.0;
  bool certified = false;
  double eps0_estimate = 0.0;
};

ThinSchurReport thin_schur_experiment(const LittlewoodPaley& lp, const IntervalSet& s, const IntervalSet& sigma,
                                      double eps, const GridPtr& grid);

}  // namespace fbt
