#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fbt/spectral.hpp"

namespace fbt {

RadialFunction project_time(const RadialFunction& f, const IntervalSet& s);
RadialFunction project_freq(const RadialFunction& f, const IntervalSet& sigma);
RadialFunction project_freq(const RadialFunction& f, const IntervalSet& sigma, const OperatorMatrix& hankel);

// Matrix of F_Sigma E_S on the grid, built as M chi_Sigma M chi_S.
OperatorMatrix composite_kernel(const IntervalSet& s, const IntervalSet& sigma, const GridPtr& grid);
OperatorMatrix composite_kernel(const IntervalSet& s, const IntervalSet& sigma, const OperatorMatrix& hankel);

// chi_Sigma F E_S from a quadrature of S to a quadrature of Sigma. It has the
// same singular values as F_Sigma E_S, since F is unitary.
OperatorMatrix frequency_kernel(Alpha a, const IntervalSet& s, const IntervalSet& sigma, int order = 16);

double hs_norm(const OperatorMatrix& m);

struct PowerIteration {
  double tol = 1e-10;
  int max_iter = 200000;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

double largest_singular_value(const Eigen::MatrixXd& b, const PowerIteration& opt = {});
double op_norm(const OperatorMatrix& m, const PowerIteration& opt = {});

struct AnnihilationConstants {
  double norm = 0.0;
  double hs_norm = 0.0;
  double hs_bound = 0.0;
  double D = 0.0;
  double C = 0.0;
  bool certified = false;
  std::string status;
};

AnnihilationConstants constants_from_norm(double norm);
AnnihilationConstants annihilation_constants(const IntervalSet& s, const IntervalSet& sigma, Alpha a);
// Grid overload; the grid fixes alpha and the sets must fit inside its radius.
AnnihilationConstants annihilation_constants(const IntervalSet& s, const IntervalSet& sigma, const GridPtr& grid);

// kappa_a sqrt(2 pi |S| |Sigma|)
double hs_bound(Alpha a, const IntervalSet& s, const IntervalSet& sigma);

struct StrongAnnihilationReport {
  double norm_f = 0.0;
  double norm_outside_s = 0.0;
  double norm_transform_outside_sigma = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

StrongAnnihilationReport verify_strong_annihilation(const RadialFunction& f, const IntervalSet& s,
                                                    const IntervalSet& sigma, double c);
StrongAnnihilationReport verify_strong_annihilation(const RadialFunction& f, const RadialFunction& transformed,
                                                    const IntervalSet& s, const IntervalSet& sigma, double c);

Eigen::MatrixXd dilate_gram_matrix(const RadialFunction& f, const std::vector<double>& lambdas);
double dilate_gram(const RadialFunction& f, const std::vector<double>& lambdas);

}  // namespace fbt
