#include "fbt/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <map>
#include <mutex>
#include <tuple>

#include "fbt/errors.hpp"

namespace fbt {

Rule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw DomainError("gauss_jacobi: need at least one node");
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("gauss_jacobi: exponents must exceed -1");

  const double ab = a + b;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 1);
  diag(0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    double beta;
    if (k == 1) {
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      const double s = 2.0 * k + ab;
      beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(k - 1) = std::sqrt(beta);
  }

  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                              std::lgamma(ab + 2.0));

  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  if (n == 1) {
    r.nodes[0] = diag(0);
    r.weights[0] = mu0;
    return r;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw NumericError("gauss_jacobi: eigensolver failed");
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = es.eigenvalues()(i);
    const double v = es.eigenvectors()(0, i);
    r.weights[i] = mu0 * v * v;
  }
  if (a == b) {
    for (int i = 0; i < n / 2; ++i) {
      const int j = n - 1 - i;
      const double x = 0.5 * (r.nodes[j] - r.nodes[i]);
      const double w = 0.5 * (r.weights[i] + r.weights[j]);
      r.nodes[i] = -x;
      r.nodes[j] = x;
      r.weights[i] = r.weights[j] = w;
    }
    if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  }
  return r;
}

Rule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

namespace {

using Key = std::tuple<int, double, double, bool>;

std::shared_ptr<const Rule> lookup(const Key& key) {
  static std::mutex m;
  static std::map<Key, std::shared_ptr<const Rule>> cache;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto [n, a, b, normalize] = key;
  auto rule = std::make_shared<Rule>(gauss_jacobi(n, a, b));
  if (normalize) {
    CompensatedSum s;
    for (double w : rule->weights) s.add(w);
    const double total = s.value();
    for (double& w : rule->weights) w /= total;
  }
  std::lock_guard<std::mutex> lock(m);
  auto [it, inserted] = cache.emplace(key, std::move(rule));
  return it->second;
}

}  // namespace

std::shared_ptr<const Rule> cached_gauss_jacobi(int n, double a, double b) {
  return lookup(Key{n, a, b, false});
}

std::shared_ptr<const Rule> normalized_gegenbauer(int n, double lambda) {
  return lookup(Key{n, lambda, lambda, true});
}

}  // namespace fbt
