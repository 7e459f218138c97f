#include "qcflow/gauss_legendre.hpp"

#include <cmath>
#include <stdexcept>

#include "qcflow/math_util.hpp"

namespace qcflow {

GaussLegendre GaussLegendre::on(double a, double b, std::size_t n) {
  if (n == 0) throw std::invalid_argument("GaussLegendre: n must be positive");
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n(x) = 0.
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = -x;
    rule.weights[n - 1 - i] = w;
  }
  // Map [-1,1] -> [a,b]; nodes come out descending, flip to ascending.
  const double half = 0.5 * (b - a), mid = 0.5 * (b + a);
  GaussLegendre out;
  out.nodes.resize(n);
  out.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.nodes[i] = mid + half * rule.nodes[n - 1 - i];
    out.weights[i] = half * rule.weights[n - 1 - i];
  }
  return out;
}

}  // namespace qcflow
