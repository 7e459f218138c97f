// Gauss-Legendre nodes and weights by Newton iteration on P_n.
#pragma once

#include <cstddef>
#include <vector>

namespace qcflow {

struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  // Rule of size n on (a, b); exact for polynomials of degree 2n-1.
  static GaussLegendre on(double a, double b, std::size_t n);
};

}  // namespace qcflow
