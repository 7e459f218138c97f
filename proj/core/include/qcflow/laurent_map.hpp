// Truncated exterior map  f(zeta) = alpha zeta + a_0 + sum_{k=1..N} a_k zeta^{-k},
// defined on |zeta| >= 1, hydrodynamically normalized (alpha > 0 real).
#pragma once

#include <vector>

#include "qcflow/circle_grid.hpp"
#include "qcflow/math_util.hpp"

namespace qcflow {

class LaurentMap {
 public:
  LaurentMap(double alpha, cplx a0, std::vector<cplx> tail);
  static LaurentMap identity() { return LaurentMap(1.0, 0.0, {}); }

  double alpha() const { return alpha_; }
  cplx a0() const { return a0_; }
  // a_k for k >= 1 (zero beyond the stored tail).
  cplx a(std::size_t k) const;
  std::size_t tail_size() const { return tail_.size(); }

  cplx eval(cplx z) const;
  cplx deriv(cplx z) const;   // f'
  cplx deriv2(cplx z) const;  // f''
  cplx deriv3(cplx z) const;  // f'''

  // Schwarzian derivative f'''/f' - (3/2)(f''/f')^2 at |z| > 1.
  cplx schwarzian(cplx z) const;

  // Samples of f on the unit circle.
  CircleGrid boundary(std::size_t n) const;
  // Samples of f' on the unit circle.
  CircleGrid boundary_deriv(std::size_t n) const;

  // min_theta |f'(e^{i theta})| with the minimizing angle.
  struct BoundaryDerivMin {
    double value;
    double theta;
  };
  BoundaryDerivMin min_boundary_deriv(std::size_t n) const;

  // Winding number of the boundary curve f(S^1) around w.
  int winding_number(cplx w, std::size_t n) const;
  // Segment-intersection test on the sampled boundary polyline.
  bool boundary_self_intersects(std::size_t n) const;

  // Area enclosed by f(S^1): pi (alpha^2 - sum_k k |a_k|^2).
  double enclosed_area() const;

 private:
  double alpha_;
  cplx a0_;
  std::vector<cplx> tail_;  // tail_[k-1] = a_k
};

}  // namespace qcflow
