// Conformal barycentric extension of circle homeomorphisms: the defining
// averaged field F(zeta, w), its Newton solve, the Beltrami coefficient of
// the extension, and the tangent map from circle vector fields to harmonic
// Beltrami differentials with its bound checks.
#pragma once

#include <functional>
#include <vector>

#include "qcflow/circle_field.hpp"
#include "qcflow/circle_grid.hpp"
#include "qcflow/math_util.hpp"

namespace qcflow {

// Boundary values of a sense-preserving circle homeomorphism, sampled on the
// uniform grid.  Validated: unimodular values and a strictly increasing
// angle lift with total increment 2 pi.
class CircleHomeomorphism {
 public:
  static CircleHomeomorphism identity(std::size_t n = 256);
  // theta -> phi(theta), with phi(theta + 2 pi) = phi(theta) + 2 pi.
  static CircleHomeomorphism from_lift(const std::function<double(double)>& lift,
                                       std::size_t n = 256);
  // Boundary restriction of the disk automorphism e^{i rot} (z - a)/(1 - conj(a) z).
  static CircleHomeomorphism mobius(cplx a, double rot = 0.0, std::size_t n = 256);
  static CircleHomeomorphism from_values(std::vector<cplx> values);

  std::size_t n() const { return values_.size(); }
  double theta(std::size_t j) const { return kTwoPi * static_cast<double>(j) / static_cast<double>(n()); }
  cplx value(std::size_t j) const { return values_[j]; }
  const std::vector<cplx>& values() const { return values_; }

 private:
  explicit CircleHomeomorphism(std::vector<cplx> values) : values_(std::move(values)) {}
  std::vector<cplx> values_;
};

// The conformal barycenter field
//   F(zeta, w) = (1/2 pi) \int (phi(z) - w)/(1 - conj(w) phi(z))
//                * (1-|zeta|^2)/|zeta - z|^2 dtheta,   z = e^{i theta},
// whose zero in w defines the extension h(zeta).
cplx evaluate_F(const CircleHomeomorphism& phi, cplx zeta, cplx w);

// F together with its four Wirtinger partials at (zeta, w).
struct BarycenterPartials {
  cplx F;
  cplx F_zeta;
  cplx F_zetabar;
  cplx F_w;
  cplx F_wbar;
};
BarycenterPartials de_partials(const CircleHomeomorphism& phi, cplx zeta, cplx w);

struct BarycenterSolve {
  cplx zeta;
  cplx w;
  double residual;
  int iterations;
};

// Newton iteration on F(zeta, .) = 0 with the real 2x2 Jacobian, seeded by
// the Poisson average of phi; damped fixed-point fallback if Newton leaves
// the disk.  Residual tolerance 1e-12, at most 50 iterations.
BarycenterSolve extend(const CircleHomeomorphism& phi, cplx zeta);

// Beltrami coefficient of the extension at zeta, assembled from the kernel
// partials at w = h(zeta).
cplx beltrami_of_extension(const CircleHomeomorphism& phi, cplx zeta);

// Tangent map of the extension at the identity: the harmonic Beltrami
// differential
//   nu(zeta) = (3/2 pi) \int ((1-|zeta|^2)/(1 - e^{i theta} conj(zeta))^2)^2
//              e^{2 i theta} d(e^{i theta}) dtheta,
// evaluated through the Fourier expansion of the kernel (exact for
// band-limited d, stable up to |zeta| -> 1).
cplx nu_from_field(const CircleField& d, cplx zeta);

// The same differential after integrating the kernel by parts twice
// (quadrature form; needs zeta != 0):
//   -((1-|zeta|^2)^2/(4 pi conj(zeta)^2)) \int e^{-i theta}
//     [d^2/dtheta^2 (e^{i theta} d) - i d/dtheta (e^{i theta} d)]
//     / (1 - e^{i theta} conj(zeta))^2 dtheta.
cplx nu_by_parts(const CircleField& d, cplx zeta);

// max over the circle of |e^{-i theta} (d^2/dtheta^2 - i d/dtheta)(e^{i theta} d)|;
// half of this bounds |nu(zeta)| |zeta|^2 / (1-|zeta|^2).
double nu_ratio_bound(const CircleField& d);

// Central finite difference (step tau) of beltrami_of_extension along the
// path theta -> theta + tau d(theta); matches nu_from_field.
cplx variational_nu(const CircleField& d, cplx zeta, double tau = 1e-4);

}  // namespace qcflow
