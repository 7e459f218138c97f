// Zero-surface-tension Hele-Shaw flow for a bubble whose exterior is
// parametrized by a Laurent map: the boundary-kinematics equation
//   Re[ dot f(zeta) conj(zeta f'(zeta)) ] = -1   on |zeta| = 1
// reduced to coefficient space through the exterior Schwarz completion of
// 1/|f'|^2, plus the induced driving field / tangent data on the disk.
#pragma once

#include <cstddef>

#include "qcflow/circle_field.hpp"
#include "qcflow/circle_grid.hpp"
#include "qcflow/evolution.hpp"
#include "qcflow/laurent_map.hpp"
#include "qcflow/math_util.hpp"

namespace qcflow {

// Pointwise residual of the kinematic boundary equation for a candidate
// velocity: Re[ dot f conj(zeta f') ] + 1 sampled on the n-point circle grid.
CircleGrid pg_residual(const LaurentMap& f, const LaurentVelocity& velocity,
                       std::size_t n = 256);

// Coefficient velocity dot f = sign * zeta f'(zeta) S(zeta) with S the
// exterior Schwarz completion of 1/|f'|^2 (sign -1: contracting bubble).
// Throws CuspError when min |f'| on the boundary falls below cusp_tol.
LaurentVelocity pgl_rhs(const LaurentMap& f, std::size_t n = 256, double cusp_tol = 1e-3,
                        int sign = -1);

struct HsControls {
  double atol = 1e-10;
  double rtol = 1e-10;
  double dt_init = 1e-3;
  std::size_t n = 256;      // boundary grid for the Schwarz completion
  double cusp_tol = 1e-3;   // stop when min |f'| falls below this
  double tail_tol = 1e-12;  // stop when sum_{k>N/2} k |a_k|^2 exceeds this
  int check_stride = 10;    // self-intersection test cadence (accepted steps)
  int sign = -1;            // -1 contracting bubble, +1 expanding
  std::size_t max_steps = 2000000;
};

EvolutionResult hs_evolve(const LaurentMap& f0, double t_end, const HsControls& controls = {});

// Driving data induced on the unit circle by the current interface:
// p0 + p1/zeta are the first Schwarz coefficients of s = 1/|f'|^2 and
// d = -2 s is the tail field.
struct ExportedField {
  double p0 = 0.0;
  cplx p1 = 0.0;
  CircleField d;
};
ExportedField export_field(const LaurentMap& f, std::size_t n = 256);

// Harmonic-Beltrami tangent direction induced by the flow,
//   nu(zeta) = -(3/pi) (1-|zeta|^2)^2 \int e^{2 i theta} s(theta)
//              (1 - e^{i theta} conj(zeta))^{-4} dtheta,   |zeta| < 1.
cplx tangent_vector(const LaurentMap& f, cplx zeta, std::size_t n = 256);

// Cotangent (quadratic-differential) density
//   phi(zeta) = (6/pi) \int e^{-2 i theta} s(theta)
//               (1 - e^{-i theta} zeta)^{-4} dtheta,   |zeta| < 1,
// related to the tangent by  nu = -(1/2) conj(phi) (1-|zeta|^2)^2.
cplx cotangent_vector(const LaurentMap& f, cplx zeta, std::size_t n = 256);

}  // namespace qcflow
