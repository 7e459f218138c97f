// Shared state, diagnostics, and coefficient-space advection for the
// boundary evolution solvers.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qcflow/herglotz.hpp"
#include "qcflow/laurent_map.hpp"
#include "qcflow/math_util.hpp"

namespace qcflow {

struct EvolutionDiagnostics {
  double area = 0.0;                    // pi (alpha^2 - sum k |a_k|^2)
  std::array<cplx, 3> moments{};        // exterior-domain moments m_1..m_3
  double min_df = 0.0;                  // min_theta |f'(e^{i theta})|
  double min_df_theta = 0.0;
  double rep_margin = 0.0;              // min Re p over the standard grid
  double tail_energy = 0.0;             // sum_{k > N/2} k |a_k|^2
};

struct EvolutionState {
  double t = 0.0;
  LaurentMap f = LaurentMap::identity();
  EvolutionDiagnostics diag;
};

enum class EvolutionStatus {
  reached_t_end,
  cusp,
  self_intersection,
  tail_overflow,
  positivity_failure,
  area_depleted,
};

struct EvolutionResult {
  std::vector<EvolutionState> states;
  EvolutionStatus status = EvolutionStatus::reached_t_end;
  std::string message;
  // Extrapolated time at which min |f'| reaches zero, when estimable.
  std::optional<double> blowup_estimate;
};

// Laurent coefficients of  -zeta f'(zeta) p(zeta)  truncated to f's shape,
// where p = sum_{k>=0} q[k] zeta^{-k}.  The product closes exactly: the only
// positive power produced is zeta^1.
struct LaurentVelocity {
  double alpha_dot = 0.0;
  cplx a0_dot = 0.0;
  std::vector<cplx> a_dot;  // a_dot[k-1] is the velocity of a_k
};
LaurentVelocity advect_velocity(const LaurentMap& f, const std::vector<cplx>& q);

// Coefficient vector layout used by the evolution solvers:
// y[0] = alpha, y[1] = a_0, y[k+1] = a_k.
std::vector<cplx> pack_coefficients(const LaurentMap& f);
LaurentMap unpack_coefficients(const std::vector<cplx>& y);
std::vector<cplx> pack_velocity(const LaurentVelocity& v);

// Moments of the unbounded exterior domain:  m_k = \iint_{Omega} z^{-k} dsigma
// reduced to the boundary integral  -(1/2) \int conj(f) f^{-k} f' e^{i theta}
// dtheta  for k = 1..3.  Requires the boundary to enclose the origin.
std::array<cplx, 3> exterior_richardson_moments(const LaurentMap& f, std::size_t n = 256);

// Fills area / moments / min |f'| / tail energy (rep_margin is the caller's).
EvolutionDiagnostics compute_diagnostics(const LaurentMap& f, std::size_t n);

// Least-squares extrapolation of min|f'|^2 -> 0 over the last few states;
// empty when the derivative is not decreasing.
std::optional<double> estimate_blowup_time(const std::vector<EvolutionState>& states);

}  // namespace qcflow
