// Radial evolution driven by Herglotz functions: the coefficient-space PDE
// for exterior Laurent maps, characteristic ODEs with exit-time detection,
// short-time transition maps on a reference ring, whole-plane vector fields
// and dilatation-path utilities, and qc superposition of driving terms.
#pragma once

#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "qcflow/beltrami_field.hpp"
#include "qcflow/circle_grid.hpp"
#include "qcflow/evolution.hpp"
#include "qcflow/herglotz.hpp"
#include "qcflow/laurent_map.hpp"
#include "qcflow/math_util.hpp"
#include "qcflow/ode.hpp"

namespace qcflow {

// ---------------------------------------------------------------------------
// Coefficient-space PDE:  df/dt = -zeta f'(zeta) p(zeta, t)  on exterior maps.

struct LkControls {
  double atol = 1e-10;
  double rtol = 1e-10;
  double dt_init = 1e-3;
  std::size_t n = 256;      // diagnostic boundary grid
  double cusp_tol = 1e-3;   // stop when min |f'| falls below this
  double tail_tol = 1e-12;  // stop when sum_{k>N/2} k |a_k|^2 exceeds this
  int check_stride = 10;    // self-intersection test cadence (accepted steps)
  std::size_t max_steps = 2000000;
};

EvolutionResult lk_pde_evolve(const LaurentMap& f0, const HerglotzFunction& p, double t_end,
                              const LkControls& controls = {});
EvolutionResult lk_pde_evolve(const LaurentMap& f0,
                              const std::function<HerglotzFunction(double)>& p_of_t,
                              double t_end, const LkControls& controls = {});

// ---------------------------------------------------------------------------
// Characteristic ODE  dw/dt = sign * w p(w)  for a single exterior point.

enum class FlowDirection { retracting, expanding };

struct LkOdeResult {
  std::vector<std::pair<double, cplx>> trajectory;  // accepted (t, w) samples
  bool exited = false;                              // |w| reached 1 (retracting)
  double exit_time = std::numeric_limits<double>::infinity();
  cplx w_end = 0.0;  // value at t_end, or at the refined exit time
};

LkOdeResult lk_ode_integrate(cplx zeta0, const HerglotzFunction& p, double t_end,
                             FlowDirection direction = FlowDirection::retracting,
                             const OdeOptions& options = OdeOptions{.atol = 1e-12,
                                                                    .rtol = 1e-12});

// |f_t(w(t)) - f_0(zeta0)| where w flows expanding from zeta0 and f_t solves
// the retracting PDE: the two transports cancel along characteristics.
double characteristics_check(const LaurentMap& f0, const HerglotzFunction& p, double t_end,
                             cplx zeta0, const LkControls& controls = {});

// ---------------------------------------------------------------------------
// Short-time transition map Phi_tau of the expanding flow, sampled on the
// ring |zeta| = R and resolved into Laurent coefficients
// Phi_tau(zeta) = beta zeta + b_0 + b_1/zeta + ...

class TransitionMap {
 public:
  static TransitionMap evolve(const HerglotzFunction& p, double tau, double R = 4.0,
                              std::size_t n = 256,
                              const OdeOptions& options = OdeOptions{.atol = 1e-12,
                                                                     .rtol = 1e-12});
  // Single-point expanding flow over [0, tau] (tau may be negative).
  static cplx flow_point(const HerglotzFunction& p, double tau, cplx zeta,
                         const OdeOptions& options = OdeOptions{.atol = 1e-12,
                                                                .rtol = 1e-12});

  double tau() const { return tau_; }
  double ring_radius() const { return R_; }
  cplx beta() const { return beta_; }
  cplx b0() const { return b0_; }
  // Laurent coefficient of zeta^{-k}, k >= 1.
  cplx b(std::size_t k) const;
  const std::vector<cplx>& ring_values() const { return values_; }

 private:
  double tau_ = 0.0;
  double R_ = 4.0;
  cplx beta_ = 1.0;
  cplx b0_ = 0.0;
  std::vector<cplx> coef_;  // coef_[k-1] = b_k
  std::vector<cplx> values_;
};

// ---------------------------------------------------------------------------
// Whole-plane flows.

// Solves the retracting transport  dot f = -(f_z G + f_zbar conj(G))  for G
// pointwise.
cplx whole_plane_G(cplx f_z, cplx f_zbar, cplx f_dot);

// Reference chain: a map that is qc inside the unit disk and conformal
// outside, with constant dilatation 1/c^2 and uniform retraction e^{-t}.
class CSplitChain {
 public:
  explicit CSplitChain(double c);

  double c() const { return c_; }
  double mu() const { return 1.0 / (c_ * c_); }  // dilatation inside the disk

  cplx value(cplx zeta, double t) const;
  cplx time_derivative(cplx zeta, double t) const;  // = -value
  cplx d_zeta(cplx zeta, double t) const;
  cplx d_zetabar(cplx zeta, double t) const;

  // The recovered whole-plane field; equals zeta inside the disk and
  // zeta * exterior_p(zeta) outside.
  cplx vector_field(cplx zeta, double t) const;
  cplx exterior_p(cplx zeta) const;  // (c^2 zeta^2 + 1) / (c^2 zeta^2 - 1)

 private:
  double c_;
};

// ---------------------------------------------------------------------------
// Dilatation paths.

// nu0 = -(mu_dot + 2 i mu Im(dlog_fz_dt)) / (1 - |mu|^2), where dlog_fz_dt is
// the logarithmic time derivative of f_zeta along the path.
cplx nu0_pointwise(cplx mu, cplx mu_dot, cplx dlog_fz_dt = 0.0);
BeltramiField nu0_from_path(const BeltramiField& mu, const BeltramiField& mu_dot);
BeltramiField nu0_from_path(const BeltramiField& mu, const BeltramiField& mu_dot,
                            const BeltramiField& dlog_fz_dt);

struct SubordinationReport {
  double ess_sup = 0.0;          // ||nu0||_inf
  double threshold = 0.0;        // critical sup-norm for subordination
  double margin_integral = 0.0;  // normalized distortion integral; ok iff < 1
  bool ok = false;
};
SubordinationReport subordination_criterion(const BeltramiField& nu0);

struct GrowthEnvelopeReport {
  bool ok = true;
  double max_excess = 0.0;  // worst relative overshoot of the envelope
};
// Checks (1+|mu_t|)/(1-|mu_t|) <= e^{2 q (t - t0)} (1+|mu_0|)/(1-|mu_0|)
// pointwise over a sampled dilatation path.
GrowthEnvelopeReport growth_envelope_check(
    const std::vector<std::pair<double, BeltramiField>>& path, double q,
    double slack = 1e-9);

// Interior velocity field: analytic projection of the boundary values of
// w p(w) plus the Cauchy transform of nu0, evaluated at |zeta| < 1.
cplx interior_F(const CircleGrid& p_boundary, const BeltramiField& nu0, cplx zeta);

// ---------------------------------------------------------------------------
// Superposition: canonical qc extension of an exterior Laurent map into the
// disk via  g(u) = alpha u + a_0 + sum_k a_k conj(u)^k  (boundary-matching),
// and the transported driving data.

class InteriorExtension {
 public:
  explicit InteriorExtension(LaurentMap f);

  const LaurentMap& map() const { return f_; }
  cplx value(cplx u) const;
  cplx d_u(cplx /*u*/) const { return f_.alpha(); }
  cplx d_ubar(cplx u) const;
  cplx mu(cplx u) const;      // d_ubar / d_u
  double mu_bound() const;    // sum_k k |a_k| / alpha  (< 1 by construction)
  cplx invert(cplx w) const;  // Newton solve of value(u) = w
 private:
  LaurentMap f_;
};

// nu(w) = [mu_dot / (1 - |mu|^2) * g_u / conj(g_u)] at u = g^{-1}(w).
cplx nu_from_superposition(const InteriorExtension& ext, const BeltramiField& mu_dot,
                           cplx w);
// p(w) = 1 - (1/pi) \iint_{g(U)} nu(u') / (w (u' - w)) dsigma, computed by
// pulling the integral back to the unit disk (nu evaluated through g^{-1}).
cplx herglotz_superposition(const InteriorExtension& ext, const BeltramiField& mu_dot,
                            cplx w);
// Same function expressed directly in the source variable:
// p(g(zeta)) = 1 - (1/pi) \iint_U mu_dot g_u^2 / (g(zeta) (g(u) - g(zeta))) dsigma.
cplx herglotz_superposition_remark(const InteriorExtension& ext,
                                   const BeltramiField& mu_dot, cplx zeta);

}  // namespace qcflow
