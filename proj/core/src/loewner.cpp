#include "qcflow/loewner.hpp"

#include <algorithm>
#include <cmath>

#include "qcflow/errors.hpp"
#include "qcflow/special.hpp"

namespace qcflow {

namespace {

EvolutionResult evolve_coefficients(const LaurentMap& f0,
                                    const std::function<HerglotzFunction(double)>& p_of_t,
                                    bool autonomous, double t_end, const LkControls& c) {
  EvolutionResult out;
  HerglotzFunction p_init = p_of_t(0.0);
  const double rep_init = p_init.min_real_part();
  if (rep_init <= 0.0) {
    out.status = EvolutionStatus::positivity_failure;
    out.message = "driving function loses positivity at t = 0 (min Re p = " +
                  std::to_string(rep_init) + ")";
    EvolutionState s{0.0, f0, compute_diagnostics(f0, c.n)};
    s.diag.rep_margin = rep_init;
    out.states.push_back(std::move(s));
    return out;
  }
  const std::vector<cplx> q_init = p_init.coefficients();

  OdeRhs rhs = [&](double t, const std::vector<cplx>& y) {
    const LaurentMap f = unpack_coefficients(y);
    if (autonomous) return pack_velocity(advect_velocity(f, q_init));
    return pack_velocity(advect_velocity(f, p_of_t(t).coefficients()));
  };

  EvolutionStatus flag = EvolutionStatus::reached_t_end;
  std::string flag_msg;
  long accepted = -1;
  OdeObserver observe = [&](double t, const std::vector<cplx>& y) {
    ++accepted;
    EvolutionState s{t, unpack_coefficients(y), {}};
    s.diag = compute_diagnostics(s.f, c.n);
    if (autonomous) {
      s.diag.rep_margin = rep_init;
    } else {
      s.diag.rep_margin = p_of_t(t).min_real_part();
      if (s.diag.rep_margin <= 0.0 && flag == EvolutionStatus::reached_t_end) {
        flag = EvolutionStatus::positivity_failure;
        flag_msg = "driving function loses positivity at t = " + std::to_string(t);
      }
    }
    if (flag == EvolutionStatus::reached_t_end) {
      if (s.diag.min_df < c.cusp_tol) {
        flag = EvolutionStatus::cusp;
        flag_msg = "min |f'| = " + std::to_string(s.diag.min_df) + " fell below " +
                   std::to_string(c.cusp_tol) + " at t = " + std::to_string(t);
      } else if (s.diag.tail_energy > c.tail_tol) {
        flag = EvolutionStatus::tail_overflow;
        flag_msg = "spectral tail energy " + std::to_string(s.diag.tail_energy) +
                   " exceeded the resolution budget at t = " + std::to_string(t);
      } else if (s.diag.area <= 1e-12) {
        flag = EvolutionStatus::area_depleted;
        flag_msg = "enclosed area depleted at t = " + std::to_string(t);
      } else if (accepted > 0 && c.check_stride > 0 && accepted % c.check_stride == 0 &&
                 s.f.boundary_self_intersects(c.n)) {
        flag = EvolutionStatus::self_intersection;
        flag_msg = "boundary self-intersection detected at t = " + std::to_string(t);
      }
    }
    out.states.push_back(std::move(s));
  };
  OdeStopCondition halt = [&](double, const std::vector<cplx>&) {
    return flag != EvolutionStatus::reached_t_end;
  };

  OdeOptions opt;
  opt.atol = c.atol;
  opt.rtol = c.rtol;
  opt.dt_init = c.dt_init;
  opt.max_steps = c.max_steps;

  std::vector<cplx> y = pack_coefficients(f0);
  try {
    integrate_ode(rhs, y, 0.0, t_end, opt, observe, halt);
  } catch (const CuspError& e) {
    if (flag == EvolutionStatus::reached_t_end) {
      flag = EvolutionStatus::cusp;
      flag_msg = e.what();
    }
  } catch (const PositivityError& e) {
    if (flag == EvolutionStatus::reached_t_end) {
      flag = EvolutionStatus::positivity_failure;
      flag_msg = e.what();
    }
  }
  out.status = flag;
  out.message = flag == EvolutionStatus::reached_t_end ? "reached t_end" : flag_msg;
  if (flag == EvolutionStatus::cusp) out.blowup_estimate = estimate_blowup_time(out.states);
  return out;
}

}  // namespace

EvolutionResult lk_pde_evolve(const LaurentMap& f0, const HerglotzFunction& p, double t_end,
                              const LkControls& controls) {
  return evolve_coefficients(
      f0, [&p](double) { return p; }, /*autonomous=*/true, t_end, controls);
}

EvolutionResult lk_pde_evolve(const LaurentMap& f0,
                              const std::function<HerglotzFunction(double)>& p_of_t,
                              double t_end, const LkControls& controls) {
  return evolve_coefficients(f0, p_of_t, /*autonomous=*/false, t_end, controls);
}

LkOdeResult lk_ode_integrate(cplx zeta0, const HerglotzFunction& p, double t_end,
                             FlowDirection direction, const OdeOptions& options) {
  if (std::abs(zeta0) <= 1.0)
    throw DomainError("lk_ode_integrate: starting point must lie outside the unit circle");
  p.verify_positive();
  const double sign = direction == FlowDirection::retracting ? -1.0 : 1.0;
  OdeRhs rhs = [&](double, const std::vector<cplx>& y) {
    return std::vector<cplx>{sign * y[0] * p(y[0])};
  };

  OdeOptions opt = options;
  if (direction == FlowDirection::retracting)
    opt.dt_max = std::min(opt.dt_max, 0.02);  // keep boundary overshoot small

  LkOdeResult out;
  OdeObserver observe = [&](double t, const std::vector<cplx>& y) {
    out.trajectory.emplace_back(t, y[0]);
  };
  OdeStopCondition crossed = [](double, const std::vector<cplx>& y) {
    return std::abs(y[0]) <= 1.0;
  };

  std::vector<cplx> y{zeta0};
  const double reached =
      integrate_ode(rhs, y, 0.0, t_end, opt, observe,
                    direction == FlowDirection::retracting ? crossed : OdeStopCondition{});
  out.w_end = y[0];

  if (direction == FlowDirection::retracting && std::abs(y[0]) <= 1.0) {
    out.exited = true;
    // Bisect the crossing between the last two accepted samples, re-flowing
    // from the inner edge of the bracket each probe.
    double ta = out.trajectory[out.trajectory.size() - 2].first;
    cplx wa = out.trajectory[out.trajectory.size() - 2].second;
    double tb = reached;
    for (int iter = 0; iter < 200 && tb - ta > 1e-13 * std::max(1.0, std::abs(tb)); ++iter) {
      const double tm = 0.5 * (ta + tb);
      std::vector<cplx> probe{wa};
      integrate_ode(rhs, probe, ta, tm, opt);
      if (std::abs(probe[0]) > 1.0) {
        ta = tm;
        wa = probe[0];
      } else {
        tb = tm;
      }
    }
    out.exit_time = 0.5 * (ta + tb);
    std::vector<cplx> fin{wa};
    integrate_ode(rhs, fin, ta, out.exit_time, opt);
    out.w_end = fin[0];
    out.trajectory.back() = {out.exit_time, out.w_end};
  }
  return out;
}

double characteristics_check(const LaurentMap& f0, const HerglotzFunction& p, double t_end,
                             cplx zeta0, const LkControls& controls) {
  const LkOdeResult flow =
      lk_ode_integrate(zeta0, p, t_end, FlowDirection::expanding,
                       OdeOptions{.atol = controls.atol, .rtol = controls.rtol});
  const EvolutionResult ev = lk_pde_evolve(f0, p, t_end, controls);
  if (ev.status != EvolutionStatus::reached_t_end)
    throw SolverError("characteristics_check: coefficient evolution stopped early: " +
                      ev.message);
  return std::abs(ev.states.back().f.eval(flow.w_end) - f0.eval(zeta0));
}

TransitionMap TransitionMap::evolve(const HerglotzFunction& p, double tau, double R,
                                    std::size_t n, const OdeOptions& options) {
  if (R <= 1.0) throw DomainError("TransitionMap: ring radius must exceed 1");
  if (!is_power_of_two(n) || n < 8)
    throw DomainError("TransitionMap: ring size must be a power of two >= 8");
  p.verify_positive();
  TransitionMap tm;
  tm.tau_ = tau;
  tm.R_ = R;
  std::vector<cplx> y(n);
  for (std::size_t j = 0; j < n; ++j)
    y[j] = R * unit(kTwoPi * static_cast<double>(j) / static_cast<double>(n));
  if (tau != 0.0) {
    OdeRhs rhs = [&](double, const std::vector<cplx>& w) {
      std::vector<cplx> dw(w.size());
      for (std::size_t j = 0; j < w.size(); ++j) dw[j] = w[j] * p(w[j]);
      return dw;
    };
    integrate_ode(rhs, y, 0.0, tau, options);
  }
  tm.values_ = y;
  const CircleGrid ring = CircleGrid::from_values(std::move(y));
  tm.beta_ = ring.coeff(1) / R;
  tm.b0_ = ring.coeff(0);
  tm.coef_.resize(n / 2 - 1);
  double rk = R;
  for (std::size_t k = 1; k < n / 2; ++k) {
    tm.coef_[k - 1] = ring.coeff(-static_cast<int>(k)) * rk;
    rk *= R;
  }
  return tm;
}

cplx TransitionMap::flow_point(const HerglotzFunction& p, double tau, cplx zeta,
                               const OdeOptions& options) {
  if (std::abs(zeta) <= 1.0)
    throw DomainError("TransitionMap::flow_point: zeta must lie outside the unit circle");
  if (tau == 0.0) return zeta;
  OdeRhs rhs = [&](double, const std::vector<cplx>& y) {
    return std::vector<cplx>{y[0] * p(y[0])};
  };
  std::vector<cplx> y{zeta};
  integrate_ode(rhs, y, 0.0, tau, options);
  return y[0];
}

cplx TransitionMap::b(std::size_t k) const {
  if (k == 0 || k > coef_.size())
    throw DomainError("TransitionMap: Laurent index out of range");
  return coef_[k - 1];
}

cplx whole_plane_G(cplx f_z, cplx f_zbar, cplx f_dot) {
  const double denom = std::norm(f_z) - std::norm(f_zbar);
  if (std::abs(denom) < 1e-14 * (std::norm(f_z) + std::norm(f_zbar)))
    throw DomainError("whole_plane_G: degenerate differential");
  return (-std::conj(f_z) * f_dot + f_zbar * std::conj(f_dot)) / denom;
}

CSplitChain::CSplitChain(double c) : c_(c) {
  if (!(c > 1.0)) throw DomainError("CSplitChain: c must exceed 1");
}

cplx CSplitChain::value(cplx zeta, double t) const {
  const double decay = std::exp(-t);
  if (std::abs(zeta) <= 1.0) return decay * (zeta + std::conj(zeta) / (c_ * c_));
  return decay * (zeta + 1.0 / (c_ * c_ * zeta));
}

cplx CSplitChain::time_derivative(cplx zeta, double t) const { return -value(zeta, t); }

cplx CSplitChain::d_zeta(cplx zeta, double t) const {
  const double decay = std::exp(-t);
  if (std::abs(zeta) <= 1.0) return decay;
  return decay * (1.0 - 1.0 / (c_ * c_ * zeta * zeta));
}

cplx CSplitChain::d_zetabar(cplx zeta, double t) const {
  if (std::abs(zeta) <= 1.0) return std::exp(-t) / (c_ * c_);
  return 0.0;
}

cplx CSplitChain::vector_field(cplx zeta, double t) const {
  return whole_plane_G(d_zeta(zeta, t), d_zetabar(zeta, t), time_derivative(zeta, t));
}

cplx CSplitChain::exterior_p(cplx zeta) const {
  const cplx num = c_ * c_ * zeta * zeta + 1.0;
  const cplx den = c_ * c_ * zeta * zeta - 1.0;
  if (std::abs(den) < 1e-14) throw DomainError("CSplitChain: pole of exterior_p");
  return num / den;
}

cplx nu0_pointwise(cplx mu, cplx mu_dot, cplx dlog_fz_dt) {
  const double m2 = std::norm(mu);
  if (m2 >= 1.0) throw DomainError("nu0_pointwise: |mu| must be < 1");
  return -(mu_dot + 2.0 * cplx(0.0, 1.0) * mu * dlog_fz_dt.imag()) / (1.0 - m2);
}

BeltramiField nu0_from_path(const BeltramiField& mu, const BeltramiField& mu_dot) {
  if (mu.grid_ptr() != mu_dot.grid_ptr())
    throw DomainError("nu0_from_path: fields must share a quadrature grid");
  std::vector<cplx> out(mu.samples().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = nu0_pointwise(mu.samples()[i], mu_dot.samples()[i]);
  return BeltramiField::from_samples(std::move(out), mu.grid_ptr());
}

BeltramiField nu0_from_path(const BeltramiField& mu, const BeltramiField& mu_dot,
                            const BeltramiField& dlog_fz_dt) {
  if (mu.grid_ptr() != mu_dot.grid_ptr() || mu.grid_ptr() != dlog_fz_dt.grid_ptr())
    throw DomainError("nu0_from_path: fields must share a quadrature grid");
  std::vector<cplx> out(mu.samples().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = nu0_pointwise(mu.samples()[i], mu_dot.samples()[i], dlog_fz_dt.samples()[i]);
  return BeltramiField::from_samples(std::move(out), mu.grid_ptr());
}

SubordinationReport subordination_criterion(const BeltramiField& nu0) {
  SubordinationReport rep;
  rep.ess_sup = nu0.ess_sup();
  rep.threshold = subordination_threshold();
  rep.margin_integral = 4.0 * rep.ess_sup / kPi * radial_elliptic_integral();
  rep.ok = rep.margin_integral < 1.0;
  return rep;
}

GrowthEnvelopeReport growth_envelope_check(
    const std::vector<std::pair<double, BeltramiField>>& path, double q, double slack) {
  if (path.empty()) throw DomainError("growth_envelope_check: empty path");
  GrowthEnvelopeReport rep;
  const auto& base = path.front().second;
  const double t0 = path.front().first;
  for (const auto& [t, field] : path) {
    if (field.grid_ptr() != base.grid_ptr())
      throw DomainError("growth_envelope_check: fields must share a quadrature grid");
    const double envelope_factor = std::exp(2.0 * q * (t - t0));
    for (std::size_t i = 0; i < field.samples().size(); ++i) {
      const double m0 = std::abs(base.samples()[i]);
      const double mt = std::abs(field.samples()[i]);
      if (m0 >= 1.0 || mt >= 1.0)
        throw DomainError("growth_envelope_check: |mu| must stay below 1");
      const double envelope = envelope_factor * (1.0 + m0) / (1.0 - m0);
      const double excess = (1.0 + mt) / (1.0 - mt) / envelope - 1.0;
      rep.max_excess = std::max(rep.max_excess, excess);
    }
  }
  rep.ok = rep.max_excess <= slack;
  return rep;
}

cplx interior_F(const CircleGrid& p_boundary, const BeltramiField& nu0, cplx zeta) {
  if (std::abs(zeta) >= 1.0)
    throw DomainError("interior_F: evaluation point must lie inside the unit disk");
  const std::size_t n = p_boundary.size();
  std::vector<cplx> q(n);
  for (std::size_t j = 0; j < n; ++j)
    q[j] = unit(kTwoPi * static_cast<double>(j) / static_cast<double>(n)) *
           p_boundary.value(j);
  const CircleGrid qg = CircleGrid::from_values(std::move(q));
  cplx proj = 0.0;
  for (std::size_t m = n / 2; m-- > 0;) proj = proj * zeta + qg.coeff(static_cast<int>(m));
  return proj + cauchy_transform_disk(nu0, zeta);
}

InteriorExtension::InteriorExtension(LaurentMap f) : f_(std::move(f)) {
  if (mu_bound() >= 1.0)
    throw DomainError("InteriorExtension: reflected tail is not a contraction "
                      "(sum k |a_k| must stay below alpha)");
}

cplx InteriorExtension::value(cplx u) const {
  const cplx ub = std::conj(u);
  cplx tail = 0.0;
  for (std::size_t k = f_.tail_size(); k-- > 1;) tail = (tail + f_.a(k + 1)) * ub;
  if (f_.tail_size() > 0) tail = (tail + f_.a(1)) * ub;
  return f_.alpha() * u + f_.a0() + tail;
}

cplx InteriorExtension::d_ubar(cplx u) const {
  const cplx ub = std::conj(u);
  cplx acc = 0.0;
  for (std::size_t k = f_.tail_size(); k-- > 0;)
    acc = acc * ub + static_cast<double>(k + 1) * f_.a(k + 1);
  return acc;
}

cplx InteriorExtension::mu(cplx u) const { return d_ubar(u) / f_.alpha(); }

double InteriorExtension::mu_bound() const {
  double s = 0.0;
  for (std::size_t k = 1; k <= f_.tail_size(); ++k)
    s += static_cast<double>(k) * std::abs(f_.a(k));
  return s / f_.alpha();
}

cplx InteriorExtension::invert(cplx w) const {
  const double a = f_.alpha();
  cplx u = (w - f_.a0()) / a;
  for (int iter = 0; iter < 100; ++iter) {
    const cplx res = value(u) - w;
    if (std::abs(res) < 1e-13 * std::max(1.0, std::abs(w))) return u;
    const cplx b = d_ubar(u);
    const double denom = a * a - std::norm(b);
    // The contraction bound keeps denom positive for |u| <= 1.
    u += (a * (-res) - b * std::conj(-res)) / denom;
  }
  throw SolverError("InteriorExtension::invert: Newton iteration failed to converge");
}

cplx nu_from_superposition(const InteriorExtension& ext, const BeltramiField& mu_dot,
                           cplx w) {
  const cplx u = ext.invert(w);
  const cplx m = ext.mu(u);
  const cplx gu = ext.d_u(u);
  return mu_dot.at(u) / (1.0 - std::norm(m)) * (gu / std::conj(gu));
}

cplx herglotz_superposition(const InteriorExtension& ext, const BeltramiField& mu_dot,
                            cplx w) {
  const DiskQuadrature& g = mu_dot.grid();
  cplx acc = 0.0;
  for (std::size_t i = 0; i < g.n_r(); ++i) {
    const double wt = g.weight(i);
    for (std::size_t j = 0; j < g.n_theta(); ++j) {
      const cplx u = g.point(i, j);
      const cplx image = ext.value(u);
      if (std::abs(image - w) < 0.05)
        throw DomainError("herglotz_superposition: w too close to the image domain");
      const double jac = std::norm(ext.d_u(u)) - std::norm(ext.d_ubar(u));
      acc += wt * nu_from_superposition(ext, mu_dot, image) * jac / (image - w);
    }
  }
  return 1.0 - acc / (kPi * w);
}

cplx herglotz_superposition_remark(const InteriorExtension& ext,
                                   const BeltramiField& mu_dot, cplx zeta) {
  if (std::abs(zeta) <= 1.0)
    throw DomainError("herglotz_superposition_remark: zeta must lie outside the unit circle");
  const cplx w = ext.map().eval(zeta);
  const DiskQuadrature& g = mu_dot.grid();
  cplx acc = 0.0;
  for (std::size_t i = 0; i < g.n_r(); ++i) {
    const double wt = g.weight(i);
    for (std::size_t j = 0; j < g.n_theta(); ++j) {
      const cplx u = g.point(i, j);
      const cplx gu = ext.d_u(u);
      acc += wt * mu_dot.sample(i, j) * gu * gu / (ext.value(u) - w);
    }
  }
  return 1.0 - acc / (kPi * w);
}

}  // namespace qcflow
