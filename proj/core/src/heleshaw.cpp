#include "qcflow/heleshaw.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qcflow/errors.hpp"
#include "qcflow/herglotz.hpp"
#include "qcflow/ode.hpp"

namespace qcflow {

namespace {

std::vector<double> boundary_speed_density(const LaurentMap& f, std::size_t n) {
  const CircleGrid fd = f.boundary_deriv(n);
  std::vector<double> s(n);
  for (std::size_t j = 0; j < n; ++j) s[j] = 1.0 / std::norm(fd.value(j));
  return s;
}

// Exterior Schwarz coefficients of s = 1/|f'|^2:
// S(zeta) = q_0 + sum_{m>=1} q_m zeta^{-m},  q_0 = c_0(s), q_m = 2 conj(c_m(s)).
std::vector<cplx> schwarz_coefficients(const LaurentMap& f, std::size_t n) {
  const CircleGrid sg = CircleGrid::from_real_values(boundary_speed_density(f, n));
  std::vector<cplx> q(n / 2);
  q[0] = sg.coeff(0).real();
  for (std::size_t m = 1; m < n / 2; ++m) q[m] = 2.0 * std::conj(sg.coeff(static_cast<int>(m)));
  return q;
}

}  // namespace

CircleGrid pg_residual(const LaurentMap& f, const LaurentVelocity& velocity, std::size_t n) {
  const CircleGrid fd = f.boundary_deriv(n);
  std::vector<double> res(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    const cplx e = unit(theta);
    cplx vel = velocity.alpha_dot * e + velocity.a0_dot;
    cplx em = 1.0;
    for (const cplx& ak_dot : velocity.a_dot) {
      em *= std::conj(e);
      vel += ak_dot * em;
    }
    res[j] = (vel * std::conj(e * fd.value(j))).real() + 1.0;
  }
  return CircleGrid::from_real_values(res);
}

LaurentVelocity pgl_rhs(const LaurentMap& f, std::size_t n, double cusp_tol, int sign) {
  const auto dmin = f.min_boundary_deriv(n);
  if (dmin.value < cusp_tol)
    throw CuspError("pgl_rhs: boundary derivative below cusp tolerance", dmin.theta,
                    dmin.value);
  LaurentVelocity v = advect_velocity(f, schwarz_coefficients(f, n));
  if (sign > 0) {
    v.alpha_dot = -v.alpha_dot;
    v.a0_dot = -v.a0_dot;
    for (cplx& a : v.a_dot) a = -a;
  }
  return v;
}

EvolutionResult hs_evolve(const LaurentMap& f0, double t_end, const HsControls& c) {
  EvolutionResult out;
  OdeRhs rhs = [&](double, const std::vector<cplx>& y) {
    return pack_velocity(pgl_rhs(unpack_coefficients(y), c.n, c.cusp_tol, c.sign));
  };

  EvolutionStatus flag = EvolutionStatus::reached_t_end;
  std::string flag_msg;
  long accepted = -1;
  OdeObserver observe = [&](double t, const std::vector<cplx>& y) {
    ++accepted;
    EvolutionState s{t, unpack_coefficients(y), {}};
    s.diag = compute_diagnostics(s.f, c.n);
    s.diag.rep_margin =
        HerglotzFunction::from_coefficients(schwarz_coefficients(s.f, c.n)).min_real_part();
    if (flag == EvolutionStatus::reached_t_end) {
      if (s.diag.min_df < c.cusp_tol) {
        flag = EvolutionStatus::cusp;
        flag_msg = "min |f'| = " + std::to_string(s.diag.min_df) + " at theta = " +
                   std::to_string(s.diag.min_df_theta) + " fell below " +
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
  }
  out.status = flag;
  out.message = flag == EvolutionStatus::reached_t_end ? "reached t_end" : flag_msg;
  if (flag == EvolutionStatus::cusp) out.blowup_estimate = estimate_blowup_time(out.states);
  return out;
}

ExportedField export_field(const LaurentMap& f, std::size_t n) {
  const std::vector<double> s = boundary_speed_density(f, n);
  const CircleGrid sg = CircleGrid::from_real_values(s);
  std::vector<double> d(n);
  for (std::size_t j = 0; j < n; ++j) d[j] = -2.0 * s[j];
  return ExportedField{sg.coeff(0).real(), 2.0 * std::conj(sg.coeff(1)),
                       CircleField::from_values(d)};
}

cplx tangent_vector(const LaurentMap& f, cplx zeta, std::size_t n) {
  if (std::abs(zeta) >= 1.0)
    throw DomainError("tangent_vector: evaluation point must lie inside the unit disk");
  const std::vector<double> s = boundary_speed_density(f, n);
  const cplx zb = std::conj(zeta);
  cplx acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx e = unit(kTwoPi * static_cast<double>(j) / static_cast<double>(n));
    acc += e * e * s[j] / sq(sq(1.0 - e * zb));
  }
  const double w2 = sq(1.0 - std::norm(zeta));
  return -3.0 / kPi * w2 * acc * kTwoPi / static_cast<double>(n);
}

cplx cotangent_vector(const LaurentMap& f, cplx zeta, std::size_t n) {
  if (std::abs(zeta) >= 1.0)
    throw DomainError("cotangent_vector: evaluation point must lie inside the unit disk");
  const std::vector<double> s = boundary_speed_density(f, n);
  cplx acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx e = unit(-kTwoPi * static_cast<double>(j) / static_cast<double>(n));
    acc += e * e * s[j] / sq(sq(1.0 - e * zeta));
  }
  return 6.0 / kPi * acc * kTwoPi / static_cast<double>(n);
}

}  // namespace qcflow
