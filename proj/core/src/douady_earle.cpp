#include "qcflow/douady_earle.hpp"

#include <cmath>

#include "qcflow/errors.hpp"

namespace qcflow {
namespace {

void validate_homeo(const std::vector<cplx>& v) {
  const std::size_t n = v.size();
  if (n < 8 || !is_power_of_two(n)) throw DomainError("CircleHomeomorphism: node count must be a power of two >= 8");
  for (const auto& z : v)
    if (std::abs(std::abs(z) - 1.0) > 1e-12)
      throw DomainError("CircleHomeomorphism: boundary values must be unimodular");
  // Continuous angle lift must be strictly increasing with increment 2 pi.
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    cplx step = v[(j + 1) % n] / v[j];
    double d = std::atan2(step.imag(), step.real());
    if (d <= 0.0) throw DomainError("CircleHomeomorphism: angle lift is not strictly increasing");
    total += d;
  }
  if (std::abs(total - kTwoPi) > 1e-9)
    throw DomainError("CircleHomeomorphism: lift increment over one turn is not 2 pi");
}

cplx mobius_map(cplx a, double rot, cplx z) { return unit(rot) * (z - a) / (1.0 - std::conj(a) * z); }

}  // namespace

CircleHomeomorphism CircleHomeomorphism::identity(std::size_t n) {
  return from_lift([](double th) { return th; }, n);
}

CircleHomeomorphism CircleHomeomorphism::from_lift(const std::function<double(double)>& lift,
                                                   std::size_t n) {
  std::vector<cplx> v(n);
  for (std::size_t j = 0; j < n; ++j)
    v[j] = unit(lift(kTwoPi * static_cast<double>(j) / static_cast<double>(n)));
  return from_values(std::move(v));
}

CircleHomeomorphism CircleHomeomorphism::mobius(cplx a, double rot, std::size_t n) {
  if (std::abs(a) >= 1.0) throw DomainError("CircleHomeomorphism: Mobius parameter must lie in the disk");
  std::vector<cplx> v(n);
  for (std::size_t j = 0; j < n; ++j)
    v[j] = mobius_map(a, rot, unit(kTwoPi * static_cast<double>(j) / static_cast<double>(n)));
  return from_values(std::move(v));
}

CircleHomeomorphism CircleHomeomorphism::from_values(std::vector<cplx> values) {
  validate_homeo(values);
  return CircleHomeomorphism(std::move(values));
}

cplx evaluate_F(const CircleHomeomorphism& phi, cplx zeta, cplx w) {
  if (std::abs(zeta) >= 1.0 || std::abs(w) >= 1.0)
    throw DomainError("evaluate_F: zeta and w must lie in the open disk");
  const std::size_t n = phi.n();
  const double pref = (1.0 - std::norm(zeta)) / static_cast<double>(n);
  cplx acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx z = unit(phi.theta(j));
    const cplx p = phi.value(j);
    acc += (p - w) / (1.0 - std::conj(w) * p) / std::norm(zeta - z);
  }
  return pref * acc;
}

BarycenterPartials de_partials(const CircleHomeomorphism& phi, cplx zeta, cplx w) {
  if (std::abs(zeta) >= 1.0 || std::abs(w) >= 1.0)
    throw DomainError("de_partials: zeta and w must lie in the open disk");
  const std::size_t n = phi.n();
  const double inv_n = 1.0 / static_cast<double>(n);
  const double one_minus = 1.0 - std::norm(zeta);
  BarycenterPartials out{0.0, 0.0, 0.0, 0.0, 0.0};
  for (std::size_t j = 0; j < n; ++j) {
    const cplx z = unit(phi.theta(j));
    const cplx p = phi.value(j);
    const cplx denom = 1.0 - std::conj(w) * p;
    const cplx B = (p - w) / denom;
    const double P = one_minus / std::norm(zeta - z);
    out.F += B * P;
    // Poisson-kernel partials: dP/dzeta = z/(zeta - z)^2 after simplification.
    const cplx dz = z / sq(zeta - z);
    out.F_zeta += B * dz;
    out.F_zetabar += B * std::conj(dz);
    out.F_w += -P / denom;
    out.F_wbar += P * p * (p - w) / sq(denom);
  }
  out.F *= inv_n;
  out.F_zeta *= inv_n;
  out.F_zetabar *= inv_n;
  out.F_w *= inv_n;
  out.F_wbar *= inv_n;
  return out;
}

BarycenterSolve extend(const CircleHomeomorphism& phi, cplx zeta) {
  if (std::abs(zeta) >= 1.0) throw DomainError("extend: zeta must lie in the open disk");
  const double tol = 1e-12;
  const int max_iter = 50;
  // Poisson average of phi as the seed.
  const std::size_t n = phi.n();
  cplx w = 0.0;
  {
    const double pref = (1.0 - std::norm(zeta)) / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j)
      w += phi.value(j) / std::norm(zeta - unit(phi.theta(j)));
    w *= pref;
  }
  if (std::abs(w) >= 1.0) w *= 0.99 / std::abs(w);

  double res = std::abs(evaluate_F(phi, zeta, w));
  for (int it = 1; it <= max_iter; ++it) {
    if (res <= tol) return {zeta, w, res, it - 1};
    BarycenterPartials p = de_partials(phi, zeta, w);
    // Solve F_w dw + F_wbar conj(dw) = -F as a real 2x2 system in (dx, dy).
    const cplx cs = p.F_w + p.F_wbar;            // coefficient of dx
    const cplx cd = cplx(0.0, 1.0) * (p.F_w - p.F_wbar);  // coefficient of dy
    const double a11 = cs.real(), a12 = cd.real();
    const double a21 = cs.imag(), a22 = cd.imag();
    const double det = a11 * a22 - a12 * a21;
    cplx w_next;
    if (std::abs(det) > 1e-14) {
      const double bx = -p.F.real(), by = -p.F.imag();
      const double dx = (bx * a22 - by * a12) / det;
      const double dy = (a11 * by - a21 * bx) / det;
      w_next = w + cplx(dx, dy);
    } else {
      w_next = w + 0.5 * p.F;
    }
    double res_next = std::abs(w_next) < 1.0 ? std::abs(evaluate_F(phi, zeta, w_next)) : 2.0 * res;
    if (std::abs(w_next) >= 1.0 || res_next > res) {
      // Damped fixed-point fallback; F points from w toward the barycenter.
      double s = 0.5;
      do {
        w_next = w + s * p.F;
        s *= 0.5;
      } while (std::abs(w_next) >= 1.0 && s > 1e-8);
      if (std::abs(w_next) >= 1.0)
        throw SolverError("extend: iterate escaped the disk");
      res_next = std::abs(evaluate_F(phi, zeta, w_next));
    }
    w = w_next;
    res = res_next;
  }
  if (res > tol)
    throw SolverError("extend: barycenter solve did not converge (residual " +
                      std::to_string(res) + ")");
  return {zeta, w, res, max_iter};
}

cplx beltrami_of_extension(const CircleHomeomorphism& phi, cplx zeta) {
  BarycenterSolve s = extend(phi, zeta);
  BarycenterPartials p = de_partials(phi, zeta, s.w);
  const cplx num = std::conj(p.F_zeta) * p.F_wbar - p.F_zetabar * std::conj(p.F_w);
  const cplx den = std::conj(p.F_zetabar) * p.F_wbar - p.F_zeta * std::conj(p.F_w);
  if (std::abs(den) < 1e-12) throw SolverError("beltrami_of_extension: degenerate Jacobian");
  return num / den;
}

cplx nu_from_field(const CircleField& d, cplx zeta) {
  if (std::abs(zeta) >= 1.0) throw DomainError("nu_from_field: zeta must lie in the open disk");
  // Fourier expansion of the kernel: with (1-u)^{-4} = sum_k C(k+3,3) u^k the
  // integral collapses to
  //   3 (1-|zeta|^2)^2 sum_{k>=0} C(k+3,3) conj(c_{k+2}) conj(zeta)^k.
  const int n = static_cast<int>(d.size());
  const cplx zb = std::conj(zeta);
  cplx acc = 0.0;
  cplx zbk = 1.0;
  for (int k = 0; k + 2 <= n / 2 - 1; ++k) {
    const double binom = static_cast<double>((k + 1) * (k + 2) * (k + 3)) / 6.0;
    acc += binom * std::conj(d.coeff(k + 2)) * zbk;
    zbk *= zb;
  }
  return 3.0 * sq(1.0 - std::norm(zeta)) * acc;
}

cplx nu_by_parts(const CircleField& d, cplx zeta) {
  if (std::abs(zeta) >= 1.0) throw DomainError("nu_by_parts: zeta must lie in the open disk");
  if (std::abs(zeta) < 1e-8) throw DomainError("nu_by_parts: zeta = 0 is excluded (use nu_from_field)");
  const std::size_t n = d.size();
  // e^{i theta} d as a grid, differentiated spectrally.
  std::vector<cplx> ed(n);
  for (std::size_t j = 0; j < n; ++j) ed[j] = unit(d.grid().theta(j)) * d.value(j);
  CircleGrid g = CircleGrid::from_values(std::move(ed));
  CircleGrid g1 = g.derivative();
  CircleGrid g2 = g1.derivative();
  const cplx zb = std::conj(zeta);
  cplx acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx e = unit(g.theta(j));
    const cplx integrand = (g2.value(j) - cplx(0.0, 1.0) * g1.value(j)) / (e * sq(1.0 - e * zb));
    acc += integrand;
  }
  acc *= kTwoPi / static_cast<double>(n);
  return -sq(1.0 - std::norm(zeta)) / (4.0 * kPi * sq(zb)) * acc;
}

double nu_ratio_bound(const CircleField& d) {
  const std::size_t n = d.size();
  std::vector<cplx> ed(n);
  for (std::size_t j = 0; j < n; ++j) ed[j] = unit(d.grid().theta(j)) * d.value(j);
  CircleGrid g = CircleGrid::from_values(std::move(ed));
  CircleGrid g1 = g.derivative();
  CircleGrid g2 = g1.derivative();
  double m = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    m = std::max(m, std::abs(g2.value(j) - cplx(0.0, 1.0) * g1.value(j)));
  return m;
}

cplx variational_nu(const CircleField& d, cplx zeta, double tau) {
  auto shifted = [&d](double t) {
    return CircleHomeomorphism::from_lift(
        [&d, t](double th) { return th + t * d.at(th); }, d.size());
  };
  const cplx plus = beltrami_of_extension(shifted(tau), zeta);
  const cplx minus = beltrami_of_extension(shifted(-tau), zeta);
  // The lift flow theta + tau d moves boundary points with complex velocity
  // i e^{i theta} d, so the centered difference measures the response to the
  // boundary direction i (zeta d).  Dividing by i converts to the zeta-d
  // normalization used by nu_from_field and the rest of the tangent-space
  // code.
  return (plus - minus) / (2.0 * tau * cplx(0.0, 1.0));
}

}  // namespace qcflow
