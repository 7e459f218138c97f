#include "qcflow/herglotz.hpp"

#include <cmath>
#include <string>

#include "qcflow/errors.hpp"

namespace qcflow {

HerglotzFunction HerglotzFunction::constant(double p0) {
  return from_coefficients({cplx(p0, 0.0)});
}

HerglotzFunction HerglotzFunction::from_coefficients(std::vector<cplx> coef) {
  if (coef.empty()) throw DomainError("HerglotzFunction: empty coefficient list");
  if (std::abs(coef[0].imag()) > 1e-12 || coef[0].real() <= 0.0)
    throw DomainError("HerglotzFunction: leading coefficient p0 must be real positive");
  coef[0] = cplx(coef[0].real(), 0.0);
  return HerglotzFunction(std::move(coef));
}

HerglotzFunction HerglotzFunction::from_nu(const BeltramiField& nu, double p0, cplx p1) {
  const DiskQuadrature& g = nu.grid();
  const std::size_t jmax = g.n_theta() / 2 - 1;
  std::vector<cplx> coef(jmax + 3, 0.0);
  coef[0] = p0;
  coef[1] = p1;
  std::vector<cplx> pw(g.size(), 1.0);  // running powers w^j
  for (std::size_t j = 0; j <= jmax; ++j) {
    cplx moment = 0.0;
    for (std::size_t i = 0; i < g.n_r(); ++i) {
      cplx ring = 0.0;
      for (std::size_t jj = 0; jj < g.n_theta(); ++jj) {
        const std::size_t idx = g.index(i, jj);
        ring += nu.sample(i, jj) * pw[idx];
        pw[idx] *= g.point(i, jj);
      }
      moment += g.weight(i) * ring;
    }
    coef[j + 2] += moment / kPi;
  }
  return from_coefficients(std::move(coef));
}

HerglotzFunction HerglotzFunction::from_field(const CircleField& d, double p0, cplx p1) {
  const int n = static_cast<int>(d.size());
  std::vector<cplx> coef(n / 2, 0.0);
  coef[0] = p0;
  coef[1] = p1;
  for (int k = 2; k < n / 2; ++k) coef[k] += std::conj(d.coeff(k));
  return from_coefficients(std::move(coef));
}

HerglotzFunction HerglotzFunction::from_field_ode(const LaurentMap& g, const CircleField& d,
                                                 double p0, cplx p1, std::size_t n_coef) {
  const std::size_t n = d.size();
  CircleGrid gb = g.boundary(n);
  CircleGrid gpb = g.boundary_deriv(n);
  // A(theta) = (z g'/g)^2 z d(theta); the coefficient of zeta^{-(j+1)} is the
  // mean of A g^j over the circle.
  std::vector<cplx> A(n), gj(n, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    const cplx z = gb.point(j);
    const cplx ratio = z * gpb.value(j) / gb.value(j);
    A[j] = ratio * ratio * z * d.value(j);
  }
  std::vector<cplx> coef(n_coef + 2, 0.0);
  coef[0] = p0;
  coef[1] = p1;
  for (std::size_t jpow = 0; jpow + 1 < coef.size(); ++jpow) {
    cplx mean = 0.0;
    for (std::size_t j = 0; j < n; ++j) mean += A[j] * gj[j];
    coef[jpow + 1] += mean / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) gj[j] *= gb.value(j);
  }
  return from_coefficients(std::move(coef));
}

cplx HerglotzFunction::operator()(cplx zeta) const {
  // A collar inside the circle is allowed: the finite Laurent sum stays
  // stable there, and the stages of a crossing step in the radial flow may
  // overshoot well past the boundary before the exit time is refined.
  if (std::abs(zeta) < 0.8)
    throw DomainError("HerglotzFunction: evaluation requires |zeta| >= 1");
  const cplx invz = 1.0 / zeta;
  cplx acc = 0.0;
  for (std::size_t k = coef_.size(); k-- > 0;) acc = acc * invz + coef_[k];
  return acc;
}

double HerglotzFunction::min_real_part() const {
  static const double radii[] = {1.01, 1.1, 2.0, 10.0};
  double m = 1e300;
  for (double r : radii)
    for (int j = 0; j < 64; ++j)
      m = std::min(m, (*this)(r * unit(kTwoPi * j / 64.0)).real());
  return m;
}

void HerglotzFunction::verify_positive() const {
  const double m = min_real_part();
  if (m <= 0.0)
    throw PositivityError("Herglotz positivity violated: min Re p = " + std::to_string(m) +
                          " on the standard exterior grid");
}

cplx herglotz_from_nu(const BeltramiField& nu, double p0, cplx p1, cplx zeta) {
  if (std::abs(zeta) <= 1.0)
    throw DomainError("herglotz_from_nu: zeta must lie outside the closed disk");
  return p0 + p1 / zeta + cauchy_transform_disk(nu, zeta) / zeta;
}

cplx herglotz_from_field(const CircleField& d, double p0, cplx p1, cplx zeta, double margin) {
  if (std::abs(zeta) < margin)
    throw DomainError("herglotz_from_field: zeta within the contour margin");
  const std::size_t n = d.size();
  cplx acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx e = unit(d.grid().theta(j));
    acc += e * e * d.value(j) / (e - zeta);
  }
  acc /= static_cast<double>(n) * zeta;
  return p0 + p1 / zeta - acc;
}

cplx herglotz_from_field_ode(const LaurentMap& g, const CircleField& d, double p0, cplx p1,
                             cplx zeta) {
  const std::size_t n = d.size();
  if (g.winding_number(zeta, n) != 0)
    throw DomainError("herglotz_from_field_ode: zeta lies inside g(S^1)");
  CircleGrid gb = g.boundary(n);
  CircleGrid gpb = g.boundary_deriv(n);
  double dist = 1e300;
  for (std::size_t j = 0; j < n; ++j) dist = std::min(dist, std::abs(gb.value(j) - zeta));
  if (dist < 0.05) throw DomainError("herglotz_from_field_ode: zeta too close to g(S^1)");
  cplx acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx z = gb.point(j);
    const cplx ratio = z * gpb.value(j) / gb.value(j);
    // dz = i z dtheta folded into the (1/2 pi i) prefactor.
    acc += ratio * ratio * d.value(j) * z / (gb.value(j) - zeta);
  }
  return p0 + p1 / zeta - acc / static_cast<double>(n);
}

}  // namespace qcflow
