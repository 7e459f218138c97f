// Herglotz functions p(zeta) = p0 + p1/zeta + tail, holomorphic with
// positive real part on the exterior disk, built from Beltrami-type fields,
// circle fields, or contour data.  The class form carries the Laurent
// coefficients (the evaluation cache used by the evolution solvers); the
// direct kernel quadratures are exposed as free functions.
#pragma once

#include <vector>

#include "qcflow/beltrami_field.hpp"
#include "qcflow/circle_field.hpp"
#include "qcflow/laurent_map.hpp"
#include "qcflow/math_util.hpp"

namespace qcflow {

class HerglotzFunction {
 public:
  static HerglotzFunction constant(double p0);
  // coef[k] is the coefficient of zeta^{-k}; coef[0] must be real positive.
  static HerglotzFunction from_coefficients(std::vector<cplx> coef);
  // p = p0 + p1/zeta - (1/pi) \iint_U nu(w)/(zeta (w - zeta)) dsigma_w,
  // expanded as p_k = M_{k-2}/pi with moments M_j = \iint nu w^j dsigma.
  static HerglotzFunction from_nu(const BeltramiField& nu, double p0 = 1.0, cplx p1 = 0.0);
  // p = p0 + p1/zeta - (1/2 pi) \int e^{2 i theta} d / (zeta (e^{i theta} - zeta)) dtheta,
  // expanded as p_k = conj(c_k(d)) for k >= 2.
  static HerglotzFunction from_field(const CircleField& d, double p0 = 1.0, cplx p1 = 0.0);
  // Contour form on the image of g:
  // p = p0 + p1/zeta - (1/2 pi i) \oint (z g'/g)^2 d(z) dz / (g(z) - zeta),
  // expanded in powers of 1/zeta (valid outside g(S^1)).
  static HerglotzFunction from_field_ode(const LaurentMap& g, const CircleField& d,
                                         double p0 = 1.0, cplx p1 = 0.0,
                                         std::size_t n_coef = 64);

  double p0() const { return coef_[0].real(); }
  cplx p1() const { return coef_.size() > 1 ? coef_[1] : cplx(0.0); }
  // coefficient of zeta^{-k}.
  cplx coefficient(std::size_t k) const { return k < coef_.size() ? coef_[k] : cplx(0.0); }
  const std::vector<cplx>& coefficients() const { return coef_; }

  // Laurent-series evaluation; valid for |zeta| >= 1 given spectral
  // coefficient decay.
  cplx operator()(cplx zeta) const;

  // min Re p over the standard exterior grid |zeta| in {1.01, 1.1, 2, 10},
  // 64 angles each.
  double min_real_part() const;
  // Throws PositivityError when min_real_part() <= 0.
  void verify_positive() const;

 private:
  explicit HerglotzFunction(std::vector<cplx> coef) : coef_(std::move(coef)) {}
  std::vector<cplx> coef_;
};

// Direct kernel quadratures (pointwise, for cross-checks against the
// coefficient form).
cplx herglotz_from_nu(const BeltramiField& nu, double p0, cplx p1, cplx zeta);
cplx herglotz_from_field(const CircleField& d, double p0, cplx p1, cplx zeta,
                         double margin = 1.05);
cplx herglotz_from_field_ode(const LaurentMap& g, const CircleField& d, double p0, cplx p1,
                             cplx zeta);

}  // namespace qcflow
