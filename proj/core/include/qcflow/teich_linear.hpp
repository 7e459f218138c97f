// Linear operators tying holomorphic quadratic-differential data on the disk
// to Beltrami-type tangent directions: Bergman reproduction, the harmonic
// projection pair (lambda_star, lambda_dot), couplings and Hermitian products,
// variations of exterior maps, and the Schwarzian sup-norm with its
// univalence bound.
#pragma once

#include "qcflow/beltrami_field.hpp"
#include "qcflow/disk_holomorphic.hpp"
#include "qcflow/laurent_map.hpp"
#include "qcflow/math_util.hpp"

namespace qcflow {

// (3/pi) \iint_U phi(w) (1-|w|^2)^2 / (1-conj(w) zeta)^4 dsigma_w for
// |zeta| < 1; reproduces phi(zeta).
cplx bergman_reproduce(const DiskHolomorphic& phi, cplx zeta);

// Pointwise -(1/2) conj(phi(z)) (1-|z|^2)^2: the harmonic Beltrami
// differential attached to phi.  Antilinear in phi.
BeltramiField lambda_star(const DiskHolomorphic& phi);

// The inverse direction: for |zeta| < 1,
//   -(6/pi) \iint_U conj(nu(w)) / (1 - conj(w) zeta)^4 dsigma_w,
// which equals phi(zeta) when nu = lambda_star(phi).  The kernel is smooth on
// the grid (the pole sits at 1/conj(w), outside the disk), so no recentring
// is needed.
cplx lambda_dot(const BeltramiField& nu, cplx zeta);

// \iint_U mu phi dsigma (no conjugation).
cplx coupling(const BeltramiField& mu, const DiskHolomorphic& phi);

// \iint_U phi1 conj(phi2) (1-|z|^2)^2 dsigma.
cplx petersson_product(const DiskHolomorphic& phi1, const DiskHolomorphic& phi2);

// {nu1, nu2} = \iint_U nu1(z) lambda_dot(nu2)(z) dsigma, the Hermitian
// pairing underlying the Weil-Petersson metric at the base point.
cplx wp_pairing(const BeltramiField& nu1, const BeltramiField& nu2);

// V(zeta) = -(1/pi) \iint_U nu(w)/(w - zeta) dsigma_w for |zeta| > 1.
cplx first_variation(const BeltramiField& nu, cplx zeta);

// V'''(zeta) = -(6/pi) \iint_U nu(w)/(w - zeta)^4 dsigma_w for |zeta| > 1.
cplx third_variation(const BeltramiField& nu, cplx zeta);

// sup over z in U of (1-|z|^2)^2 |S_f(1/z)| for an exterior map f, taken on
// the quadrature grid plus a refined ring at |z| = 0.99.  Bounded by 6 for
// univalent f.
double b_norm(const LaurentMap& f);

}  // namespace qcflow
