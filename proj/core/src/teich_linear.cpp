#include "qcflow/teich_linear.hpp"

#include <cmath>

#include "qcflow/errors.hpp"

namespace qcflow {

cplx bergman_reproduce(const DiskHolomorphic& phi, cplx zeta) {
  if (std::abs(zeta) >= 1.0) throw DomainError("bergman_reproduce: zeta must lie in the open disk");
  const DiskQuadrature& g = phi.grid();
  cplx acc = 0.0;
  for (std::size_t i = 0; i < g.n_r(); ++i) {
    const double w2 = sq(1.0 - sq(g.radius(i)));
    cplx ring = 0.0;
    for (std::size_t j = 0; j < g.n_theta(); ++j) {
      const cplx w = g.point(i, j);
      const cplx k = 1.0 - std::conj(w) * zeta;
      ring += phi.sample(i, j) / (sq(k) * sq(k));
    }
    acc += g.weight(i) * w2 * ring;
  }
  return 3.0 * acc / kPi;
}

BeltramiField lambda_star(const DiskHolomorphic& phi) {
  auto ph = phi;
  return BeltramiField::from_function(
      [ph](cplx z) { return -0.5 * std::conj(ph.eval(z)) * sq(1.0 - std::norm(z)); },
      phi.grid_ptr());
}

namespace {

// Disk moments m_k = \iint nu(w) w^k dA(w) for k = 0..K.  The angular sums
// stay alias-free while k is below half the angular grid size.
std::vector<cplx> disk_moments(const BeltramiField& nu, std::size_t K) {
  const DiskQuadrature& g = nu.grid();
  std::vector<cplx> m(K + 1, cplx(0.0));
  for (std::size_t i = 0; i < g.n_r(); ++i) {
    const double wt = g.weight(i);
    for (std::size_t j = 0; j < g.n_theta(); ++j) {
      const cplx w = g.point(i, j);
      cplx pw = wt * nu.sample(i, j);
      for (std::size_t k = 0; k <= K; ++k) {
        m[k] += pw;
        pw *= w;
      }
    }
  }
  return m;
}

// Taylor coefficients of the holomorphic projection: expanding the kernel
// (1 - conj(w) zeta)^{-4} in zeta turns the projection integral into disk
// moments of nu.  Evaluating the resulting polynomial is uniformly accurate
// on the disk, whereas direct quadrature of the kernel loses the sharpening
// peak once zeta approaches the boundary.
std::vector<cplx> lambda_dot_taylor(const BeltramiField& nu) {
  const std::size_t K = nu.grid().n_theta() / 2;
  const auto m = disk_moments(nu, K);
  std::vector<cplx> c(K + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    const double kk = static_cast<double>(k);
    c[k] = -(kk + 1.0) * (kk + 2.0) * (kk + 3.0) / kPi * std::conj(m[k]);
  }
  return c;
}

}  // namespace

cplx lambda_dot(const BeltramiField& nu, cplx zeta) {
  if (std::abs(zeta) >= 1.0) throw DomainError("lambda_dot: zeta must lie in the open disk");
  const auto c = lambda_dot_taylor(nu);
  cplx acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * zeta + c[k];
  return acc;
}

cplx coupling(const BeltramiField& mu, const DiskHolomorphic& phi) {
  if (mu.grid_ptr() != phi.grid_ptr())
    throw DomainError("coupling: fields live on different grids");
  const DiskQuadrature& g = mu.grid();
  cplx acc = 0.0;
  for (std::size_t i = 0; i < g.n_r(); ++i) {
    cplx ring = 0.0;
    for (std::size_t j = 0; j < g.n_theta(); ++j) ring += mu.sample(i, j) * phi.sample(i, j);
    acc += g.weight(i) * ring;
  }
  return acc;
}

cplx petersson_product(const DiskHolomorphic& phi1, const DiskHolomorphic& phi2) {
  const DiskQuadrature& g = phi1.grid();
  cplx acc = 0.0;
  for (std::size_t i = 0; i < g.n_r(); ++i) {
    const double w2 = sq(1.0 - sq(g.radius(i)));
    cplx ring = 0.0;
    for (std::size_t j = 0; j < g.n_theta(); ++j)
      ring += phi1.sample(i, j) * std::conj(phi2.sample(i, j));
    acc += g.weight(i) * w2 * ring;
  }
  return acc;
}

cplx wp_pairing(const BeltramiField& nu1, const BeltramiField& nu2) {
  const DiskQuadrature& g = nu1.grid();
  // Integrate nu1(z) * lambda_dot(nu2)(z); the projection's Taylor
  // coefficients are computed once and the polynomial re-evaluated per node.
  const auto c = lambda_dot_taylor(nu2);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < g.n_r(); ++i) {
    cplx ring = 0.0;
    for (std::size_t j = 0; j < g.n_theta(); ++j) {
      const cplx z = g.point(i, j);
      cplx lam = 0.0;
      for (std::size_t k = c.size(); k-- > 0;) lam = lam * z + c[k];
      ring += nu1.sample(i, j) * lam;
    }
    acc += g.weight(i) * ring;
  }
  return acc;
}

cplx first_variation(const BeltramiField& nu, cplx zeta) {
  if (std::abs(zeta) <= 1.0)
    throw DomainError("first_variation: zeta must lie outside the closed disk");
  return cauchy_transform_disk(nu, zeta);
}

cplx third_variation(const BeltramiField& nu, cplx zeta) {
  if (std::abs(zeta) <= 1.0)
    throw DomainError("third_variation: zeta must lie outside the closed disk");
  const DiskQuadrature& g = nu.grid();
  cplx acc = 0.0;
  for (std::size_t i = 0; i < g.n_r(); ++i) {
    cplx ring = 0.0;
    for (std::size_t j = 0; j < g.n_theta(); ++j) {
      const cplx k = g.point(i, j) - zeta;
      ring += nu.sample(i, j) / (sq(k) * sq(k));
    }
    acc += g.weight(i) * ring;
  }
  return -6.0 * acc / kPi;
}

double b_norm(const LaurentMap& f) {
  const DiskQuadrature& g = *default_disk_quadrature();
  auto weighted = [&f](cplx z) {
    return sq(1.0 - std::norm(z)) * std::abs(f.schwarzian(1.0 / z));
  };
  double m = 0.0;
  for (std::size_t i = 0; i < g.n_r(); ++i)
    for (std::size_t j = 0; j < g.n_theta(); ++j) m = std::max(m, weighted(g.point(i, j)));
  const double r = 0.99;
  const std::size_t n = 512;
  for (std::size_t j = 0; j < n; ++j)
    m = std::max(m, weighted(r * unit(kTwoPi * static_cast<double>(j) / n)));
  return m;
}

}  // namespace qcflow
