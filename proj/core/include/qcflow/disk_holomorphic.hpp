// Holomorphic functions on the unit disk carried in two synchronized forms:
// Taylor coefficients (for algebra and pointwise evaluation) and samples on a
// DiskQuadrature grid (for integral operators).  Conversions are explicit.
#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "qcflow/disk_quadrature.hpp"
#include "qcflow/math_util.hpp"

namespace qcflow {

class DiskHolomorphic {
 public:
  // taylor[k] is the coefficient of z^k.
  explicit DiskHolomorphic(std::vector<cplx> taylor,
                           std::shared_ptr<const DiskQuadrature> grid = default_disk_quadrature());

  static DiskHolomorphic monomial(std::size_t k, cplx coeff = 1.0,
                                  std::shared_ptr<const DiskQuadrature> grid = default_disk_quadrature());

  // Samples f on the grid and recovers Taylor coefficients from the ring of
  // grid nodes nearest |z| = 0.9 (Cauchy coefficient formula by FFT).
  static DiskHolomorphic from_function(const std::function<cplx(cplx)>& f,
                                       std::shared_ptr<const DiskQuadrature> grid = default_disk_quadrature());

  // Wraps existing grid samples of a holomorphic function; Taylor extracted as
  // in from_function.
  static DiskHolomorphic from_disk_samples(std::vector<cplx> samples,
                                           std::shared_ptr<const DiskQuadrature> grid = default_disk_quadrature());

  const std::vector<cplx>& taylor() const { return taylor_; }
  cplx coeff(std::size_t k) const { return k < taylor_.size() ? taylor_[k] : cplx(0.0); }
  std::size_t degree() const { return taylor_.empty() ? 0 : taylor_.size() - 1; }

  cplx eval(cplx z) const;
  cplx deriv(cplx z) const;

  const DiskQuadrature& grid() const { return *grid_; }
  std::shared_ptr<const DiskQuadrature> grid_ptr() const { return grid_; }
  const std::vector<cplx>& samples() const { return samples_; }
  cplx sample(std::size_t i, std::size_t j) const { return samples_[grid_->index(i, j)]; }

  // sup over the grid plus a refined ring at |z| = 0.99 of (1-|z|^2)^2 |f(z)|.
  double b_norm() const;
  // Plain L^1 norm over the disk.
  double a1_norm() const;
  // Weighted L^2 norm: sqrt of the integral of |f|^2 (1-|z|^2)^2.
  double a2_norm() const;

  // Max over the grid of |sample - Taylor evaluation| (consistency check).
  double sample_residual() const;

 private:
  DiskHolomorphic(std::vector<cplx> taylor, std::vector<cplx> samples,
                  std::shared_ptr<const DiskQuadrature> grid)
      : taylor_(std::move(taylor)), samples_(std::move(samples)), grid_(std::move(grid)) {}

  std::vector<cplx> taylor_;
  std::vector<cplx> samples_;
  std::shared_ptr<const DiskQuadrature> grid_;
};

}  // namespace qcflow
