// Product quadrature on the open unit disk with respect to area measure:
// Gauss-Legendre radial nodes on (0,1) crossed with a uniform angular grid,
// the polar Jacobian folded into the weights.  Total weight is exactly pi.
#pragma once

#include <memory>
#include <vector>

#include "qcflow/math_util.hpp"

namespace qcflow {

class DiskQuadrature {
 public:
  static std::shared_ptr<const DiskQuadrature> make(std::size_t n_r, std::size_t n_theta);

  std::size_t n_r() const { return r_.size(); }
  std::size_t n_theta() const { return n_theta_; }
  std::size_t size() const { return n_r() * n_theta(); }

  double radius(std::size_t i) const { return r_[i]; }
  double theta(std::size_t j) const { return kTwoPi * static_cast<double>(j) / static_cast<double>(n_theta_); }
  cplx point(std::size_t i, std::size_t j) const { return r_[i] * unit(theta(j)); }
  // Combined weight u_i * r_i * (2 pi / n_theta).
  double weight(std::size_t i) const { return w_[i]; }

  std::size_t index(std::size_t i, std::size_t j) const { return i * n_theta_ + j; }

  // sum_ij w_ij f(point_ij), approximating the area integral over the disk.
  template <class F>
  cplx integrate(F&& f) const {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < n_r(); ++i) {
      cplx ring = 0.0;
      for (std::size_t j = 0; j < n_theta_; ++j) ring += f(point(i, j));
      acc += w_[i] * ring;
    }
    return acc;
  }

  cplx integrate_samples(const std::vector<cplx>& samples) const;

 private:
  DiskQuadrature(std::vector<double> r, std::vector<double> w, std::size_t n_theta)
      : r_(std::move(r)), w_(std::move(w)), n_theta_(n_theta) {}
  std::vector<double> r_;
  std::vector<double> w_;
  std::size_t n_theta_;
};

// Shared default grid (128 x 128).
std::shared_ptr<const DiskQuadrature> default_disk_quadrature();

}  // namespace qcflow
