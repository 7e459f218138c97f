#include "qcflow/disk_quadrature.hpp"

#include "qcflow/errors.hpp"
#include "qcflow/gauss_legendre.hpp"

namespace qcflow {

std::shared_ptr<const DiskQuadrature> DiskQuadrature::make(std::size_t n_r, std::size_t n_theta) {
  if (n_r == 0 || n_theta == 0) throw DomainError("DiskQuadrature: empty rule");
  GaussLegendre gl = GaussLegendre::on(0.0, 1.0, n_r);
  std::vector<double> w(n_r);
  const double ang = kTwoPi / static_cast<double>(n_theta);
  for (std::size_t i = 0; i < n_r; ++i) w[i] = gl.weights[i] * gl.nodes[i] * ang;
  return std::shared_ptr<const DiskQuadrature>(
      new DiskQuadrature(std::move(gl.nodes), std::move(w), n_theta));
}

cplx DiskQuadrature::integrate_samples(const std::vector<cplx>& samples) const {
  if (samples.size() != size())
    throw DomainError("DiskQuadrature: sample count does not match the grid");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < n_r(); ++i) {
    cplx ring = 0.0;
    for (std::size_t j = 0; j < n_theta_; ++j) ring += samples[index(i, j)];
    acc += w_[i] * ring;
  }
  return acc;
}

std::shared_ptr<const DiskQuadrature> default_disk_quadrature() {
  static std::shared_ptr<const DiskQuadrature> grid = DiskQuadrature::make(128, 128);
  return grid;
}

}  // namespace qcflow
