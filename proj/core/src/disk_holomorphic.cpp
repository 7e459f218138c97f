#include "qcflow/disk_holomorphic.hpp"

#include <cmath>

#include "qcflow/errors.hpp"
#include "qcflow/fft.hpp"

namespace qcflow {
namespace {

std::vector<cplx> sample_taylor(const std::vector<cplx>& taylor, const DiskQuadrature& g) {
  std::vector<cplx> s(g.size());
  for (std::size_t i = 0; i < g.n_r(); ++i)
    for (std::size_t j = 0; j < g.n_theta(); ++j) {
      cplx z = g.point(i, j);
      cplx acc = 0.0;
      for (std::size_t k = taylor.size(); k-- > 0;) acc = acc * z + taylor[k];
      s[g.index(i, j)] = acc;
    }
  return s;
}

// Taylor coefficients from the grid ring nearest |z| = 0.9: the FFT of the
// ring samples gives c_k r^k for 0 <= k < n_theta/2.  Negative modes measure
// departure from holomorphy and are required to be small.
std::vector<cplx> taylor_from_ring(const std::vector<cplx>& samples, const DiskQuadrature& g) {
  std::size_t ring = 0;
  double best = 2.0;
  for (std::size_t i = 0; i < g.n_r(); ++i) {
    double d = std::abs(g.radius(i) - 0.9);
    if (d < best) {
      best = d;
      ring = i;
    }
  }
  const double r = g.radius(ring);
  const std::size_t nt = g.n_theta();
  std::vector<cplx> vals(nt);
  for (std::size_t j = 0; j < nt; ++j) vals[j] = samples[g.index(ring, j)];
  std::vector<cplx> c = dft(vals);
  double scale_max = 0.0;
  for (const auto& v : vals) scale_max = std::max(scale_max, std::abs(v));
  double neg = 0.0;
  for (std::size_t m = nt / 2 + 1; m < nt; ++m) neg = std::max(neg, std::abs(c[m]));
  if (neg > 1e-8 * static_cast<double>(nt) * std::max(scale_max, 1.0))
    throw DomainError("DiskHolomorphic: samples are not holomorphic (negative Fourier modes present)");
  std::vector<cplx> taylor(nt / 2);
  double rk = 1.0;
  for (std::size_t k = 0; k < nt / 2; ++k) {
    taylor[k] = c[k] / (static_cast<double>(nt) * rk);
    rk *= r;
  }
  // Trim trailing noise so polynomial inputs come back as polynomials.
  double tmax = 0.0;
  for (const auto& v : taylor) tmax = std::max(tmax, std::abs(v));
  std::size_t last = 0;
  for (std::size_t k = 0; k < taylor.size(); ++k)
    if (std::abs(taylor[k]) > 1e-13 * std::max(tmax, 1.0)) last = k;
  taylor.resize(last + 1);
  return taylor;
}

}  // namespace

DiskHolomorphic::DiskHolomorphic(std::vector<cplx> taylor,
                                 std::shared_ptr<const DiskQuadrature> grid)
    : taylor_(std::move(taylor)), grid_(std::move(grid)) {
  if (taylor_.empty()) taylor_.push_back(0.0);
  samples_ = sample_taylor(taylor_, *grid_);
}

DiskHolomorphic DiskHolomorphic::monomial(std::size_t k, cplx coeff,
                                          std::shared_ptr<const DiskQuadrature> grid) {
  std::vector<cplx> t(k + 1, 0.0);
  t[k] = coeff;
  return DiskHolomorphic(std::move(t), std::move(grid));
}

DiskHolomorphic DiskHolomorphic::from_function(const std::function<cplx(cplx)>& f,
                                               std::shared_ptr<const DiskQuadrature> grid) {
  std::vector<cplx> s(grid->size());
  for (std::size_t i = 0; i < grid->n_r(); ++i)
    for (std::size_t j = 0; j < grid->n_theta(); ++j) s[grid->index(i, j)] = f(grid->point(i, j));
  return from_disk_samples(std::move(s), std::move(grid));
}

DiskHolomorphic DiskHolomorphic::from_disk_samples(std::vector<cplx> samples,
                                                   std::shared_ptr<const DiskQuadrature> grid) {
  if (samples.size() != grid->size())
    throw DomainError("DiskHolomorphic: sample count does not match the grid");
  std::vector<cplx> taylor = taylor_from_ring(samples, *grid);
  return DiskHolomorphic(std::move(taylor), std::move(samples), std::move(grid));
}

cplx DiskHolomorphic::eval(cplx z) const {
  cplx acc = 0.0;
  for (std::size_t k = taylor_.size(); k-- > 0;) acc = acc * z + taylor_[k];
  return acc;
}

cplx DiskHolomorphic::deriv(cplx z) const {
  cplx acc = 0.0;
  for (std::size_t k = taylor_.size(); k-- > 1;)
    acc = acc * z + static_cast<double>(k) * taylor_[k];
  return acc;
}

double DiskHolomorphic::b_norm() const {
  double m = 0.0;
  for (std::size_t i = 0; i < grid_->n_r(); ++i) {
    const double w = sq(1.0 - sq(grid_->radius(i)));
    for (std::size_t j = 0; j < grid_->n_theta(); ++j)
      m = std::max(m, w * std::abs(samples_[grid_->index(i, j)]));
  }
  const double r = 0.99, w = sq(1.0 - r * r);
  const std::size_t n = 512;
  for (std::size_t j = 0; j < n; ++j)
    m = std::max(m, w * std::abs(eval(r * unit(kTwoPi * static_cast<double>(j) / n))));
  return m;
}

double DiskHolomorphic::a1_norm() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < grid_->n_r(); ++i) {
    double ring = 0.0;
    for (std::size_t j = 0; j < grid_->n_theta(); ++j) ring += std::abs(samples_[grid_->index(i, j)]);
    acc += grid_->weight(i) * ring;
  }
  return acc;
}

double DiskHolomorphic::a2_norm() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < grid_->n_r(); ++i) {
    const double w = grid_->weight(i) * sq(1.0 - sq(grid_->radius(i)));
    double ring = 0.0;
    for (std::size_t j = 0; j < grid_->n_theta(); ++j)
      ring += std::norm(samples_[grid_->index(i, j)]);
    acc += w * ring;
  }
  return std::sqrt(acc);
}

double DiskHolomorphic::sample_residual() const {
  double m = 0.0;
  for (std::size_t i = 0; i < grid_->n_r(); ++i)
    for (std::size_t j = 0; j < grid_->n_theta(); ++j)
      m = std::max(m, std::abs(samples_[grid_->index(i, j)] - eval(grid_->point(i, j))));
  return m;
}

}  // namespace qcflow
