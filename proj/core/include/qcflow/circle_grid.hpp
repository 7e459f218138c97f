// Uniform grid on the unit circle with cached Fourier data.
//
// Conventions: theta_j = 2*pi*j/n with n a power of two.  Coefficients follow
//   c_m = (1/n) sum_j v_j exp(-i m theta_j),  |m| <= n/2,
// the trapezoid approximation of (1/2pi) \int v exp(-i m theta) dtheta, which is
// spectrally accurate for smooth periodic data.
#pragma once

#include <functional>
#include <vector>

#include "qcflow/math_util.hpp"

namespace qcflow {

class CircleGrid {
 public:
  static CircleGrid from_values(std::vector<cplx> values);
  static CircleGrid from_real_values(const std::vector<double>& values);
  static CircleGrid from_function(const std::function<cplx(double)>& f, std::size_t n);
  // coeffs[k] is c_m in the order m = 0, 1, ..., n/2-1, -n/2, ..., -1.
  static CircleGrid from_fourier(std::vector<cplx> coeffs);

  std::size_t size() const { return values_.size(); }
  double theta(std::size_t j) const { return kTwoPi * static_cast<double>(j) / static_cast<double>(size()); }
  cplx point(std::size_t j) const { return unit(theta(j)); }

  const std::vector<cplx>& values() const { return values_; }
  cplx value(std::size_t j) const { return values_[j]; }
  std::vector<double> real_values() const;

  // Fourier coefficient c_m for -n/2 <= m < n/2.
  cplx coeff(int m) const;
  const std::vector<cplx>& fourier() const { return fourier_; }

  // Max deviation of the samples from real values.
  double imag_residual() const;

  // Spectral d/dtheta (Nyquist mode dropped).
  CircleGrid derivative() const;

  // Evaluate the trigonometric interpolant sum_m c_m exp(i m theta).
  cplx interpolate(double theta) const;

 private:
  CircleGrid(std::vector<cplx> values, std::vector<cplx> fourier)
      : values_(std::move(values)), fourier_(std::move(fourier)) {}
  std::vector<cplx> values_;
  std::vector<cplx> fourier_;  // FFT order: index (m + n) % n holds c_m
};

// Boundary integral (1/2pi) \int b(theta) (zeta+e^{i theta})/(zeta-e^{i theta}) dtheta
// for real boundary data b and |zeta| > 1, evaluated through the Fourier series
//   c_0 + 2 sum_{k>=1} conj(c_k) zeta^{-k}.
// Gives the holomorphic completion on the exterior with Re equal to b on the circle.
cplx schwarz_integral(const CircleGrid& boundary, cplx zeta);

}  // namespace qcflow
