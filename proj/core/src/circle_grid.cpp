#include "qcflow/circle_grid.hpp"

#include <algorithm>
#include <cmath>

#include "qcflow/errors.hpp"
#include "qcflow/fft.hpp"

namespace qcflow {

CircleGrid CircleGrid::from_values(std::vector<cplx> values) {
  if (!is_power_of_two(values.size()))
    throw DomainError("CircleGrid: size must be a power of two");
  std::vector<cplx> four = dft(values);
  const double scale = 1.0 / static_cast<double>(values.size());
  for (auto& c : four) c *= scale;
  return CircleGrid(std::move(values), std::move(four));
}

CircleGrid CircleGrid::from_real_values(const std::vector<double>& values) {
  std::vector<cplx> v(values.begin(), values.end());
  return from_values(std::move(v));
}

CircleGrid CircleGrid::from_function(const std::function<cplx(double)>& f, std::size_t n) {
  if (!is_power_of_two(n)) throw DomainError("CircleGrid: size must be a power of two");
  std::vector<cplx> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = f(kTwoPi * static_cast<double>(j) / static_cast<double>(n));
  return from_values(std::move(v));
}

CircleGrid CircleGrid::from_fourier(std::vector<cplx> coeffs) {
  if (!is_power_of_two(coeffs.size()))
    throw DomainError("CircleGrid: size must be a power of two");
  std::vector<cplx> scaled(coeffs);
  // values = n * idft(coeffs) since idft carries a 1/n factor.
  std::vector<cplx> values = idft(scaled);
  const double n = static_cast<double>(coeffs.size());
  for (auto& v : values) v *= n;
  return CircleGrid(std::move(values), std::move(coeffs));
}

std::vector<double> CircleGrid::real_values() const {
  std::vector<double> out(size());
  for (std::size_t j = 0; j < size(); ++j) out[j] = values_[j].real();
  return out;
}

cplx CircleGrid::coeff(int m) const {
  const int n = static_cast<int>(size());
  if (m < -n / 2 || m >= n / 2) return 0.0;
  return fourier_[static_cast<std::size_t>((m % n + n) % n)];
}

double CircleGrid::imag_residual() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v.imag()));
  return m;
}

CircleGrid CircleGrid::derivative() const {
  const int n = static_cast<int>(size());
  std::vector<cplx> d(fourier_.size());
  for (int m = -n / 2 + 1; m < n / 2; ++m) {
    std::size_t idx = static_cast<std::size_t>((m % n + n) % n);
    d[idx] = cplx(0.0, m) * fourier_[idx];
  }
  d[static_cast<std::size_t>(n / 2)] = 0.0;  // Nyquist mode dropped
  return from_fourier(std::move(d));
}

cplx CircleGrid::interpolate(double theta) const {
  const int n = static_cast<int>(size());
  cplx acc = 0.0;
  for (int m = -n / 2 + 1; m < n / 2; ++m) acc += coeff(m) * unit(m * theta);
  return acc;
}

cplx schwarz_integral(const CircleGrid& boundary, cplx zeta) {
  if (std::abs(zeta) <= 1.0)
    throw DomainError("schwarz_integral: zeta must lie outside the closed unit disk");
  if (boundary.imag_residual() > 1e-10)
    throw DomainError("schwarz_integral: boundary data must be real");
  const int n = static_cast<int>(boundary.size());
  const cplx inv = 1.0 / zeta;
  cplx acc = boundary.coeff(0);
  cplx pw = 1.0;
  for (int k = 1; k <= n / 2; ++k) {
    pw *= inv;
    acc += 2.0 * std::conj(boundary.coeff(k)) * pw;
  }
  return acc;
}

}  // namespace qcflow
