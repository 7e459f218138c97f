// Small shared numeric helpers.
#pragma once

#include <complex>
#include <numbers>
#include <vector>

namespace qcflow {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline cplx unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

inline double sq(double x) { return x * x; }
inline cplx sq(cplx z) { return z * z; }

// max_j |a_j - b_j|
inline double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

inline bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace qcflow
