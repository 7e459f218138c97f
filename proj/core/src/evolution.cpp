#include "qcflow/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qcflow/errors.hpp"

namespace qcflow {

LaurentVelocity advect_velocity(const LaurentMap& f, const std::vector<cplx>& q) {
  const std::size_t N = f.tail_size();
  const std::size_t K = q.size();  // available coefficients q_0..q_{K-1}
  const double alpha = f.alpha();
  LaurentVelocity v;
  v.a_dot.assign(N, cplx(0.0));

  auto qc = [&](std::size_t m) -> cplx { return m < K ? q[m] : cplx(0.0); };

  // -zeta f' p  with  zeta f' = alpha zeta + sum_k (-k) a_k zeta^{-k}:
  //   coefficient of zeta^{+1}:  -alpha q_0
  //   coefficient of zeta^{0}:   -alpha q_1
  //   coefficient of zeta^{-k}:  -alpha q_{k+1} + sum_{j=1}^{min(k,N)} j a_j q_{k-j}
  const cplx q0 = qc(0);
  if (std::abs(q0.imag()) > 1e-9 * std::max(1.0, std::abs(q0)))
    throw DomainError("advect_velocity: leading driving coefficient must be real");
  v.alpha_dot = -alpha * q0.real();
  v.a0_dot = -alpha * qc(1);
  for (std::size_t k = 1; k <= N; ++k) {
    cplx acc = -alpha * qc(k + 1);
    for (std::size_t j = 1; j <= std::min(k, N); ++j)
      acc += static_cast<double>(j) * f.a(j) * qc(k - j);
    v.a_dot[k - 1] = acc;
  }
  return v;
}

std::vector<cplx> pack_coefficients(const LaurentMap& f) {
  std::vector<cplx> y(f.tail_size() + 2);
  y[0] = f.alpha();
  y[1] = f.a0();
  for (std::size_t k = 1; k <= f.tail_size(); ++k) y[k + 1] = f.a(k);
  return y;
}

LaurentMap unpack_coefficients(const std::vector<cplx>& y) {
  const double alpha = y[0].real();
  if (!(alpha > 0.0))
    throw CuspError("evolution: leading coefficient collapsed", 0.0, alpha);
  return LaurentMap(alpha, y[1], std::vector<cplx>(y.begin() + 2, y.end()));
}

std::vector<cplx> pack_velocity(const LaurentVelocity& v) {
  std::vector<cplx> dy(v.a_dot.size() + 2);
  dy[0] = v.alpha_dot;
  dy[1] = v.a0_dot;
  std::copy(v.a_dot.begin(), v.a_dot.end(), dy.begin() + 2);
  return dy;
}

std::array<cplx, 3> exterior_richardson_moments(const LaurentMap& f, std::size_t n) {
  if (f.winding_number(0.0, n) != 1)
    throw DomainError("exterior_richardson_moments: boundary must enclose the origin");
  const CircleGrid fb = f.boundary(n);
  const CircleGrid fd = f.boundary_deriv(n);
  std::array<cplx, 3> m{};
  for (std::size_t j = 0; j < n; ++j) {
    const cplx e = unit(kTwoPi * static_cast<double>(j) / static_cast<double>(n));
    const cplx base = std::conj(fb.value(j)) * fd.value(j) * e;
    const cplx invf = 1.0 / fb.value(j);
    cplx pw = invf;
    for (int k = 0; k < 3; ++k) {
      m[k] += base * pw;
      pw *= invf;
    }
  }
  const double scale = -0.5 * kTwoPi / static_cast<double>(n);
  for (auto& v : m) v *= scale;
  return m;
}

EvolutionDiagnostics compute_diagnostics(const LaurentMap& f, std::size_t n) {
  EvolutionDiagnostics d;
  d.area = f.enclosed_area();
  if (f.winding_number(0.0, n) == 1) {
    d.moments = exterior_richardson_moments(f, n);
  } else {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    d.moments.fill(cplx(nan, nan));
  }
  const auto dm = f.min_boundary_deriv(n);
  d.min_df = dm.value;
  d.min_df_theta = dm.theta;
  const std::size_t N = f.tail_size();
  double tail = 0.0;
  for (std::size_t k = N / 2 + 1; k <= N; ++k)
    tail += static_cast<double>(k) * std::norm(f.a(k));
  d.tail_energy = tail;
  return d;
}

std::optional<double> estimate_blowup_time(const std::vector<EvolutionState>& states) {
  // min|f'|^2 is asymptotically linear in t near a 3/2-power cusp, so fit
  // y = min_df^2 against t over the most recent window and extrapolate to 0.
  const std::size_t m = std::min<std::size_t>(states.size(), 8);
  if (m < 3) return std::nullopt;
  double st = 0, sy = 0, stt = 0, sty = 0;
  for (std::size_t i = states.size() - m; i < states.size(); ++i) {
    const double t = states[i].t, y = sq(states[i].diag.min_df);
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
  }
  const double denom = m * stt - st * st;
  if (std::abs(denom) < 1e-300) return std::nullopt;
  const double slope = (m * sty - st * sy) / denom;
  if (slope >= -1e-12) return std::nullopt;
  const double t_last = states.back().t;
  const double y_last = sq(states.back().diag.min_df);
  return t_last - y_last / slope;
}

}  // namespace qcflow
