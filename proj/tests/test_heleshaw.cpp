// Interface evolution driven by the boundary speed density 1/|f'|^2: the
// residual identity, coefficient velocities, contracting-circle closed forms,
// conserved exterior moments, the exported driving data, and the induced
// tangent/cotangent kernels.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qcflow/douady_earle.hpp"
#include "qcflow/errors.hpp"
#include "qcflow/evolution.hpp"
#include "qcflow/heleshaw.hpp"
#include "qcflow/herglotz.hpp"
#include "oracles.hpp"

using namespace qcflow;

namespace {

LaurentMap padded(double alpha, cplx a0, std::vector<cplx> tail, std::size_t N = 64) {
  tail.resize(N, cplx(0.0));
  return LaurentMap(alpha, a0, std::move(tail));
}

double max_residual(const CircleGrid& g) {
  double m = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) m = std::max(m, std::abs(g.value(j)));
  return m;
}

}  // namespace

TEST_CASE("boundary residual identity on circles") {
  // For f = alpha zeta the identity Re(f_dot conj(zeta f')) = -1 pins
  // alpha alpha_dot = -1.
  LaurentMap f(2.0, 0.0, {});
  LaurentVelocity ok;
  ok.alpha_dot = -0.5;
  CHECK(max_residual(pg_residual(f, ok)) <= 1e-13);

  LaurentVelocity still;  // zero velocity leaves the full mismatch of 1
  auto r = pg_residual(f, still);
  for (std::size_t j = 0; j < r.size(); ++j) CHECK(std::abs(r.value(j) - 1.0) <= 1e-13);
}

TEST_CASE("coefficient velocity solves the boundary identity") {
  auto f = padded(1.0, cplx(0.1, -0.05), {cplx(0.1, 0.0), cplx(0.0, 0.05)}, 32);
  auto v = pgl_rhs(f, 256);
  // With a zero-padded band the truncated velocity satisfies the identity to
  // spectral accuracy.
  CHECK(max_residual(pg_residual(f, v, 256)) <= 1e-10);
}

TEST_CASE("coefficient velocity closed forms") {
  auto v = pgl_rhs(LaurentMap(2.0, 0.0, {}), 256);
  CHECK(v.alpha_dot == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(std::abs(v.a0_dot) <= 1e-13);

  // Expanding sign flips the velocity.
  auto w = pgl_rhs(LaurentMap(2.0, 0.0, {}), 256, 1e-3, +1);
  CHECK(w.alpha_dot == doctest::Approx(0.5).epsilon(1e-12));

  // First-order perturbation f = zeta + eps / zeta:
  // alpha_dot = -1, a0_dot = O(eps^2), a1_dot = -eps + O(eps^2).
  const double eps = 1e-4;
  auto u = pgl_rhs(padded(1.0, 0.0, {cplx(eps, 0.0)}, 16), 256);
  CHECK(std::abs(u.alpha_dot + 1.0) <= 1e-7);
  CHECK(std::abs(u.a0_dot) <= 1e-7);
  CHECK(std::abs(u.a_dot[0] + eps) <= 1e-7);

  // Near-cusp interfaces are rejected before the velocity is formed.
  CHECK_THROWS_AS(pgl_rhs(LaurentMap(1.0, 0.0, {cplx(0.9995, 0.0)}), 256), CuspError);
}

TEST_CASE("contracting circle follows the square-root law") {
  const double a0 = 2.0;
  const double t_end = 0.95 * (a0 * a0 / 2.0);  // 95% of the blow-up time
  auto run = hs_evolve(LaurentMap(a0, 0.0, {}), t_end);
  REQUIRE(run.status == EvolutionStatus::reached_t_end);

  for (const auto& s : run.states) {
    CHECK(std::abs(s.f.alpha() - std::sqrt(a0 * a0 - 2.0 * s.t)) <= 1e-8);
    CHECK(std::abs(s.f.a0()) <= 1e-10);
    // Enclosed area depletes at exactly 2 pi.
    CHECK(std::abs(s.diag.area - kPi * (a0 * a0 - 2.0 * s.t)) <= 1e-7);
  }
  const auto& first = run.states.front();
  const auto& last = run.states.back();
  CHECK(std::abs((last.diag.area - first.diag.area) / (last.t - first.t) + 2.0 * kPi) <= 1e-6);
}

TEST_CASE("expanding circle grows the same way") {
  HsControls c;
  c.sign = +1;
  auto run = hs_evolve(LaurentMap(1.0, 0.0, {}), 1.5, c);
  REQUIRE(run.status == EvolutionStatus::reached_t_end);
  CHECK(std::abs(run.states.back().f.alpha() - std::sqrt(1.0 + 2.0 * 1.5)) <= 1e-8);
}

TEST_CASE("exterior moments are conserved on a perturbed interface") {
  auto run = hs_evolve(padded(2.0, 0.0, {cplx(0.1, 0.0)}), 1.0);
  REQUIRE(run.status == EvolutionStatus::reached_t_end);
  REQUIRE(run.states.back().t == doctest::Approx(1.0));

  const auto m0 = run.states.front().diag.moments;
  for (const auto& s : run.states)
    for (int k = 0; k < 3; ++k) CHECK(std::abs(s.diag.moments[k] - m0[k]) <= 1e-5);

  // The shape actually deforms: the tail coefficient moves.
  CHECK(std::abs(run.states.back().f.a(1) - 0.1) > 1e-4);
}

TEST_CASE("interface blow-up extrapolation from the derivative trend") {
  // Synthetic trend min|f'|^2 = 0.8 (1 - t): the fit recovers t* = 1.
  std::vector<EvolutionState> states;
  for (double t = 0.0; t <= 0.51; t += 0.1) {
    EvolutionState s{t, LaurentMap::identity(), {}};
    s.diag.min_df = std::sqrt(0.8 * (1.0 - t));
    states.push_back(std::move(s));
  }
  auto est = estimate_blowup_time(states);
  REQUIRE(est.has_value());
  CHECK(*est == doctest::Approx(1.0).epsilon(1e-10));

  // A flat trend gives no estimate.
  for (auto& s : states) s.diag.min_df = 0.5;
  CHECK_FALSE(estimate_blowup_time(states).has_value());
}

TEST_CASE("exported driving data on a circle") {
  auto ex = export_field(LaurentMap(2.0, 0.0, {}));
  CHECK(ex.p0 == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(std::abs(ex.p1) <= 1e-13);
  CHECK(std::abs(ex.d.at(0.3) + 0.5) <= 1e-12);  // d = -2 / alpha^2

  // The exported pieces assemble the boundary function  p = d + i * (its
  // conjugate completion); check against the holomorphic completion of d.
  LaurentMap f(1.0, 0.0, {cplx(0.2, 0.0)});
  auto exf = export_field(f);
  CHECK(exf.p0 > 0.0);
  // d is strictly negative for the contracting convention.
  for (double th : {0.0, 1.0, 2.5}) CHECK(exf.d.at(th) < 0.0);
  // Leading Fourier data of d match the exported Laurent coefficients.
  CHECK(std::abs(cplx(exf.p0) + 0.5 * exf.d.coeff(0)) <= 1e-12);
  CHECK(std::abs(exf.p1 + std::conj(exf.d.coeff(1))) <= 1e-12);
}

TEST_CASE("exported data carries the complete driving information") {
  // Rebuilding the advection coefficients from (p0, p1, d) reproduces the
  // interface velocity: q_0 = p0, q_k = -conj(c_k(d)) for k >= 1.
  auto f = padded(1.0, cplx(0.05, 0.0), {cplx(0.2, 0.0), cplx(0.0, -0.1)}, 16);
  auto ex = export_field(f);
  std::vector<cplx> q(64);
  q[0] = ex.p0;
  for (std::size_t k = 1; k < q.size(); ++k)
    q[k] = -std::conj(ex.d.coeff(static_cast<int>(k)));
  CHECK(std::abs(q[1] - ex.p1) <= 1e-13);

  auto direct = pgl_rhs(f, 256);
  auto rebuilt = advect_velocity(f, q);
  CHECK(std::abs(direct.alpha_dot - rebuilt.alpha_dot) <= 1e-12);
  CHECK(std::abs(direct.a0_dot - rebuilt.a0_dot) <= 1e-12);
  REQUIRE(direct.a_dot.size() == rebuilt.a_dot.size());
  for (std::size_t k = 0; k < direct.a_dot.size(); ++k)
    CHECK(std::abs(direct.a_dot[k] - rebuilt.a_dot[k]) <= 1e-12);
}

TEST_CASE("tangent kernel of a circle vanishes") {
  for (cplx z : {cplx(0.0, 0.0), cplx(0.4, 0.1), cplx(0.0, -0.6)})
    CHECK(std::abs(tangent_vector(LaurentMap(1.7, 0.0, {}), z)) <= 1e-12);
}

TEST_CASE("tangent kernel equals the extension kernel of the exported field") {
  LaurentMap f(1.0, 0.0, {cplx(0.15, 0.0), cplx(0.0, 0.1)});
  auto d = export_field(f).d;
  // Both sides integrate the same kernel; the trapezoid side aliases only
  // beyond the grid bandwidth, so points with |zeta| <= 0.8 agree to
  // round-off at n = 256.
  for (cplx z : {cplx(0.0, 0.0), cplx(0.2, 0.0), cplx(0.35, 0.2), cplx(0.0, -0.5),
                 cplx(-0.49, 0.49), cplx(0.0, 0.7), cplx(0.8, 0.0)})
    CHECK(std::abs(tangent_vector(f, z) - nu_from_field(d, z)) <= 1e-10);

  // Closer to the boundary the trapezoid needs more nodes; doubling the grid
  // twice restores round-off agreement.
  const cplx z9(0.0, 0.9);
  CHECK(std::abs(tangent_vector(f, z9, 256) - nu_from_field(d, z9)) <= 1e-4);
  CHECK(std::abs(tangent_vector(f, z9, 1024) - nu_from_field(d, z9)) <= 1e-10);

  // The field is genuinely nontrivial for a non-circular interface.
  CHECK(std::abs(tangent_vector(f, cplx(0.3, 0.0))) > 1e-6);
}

TEST_CASE("tangent and cotangent kernels are linked by the metric weight") {
  LaurentMap f(1.0, cplx(0.05, 0.02), {cplx(0.15, 0.0), cplx(0.0, 0.1)});
  for (cplx z : {cplx(0.0, 0.0), cplx(0.3, -0.2), cplx(0.0, 0.9), cplx(-0.6, 0.55)}) {
    const cplx nu = tangent_vector(f, z);
    const cplx phi = cotangent_vector(f, z);
    CHECK(std::abs(nu + 0.5 * std::conj(phi) * oracles::sq(1.0 - std::norm(z))) <= 1e-9);
  }
}
