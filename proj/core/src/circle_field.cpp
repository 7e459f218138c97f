#include "qcflow/circle_field.hpp"

#include <cmath>

#include "qcflow/errors.hpp"

namespace qcflow {

CircleField CircleField::from_grid(CircleGrid grid) {
  if (grid.imag_residual() > 1e-10)
    throw DomainError("CircleField: samples must be real");
  const int n = static_cast<int>(grid.size());
  double cmax = 0.0;
  for (int m = -n / 2; m < n / 2; ++m) cmax = std::max(cmax, std::abs(grid.coeff(m)));
  double tail = 0.0;
  for (int m = 3 * n / 8; m <= n / 2; ++m) {
    tail = std::max(tail, std::abs(grid.coeff(m == n / 2 ? -n / 2 : m)));
    tail = std::max(tail, std::abs(grid.coeff(-m == -n / 2 ? -n / 2 : -m)));
  }
  if (tail > 1e-10 * std::max(cmax, 1.0))
    throw DomainError("CircleField: Fourier coefficients have not decayed below 1e-10 before the truncation index");
  return CircleField(std::move(grid));
}

CircleField CircleField::from_values(const std::vector<double>& values) {
  return from_grid(CircleGrid::from_real_values(values));
}

CircleField CircleField::from_function(const std::function<double(double)>& d, std::size_t n) {
  return from_grid(CircleGrid::from_function([&d](double th) { return cplx(d(th), 0.0); }, n));
}

CircleField CircleField::zero(std::size_t n) {
  return from_values(std::vector<double>(n, 0.0));
}

CircleField CircleField::derivative() const {
  CircleGrid g = grid_.derivative();
  // Derivative of real data is real; rebuild through from_grid to keep the
  // class invariants checked.
  std::vector<double> v(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) v[j] = g.value(j).real();
  return from_values(v);
}

double CircleField::max_abs() const {
  double m = 0.0;
  for (std::size_t j = 0; j < size(); ++j) m = std::max(m, std::abs(value(j)));
  return m;
}

CircleField operator+(const CircleField& a, const CircleField& b) {
  if (a.size() != b.size()) throw DomainError("CircleField: grid mismatch");
  std::vector<double> v(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) v[j] = a.value(j) + b.value(j);
  return CircleField::from_values(v);
}

CircleField operator*(double s, const CircleField& d) {
  std::vector<double> v(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) v[j] = s * d.value(j);
  return CircleField::from_values(v);
}

CircleField poisson_lie_bracket(const CircleField& d1, const CircleField& d2) {
  if (d1.size() != d2.size()) throw DomainError("poisson_lie_bracket: grid mismatch");
  CircleField d1p = d1.derivative();
  CircleField d2p = d2.derivative();
  std::vector<double> v(d1.size());
  for (std::size_t j = 0; j < d1.size(); ++j)
    v[j] = d1.value(j) * d2p.value(j) - d2.value(j) * d1p.value(j);
  return CircleField::from_values(v);
}

cplx kirillov_variation(const LaurentMap& f, const CircleField& d, cplx zeta, double margin) {
  if (std::abs(zeta) < margin)
    throw DomainError("kirillov_variation: zeta too close to the unit circle");
  const std::size_t n = d.size();
  CircleGrid fb = f.boundary(n);
  CircleGrid fpb = f.boundary_deriv(n);
  double min_df = 1e300;
  for (std::size_t j = 0; j < n; ++j) min_df = std::min(min_df, std::abs(fpb.value(j)));
  if (min_df <= 0.0) throw DomainError("kirillov_variation: map is degenerate on the circle");
  const cplx fz = f.eval(zeta);
  cplx acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx w = fb.point(j);
    const cplx ratio = w * fpb.value(j) / fb.value(j);
    acc += ratio * ratio * w * w * d.value(j) / (fb.value(j) - fz);
  }
  // dw = i w dtheta folded in: -(1/2 pi i) * i * (2 pi / n) = -(1/n).
  return -acc / static_cast<double>(n);
}

BeltramiField harmonic_extension(const CircleField& d,
                                 std::shared_ptr<const DiskQuadrature> grid) {
  const int n = static_cast<int>(d.size());
  std::vector<cplx> pos(n / 2);  // c_m for m = 0..n/2-1
  for (int m = 0; m < n / 2; ++m) pos[m] = d.coeff(m);
  auto eval = [pos](cplx w) {
    // Real field: c_0 + 2 Re sum_{m>=1} c_m w^m.
    cplx acc = 0.0;
    for (std::size_t m = pos.size(); m-- > 1;) acc = (acc + pos[m]) * w;
    return cplx(pos[0].real() + 2.0 * acc.real(), 0.0);
  };
  return BeltramiField::from_function(eval, std::move(grid));
}

cplx variation_area_form(const BeltramiField& d_ext, cplx zeta) {
  if (std::abs(zeta) <= 1.0)
    throw DomainError("variation_area_form: zeta must lie outside the closed disk");
  const DiskQuadrature& g = d_ext.grid();
  std::vector<cplx> prod(g.size());
  for (std::size_t i = 0; i < g.n_r(); ++i)
    for (std::size_t j = 0; j < g.n_theta(); ++j)
      prod[g.index(i, j)] = g.point(i, j) * d_ext.sample(i, j);
  BeltramiField h = wirtinger_dbar(BeltramiField::from_samples(std::move(prod), d_ext.grid_ptr()));
  return cauchy_transform_disk(h, zeta);
}

}  // namespace qcflow
