#include "qcflow/beltrami_field.hpp"

#include <cmath>

#include "qcflow/errors.hpp"
#include "qcflow/fft.hpp"
#include "qcflow/gauss_legendre.hpp"

namespace qcflow {
namespace {

// Barycentric weights for the radial nodes; differences are scaled by the
// capacity factor 4 so the products stay in range for large rules.
std::vector<double> barycentric_weights(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    double prod = 1.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) prod *= 4.0 * (x[i] - x[j]);
    w[i] = 1.0 / prod;
  }
  return w;
}

cplx barycentric_eval(const std::vector<double>& x, const std::vector<double>& w,
                      const std::vector<cplx>& f, double xq) {
  cplx num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double d = xq - x[i];
    if (std::abs(d) < 1e-14) return f[i];
    double c = w[i] / d;
    num += c * f[i];
    den += c;
  }
  return num / den;
}

}  // namespace

BeltramiField::BeltramiField(std::shared_ptr<const DiskQuadrature> grid,
                             std::vector<cplx> samples, Evaluator eval)
    : grid_(std::move(grid)), samples_(std::move(samples)), eval_(std::move(eval)) {
  if (!grid_) throw DomainError("BeltramiField: null grid");
  if (samples_.size() != grid_->size())
    throw DomainError("BeltramiField: sample count does not match the grid");
  if (!eval_) build_interpolant();
}

BeltramiField BeltramiField::constant(cplx c, std::shared_ptr<const DiskQuadrature> grid) {
  std::vector<cplx> s(grid->size(), c);
  return BeltramiField(std::move(grid), std::move(s), [c](cplx) { return c; });
}

BeltramiField BeltramiField::from_function(Evaluator f,
                                           std::shared_ptr<const DiskQuadrature> grid) {
  std::vector<cplx> s(grid->size());
  for (std::size_t i = 0; i < grid->n_r(); ++i)
    for (std::size_t j = 0; j < grid->n_theta(); ++j) s[grid->index(i, j)] = f(grid->point(i, j));
  return BeltramiField(std::move(grid), std::move(s), std::move(f));
}

BeltramiField BeltramiField::from_samples(std::vector<cplx> samples,
                                          std::shared_ptr<const DiskQuadrature> grid) {
  return BeltramiField(std::move(grid), std::move(samples), nullptr);
}

void BeltramiField::build_interpolant() const {
  const std::size_t nr = grid_->n_r(), nt = grid_->n_theta();
  std::vector<double> x(nr);
  for (std::size_t i = 0; i < nr; ++i) x[i] = grid_->radius(i);
  bary_w_ = barycentric_weights(x);
  modes_.assign(nt, std::vector<cplx>(nr));
  std::vector<cplx> ring(nt);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nt; ++j) ring[j] = samples_[grid_->index(i, j)];
    std::vector<cplx> c = dft(ring);
    const double scale = 1.0 / static_cast<double>(nt);
    for (std::size_t m = 0; m < nt; ++m) modes_[m][i] = c[m] * scale;
  }
}

cplx BeltramiField::at(cplx w) const {
  if (eval_) return eval_(w);
  const std::size_t nr = grid_->n_r(), nt = grid_->n_theta();
  std::vector<double> x(nr);
  for (std::size_t i = 0; i < nr; ++i) x[i] = grid_->radius(i);
  const double r = std::abs(w);
  const double th = std::atan2(w.imag(), w.real());
  const int half = static_cast<int>(nt) / 2;
  cplx acc = 0.0;
  for (int m = -half + 1; m < half; ++m) {
    std::size_t idx = static_cast<std::size_t>((m % static_cast<int>(nt) + static_cast<int>(nt)) %
                                               static_cast<int>(nt));
    cplx cm = barycentric_eval(x, bary_w_, modes_[idx], r);
    acc += cm * unit(m * th);
  }
  return acc;
}

double BeltramiField::ess_sup() const {
  double m = 0.0;
  for (const auto& v : samples_) m = std::max(m, std::abs(v));
  return m;
}

double BeltramiField::support_radius(double eps) const {
  for (std::size_t i = grid_->n_r(); i-- > 0;) {
    for (std::size_t j = 0; j < grid_->n_theta(); ++j)
      if (std::abs(samples_[grid_->index(i, j)]) > eps) return grid_->radius(i);
  }
  return 0.0;
}

BeltramiField scale(const BeltramiField& f, cplx factor) {
  auto grid = f.grid_ptr();
  if (f.has_formula()) {
    auto base = f;
    return BeltramiField::from_function([base, factor](cplx w) { return factor * base.at(w); },
                                        grid);
  }
  std::vector<cplx> s = f.samples();
  for (auto& v : s) v *= factor;
  return BeltramiField::from_samples(std::move(s), grid);
}

BeltramiField add(const BeltramiField& a, const BeltramiField& b) {
  if (a.grid_ptr() != b.grid_ptr())
    throw DomainError("BeltramiField::add: fields live on different grids");
  auto grid = a.grid_ptr();
  if (a.has_formula() && b.has_formula()) {
    auto fa = a, fb = b;
    return BeltramiField::from_function([fa, fb](cplx w) { return fa.at(w) + fb.at(w); }, grid);
  }
  std::vector<cplx> s = a.samples();
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += b.samples()[i];
  return BeltramiField::from_samples(std::move(s), grid);
}

BeltramiField wirtinger_dbar(const BeltramiField& f) {
  const DiskQuadrature& g = f.grid();
  const std::size_t nr = g.n_r(), nt = g.n_theta();
  std::vector<double> x(nr);
  for (std::size_t i = 0; i < nr; ++i) x[i] = g.radius(i);
  std::vector<double> bw = barycentric_weights(x);

  // Angular modes per ring.
  std::vector<std::vector<cplx>> modes(nt, std::vector<cplx>(nr));
  std::vector<cplx> ring(nt);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nt; ++j) ring[j] = f.sample(i, j);
    std::vector<cplx> c = dft(ring);
    const double scale = 1.0 / static_cast<double>(nt);
    for (std::size_t m = 0; m < nt; ++m) modes[m][i] = c[m] * scale;
  }

  // Radial derivative of each mode by barycentric differentiation.
  auto radial_deriv = [&](const std::vector<cplx>& c) {
    std::vector<cplx> d(nr, 0.0);
    for (std::size_t i = 0; i < nr; ++i) {
      cplx diag = 0.0;
      for (std::size_t j = 0; j < nr; ++j) {
        if (j == i) continue;
        double dij = (bw[j] / bw[i]) / (x[i] - x[j]);
        d[i] += dij * c[j];
        diag -= dij;
      }
      d[i] += diag * c[i];
    }
    return d;
  };

  // d/d(wbar) = (e^{i theta}/2)(d/dr + (i/r) d/dtheta): mode m maps to mode m+1
  // with radial part (c_m' - m c_m / r)/2.
  const int half = static_cast<int>(nt) / 2;
  std::vector<std::vector<cplx>> out_modes(nt, std::vector<cplx>(nr, 0.0));
  for (int m = -half + 1; m < half - 1; ++m) {
    std::size_t src = static_cast<std::size_t>((m % static_cast<int>(nt) + static_cast<int>(nt)) %
                                               static_cast<int>(nt));
    std::vector<cplx> dr = radial_deriv(modes[src]);
    std::size_t dst = static_cast<std::size_t>(((m + 1) % static_cast<int>(nt) +
                                                static_cast<int>(nt)) %
                                               static_cast<int>(nt));
    for (std::size_t i = 0; i < nr; ++i)
      out_modes[dst][i] = 0.5 * (dr[i] - static_cast<double>(m) * modes[src][i] / x[i]);
  }

  std::vector<cplx> samples(g.size());
  std::vector<cplx> coeffs(nt);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t m = 0; m < nt; ++m) coeffs[m] = out_modes[m][i] * static_cast<double>(nt);
    std::vector<cplx> vals = idft(coeffs);
    for (std::size_t j = 0; j < nt; ++j) samples[g.index(i, j)] = vals[j];
  }
  return BeltramiField::from_samples(std::move(samples), f.grid_ptr());
}

cplx cauchy_transform_disk(const BeltramiField& nu, cplx zeta) {
  const DiskQuadrature& g = nu.grid();
  const double az = std::abs(zeta);
  if (std::abs(az - 1.0) < 1e-12)
    throw DomainError("cauchy_transform_disk: zeta on the unit circle");
  if (az > 1.0) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < g.n_r(); ++i) {
      cplx ring = 0.0;
      for (std::size_t j = 0; j < g.n_theta(); ++j) {
        cplx w = g.point(i, j);
        ring += nu.sample(i, j) / (w - zeta);
      }
      acc += g.weight(i) * ring;
    }
    return -acc / kPi;
  }
  // Interior: polar coordinates centred at zeta; the Jacobian rho cancels the
  // kernel so the integrand is bounded.  For each direction phi the ray meets
  // the unit circle at rho = R(phi).
  static GaussLegendre unit_rule = GaussLegendre::on(0.0, 1.0, 128);
  const std::size_t nphi = std::max<std::size_t>(g.n_theta(), 64);
  const double dphi = kTwoPi / static_cast<double>(nphi);
  cplx acc = 0.0;
  for (std::size_t j = 0; j < nphi; ++j) {
    const double phi = dphi * static_cast<double>(j);
    const cplx dir = unit(phi);
    const double beta = zeta.real() * dir.real() + zeta.imag() * dir.imag();  // Re(conj(zeta) dir)
    const double R = -beta + std::sqrt(beta * beta + 1.0 - az * az);
    cplx ray = 0.0;
    for (std::size_t i = 0; i < unit_rule.nodes.size(); ++i) {
      double rho = R * unit_rule.nodes[i];
      ray += (R * unit_rule.weights[i]) * nu.at(zeta + rho * dir);
    }
    acc += ray * std::conj(dir);
  }
  return -(acc * dphi) / kPi;
}

}  // namespace qcflow
