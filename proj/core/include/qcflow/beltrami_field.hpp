// Bounded measurable coefficient fields on the unit disk, sampled on a polar
// quadrature grid.  Fields built from a formula carry the formula along so
// recentred quadratures can evaluate off-grid without interpolation loss;
// sample-only fields fall back to spectral (Fourier-in-angle, polynomial-in-
// radius) interpolation.
#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "qcflow/disk_quadrature.hpp"
#include "qcflow/math_util.hpp"

namespace qcflow {

class BeltramiField {
 public:
  using Evaluator = std::function<cplx(cplx)>;

  static BeltramiField constant(cplx c, std::shared_ptr<const DiskQuadrature> grid);
  static BeltramiField from_function(Evaluator f, std::shared_ptr<const DiskQuadrature> grid);
  static BeltramiField from_samples(std::vector<cplx> samples,
                                    std::shared_ptr<const DiskQuadrature> grid);

  const DiskQuadrature& grid() const { return *grid_; }
  std::shared_ptr<const DiskQuadrature> grid_ptr() const { return grid_; }
  const std::vector<cplx>& samples() const { return samples_; }
  cplx sample(std::size_t i, std::size_t j) const { return samples_[grid_->index(i, j)]; }

  bool has_formula() const { return static_cast<bool>(eval_); }
  // Value at an arbitrary point of the open disk.
  cplx at(cplx w) const;

  // Grid essential supremum max |value|.
  double ess_sup() const;

  // Largest grid radius carrying samples above eps (support radius proxy).
  double support_radius(double eps = 1e-13) const;

 private:
  BeltramiField(std::shared_ptr<const DiskQuadrature> grid, std::vector<cplx> samples,
                Evaluator eval);
  void build_interpolant() const;

  std::shared_ptr<const DiskQuadrature> grid_;
  std::vector<cplx> samples_;
  Evaluator eval_;
  // Lazy spectral interpolation tables (angular Fourier modes per radius,
  // barycentric weights on the radial nodes).
  mutable std::vector<std::vector<cplx>> modes_;  // modes_[m][i], FFT mode order
  mutable std::vector<double> bary_w_;
};

// Pointwise algebra helpers (result keeps formula backing when both sides have it).
BeltramiField scale(const BeltramiField& f, cplx factor);
BeltramiField add(const BeltramiField& a, const BeltramiField& b);

// d/d(wbar) of the field by spectral differentiation on the polar grid
// (angular FFT per ring, barycentric differentiation across radial nodes).
BeltramiField wirtinger_dbar(const BeltramiField& f);

// Area-measure Cauchy transform  C(zeta) = -(1/pi) \iint_U nu(w)/(w - zeta) dA(w).
// Exterior points use the plain product rule; interior points recentre the
// polar coordinates at zeta so the Jacobian cancels the 1/(w - zeta) singularity.
cplx cauchy_transform_disk(const BeltramiField& nu, cplx zeta);

}  // namespace qcflow
