// Smooth real vector fields d(e^{i theta}) on the circle, their Poisson-Lie
// bracket, and the boundary-variation machinery for exterior maps driven by
// such fields.
#pragma once

#include <functional>
#include <memory>

#include "qcflow/beltrami_field.hpp"
#include "qcflow/circle_grid.hpp"
#include "qcflow/laurent_map.hpp"
#include "qcflow/math_util.hpp"

namespace qcflow {

class CircleField {
 public:
  // Validates that samples are real and that the Fourier coefficients have
  // decayed below 1e-10 (relative) in the top quarter of the band; inputs with
  // slower decay would alias and are rejected.
  static CircleField from_grid(CircleGrid grid);
  static CircleField from_values(const std::vector<double>& values);
  static CircleField from_function(const std::function<double(double)>& d, std::size_t n = 256);
  static CircleField zero(std::size_t n = 256);

  const CircleGrid& grid() const { return grid_; }
  std::size_t size() const { return grid_.size(); }
  double value(std::size_t j) const { return grid_.value(j).real(); }
  double at(double theta) const { return grid_.interpolate(theta).real(); }
  cplx coeff(int m) const { return grid_.coeff(m); }

  CircleField derivative() const;
  double max_abs() const;

 private:
  explicit CircleField(CircleGrid grid) : grid_(std::move(grid)) {}
  CircleGrid grid_;
};

CircleField operator+(const CircleField& a, const CircleField& b);
CircleField operator*(double s, const CircleField& d);

// d1 d2' - d2 d1' with spectral derivatives.
CircleField poisson_lie_bracket(const CircleField& d1, const CircleField& d2);

// Boundary variation of an exterior map f along the field d:
//   -(1/2 pi i) \oint_{S^1} (w f'(w)/f(w))^2 w d(w) dw / (f(w) - f(zeta)),
// counterclockwise contour, trapezoid quadrature.  Requires |zeta| >= margin
// so the kernel pole stays away from the contour.
cplx kirillov_variation(const LaurentMap& f, const CircleField& d, cplx zeta,
                        double margin = 1.05);

// Harmonic (Poisson) extension of d into the disk, as a field on the polar
// grid with a closed-form evaluator.
BeltramiField harmonic_extension(const CircleField& d,
                                 std::shared_ptr<const DiskQuadrature> grid = default_disk_quadrature());

// Area form of the variation of the identity map:
//   -(1/pi) \iint_U dbar(w * d_ext(w)) / (w - zeta) dsigma_w,  |zeta| > 1,
// the dbar-derivative taken spectrally on the polar grid.
cplx variation_area_form(const BeltramiField& d_ext, cplx zeta);

}  // namespace qcflow
