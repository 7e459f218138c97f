// Complete elliptic integral and the derived subordination threshold.
#pragma once

namespace qcflow {

// K(s) = int_0^{pi/2} dt / sqrt(1 - s^2 sin^2 t) for modulus 0 <= s < 1,
// computed by the arithmetic-geometric mean iteration.
double complete_elliptic_K(double s);

// int_0^1 s K(sqrt(s)) ds: the radial elliptic integral appearing in the
// subordination threshold (the integrand takes s as the parameter, i.e. the
// squared modulus).  Exact value is 10/9.
double radial_elliptic_integral();

// pi / (4 * radial_elliptic_integral()) ~= 0.706859 (exactly 9 pi / 40).
double subordination_threshold();

}  // namespace qcflow
