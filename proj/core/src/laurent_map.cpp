#include "qcflow/laurent_map.hpp"

#include <cmath>
#include <limits>

#include "qcflow/errors.hpp"

namespace qcflow {

LaurentMap::LaurentMap(double alpha, cplx a0, std::vector<cplx> tail)
    : alpha_(alpha), a0_(a0), tail_(std::move(tail)) {
  if (!(alpha > 0.0)) throw DomainError("LaurentMap: alpha must be positive");
}

cplx LaurentMap::a(std::size_t k) const {
  if (k == 0) return a0_;
  return k <= tail_.size() ? tail_[k - 1] : cplx(0.0);
}

cplx LaurentMap::eval(cplx z) const {
  const cplx inv = 1.0 / z;
  cplx acc = 0.0;
  for (std::size_t k = tail_.size(); k >= 1; --k) acc = (acc + tail_[k - 1]) * inv;
  return alpha_ * z + a0_ + acc;
}

cplx LaurentMap::deriv(cplx z) const {
  const cplx inv = 1.0 / z;
  cplx acc = 0.0;
  for (std::size_t k = tail_.size(); k >= 1; --k)
    acc = (acc - static_cast<double>(k) * tail_[k - 1]) * inv;
  return alpha_ + acc * inv;  // alpha - sum k a_k z^{-k-1}
}

cplx LaurentMap::deriv2(cplx z) const {
  const cplx inv = 1.0 / z;
  cplx acc = 0.0;
  for (std::size_t k = tail_.size(); k >= 1; --k) {
    double c = static_cast<double>(k) * static_cast<double>(k + 1);
    acc = (acc + c * tail_[k - 1]) * inv;
  }
  return acc * inv * inv;  // sum k(k+1) a_k z^{-k-2}
}

cplx LaurentMap::deriv3(cplx z) const {
  const cplx inv = 1.0 / z;
  cplx acc = 0.0;
  for (std::size_t k = tail_.size(); k >= 1; --k) {
    double c = -static_cast<double>(k) * static_cast<double>(k + 1) * static_cast<double>(k + 2);
    acc = (acc + c * tail_[k - 1]) * inv;
  }
  return acc * inv * inv * inv;  // -sum k(k+1)(k+2) a_k z^{-k-3}
}

cplx LaurentMap::schwarzian(cplx z) const {
  cplx fp = deriv(z);
  if (std::abs(fp) == 0.0) throw DomainError("schwarzian: f' vanishes at the evaluation point");
  cplx r = deriv2(z) / fp;
  return deriv3(z) / fp - 1.5 * r * r;
}

CircleGrid LaurentMap::boundary(std::size_t n) const {
  return CircleGrid::from_function([this](double t) { return eval(unit(t)); }, n);
}

CircleGrid LaurentMap::boundary_deriv(std::size_t n) const {
  return CircleGrid::from_function([this](double t) { return deriv(unit(t)); }, n);
}

LaurentMap::BoundaryDerivMin LaurentMap::min_boundary_deriv(std::size_t n) const {
  BoundaryDerivMin best{std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t j = 0; j < n; ++j) {
    double t = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    double v = std::abs(deriv(unit(t)));
    if (v < best.value) best = {v, t};
  }
  return best;
}

int LaurentMap::winding_number(cplx w, std::size_t n) const {
  double total = 0.0;
  cplx prev = eval(unit(0.0)) - w;
  for (std::size_t j = 1; j <= n; ++j) {
    double t = kTwoPi * static_cast<double>(j % n) / static_cast<double>(n);
    cplx cur = eval(unit(t)) - w;
    total += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

namespace {

int orient(cplx a, cplx b, cplx c) {
  double v = (b.real() - a.real()) * (c.imag() - a.imag()) -
             (b.imag() - a.imag()) * (c.real() - a.real());
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

bool segments_cross(cplx p1, cplx p2, cplx q1, cplx q2) {
  int o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
  int o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
  return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

}  // namespace

bool LaurentMap::boundary_self_intersects(std::size_t n) const {
  std::vector<cplx> pts(n);
  for (std::size_t j = 0; j < n; ++j)
    pts[j] = eval(unit(kTwoPi * static_cast<double>(j) / static_cast<double>(n)));
  for (std::size_t i = 0; i < n; ++i) {
    cplx p1 = pts[i], p2 = pts[(i + 1) % n];
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent around the seam
      cplx q1 = pts[j], q2 = pts[(j + 1) % n];
      if (segments_cross(p1, p2, q1, q2)) return true;
    }
  }
  return false;
}

double LaurentMap::enclosed_area() const {
  double s = 0.0;
  for (std::size_t k = 1; k <= tail_.size(); ++k) s += static_cast<double>(k) * std::norm(tail_[k - 1]);
  return kPi * (alpha_ * alpha_ - s);
}

}  // namespace qcflow
