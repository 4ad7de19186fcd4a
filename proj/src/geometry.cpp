#include "uavcell/geometry.hpp"

#include "uavcell/units.hpp"

#include <algorithm>
#include <cmath>

namespace uavcell::geometry {

void RingSegment::validate() const {
  if (!(r_I >= 0.0 && r_I < r_G))
    throw std::invalid_argument("RingSegment: need 0 <= r_I < r_G");
  if (!(psi > 0.0 && psi < units::kPi))
    throw std::invalid_argument("RingSegment: need 0 < psi < pi");
}

namespace {
double corner_distance(double r_U, double r, double psi) {
  return std::sqrt(r_U * r_U + r * r - 2.0 * r_U * r * std::cos(psi / 2.0));
}
} // namespace

double dist_to_inner_corner(double r_U, const RingSegment& seg) {
  return corner_distance(r_U, seg.r_I, seg.psi);
}

double dist_to_outer_corner(double r_U, const RingSegment& seg) {
  return corner_distance(r_U, seg.r_G, seg.psi);
}

double worst_case_distance(double r_U, const RingSegment& seg) {
  if (r_U < seg.r_I || r_U > seg.r_G)
    throw std::domain_error("worst_case_distance: r_U outside [r_I, r_G]");
  return std::max(dist_to_inner_corner(r_U, seg), dist_to_outer_corner(r_U, seg));
}

double psi_threshold(const RingSegment& seg) {
  return std::acos(seg.r_I / seg.r_G);
}

OptimalRadius optimal_radius(const RingSegment& seg) {
  seg.validate();
  const double psi0 = psi_threshold(seg);
  double r_U, d_max;
  if (seg.psi <= psi0) {
    r_U = (seg.r_G + seg.r_I) / (2.0 * std::cos(seg.psi / 2.0));
    d_max = std::sqrt((seg.r_G + seg.r_I) * (seg.r_G + seg.r_I) /
                          (2.0 * (std::cos(seg.psi) + 1.0)) -
                      seg.r_I * seg.r_G);
  } else {
    // Perpendicular-bisector point passes the outer chord midpoint; the
    // minimizer sits at the midpoint of BB'.
    r_U = seg.r_G * std::cos(seg.psi / 2.0);
    d_max = seg.r_G * std::sin(seg.psi / 2.0);
  }
  const double clamped_r_U = std::clamp(r_U, seg.r_I, seg.r_G);
  const bool clamped = clamped_r_U != r_U;
  if (clamped) d_max = worst_case_distance(clamped_r_U, seg);
  return {clamped_r_U, d_max, clamped};
}

} // namespace uavcell::geometry
