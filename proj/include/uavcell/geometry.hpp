#ifndef UAVCELL_GEOMETRY_HPP
#define UAVCELL_GEOMETRY_HPP

#include <stdexcept>

namespace uavcell::geometry {

/// Annular sector of central angle psi between radii r_I and r_G; the set
/// of users currently associated with the UAV as the segment rotates.
struct RingSegment {
  double r_I;
  double r_G;
  double psi;

  void validate() const;
  double area() const { return (r_G * r_G - r_I * r_I) * psi / 2.0; }
  /// Expected user count in the segment for density lambda.
  double expected_count(double lambda) const { return lambda * area(); }
};

/// d_A: distance from the UAV ground track point to an inner segment corner.
double dist_to_inner_corner(double r_U, const RingSegment& seg);

/// d_B: same for an outer corner.
double dist_to_outer_corner(double r_U, const RingSegment& seg);

/// d_max = max(d_A, d_B); requires r_I <= r_U <= r_G.
double worst_case_distance(double r_U, const RingSegment& seg);

/// psi_0 = arccos(r_I / r_G), the boundary between the equal-corner-distance
/// regime and the chord-midpoint regime.
double psi_threshold(const RingSegment& seg);

struct OptimalRadius {
  double r_U;
  double d_max;
  bool clamped; // true if the unconstrained optimum fell outside [r_I, r_G]
};

/// Trajectory radius minimizing the worst-case distance to the segment.
/// psi <= psi_0: r_U = (r_G+r_I)/(2 cos(psi/2)), clamped into [r_I, r_G];
/// psi >  psi_0: midpoint of the outer chord, r_U = r_G cos(psi/2).
OptimalRadius optimal_radius(const RingSegment& seg);

} // namespace uavcell::geometry

#endif
