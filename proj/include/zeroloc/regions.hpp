#pragma once

#include <cmath>
#include <complex>

#include "zeroloc/poly.hpp"

namespace zeroloc {

/// Closed disc |z - center| <= radius.
struct Disc {
  cx center{0.0};
  double radius = 0.0;
};

/// Closed Cassini region |z - focus| |z + focus| <= radius: the square-root
/// preimage of a disc in the squared plane.
struct CassiniRegion {
  cx focus{0.0};
  double radius = 0.0;
};

/// Annulus r_inner < |z| < r_outer known to contain no zeros; `contains`
/// follows complement semantics (true means z is outside the forbidden ring).
struct AnnulusGap {
  double r_inner = 0.0;
  double r_outer = 0.0;
};

/// Square-root image of a disc: focus is the principal square root of the
/// center (argument in (-pi/2, pi/2]); z is a member iff z^2 is in d.
inline CassiniRegion sqrt_map_disc(const Disc& d) { return {std::sqrt(d.center), d.radius}; }

inline bool contains(const Disc& d, cx z) { return std::abs(z - d.center) <= d.radius; }

inline bool contains(const CassiniRegion& c, cx z) {
  return std::abs((z - c.focus) * (z + c.focus)) <= c.radius;
}

inline bool contains(const AnnulusGap& g, cx z) {
  const double m = std::abs(z);
  return m <= g.r_inner || m >= g.r_outer;
}

/// True iff the region splits into two loops, which happens exactly when the
/// generating disc is bounded away from the origin of the squared plane.
inline bool two_loop_predicate(const CassiniRegion& c) { return c.radius < std::norm(c.focus); }

}  // namespace zeroloc
