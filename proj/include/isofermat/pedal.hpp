#pragma once

// Pedal triangles and the inverse problem: finding the unique point inside
// (or outside) the circumcircle whose pedal triangle has prescribed angles.
//
// The interior point is constructed in closed form by intersecting two
// circular-arc loci of the extended viewing angles; the exterior point is its
// image under inversion in the circumcircle.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "isofermat/geometry.hpp"

namespace isofermat {

struct PedalData {
  Triangle feet;          // A1, B1, C1: feet of perpendiculars on BC, CA, AB
  AngleTriple pedal_angles;  // angles at A1, B1, C1
  double circumradius_R1;
  double orientation;     // +1 / -1 sign of the feet triangle's signed area
};

namespace detail {

inline void require_off_circumcircle(const Triangle& t, Point2 m,
                                     const char* what) {
  double d = dist(m, t.circum.center);
  if (std::abs(d - t.circum.radius) <= 1e-9 * t.circum.radius)
    throw geom_error(geom_error::code::on_circumcircle, what);
}

inline void require_not_vertex(const Triangle& t, Point2 m, const char* what) {
  double sc = kEpsLine * t.max_side;
  if (dist(m, t.A) <= sc || dist(m, t.B) <= sc || dist(m, t.C) <= sc)
    throw geom_error(geom_error::code::ambiguous_vertex, what);
}

}  // namespace detail

inline PedalData pedal_of(const Triangle& t, Point2 m) {
  detail::require_off_circumcircle(t, m, "pedal_of: point on circumcircle");
  detail::require_not_vertex(t, m, "pedal_of: point is a vertex");
  Point2 fa = foot(t.B, t.C, m);
  Point2 fb = foot(t.C, t.A, m);
  Point2 fc = foot(t.A, t.B, m);
  Triangle feet(fa, fb, fc);
  AngleTriple ang(feet.alpha, feet.beta, feet.gamma);
  double R1 = feet.circum.radius;
  return PedalData{feet, ang, R1, feet.orientation()};
}

namespace detail {

// Locus of points M with extended angle /_PMQ = theta (referenced to ref):
// a circular arc through P and Q, or the open chord itself when theta = pi.
struct ArcLocus {
  bool is_chord = false;
  Point2 p, q;       // chord endpoints
  Circle circ;       // valid when !is_chord
  int side = 0;      // side of line PQ carrying the arc (vs. ref side)
};

inline ArcLocus angle_locus(Point2 p, Point2 q, Point2 ref, double theta) {
  ArcLocus loc;
  loc.p = p;
  loc.q = q;
  if (std::abs(theta - kPi) <= 1e-12) {
    loc.is_chord = true;
    return loc;
  }
  int ref_side = side_of_line(p, q, ref);
  double theta_eff = theta < kPi ? theta : 2.0 * kPi - theta;
  loc.side = theta < kPi ? ref_side : -ref_side;

  double half = dist(p, q) / 2.0;
  Point2 mid = (p + q) / 2.0;
  Point2 dir = (q - p) / dist(p, q);
  Point2 n{-dir.y, dir.x};           // unit normal; side +1 of p->q
  if (loc.side < 0) n = n * -1.0;
  double offset = half / std::tan(theta_eff);
  loc.circ = Circle(mid + n * offset, half / std::sin(theta_eff));
  return loc;
}

inline std::vector<Point2> intersect_loci(const ArcLocus& l1,
                                          const ArcLocus& l2) {
  if (l1.is_chord && l2.is_chord)
    throw geom_error(geom_error::code::no_solution_found,
                     "angle loci: two chord loci cannot meet off the vertices");
  if (l1.is_chord) return line_circle_intersection(l1.p, l1.q, l2.circ);
  if (l2.is_chord) return line_circle_intersection(l2.p, l2.q, l1.circ);
  return circle_circle_intersection(l1.circ, l2.circ);
}

}  // namespace detail

// The unique point strictly inside the circumcircle whose pedal triangle has
// the given angles. The extended viewing angles there are alpha+alpha1 over
// BC, beta+beta1 over CA, gamma+gamma1 over AB; the first two loci intersect
// in C and the sought point, and the third angle picks the right candidate.
inline Point2 locate_interior(const Triangle& t, const AngleTriple& target) {
  auto l1 = detail::angle_locus(t.B, t.C, t.A, t.alpha + target.a1);
  auto l2 = detail::angle_locus(t.C, t.A, t.B, t.beta + target.b1);
  double theta3 = t.gamma + target.g1;

  auto candidates = detail::intersect_loci(l1, l2);
  double vertex_tol = 1e-11 * t.max_side;
  double best_res = 1e-7;  // third-angle acceptance threshold, radians
  std::optional<Point2> best;
  for (Point2 cand : candidates) {
    if (dist(cand, t.A) <= vertex_tol || dist(cand, t.B) <= vertex_tol ||
        dist(cand, t.C) <= vertex_tol)
      continue;
    if (dist(cand, t.circum.center) >= t.circum.radius) continue;
    double res;
    try {
      res = std::abs(extended_angle(cand, t.A, t.B, t.C) - theta3);
    } catch (const geom_error&) {
      continue;
    }
    if (res < best_res) {
      best_res = res;
      best = cand;
    }
  }
  if (!best)
    throw geom_error(geom_error::code::no_solution_found,
                     "locate_interior: no candidate satisfies the third angle");
  return *best;
}

// The unique point strictly outside the circumcircle with the given pedal
// angles: the inverse of the interior point in the circumcircle. Undefined
// when the target equals the base angles (the interior point is the
// circumcenter).
inline Point2 locate_exterior(const Triangle& t, const AngleTriple& target) {
  if (std::abs(target.a1 - t.alpha) <= 1e-9 &&
      std::abs(target.b1 - t.beta) <= 1e-9 &&
      std::abs(target.g1 - t.gamma) <= 1e-9)
    throw geom_error(geom_error::code::identical_angles,
                     "locate_exterior: target equals the base angles");
  Point2 m = locate_interior(t, target);
  return invert(t.circum.center, t.circum.radius, m);
}

// Viewing angles (over BC, CA, AB) of the isogonal conjugate of the interior
// point whose pedal angles are `target`: (pi - alpha1, pi - beta1,
// pi - gamma1). They sum to 2 pi.
inline std::array<double, 3> conjugate_view_angles(const Triangle&,
                                                   const AngleTriple& target) {
  return {kPi - target.a1, kPi - target.b1, kPi - target.g1};
}

}  // namespace isofermat
