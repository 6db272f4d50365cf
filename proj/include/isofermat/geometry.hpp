#pragma once

// Plane geometry foundation: points, triangles, circles, the extended-angle
// convention (values in (0, 2pi)), inversion and perpendicular feet.
//
// Tolerance policy: every comparison is relative to a length scale. For a
// triangle the scale is its longest side; predicates never use absolute
// epsilons.

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isofermat {

inline constexpr double kPi = 3.14159265358979323846;

// Degeneracy threshold for triangles: |signed area| > kEpsArea * maxside^2.
inline constexpr double kEpsArea = 1e-12;

// Side-of-line dead zone, relative to the line's length scale.
inline constexpr double kEpsLine = 1e-10;

class geom_error : public std::runtime_error {
 public:
  enum class code {
    invalid_argument,
    degenerate,
    on_circumcircle,
    ambiguous_vertex,
    on_line_outside_chord,
    identical_angles,
    not_a_triangle,
    no_solution_found,
  };

  geom_error(code c, const std::string& msg)
      : std::runtime_error(msg), code_(c) {}

  code kind() const noexcept { return code_; }

 private:
  code code_;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2() = default;
  Point2(double px, double py) : x(px), y(py) {
    if (!std::isfinite(px) || !std::isfinite(py))
      throw geom_error(geom_error::code::invalid_argument,
                       "non-finite coordinate");
  }

  Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
  Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
  Point2 operator*(double s) const { return {x * s, y * s}; }
  Point2 operator/(double s) const { return {x / s, y / s}; }
  bool operator==(const Point2&) const = default;

  double dot(Point2 o) const { return x * o.x + y * o.y; }
  double cross(Point2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  double norm2() const { return x * x + y * y; }
};

inline double dist(Point2 p, Point2 q) { return (p - q).norm(); }

inline std::complex<double> affix(Point2 p) { return {p.x, p.y}; }

inline Point2 from_affix(std::complex<double> z) { return {z.real(), z.imag()}; }

// Twice-signed-area free variant; positive for counterclockwise (p,q,r).
inline double signed_area(Point2 p, Point2 q, Point2 r) {
  return 0.5 * (q - p).cross(r - p);
}

struct Circle {
  Point2 center;
  double radius = 0.0;

  Circle() = default;
  Circle(Point2 c, double r) : center(c), radius(r) {
    if (!(r > 0.0) || !std::isfinite(r))
      throw geom_error(geom_error::code::invalid_argument,
                       "circle radius must be positive and finite");
  }
};

// Three positive angles summing to pi. Construction normalizes the third
// angle so the sum is exact.
struct AngleTriple {
  double a1 = kPi / 3;
  double b1 = kPi / 3;
  double g1 = kPi / 3;

  AngleTriple() = default;
  AngleTriple(double a, double b, double g) : a1(a), b1(b), g1(g) {
    if (!(a > 0 && a < kPi && b > 0 && b < kPi && g > 0 && g < kPi))
      throw geom_error(geom_error::code::invalid_argument,
                       "angles must lie in (0, pi)");
    if (std::abs(a + b + g - kPi) > 1e-9)
      throw geom_error(geom_error::code::invalid_argument,
                       "angles must sum to pi");
    g1 = kPi - a1 - b1;
  }
};

enum class VertexId { A, B, C };

inline const char* vertex_name(VertexId v) {
  switch (v) {
    case VertexId::A: return "A";
    case VertexId::B: return "B";
    default: return "C";
  }
}

namespace detail {

inline Circle circumcircle_of(Point2 A, Point2 B, Point2 C) {
  // Work relative to A for conditioning.
  Point2 u = B - A, v = C - A;
  double d = 2.0 * u.cross(v);
  double u2 = u.norm2(), v2 = v.norm2();
  Point2 rel{(v.y * u2 - u.y * v2) / d, (u.x * v2 - v.x * u2) / d};
  Point2 O = A + rel;
  return Circle(O, rel.norm());
}

inline double angle_between(Point2 u, Point2 v) {
  return std::atan2(std::abs(u.cross(v)), u.dot(v));
}

}  // namespace detail

// Ordered vertex triple with derived quantities. Vertices are stored as
// given; orientation is exposed via the signed area.
struct Triangle {
  Point2 A, B, C;
  double a, b, c;                 // BC, CA, AB
  double alpha, beta, gamma;      // angles at A, B, C
  double sarea;                   // signed area (positive = CCW)
  double area;
  double max_side;
  Circle circum;

  Triangle(Point2 pa, Point2 pb, Point2 pc)
      : A(pa), B(pb), C(pc),
        a(dist(pb, pc)), b(dist(pc, pa)), c(dist(pa, pb)),
        alpha(detail::angle_between(pb - pa, pc - pa)),
        beta(detail::angle_between(pc - pb, pa - pb)),
        gamma(detail::angle_between(pa - pc, pb - pc)),
        sarea(signed_area(pa, pb, pc)),
        area(std::abs(sarea)),
        max_side(std::max({a, b, c})),
        circum() {
    if (area <= kEpsArea * max_side * max_side)
      throw geom_error(geom_error::code::degenerate, "degenerate triangle");
    circum = detail::circumcircle_of(A, B, C);
  }

  Point2 vertex(VertexId v) const {
    switch (v) {
      case VertexId::A: return A;
      case VertexId::B: return B;
      default: return C;
    }
  }

  double angle(VertexId v) const {
    switch (v) {
      case VertexId::A: return alpha;
      case VertexId::B: return beta;
      default: return gamma;
    }
  }

  double orientation() const { return sarea > 0 ? 1.0 : -1.0; }
};

inline std::array<double, 3> sides(const Triangle& t) { return {t.a, t.b, t.c}; }

inline AngleTriple angles(const Triangle& t) {
  return AngleTriple(t.alpha, t.beta, t.gamma);
}

inline Circle circumcircle(const Triangle& t) { return t.circum; }

// Sign of m relative to the directed line p->q, with a dead zone of
// kEpsLine * |pq| * max(|mp|,|mq|): 0 means "on the line".
inline int side_of_line(Point2 p, Point2 q, Point2 m) {
  double cr = (q - p).cross(m - p);
  double scale = dist(p, q) * std::max(dist(m, p), dist(m, q));
  if (std::abs(cr) <= kEpsLine * scale) return 0;
  return cr > 0 ? 1 : -1;
}

// Angle /_PMQ in (0, 2pi) under the convention that the value exceeds pi
// exactly when m and ref lie on opposite sides of the chord PQ, and equals
// pi exactly on the open chord.
inline double extended_angle(Point2 m, Point2 p, Point2 q, Point2 ref) {
  double sc = kEpsLine * std::max(dist(p, q), std::max(dist(m, p), dist(m, q)));
  if (dist(m, p) <= sc || dist(m, q) <= sc)
    throw geom_error(geom_error::code::invalid_argument,
                     "extended_angle: apex coincides with a chord endpoint");
  int sm = side_of_line(p, q, m);
  if (sm == 0) {
    double t = (m - p).dot(q - p) / (q - p).norm2();
    if (t <= 0.0 || t >= 1.0)
      throw geom_error(geom_error::code::on_line_outside_chord,
                       "extended_angle: apex on line PQ outside the chord");
    return kPi;
  }
  int sr = side_of_line(p, q, ref);
  if (sr == 0)
    throw geom_error(geom_error::code::invalid_argument,
                     "extended_angle: reference point on line PQ");
  double std_angle = detail::angle_between(p - m, q - m);
  return (sm == sr) ? std_angle : 2.0 * kPi - std_angle;
}

// Inversion in the circle (center, radius).
inline Point2 invert(Point2 center, double radius, Point2 p) {
  Point2 d = p - center;
  double n2 = d.norm2();
  if (n2 <= 0.0 ||
      std::sqrt(n2) <= kEpsLine * radius)
    throw geom_error(geom_error::code::invalid_argument,
                     "invert: point at the inversion center");
  return center + d * (radius * radius / n2);
}

// Orthogonal projection of m onto the line through p and q.
inline Point2 foot(Point2 p, Point2 q, Point2 m) {
  Point2 d = q - p;
  double n2 = d.norm2();
  if (n2 <= 0.0)
    throw geom_error(geom_error::code::degenerate, "foot: degenerate line");
  double t = (m - p).dot(d) / n2;
  return p + d * t;
}

// Intersection of two circles; tangency collapses to a single point when the
// center-distance residual is within 1e-9 * max(R1, R2).
inline std::vector<Point2> circle_circle_intersection(const Circle& c1,
                                                      const Circle& c2) {
  double maxR = std::max(c1.radius, c2.radius);
  double d = dist(c1.center, c2.center);
  double tangent_tol = 1e-9 * maxR;
  if (d <= tangent_tol && std::abs(c1.radius - c2.radius) <= tangent_tol)
    throw geom_error(geom_error::code::degenerate,
                     "circle_circle_intersection: identical circles");

  double residual =
      std::min(std::abs(d - (c1.radius + c2.radius)),
               std::abs(d - std::abs(c1.radius - c2.radius)));
  Point2 dir = (c2.center - c1.center) / d;
  double a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2 * d);

  if (residual <= tangent_tol)
    return {c1.center + dir * a};

  double h2 = c1.radius * c1.radius - a * a;
  if (h2 <= 0.0) return {};
  double h = std::sqrt(h2);
  Point2 base = c1.center + dir * a;
  Point2 perp{-dir.y * h, dir.x * h};
  return {base + perp, base - perp};
}

// Intersection of the line through p,q with a circle. Tangency collapses as
// in circle_circle_intersection.
inline std::vector<Point2> line_circle_intersection(Point2 p, Point2 q,
                                                    const Circle& c) {
  Point2 f = foot(p, q, c.center);
  double d = dist(f, c.center);
  if (std::abs(d - c.radius) <= 1e-9 * c.radius) return {f};
  if (d > c.radius) return {};
  double h = std::sqrt(c.radius * c.radius - d * d);
  Point2 dir = (q - p) / dist(p, q);
  return {f + dir * h, f - dir * h};
}

}  // namespace isofermat
