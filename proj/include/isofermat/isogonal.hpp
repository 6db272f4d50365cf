#pragma once

// Isogonal conjugacy: the complex cross-terms, the conjugate map in
// barycentric form, signed distance-product forms, and classification of
// conjugacy types (I, II, III) and plane regions (sigma, sigma12, sigma13,
// sigma13').
//
// Conjugacy is decided numerically from the imaginary residuals of the
// cross-terms; the same three numbers drive the sign-pattern type
// classification.

#include <array>
#include <cmath>
#include <complex>
#include <optional>

#include "isofermat/geometry.hpp"
#include "isofermat/pedal.hpp"

namespace isofermat {

// Relative tolerance on the imaginary part of a cross-term when deciding
// whether a pair is conjugate. The terms involve one complex division,
// losing roughly two digits.
inline constexpr double kEpsImag = 1e-7;

// A cross-term below this magnitude counts as zero (boundary configuration).
inline constexpr double kEpsTermZero = 1e-9;

struct CrossTerms {
  std::complex<double> tA, tB, tC;

  std::complex<double> sum() const { return tA + tB + tC; }
  std::array<std::complex<double>, 3> terms() const { return {tA, tB, tC}; }
};

inline CrossTerms cross_terms(const Triangle& t, Point2 x, Point2 y) {
  auto a = affix(t.A), b = affix(t.B), c = affix(t.C);
  auto zx = affix(x), zy = affix(y);
  return CrossTerms{
      (zx - a) * (zy - a) / ((b - a) * (c - a)),
      (zx - b) * (zy - b) / ((a - b) * (c - b)),
      (zx - c) * (zy - c) / ((a - c) * (b - c)),
  };
}

struct ConjugacyType {
  enum class kind { type_i, type_ii, type_iii, not_conjugate };
  kind k = kind::not_conjugate;
  std::optional<VertexId> vertex;  // set for types II and III

  bool operator==(const ConjugacyType&) const = default;

  static ConjugacyType type_i() { return {kind::type_i, std::nullopt}; }
  static ConjugacyType type_ii(VertexId v) { return {kind::type_ii, v}; }
  static ConjugacyType type_iii(VertexId v) { return {kind::type_iii, v}; }
  static ConjugacyType none() { return {kind::not_conjugate, std::nullopt}; }
};

struct RegionLabel {
  enum class kind {
    sigma,
    sigma12,
    sigma13,
    sigma13_prime,
    on_circumcircle,
    side_line,
    vertex,
  };
  kind k = kind::sigma;
  std::optional<VertexId> vertex;  // region's distinguished vertex, or the
                                   // vertex itself for kind::vertex
  std::string detail;              // side-line annotation

  bool same(kind kk) const { return k == kk; }
  bool same(kind kk, VertexId v) const { return k == kk && vertex == v; }
};

// Barycentric coordinates of x: (u : v : w) proportional to the signed areas
// [xBC], [AxC], [ABx].
inline std::array<double, 3> barycentric(const Triangle& t, Point2 x) {
  return {signed_area(x, t.B, t.C), signed_area(t.A, x, t.C),
          signed_area(t.A, t.B, x)};
}

// Isogonal conjugate via (u:v:w) -> (a^2/u : b^2/v : c^2/w), computed with
// cleared denominators (a^2 vw : b^2 uw : c^2 uv) so side-line inputs land
// exactly on the opposite vertex.
inline Point2 isogonal_conjugate(const Triangle& t, Point2 x) {
  detail::require_not_vertex(
      t, x, "isogonal_conjugate: conjugate of a vertex is the opposite side");
  auto [u, v, w] = barycentric(t, x);
  // Snap side-line coordinates to exact zero.
  double area_eps = kEpsLine * t.max_side * t.max_side;
  if (std::abs(u) <= area_eps) u = 0.0;
  if (std::abs(v) <= area_eps) v = 0.0;
  if (std::abs(w) <= area_eps) w = 0.0;

  double p0 = t.a * t.a * v * w;
  double p1 = t.b * t.b * u * w;
  double p2 = t.c * t.c * u * v;
  double mag = std::abs(p0) + std::abs(p1) + std::abs(p2);
  if (mag == 0.0)
    throw geom_error(geom_error::code::ambiguous_vertex,
                     "isogonal_conjugate: point is a vertex");
  double s = p0 + p1 + p2;
  if (std::abs(s) <= 1e-10 * mag)
    throw geom_error(geom_error::code::on_circumcircle,
                     "isogonal_conjugate: point on circumcircle, image at "
                     "infinity");
  return (t.A * p0 + t.B * p1 + t.C * p2) / s;
}

inline ConjugacyType classify_conjugacy(const Triangle& t, Point2 x,
                                        Point2 y) {
  CrossTerms ct = cross_terms(t, x, y);
  for (auto term : ct.terms())
    if (std::abs(term.imag()) > kEpsImag * (1.0 + std::abs(term)))
      return ConjugacyType::none();

  std::array<double, 3> re{ct.tA.real(), ct.tB.real(), ct.tC.real()};
  int zeros = 0, negatives = 0;
  int neg_at = -1, pos_at = -1;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(re[i]) < kEpsTermZero) {
      ++zeros;
      continue;
    }
    if (re[i] < 0) {
      ++negatives;
      neg_at = i;
    } else {
      pos_at = i;
    }
  }
  if (zeros > 1)
    throw geom_error(geom_error::code::degenerate,
                     "classify_conjugacy: more than one vanishing cross-term");
  // The terms sum to 1, so all three cannot be negative.
  static constexpr VertexId ids[3] = {VertexId::A, VertexId::B, VertexId::C};
  if (negatives == 0) return ConjugacyType::type_i();
  if (negatives == 1) return ConjugacyType::type_iii(ids[neg_at]);
  return ConjugacyType::type_ii(ids[pos_at]);
}

// Region of the plane relative to the triangle, circumcircle and vertices,
// decided from the pedal angles: inside k the extended viewing angle over BC
// is alpha + alpha1, so sigma <=> all three sums below pi; outside k the
// component-wise comparison alpha vs alpha1 separates sigma12 from sigma13'.
inline RegionLabel classify_region(const Triangle& t, Point2 x) {
  static constexpr VertexId ids[3] = {VertexId::A, VertexId::B, VertexId::C};
  double vtx_tol = kEpsLine * t.max_side;
  for (VertexId v : ids)
    if (dist(x, t.vertex(v)) <= vtx_tol)
      return RegionLabel{RegionLabel::kind::vertex, v, ""};

  double d = dist(x, t.circum.center);
  double R = t.circum.radius;
  if (std::abs(d - R) <= 1e-9 * R)
    return RegionLabel{RegionLabel::kind::on_circumcircle, std::nullopt, ""};

  PedalData pd = pedal_of(t, x);
  std::array<double, 3> base{t.alpha, t.beta, t.gamma};
  std::array<double, 3> ped{pd.pedal_angles.a1, pd.pedal_angles.b1,
                            pd.pedal_angles.g1};

  constexpr double ang_tol = 1e-9;  // absolute radians at region boundaries
  if (d < R) {
    // e_i = base_i + pedal_i - pi; the three e_i sum to -pi, so at most one
    // can be non-negative.
    int above = -1;
    for (int i = 0; i < 3; ++i) {
      double e = base[i] + ped[i] - kPi;
      if (std::abs(e) <= ang_tol)
        return RegionLabel{RegionLabel::kind::side_line, ids[i],
                           std::string("on the open chord opposite ") +
                               vertex_name(ids[i])};
      if (e > 0) above = i;
    }
    if (above < 0) return RegionLabel{RegionLabel::kind::sigma, std::nullopt, ""};
    return RegionLabel{RegionLabel::kind::sigma13, ids[above], ""};
  }

  // Outside k: d_i = base_i - pedal_i sums to zero; one sign against two.
  int below = -1, above = -1, nbelow = 0, nabove = 0;
  for (int i = 0; i < 3; ++i) {
    double diff = base[i] - ped[i];
    if (std::abs(diff) <= ang_tol)
      return RegionLabel{RegionLabel::kind::side_line, ids[i],
                         std::string("boundary ray at ") +
                             vertex_name(ids[i])};
    if (diff < 0) {
      ++nbelow;
      below = i;
    } else {
      ++nabove;
      above = i;
    }
  }
  if (nbelow == 1 && nabove == 2)
    return RegionLabel{RegionLabel::kind::sigma12, ids[below], ""};
  if (nabove == 1 && nbelow == 2)
    return RegionLabel{RegionLabel::kind::sigma13_prime, ids[above], ""};
  // Unreachable for consistent pedal angles.
  throw geom_error(geom_error::code::degenerate,
                   "classify_region: inconsistent angle pattern");
}

// s_A * a * AX * AY + s_B * b * BX * BY + s_C * c * CX * CY.
inline double signed_form(const Triangle& t, Point2 x, Point2 y,
                          std::array<int, 3> signs) {
  return signs[0] * t.a * dist(t.A, x) * dist(t.A, y) +
         signs[1] * t.b * dist(t.B, x) * dist(t.B, y) +
         signs[2] * t.c * dist(t.C, x) * dist(t.C, y);
}

struct HayashiCheck {
  double lhs;
  double rhs;
  double slack;  // lhs - rhs, >= 0 up to rounding
};

// The generalized Ptolemy form: a AX AY + b BX BY + c CX CY >= abc, with
// equality exactly for type-I conjugate pairs.
inline HayashiCheck hayashi_check(const Triangle& t, Point2 x, Point2 y) {
  double lhs = signed_form(t, x, y, {1, 1, 1});
  double rhs = t.a * t.b * t.c;
  return {lhs, rhs, lhs - rhs};
}

}  // namespace isofermat
