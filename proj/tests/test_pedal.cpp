#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <optional>

#include "isofermat/isogonal.hpp"
#include "isofermat/pedal.hpp"
#include "support.hpp"

using namespace isofermat;

namespace {

Triangle unit_equilateral() {
  return {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
}

// Sample M inside k with a usable pedal triangle.
Point2 sample_interior(testsup::Rng& rng, const Triangle& t) {
  for (;;) {
    Point2 m = testsup::random_point_in_disk(rng, t.circum.center,
                                             0.97 * t.circum.radius);
    try {
      auto pd = pedal_of(t, m);
      auto& a = pd.pedal_angles;
      if (std::min({a.a1, a.b1, a.g1}) > 0.03 &&
          std::max({a.a1, a.b1, a.g1}) < kPi - 0.03)
        return m;
    } catch (const geom_error&) {
    }
  }
}

Point2 sample_exterior(testsup::Rng& rng, const Triangle& t) {
  std::uniform_real_distribution<double> rd(1.03, 3.0);
  std::uniform_real_distribution<double> ad(0.0, 2 * kPi);
  for (;;) {
    double r = rd(rng) * t.circum.radius, a = ad(rng);
    Point2 m = t.circum.center + Point2{std::cos(a), std::sin(a)} * r;
    try {
      auto pd = pedal_of(t, m);
      auto& an = pd.pedal_angles;
      if (std::min({an.a1, an.b1, an.g1}) > 0.03 &&
          std::max({an.a1, an.b1, an.g1}) < kPi - 0.03 &&
          std::abs(an.a1 - t.alpha) > 1e-6)
        return m;
    } catch (const geom_error&) {
    }
  }
}

}  // namespace

TEST_CASE("pedal of the circumcenter is the medial triangle") {
  testsup::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    Triangle t = testsup::random_triangle(rng);
    PedalData pd = pedal_of(t, t.circum.center);
    CHECK(dist(pd.feet.A, (t.B + t.C) / 2.0) <= 1e-12 * t.max_side);
    CHECK(dist(pd.feet.B, (t.C + t.A) / 2.0) <= 1e-12 * t.max_side);
    CHECK(dist(pd.feet.C, (t.A + t.B) / 2.0) <= 1e-12 * t.max_side);
    CHECK(pd.pedal_angles.a1 == doctest::Approx(t.alpha).epsilon(1e-9));
    CHECK(pd.pedal_angles.b1 == doctest::Approx(t.beta).epsilon(1e-9));
    CHECK(pd.circumradius_R1 ==
          doctest::Approx(t.circum.radius / 2).epsilon(1e-9));
  }
}

TEST_CASE("pedal of the equilateral incenter is equilateral, same orientation") {
  Triangle t = unit_equilateral();
  Point2 center = (t.A + t.B + t.C) / 3.0;
  PedalData pd = pedal_of(t, center);
  CHECK(pd.pedal_angles.a1 == doctest::Approx(kPi / 3).epsilon(1e-12));
  CHECK(pd.pedal_angles.b1 == doctest::Approx(kPi / 3).epsilon(1e-12));
  CHECK(pd.orientation == t.orientation());
}

TEST_CASE("pedal degenerate cases are errors") {
  Triangle t = unit_equilateral();
  Point2 on_k = t.circum.center +
                Point2{std::cos(0.7), std::sin(0.7)} * t.circum.radius;
  CHECK_THROWS_AS(pedal_of(t, on_k), geom_error);
  CHECK_THROWS_AS(pedal_of(t, t.B), geom_error);
}

TEST_CASE("pedal side formulas and orientation law") {
  testsup::Rng rng(32);
  for (int i = 0; i < 1000; ++i) {
    Triangle t = testsup::random_triangle(rng);
    Point2 m = testsup::random_point_in_disk(rng, t.circum.center,
                                             2.5 * t.circum.radius);
    double dk = dist(m, t.circum.center);
    if (std::abs(dk - t.circum.radius) < 0.01 * t.circum.radius) {
      --i;
      continue;
    }
    std::optional<PedalData> pdo;
    try {
      pdo = pedal_of(t, m);
    } catch (const geom_error&) {
      --i;
      continue;
    }
    PedalData& pd = *pdo;
    double R = t.circum.radius;
    CHECK(dist(pd.feet.B, pd.feet.C) ==
          doctest::Approx(t.a * dist(t.A, m) / (2 * R)).epsilon(1e-9));
    CHECK(dist(pd.feet.C, pd.feet.A) ==
          doctest::Approx(t.b * dist(t.B, m) / (2 * R)).epsilon(1e-9));
    CHECK(dist(pd.feet.A, pd.feet.B) ==
          doctest::Approx(t.c * dist(t.C, m) / (2 * R)).epsilon(1e-9));
    // Pedal law of sines back-relation.
    CHECK(pd.circumradius_R1 ==
          doctest::Approx(t.a * dist(t.A, m) /
                          (4 * R * std::sin(pd.pedal_angles.a1)))
              .epsilon(1e-9));
    // Orientation law.
    if (dk < t.circum.radius)
      CHECK(pd.orientation == t.orientation());
    else
      CHECK(pd.orientation == -t.orientation());
  }
}

TEST_CASE("viewing angle relations for interior points") {
  testsup::Rng rng(33);
  for (int i = 0; i < 500; ++i) {
    Triangle t = testsup::random_triangle(rng);
    Point2 m = sample_interior(rng, t);
    std::optional<PedalData> pdo;
    double e1, e2, e3;
    try {
      pdo = pedal_of(t, m);
      e1 = extended_angle(m, t.B, t.C, t.A);
      e2 = extended_angle(m, t.C, t.A, t.B);
      e3 = extended_angle(m, t.A, t.B, t.C);
    } catch (const geom_error&) {
      --i;
      continue;
    }
    PedalData& pd = *pdo;
    CHECK(e1 == doctest::Approx(t.alpha + pd.pedal_angles.a1).epsilon(1e-7));
    CHECK(e2 == doctest::Approx(t.beta + pd.pedal_angles.b1).epsilon(1e-7));
    CHECK(e3 == doctest::Approx(t.gamma + pd.pedal_angles.g1).epsilon(1e-7));
    // At most one of the sums can reach pi.
    int above = (t.alpha + pd.pedal_angles.a1 >= kPi) +
                (t.beta + pd.pedal_angles.b1 >= kPi) +
                (t.gamma + pd.pedal_angles.g1 >= kPi);
    CHECK(above <= 1);
  }
}

TEST_CASE("exterior angle law") {
  testsup::Rng rng(34);
  for (int i = 0; i < 300; ++i) {
    Triangle t = testsup::random_triangle(rng);
    Point2 m = sample_exterior(rng, t);
    int sm = side_of_line(t.B, t.C, m);
    int sa = side_of_line(t.B, t.C, t.A);
    if (sm == 0) {
      --i;
      continue;
    }
    PedalData pd = pedal_of(t, m);
    double std_angle = std::atan2(std::abs((t.B - m).cross(t.C - m)),
                                  (t.B - m).dot(t.C - m));
    double expect = sm == sa ? t.alpha - pd.pedal_angles.a1
                             : pd.pedal_angles.a1 - t.alpha;
    CHECK(std_angle == doctest::Approx(expect).epsilon(1e-7));
  }
}

TEST_CASE("locate_interior: medial target recovers the circumcenter") {
  testsup::Rng rng(35);
  for (int i = 0; i < 100; ++i) {
    Triangle t = testsup::random_triangle(rng);
    Point2 m = locate_interior(t, AngleTriple(t.alpha, t.beta, t.gamma));
    CHECK(dist(m, t.circum.center) <= 1e-8 * t.circum.radius);
  }
  Triangle eq = unit_equilateral();
  Point2 c = locate_interior(eq, AngleTriple(kPi / 3, kPi / 3, kPi / 3));
  CHECK(dist(c, eq.circum.center) <= 1e-10);
}

TEST_CASE("locate_interior round-trip") {
  testsup::Rng rng(36);
  for (int i = 0; i < 300; ++i) {
    Triangle t = testsup::random_triangle(rng);
    Point2 m0 = sample_interior(rng, t);
    auto target = pedal_of(t, m0).pedal_angles;
    Point2 m = locate_interior(t, target);
    CHECK(dist(m, m0) <= 1e-8 * t.circum.radius);
  }
}

TEST_CASE("locate_exterior round-trip and inversive relation") {
  testsup::Rng rng(37);
  for (int i = 0; i < 300; ++i) {
    Triangle t = testsup::random_triangle(rng);
    Point2 n0 = sample_exterior(rng, t);
    auto target = pedal_of(t, n0).pedal_angles;
    Point2 n = locate_exterior(t, target);
    CHECK(dist(n, n0) <= 1e-7 * t.circum.radius);

    Point2 m = locate_interior(t, target);
    Point2 o = t.circum.center;
    double R = t.circum.radius;
    CHECK(dist(o, m) * dist(o, n) == doctest::Approx(R * R).epsilon(1e-9));
    // Same ray from O.
    CHECK((m - o).dot(n - o) > 0);
    CHECK(std::abs((m - o).cross(n - o)) <=
          1e-9 * dist(o, m) * dist(o, n));
  }
}

TEST_CASE("locate_exterior rejects the base angles") {
  Triangle t = unit_equilateral();
  try {
    locate_exterior(t, AngleTriple(t.alpha, t.beta, t.gamma));
    CHECK(false);
  } catch (const geom_error& e) {
    CHECK(e.kind() == geom_error::code::identical_angles);
  }
}

TEST_CASE("conjugate view angles") {
  Triangle t = unit_equilateral();
  auto va = conjugate_view_angles(t, AngleTriple(kPi / 3, kPi / 3, kPi / 3));
  CHECK(va[0] == doctest::Approx(2 * kPi / 3).epsilon(1e-12));
  CHECK(va[1] == doctest::Approx(2 * kPi / 3).epsilon(1e-12));
  CHECK(va[2] == doctest::Approx(2 * kPi / 3).epsilon(1e-12));

  auto vb = conjugate_view_angles(t, angles(t));
  CHECK(vb[0] == doctest::Approx(kPi - t.alpha).epsilon(1e-12));

  // For M in sigma, the extended angles at iota(M) match (10).
  testsup::Rng rng(38);
  for (int i = 0; i < 200; ++i) {
    Triangle tt = testsup::random_triangle(rng);
    Point2 m = testsup::random_point_in_triangle(rng, tt, 0.05);
    RegionLabel r = classify_region(tt, m);
    if (r.k != RegionLabel::kind::sigma) {
      --i;
      continue;
    }
    auto target = pedal_of(tt, m).pedal_angles;
    Point2 y = isogonal_conjugate(tt, m);
    auto want = conjugate_view_angles(tt, target);
    CHECK(extended_angle(y, tt.B, tt.C, tt.A) ==
          doctest::Approx(want[0]).epsilon(1e-7));
    CHECK(extended_angle(y, tt.C, tt.A, tt.B) ==
          doctest::Approx(want[1]).epsilon(1e-7));
    CHECK(extended_angle(y, tt.A, tt.B, tt.C) ==
          doctest::Approx(want[2]).epsilon(1e-7));
  }
}
