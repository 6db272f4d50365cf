#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "isofermat/oracle.hpp"
#include "support.hpp"

using namespace isofermat;

namespace {

Triangle unit_equilateral() {
  return {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
}

}  // namespace

TEST_CASE("weiszfeld: equilateral with equal weights finds the center") {
  Triangle t = unit_equilateral();
  auto res = weiszfeld(t, Weights(1, 1, 1));
  CHECK(res.converged);
  Point2 center = (t.A + t.B + t.C) / 3.0;
  CHECK(dist(res.point, center) <= 1e-8);
  CHECK(res.value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));
}

TEST_CASE("weiszfeld: dominant weight stops at the vertex") {
  testsup::Rng rng(51);
  for (int i = 0; i < 20; ++i) {
    Triangle t = testsup::random_triangle(rng);
    auto res = weiszfeld(t, Weights(3, 1, 1));
    CHECK(dist(res.point, t.A) <= 1e-9 * t.max_side);
  }
}

TEST_CASE("weiszfeld value is a true local min against perturbations") {
  testsup::Rng rng(52);
  for (int i = 0; i < 50; ++i) {
    Triangle t = testsup::random_triangle(rng);
    std::uniform_real_distribution<double> d(0.3, 1.7);
    Weights w(d(rng), d(rng), d(rng));
    auto res = weiszfeld(t, w);
    double h = 1e-5 * t.max_side;
    for (int k = 0; k < 8; ++k) {
      double a = 2 * kPi * k / 8;
      Point2 p = res.point + Point2{std::cos(a), std::sin(a)} * h;
      CHECK(objective_positive(t, w, p) >= res.value - 1e-10 * res.value);
    }
  }
}

TEST_CASE("grid_refine agrees with weiszfeld on positive objectives") {
  testsup::Rng rng(53);
  for (int i = 0; i < 10; ++i) {
    Triangle t = testsup::random_triangle(rng);
    std::uniform_real_distribution<double> d(0.3, 1.7);
    Weights w(d(rng), d(rng), d(rng));
    auto wz = weiszfeld(t, w);
    auto gr = grid_refine(
        [&](Point2 p) { return objective_positive(t, w, p); },
        padded_bbox(t), {t.A, t.B, t.C}, 150);
    CHECK(gr.value == doctest::Approx(wz.value).epsilon(1e-4));
    // The refined value never exceeds the vertex values.
    CHECK(gr.value <= objective_positive(t, w, t.A) + 1e-12);
    CHECK(gr.value <= objective_positive(t, w, t.B) + 1e-12);
    CHECK(gr.value <= objective_positive(t, w, t.C) + 1e-12);
  }
}

TEST_CASE("grid_refine finds the zero of the Ptolemy-case mixed objective") {
  testsup::Rng rng(54);
  for (int i = 0; i < 5; ++i) {
    Triangle t = testsup::random_triangle(rng);
    Weights w(t.a, t.b, t.c);
    auto gr = grid_refine(
        [&](Point2 p) { return objective_mixed(t, w, VertexId::A, p); },
        padded_bbox(t), {t.A, t.B, t.C}, 200);
    double scale = (t.a + t.b + t.c) * t.max_side;
    CHECK(std::abs(gr.value) <= 1e-4 * scale);
  }
}

TEST_CASE("grid_refine matches the closed form on a mixed case-2 instance") {
  Triangle t = unit_equilateral();
  Weights w(1.2, 1.0, 1.0);
  auto sol = solve_mixed(t, w, VertexId::A);
  auto* im = sol.as<InteriorMin>();
  REQUIRE(im != nullptr);
  auto gr = grid_refine(
      [&](Point2 p) { return objective_mixed(t, w, VertexId::A, p); },
      padded_bbox(t), {t.A, t.B, t.C}, 300);
  CHECK(gr.value == doctest::Approx(im->value).epsilon(1e-5));
  CHECK(dist(gr.point, im->y) <= 1e-3 * t.max_side);
}
