#pragma once

// Shared samplers for the randomized tests. Everything is seeded
// deterministically; triangles are rejection-sampled to stay reasonably
// well conditioned so the tight relative tolerances are meaningful.

#include <cmath>
#include <functional>
#include <random>

#include "isofermat/isofermat.hpp"

namespace testsup {

using isofermat::Point2;
using isofermat::Triangle;

using Rng = std::mt19937_64;

inline Point2 random_point(Rng& rng, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  return {d(rng), d(rng)};
}

// Triangle with |area| >= min_quality * maxside^2, vertices in a box of a
// random scale so length units vary across samples.
inline Triangle random_triangle(Rng& rng, double min_quality = 0.05) {
  std::uniform_real_distribution<double> scale_d(0.1, 10.0);
  double s = scale_d(rng);
  for (;;) {
    Point2 a = random_point(rng) * s;
    Point2 b = random_point(rng) * s;
    Point2 c = random_point(rng) * s;
    double area = std::abs(isofermat::signed_area(a, b, c));
    double ms = std::max({isofermat::dist(a, b), isofermat::dist(b, c),
                          isofermat::dist(c, a)});
    if (ms > 0 && area >= min_quality * ms * ms) return Triangle(a, b, c);
  }
}

inline Point2 random_point_in_disk(Rng& rng, Point2 center, double radius) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (;;) {
    Point2 p{d(rng), d(rng)};
    if (p.norm2() <= 1.0) return center + p * radius;
  }
}

// Uniform in the triangle, with every barycentric coordinate >= margin.
inline Point2 random_point_in_triangle(Rng& rng, const Triangle& t,
                                       double margin = 0.0) {
  std::uniform_real_distribution<double> d(0.0, 1.0);
  for (;;) {
    double u = d(rng), v = d(rng);
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    double w = 1.0 - u - v;
    if (u < margin || v < margin || w < margin) continue;
    return t.A * u + t.B * v + t.C * w;
  }
}

// Rejection-sample a point in a disk of `reach` times the circumradius
// around the circumcenter until `accept` holds.
inline Point2 sample_where(Rng& rng, const Triangle& t,
                           const std::function<bool(Point2)>& accept,
                           double reach = 4.0, int max_tries = 200000) {
  for (int i = 0; i < max_tries; ++i) {
    Point2 p = random_point_in_disk(rng, t.circum.center,
                                    reach * t.circum.radius);
    if (accept(p)) return p;
  }
  throw std::runtime_error("sample_where: acceptance region not hit");
}

}  // namespace testsup
