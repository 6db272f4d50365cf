#pragma once

// Brute-force minimizers used to validate the closed-form solvers. They are
// deliberately slow and structure-blind; the solvers never call them.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>

#include "isofermat/fermat.hpp"
#include "isofermat/geometry.hpp"

namespace isofermat {

struct OracleResult {
  Point2 point;
  double value = 0.0;
  std::int64_t iterations = 0;
  bool converged = false;
};

// Weiszfeld fixed-point iteration for the positive-weight problem, started
// at the weighted centroid. Iterates landing on a vertex are resolved with
// the standard vertex-optimality test: the vertex is optimal iff the norm of
// the pulled-back gradient does not exceed the vertex weight.
inline OracleResult weiszfeld(const Triangle& t, const Weights& w,
                              double tol = 1e-12,
                              std::int64_t max_iter = 200000) {
  const Point2 sites[3] = {t.A, t.B, t.C};
  const double ws[3] = {w.lam, w.mu, w.nu};
  double diam = t.max_side;

  Point2 y = (t.A * w.lam + t.B * w.mu + t.C * w.nu) / (w.lam + w.mu + w.nu);
  double prev = objective_positive(t, w, y);

  OracleResult res;
  for (std::int64_t it = 0; it < max_iter; ++it) {
    ++res.iterations;
    // Vertex handling.
    int at_vertex = -1;
    for (int i = 0; i < 3; ++i)
      if (dist(y, sites[i]) <= tol * diam) at_vertex = i;
    if (at_vertex >= 0) {
      Point2 g{0, 0};
      double lipschitz = 0;
      for (int i = 0; i < 3; ++i) {
        if (i == at_vertex) continue;
        double d = dist(sites[i], sites[at_vertex]);
        g = g + (sites[i] - sites[at_vertex]) * (ws[i] / d);
        lipschitz += ws[i] / d;
      }
      double gn = g.norm();
      if (gn <= ws[at_vertex]) {
        res.point = sites[at_vertex];
        res.value = objective_positive(t, w, res.point);
        res.converged = true;
        return res;
      }
      // Step off the vertex along the pulled-back gradient.
      y = sites[at_vertex] + g * ((gn - ws[at_vertex]) / (gn * lipschitz));
      prev = objective_positive(t, w, y);
      continue;
    }

    Point2 num{0, 0};
    double den = 0;
    for (int i = 0; i < 3; ++i) {
      double d = dist(y, sites[i]);
      num = num + sites[i] * (ws[i] / d);
      den += ws[i] / d;
    }
    Point2 next = num / den;
    double cur = objective_positive(t, w, next);
    // The iteration is monotone; tiny rounding excursions are tolerated.
    if (cur > prev + 1e-12 * (std::abs(prev) + 1))
      throw geom_error(geom_error::code::invalid_argument,
                       "weiszfeld: objective increased");
    double step = dist(next, y);
    y = next;
    prev = cur;
    if (step < tol * diam) {
      res.converged = true;
      break;
    }
  }
  // Snap to a vertex when one is strictly better (slow sublinear approach).
  res.point = y;
  res.value = prev;
  for (int i = 0; i < 3; ++i) {
    double v = objective_positive(t, w, sites[i]);
    if (v < res.value) {
      res.point = sites[i];
      res.value = v;
    }
  }
  return res;
}

struct BBox {
  double xmin, ymin, xmax, ymax;
};

// Axis-aligned box around the triangle, padded on each side by `pad` times
// the triangle's longest side.
inline BBox padded_bbox(const Triangle& t, double pad = 3.0) {
  double xmin = std::min({t.A.x, t.B.x, t.C.x});
  double xmax = std::max({t.A.x, t.B.x, t.C.x});
  double ymin = std::min({t.A.y, t.B.y, t.C.y});
  double ymax = std::max({t.A.y, t.B.y, t.C.y});
  double p = pad * t.max_side;
  return {xmin - p, ymin - p, xmax + p, ymax + p};
}

// Coarse grid scan followed by compass-search refinement from the best grid
// cell and from any caller-provided extra starts (typically the triangle's
// vertices). Deterministic.
inline OracleResult grid_refine(
    const std::function<double(Point2)>& objective, const BBox& box,
    const std::vector<Point2>& extra_starts = {}, int grid_n = 400,
    int refine_iters = 200) {
  OracleResult res;
  res.value = std::numeric_limits<double>::infinity();

  double dx = (box.xmax - box.xmin) / (grid_n - 1);
  double dy = (box.ymax - box.ymin) / (grid_n - 1);
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      Point2 p{box.xmin + i * dx, box.ymin + j * dy};
      double v = objective(p);
      ++res.iterations;
      if (v < res.value ||
          (v == res.value && (p.x < res.point.x ||
                              (p.x == res.point.x && p.y < res.point.y)))) {
        res.value = v;
        res.point = p;
      }
    }
  }

  auto refine = [&](Point2 start) {
    Point2 best = start;
    double bestv = objective(best);
    double step = std::max(dx, dy);
    for (int it = 0; it < refine_iters && step > 1e-14 * (box.xmax - box.xmin);
         ++it) {
      bool improved = false;
      const Point2 dirs[8] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                              {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};
      for (Point2 d : dirs) {
        Point2 cand = best + d * step;
        double v = objective(cand);
        ++res.iterations;
        if (v < bestv) {
          bestv = v;
          best = cand;
          improved = true;
        }
      }
      if (!improved) step *= 0.5;
    }
    if (bestv < res.value) {
      res.value = bestv;
      res.point = best;
    }
  };

  refine(res.point);
  for (Point2 s : extra_starts) refine(s);
  res.converged = true;
  return res;
}

}  // namespace isofermat
