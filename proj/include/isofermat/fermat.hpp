#pragma once

// Closed-form solvers for the weighted Fermat problem with three sites at
// the triangle's vertices: all-positive weights, and mixed weights (one
// negative, two positive).
//
// The weights (lam, mu, nu) form a weight triangle whose angles
// (alpha1, beta1, gamma1) drive the construction: the witness point is the
// point whose pedal triangle has those angles, and the minimizer is its
// isogonal conjugate. Both solvers relabel so the distinguished vertex is A,
// solve, then map the result back.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <variant>

#include "isofermat/geometry.hpp"
#include "isofermat/isogonal.hpp"
#include "isofermat/pedal.hpp"

namespace isofermat {

struct Weights {
  double lam, mu, nu;  // attached to A, B, C

  Weights(double l, double m, double n) : lam(l), mu(m), nu(n) {
    if (!(l > 0 && m > 0 && n > 0) || !std::isfinite(l) || !std::isfinite(m) ||
        !std::isfinite(n))
      throw geom_error(geom_error::code::invalid_argument,
                       "weights must be positive and finite");
  }

  double at(VertexId v) const {
    switch (v) {
      case VertexId::A: return lam;
      case VertexId::B: return mu;
      default: return nu;
    }
  }
};

// Angles of the triangle with side lengths (lam, mu, nu); alpha1 opposite
// lam. Fails when the weights violate the strict triangle inequality.
inline AngleTriple weight_angles(const Weights& w) {
  double s = w.lam + w.mu + w.nu;
  double tol = 1e-12 * s;
  if (w.lam >= w.mu + w.nu - tol || w.mu >= w.nu + w.lam - tol ||
      w.nu >= w.lam + w.mu - tol)
    throw geom_error(geom_error::code::not_a_triangle,
                     "weights do not form a triangle");
  auto ang = [](double opp, double s1, double s2) {
    double cs = (s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2);
    return std::acos(std::clamp(cs, -1.0, 1.0));
  };
  double a1 = ang(w.lam, w.mu, w.nu);
  double b1 = ang(w.mu, w.nu, w.lam);
  return AngleTriple(a1, b1, kPi - a1 - b1);
}

inline double objective_positive(const Triangle& t, const Weights& w,
                                 Point2 y) {
  return w.lam * dist(t.A, y) + w.mu * dist(t.B, y) + w.nu * dist(t.C, y);
}

inline double objective_mixed(const Triangle& t, const Weights& w,
                              VertexId neg, Point2 y) {
  double sa = neg == VertexId::A ? -1.0 : 1.0;
  double sb = neg == VertexId::B ? -1.0 : 1.0;
  double sc = neg == VertexId::C ? -1.0 : 1.0;
  return sa * w.lam * dist(t.A, y) + sb * w.mu * dist(t.B, y) +
         sc * w.nu * dist(t.C, y);
}

struct SolveReport {
  std::string case_taken;
  std::optional<AngleTriple> weight_angles;
  double kappa = 0.0;  // lam / sin(alpha1)
  std::string notes;
};

struct InteriorMin {
  Point2 y;           // minimizer
  Point2 witness;     // the point X (positive) / P (mixed) with the
                      // prescribed pedal angles
  double value;
  double pedal_R1;    // circumradius of the witness's pedal triangle
};

struct VertexMin {
  VertexId v;
  double value;
};

struct VertexTieMin {
  double value;  // common value at B and C (mixed problem)
};

struct ArcMin {
  Circle circle;  // the circumcircle; solution set is the closed arc BC
                  // not containing A
  double value;   // always 0
};

struct RejectedMin {
  std::string reason;
};

struct FermatSolution {
  std::variant<InteriorMin, VertexMin, VertexTieMin, ArcMin, RejectedMin>
      outcome;
  SolveReport report;

  template <class T>
  const T* as() const {
    return std::get_if<T>(&outcome);
  }
};

// Minimize lam*AY + mu*BY + nu*CY.
inline FermatSolution solve_positive(const Triangle& t, const Weights& w) {
  static constexpr VertexId ids[3] = {VertexId::A, VertexId::B, VertexId::C};

  // Dominant weight: the minimizer is that vertex.
  double s = w.lam + w.mu + w.nu;
  for (VertexId v : ids) {
    if (w.at(v) >= s - w.at(v) - 1e-12 * s) {
      FermatSolution sol;
      sol.outcome = VertexMin{v, objective_positive(t, w, t.vertex(v))};
      sol.report.case_taken = std::string("dominant-weight-") + vertex_name(v);
      return sol;
    }
  }

  AngleTriple wa = weight_angles(w);
  double kappa = w.lam / std::sin(wa.a1);
  Point2 x = locate_interior(t, wa);

  FermatSolution sol;
  sol.report.weight_angles = wa;
  sol.report.kappa = kappa;

  std::array<double, 3> sums{t.alpha + wa.a1, t.beta + wa.b1,
                             t.gamma + wa.g1};
  constexpr double boundary_tol = 1e-9;  // absolute radians
  for (int i = 0; i < 3; ++i) {
    if (sums[i] >= kPi - boundary_tol) {
      // Witness on the side opposite vertex i (sum = pi) or beyond it
      // (sum > pi): the minimizer is that vertex.
      sol.outcome =
          VertexMin{ids[i], objective_positive(t, w, t.vertex(ids[i]))};
      sol.report.case_taken = sums[i] <= kPi + boundary_tol
                                  ? std::string("witness-on-side-") +
                                        vertex_name(ids[i])
                                  : std::string("witness-exterior-") +
                                        vertex_name(ids[i]);
      return sol;
    }
  }

  PedalData pd = pedal_of(t, x);
  Point2 y = isogonal_conjugate(t, x);
  double value = kappa * t.area / pd.circumradius_R1;
  sol.outcome = InteriorMin{y, x, value, pd.circumradius_R1};
  sol.report.case_taken = "interior";
  return sol;
}

namespace detail {

// Cyclic rotation putting `neg` in the A slot; orientation is preserved.
struct Relabel {
  VertexId order[3];  // order[i] = original vertex sitting in slot i

  static Relabel to_front(VertexId neg) {
    switch (neg) {
      case VertexId::A:
        return {{VertexId::A, VertexId::B, VertexId::C}};
      case VertexId::B:
        return {{VertexId::B, VertexId::C, VertexId::A}};
      default:
        return {{VertexId::C, VertexId::A, VertexId::B}};
    }
  }

  Triangle apply(const Triangle& t) const {
    return Triangle(t.vertex(order[0]), t.vertex(order[1]),
                    t.vertex(order[2]));
  }

  Weights apply(const Weights& w) const {
    return Weights(w.at(order[0]), w.at(order[1]), w.at(order[2]));
  }

  VertexId back(VertexId slot) const {
    return order[static_cast<int>(slot)];
  }
};

}  // namespace detail

// True iff y lies in the closed half-plane bounded by the side line opposite
// `neg` that does not contain the vertex `neg`.
inline bool halfplane_invariant(const Triangle& t, VertexId neg, Point2 y) {
  auto rl = detail::Relabel::to_front(neg);
  Point2 a = t.vertex(rl.order[0]);
  Point2 b = t.vertex(rl.order[1]);
  Point2 c = t.vertex(rl.order[2]);
  int sa = side_of_line(b, c, a);
  int sy = side_of_line(b, c, y);
  return sy == 0 || sy != sa;
}

// Minimize -lam'*A'Y + mu'*B'Y + nu'*C'Y where A' is the vertex carrying the
// negative weight.
inline FermatSolution solve_mixed(const Triangle& t0, const Weights& w0,
                                  VertexId neg) {
  auto rl = detail::Relabel::to_front(neg);
  Triangle t = rl.apply(t0);
  Weights w = rl.apply(w0);

  FermatSolution sol;
  AngleTriple wa{};
  try {
    wa = weight_angles(w);
  } catch (const geom_error& e) {
    if (e.kind() != geom_error::code::not_a_triangle) throw;
    sol.outcome = RejectedMin{
        "weights violate the strict triangle inequality; the objective is "
        "unbounded below or the infimum is unattained"};
    sol.report.case_taken = "rejected";
    return sol;
  }
  double kappa = w.lam / std::sin(wa.a1);
  sol.report.weight_angles = wa;
  sol.report.kappa = kappa;

  constexpr double boundary_tol = 1e-9;  // absolute radians
  double db = wa.b1 - t.beta;
  double dg = wa.g1 - t.gamma;

  if (std::abs(db) <= boundary_tol && std::abs(dg) <= boundary_tol) {
    // Weights proportional to the sides: the objective vanishes on the
    // closed arc BC away from A (Ptolemy).
    sol.outcome = ArcMin{t.circum, 0.0};
    sol.report.case_taken = "arc";
    return sol;
  }

  if (db < -boundary_tol && dg < -boundary_tol) {
    Point2 p = locate_exterior(t, wa);
    Point2 q = isogonal_conjugate(t, p);
    PedalData pd = pedal_of(t, p);
    double value = -kappa * t.area / pd.circumradius_R1;
    sol.outcome = InteriorMin{q, p, value, pd.circumradius_R1};
    sol.report.case_taken = "conjugate-pair";
    return sol;
  }

  // Vertex comparison via the sine criterion.
  double d1 = (std::sin(wa.b1) - std::sin(wa.g1)) / std::sin(wa.a1);
  double d = (std::sin(t.beta) - std::sin(t.gamma)) / std::sin(t.alpha);
  double tol = 1e-12 * (std::abs(d1) + std::abs(d) + 1.0);
  double gB = objective_mixed(t0, w0, neg, t.B);
  double gC = objective_mixed(t0, w0, neg, t.C);
  if (std::abs(d1 - d) <= tol) {
    sol.outcome = VertexTieMin{gB};
    sol.report.case_taken = "vertex-tie";
  } else if (d1 > d) {
    sol.outcome = VertexMin{rl.back(VertexId::B), gB};
    sol.report.case_taken = "vertex-B";
  } else {
    sol.outcome = VertexMin{rl.back(VertexId::C), gC};
    sol.report.case_taken = "vertex-C";
  }
  return sol;
}

struct CriterionEquiv {
  bool sine_form;
  bool tan_half_form;
};

// The two equivalent vertex-comparison criteria:
//   (sin b1 - sin g1)/sin a1 > (sin b - sin g)/sin a
//   tan(b1/2) cot(g1/2) > tan(b/2) cot(g/2)
inline CriterionEquiv vertex_criterion_equiv(const AngleTriple& w,
                                             const AngleTriple& base) {
  bool sine = (std::sin(w.b1) - std::sin(w.g1)) / std::sin(w.a1) >
              (std::sin(base.b1) - std::sin(base.g1)) / std::sin(base.a1);
  bool tanh = std::tan(w.b1 / 2) / std::tan(w.g1 / 2) >
              std::tan(base.b1 / 2) / std::tan(base.g1 / 2);
  return {sine, tanh};
}

}  // namespace isofermat
