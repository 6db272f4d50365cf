#pragma once

// Static SVG figures for solved instances: triangle, circumcircle, witness
// point and its pedal triangle, the minimizer (or the solution arc), and the
// dashed viewing-angle locus circles.

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "isofermat/fermat.hpp"
#include "isofermat/geometry.hpp"
#include "isofermat/pedal.hpp"

namespace isofermat {
namespace svg {

class Writer {
 public:
  Writer(Point2 center, double half_extent)
      : cx_(center.x), cy_(center.y), ext_(half_extent) {
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         << "viewBox=\"" << num(cx_ - ext_) << " " << num(-cy_ - ext_) << " "
         << num(2 * ext_) << " " << num(2 * ext_) << "\">\n";
    stroke_width_ = ext_ / 200.0;
  }

  void circle(Point2 c, double r, const std::string& stroke,
              bool dashed = false) {
    out_ << "  <circle cx=\"" << num(c.x) << "\" cy=\"" << num(-c.y)
         << "\" r=\"" << num(r) << "\" fill=\"none\" stroke=\"" << stroke
         << "\" stroke-width=\"" << num(stroke_width_) << "\"";
    if (dashed)
      out_ << " stroke-dasharray=\"" << num(4 * stroke_width_) << " "
           << num(4 * stroke_width_) << "\"";
    out_ << "/>\n";
  }

  void polygon(const std::vector<Point2>& pts, const std::string& stroke,
               const std::string& fill = "none") {
    out_ << "  <polygon points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i) out_ << " ";
      out_ << num(pts[i].x) << "," << num(-pts[i].y);
    }
    out_ << "\" fill=\"" << fill << "\" stroke=\"" << stroke
         << "\" stroke-width=\"" << num(stroke_width_) << "\"/>\n";
  }

  void polyline(const std::vector<Point2>& pts, const std::string& stroke,
                double width_scale = 1.0) {
    out_ << "  <polyline points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i) out_ << " ";
      out_ << num(pts[i].x) << "," << num(-pts[i].y);
    }
    out_ << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
         << num(width_scale * stroke_width_) << "\"/>\n";
  }

  void dot(Point2 p, const std::string& fill) {
    out_ << "  <circle cx=\"" << num(p.x) << "\" cy=\"" << num(-p.y)
         << "\" r=\"" << num(2.5 * stroke_width_) << "\" fill=\"" << fill
         << "\"/>\n";
  }

  void label(Point2 p, const std::string& text) {
    out_ << "  <text x=\"" << num(p.x + 3 * stroke_width_) << "\" y=\""
         << num(-p.y - 3 * stroke_width_) << "\" font-size=\""
         << num(10 * stroke_width_) << "\">" << text << "</text>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  static std::string num(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
  }

  std::ostringstream out_;
  double cx_, cy_, ext_, stroke_width_;
};

// Points along the arc of `c` from p to q avoiding `avoid`.
inline std::vector<Point2> arc_points(const Circle& c, Point2 p, Point2 q,
                                      Point2 avoid, int n = 64) {
  auto ang = [&](Point2 z) {
    return std::atan2(z.y - c.center.y, z.x - c.center.x);
  };
  double tp = ang(p), tq = ang(q), ta = ang(avoid);
  double sweep = std::fmod(tq - tp + 4 * kPi, 2 * kPi);
  double to_avoid = std::fmod(ta - tp + 4 * kPi, 2 * kPi);
  if (to_avoid < sweep) sweep -= 2 * kPi;
  std::vector<Point2> pts;
  pts.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    double t = tp + sweep * i / n;
    pts.push_back(c.center +
                  Point2{std::cos(t), std::sin(t)} * c.radius);
  }
  return pts;
}

}  // namespace svg

// Figure for a solved instance. Draws the base triangle and circumcircle
// always; adds the solver's witness construction when one exists.
inline std::string render_svg(const Triangle& t,
                              const FermatSolution* sol = nullptr) {
  double ext = 1.2 * t.circum.radius;
  // Widen so exterior witnesses stay in frame.
  if (sol) {
    if (auto* im = sol->as<InteriorMin>()) {
      double d = std::max(dist(im->witness, t.circum.center),
                          dist(im->y, t.circum.center));
      ext = std::max(ext, 1.2 * d);
    }
  }
  svg::Writer w(t.circum.center, ext);
  w.circle(t.circum.center, t.circum.radius, "#888888");
  w.polygon({t.A, t.B, t.C}, "#000000");
  w.dot(t.A, "#000000");
  w.dot(t.B, "#000000");
  w.dot(t.C, "#000000");
  w.label(t.A, "A");
  w.label(t.B, "B");
  w.label(t.C, "C");

  if (sol) {
    if (auto* im = sol->as<InteriorMin>()) {
      PedalData pd = pedal_of(t, im->witness);
      w.polygon({pd.feet.A, pd.feet.B, pd.feet.C}, "#2a9d8f");
      w.dot(im->witness, "#2a9d8f");
      w.label(im->witness, "X");
      w.dot(im->y, "#d62828");
      w.label(im->y, "Y");
      // Viewing-angle locus circles through each vertex pair and Y.
      const Point2 pairs[3][2] = {{t.B, t.C}, {t.C, t.A}, {t.A, t.B}};
      for (auto& pq : pairs) {
        try {
          Triangle locus(pq[0], pq[1], im->y);
          w.circle(locus.circum.center, locus.circum.radius, "#d62828", true);
        } catch (const geom_error&) {
          // Y collinear with the pair; no locus circle to draw.
        }
      }
    } else if (auto* vm = sol->as<VertexMin>()) {
      w.dot(t.vertex(vm->v), "#d62828");
      w.label(t.vertex(vm->v), std::string("Y=") + vertex_name(vm->v));
    } else if (sol->as<VertexTieMin>()) {
      w.dot(t.B, "#d62828");
      w.dot(t.C, "#d62828");
    } else if (auto* am = sol->as<ArcMin>()) {
      w.polyline(svg::arc_points(am->circle, t.B, t.C, t.A), "#d62828", 2.0);
    }
  }
  return w.finish();
}

}  // namespace isofermat
