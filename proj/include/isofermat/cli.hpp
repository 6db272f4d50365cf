#pragma once

// Command-line front end. Subcommands: conjugate, classify, pedal, locate,
// fermat, verify, render, batch. Output is human-readable text by default or
// JSON with --json; batch reads and writes JSONL.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isofermat/fermat.hpp"
#include "isofermat/geometry.hpp"
#include "isofermat/isogonal.hpp"
#include "isofermat/oracle.hpp"
#include "isofermat/pedal.hpp"
#include "isofermat/svg.hpp"

namespace isofermat::cli {

using nlohmann::json;

namespace detail {

inline Point2 parse_point(const std::string& s) {
  double x, y;
  char comma;
  std::istringstream is(s);
  if (!(is >> x >> comma >> y) || comma != ',')
    throw geom_error(geom_error::code::invalid_argument,
                     "expected point as x,y: " + s);
  return {x, y};
}

inline std::array<double, 3> parse_triple(const std::string& s) {
  double a, b, c;
  char c1, c2;
  std::istringstream is(s);
  if (!(is >> a >> c1 >> b >> c2 >> c) || c1 != ',' || c2 != ',')
    throw geom_error(geom_error::code::invalid_argument,
                     "expected triple as a,b,c: " + s);
  return {a, b, c};
}

inline Triangle parse_triangle(const std::vector<std::string>& pts) {
  if (pts.size() != 3)
    throw geom_error(geom_error::code::invalid_argument,
                     "--triangle needs exactly three points");
  return Triangle(parse_point(pts[0]), parse_point(pts[1]),
                  parse_point(pts[2]));
}

inline VertexId parse_vertex(const std::string& s) {
  if (s == "A") return VertexId::A;
  if (s == "B") return VertexId::B;
  if (s == "C") return VertexId::C;
  throw geom_error(geom_error::code::invalid_argument,
                   "vertex must be A, B or C: " + s);
}

inline json point_json(Point2 p) { return json::array({p.x, p.y}); }

inline json angles_json(const AngleTriple& a) {
  return json::array({a.a1, a.b1, a.g1});
}

inline const char* region_name(RegionLabel::kind k) {
  switch (k) {
    case RegionLabel::kind::sigma: return "sigma";
    case RegionLabel::kind::sigma12: return "sigma12";
    case RegionLabel::kind::sigma13: return "sigma13";
    case RegionLabel::kind::sigma13_prime: return "sigma13_prime";
    case RegionLabel::kind::on_circumcircle: return "on_circumcircle";
    case RegionLabel::kind::side_line: return "side_line";
    default: return "vertex";
  }
}

inline json region_json(const RegionLabel& r) {
  json j{{"region", region_name(r.k)}};
  if (r.vertex) j["vertex"] = vertex_name(*r.vertex);
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

inline json type_json(const ConjugacyType& ty) {
  json j;
  switch (ty.k) {
    case ConjugacyType::kind::type_i: j["type"] = "I"; break;
    case ConjugacyType::kind::type_ii: j["type"] = "II"; break;
    case ConjugacyType::kind::type_iii: j["type"] = "III"; break;
    default: j["type"] = "not_conjugate"; break;
  }
  if (ty.vertex) j["vertex"] = vertex_name(*ty.vertex);
  return j;
}

inline json report_json(const SolveReport& r) {
  json j{{"case", r.case_taken}};
  if (r.weight_angles) j["weight_angles"] = angles_json(*r.weight_angles);
  if (r.kappa != 0.0) j["kappa"] = r.kappa;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

inline json solution_json(const FermatSolution& sol) {
  json j;
  if (auto* im = sol.as<InteriorMin>()) {
    j["case"] = "interior";
    j["point"] = point_json(im->y);
    j["witness"] = point_json(im->witness);
    j["value"] = im->value;
    j["pedal_R1"] = im->pedal_R1;
  } else if (auto* vm = sol.as<VertexMin>()) {
    j["case"] = "vertex";
    j["vertex"] = vertex_name(vm->v);
    j["value"] = vm->value;
  } else if (auto* tm = sol.as<VertexTieMin>()) {
    j["case"] = "vertex_tie";
    j["value"] = tm->value;
  } else if (auto* am = sol.as<ArcMin>()) {
    j["case"] = "arc";
    j["value"] = am->value;
    j["circle"] = {{"center", point_json(am->circle.center)},
                   {"radius", am->circle.radius}};
  } else if (auto* rm = sol.as<RejectedMin>()) {
    j["case"] = "rejected";
    j["reason"] = rm->reason;
  }
  j["report"] = report_json(sol.report);
  return j;
}

inline void print_human(std::ostream& out, const json& j,
                        const std::string& prefix = "") {
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) {
      std::string key = prefix.empty() ? k : prefix + "." + k;
      if (v.is_object())
        print_human(out, v, key);
      else
        out << key << ": " << v.dump() << "\n";
    }
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

// ---- operation handlers shared by subcommands and batch ----

inline json op_conjugate(const Triangle& t, Point2 p) {
  Point2 q = isogonal_conjugate(t, p);
  json j{{"point", point_json(q)}};
  auto bc = barycentric(t, p);
  double area_eps = kEpsLine * t.max_side * t.max_side;
  static const char* opp[3] = {"A", "B", "C"};
  for (int i = 0; i < 3; ++i)
    if (std::abs(bc[i]) <= area_eps)
      j["note"] = std::string("input on a side line; conjugate is vertex ") +
                  opp[i];
  return j;
}

inline json op_classify(const Triangle& t, Point2 p,
                        std::optional<Point2> pair) {
  json j{{"region", region_json(classify_region(t, p))}};
  if (pair) {
    j["pair_region"] = region_json(classify_region(t, *pair));
    j["conjugacy"] = type_json(classify_conjugacy(t, p, *pair));
  }
  return j;
}

inline json op_pedal(const Triangle& t, Point2 p) {
  PedalData pd = pedal_of(t, p);
  return json{{"feet",
               {{"A1", point_json(pd.feet.A)},
                {"B1", point_json(pd.feet.B)},
                {"C1", point_json(pd.feet.C)}}},
              {"angles", angles_json(pd.pedal_angles)},
              {"R1", pd.circumradius_R1},
              {"orientation", pd.orientation}};
}

inline json op_locate(const Triangle& t, const AngleTriple& target,
                      bool exterior) {
  Point2 m = exterior ? locate_exterior(t, target) : locate_interior(t, target);
  json j{{"point", point_json(m)}};
  auto va = conjugate_view_angles(t, target);
  j["conjugate_view_angles"] = json::array({va[0], va[1], va[2]});
  return j;
}

inline json op_fermat(const Triangle& t, const Weights& w,
                      std::optional<VertexId> neg) {
  FermatSolution sol =
      neg ? solve_mixed(t, w, *neg) : solve_positive(t, w);
  return solution_json(sol);
}

inline json op_verify(const Triangle& t, Point2 x, Point2 y,
                      const std::string& form, VertexId vertex, double tol) {
  std::array<int, 3> signs{1, 1, 1};
  double abc = t.a * t.b * t.c;
  double rhs = abc;
  if (form == "II" || form == "III") {
    signs[static_cast<int>(vertex)] = -1;
    rhs = form == "II" ? -abc : abc;
  } else if (form != "I") {
    throw geom_error(geom_error::code::invalid_argument,
                     "--form must be I, II or III");
  }
  double lhs = signed_form(t, x, y, signs);
  double slack = lhs - rhs;
  json j{{"lhs", lhs},
         {"rhs", rhs},
         {"slack", slack},
         {"conjugacy", type_json(classify_conjugacy(t, x, y))}};
  if (form == "I")
    j["verdict"] = slack >= -tol * abc
                       ? (std::abs(slack) <= tol * abc ? "equality" : "strict")
                       : "violated";
  else if (form == "II")
    j["verdict"] = lhs >= -abc * (1 + tol)
                       ? (std::abs(slack) <= tol * abc ? "equality" : "strict")
                       : "violated";
  else
    j["verdict"] = std::abs(slack) <= tol * abc ? "equality" : "no_equality";
  return j;
}

inline Triangle triangle_from_json(const json& spec) {
  auto& tj = spec.at("triangle");
  if (!tj.is_array() || tj.size() != 3)
    throw geom_error(geom_error::code::invalid_argument,
                     "triangle must be three [x,y] pairs");
  auto pt = [](const json& p) {
    return Point2(p.at(0).get<double>(), p.at(1).get<double>());
  };
  return Triangle(pt(tj.at(0)), pt(tj.at(1)), pt(tj.at(2)));
}

inline json run_batch_line(const json& spec) {
  std::string op = spec.at("op").get<std::string>();
  Triangle t = triangle_from_json(spec);
  auto pt = [&](const json& p) {
    return Point2(p.at(0).get<double>(), p.at(1).get<double>());
  };
  if (op == "conjugate") return op_conjugate(t, pt(spec.at("points").at(0)));
  if (op == "classify") {
    auto& pts = spec.at("points");
    std::optional<Point2> pair;
    if (pts.size() > 1) pair = pt(pts.at(1));
    return op_classify(t, pt(pts.at(0)), pair);
  }
  if (op == "pedal") return op_pedal(t, pt(spec.at("points").at(0)));
  if (op == "locate") {
    auto& aj = spec.at("angles");
    AngleTriple target(aj.at(0).get<double>(), aj.at(1).get<double>(),
                       aj.at(2).get<double>());
    return op_locate(t, target, spec.value("exterior", false));
  }
  if (op == "fermat") {
    auto& wj = spec.at("weights");
    Weights w(wj.at(0).get<double>(), wj.at(1).get<double>(),
              wj.at(2).get<double>());
    std::optional<VertexId> neg;
    if (spec.contains("negative") && !spec.at("negative").is_null())
      neg = parse_vertex(spec.at("negative").get<std::string>());
    return op_fermat(t, w, neg);
  }
  if (op == "verify") {
    auto& pts = spec.at("points");
    std::string form = spec.value("form", "I");
    VertexId vertex = parse_vertex(spec.value("vertex", "A"));
    double tol = spec.value("tol", 1e-9);
    return op_verify(t, pt(pts.at(0)), pt(pts.at(1)), form, vertex, tol);
  }
  throw geom_error(geom_error::code::invalid_argument, "unknown op: " + op);
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"weighted Fermat problems and isogonal conjugacy for "
               "triangles"};
  app.require_subcommand(1);

  bool as_json = false;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  app.add_flag("--json", as_json, "emit JSON instead of text");
  app.add_option("--tol", tol, "report tolerance (never affects construction)");
  app.add_option("--seed", seed, "seed for sampling-based modes");

  std::vector<std::string> tri_opts;
  std::string point_s, pair_s, x_s, y_s, weights_s, angles_s;
  std::string negative_s, form_s = "I", vertex_s = "A";
  std::string in_path, out_path;
  bool exterior = false;

  auto add_triangle = [&](CLI::App* cmd) {
    cmd->add_option("--triangle", tri_opts, "three vertices as x,y x,y x,y")
        ->expected(3)
        ->required();
  };

  auto* c_conj = app.add_subcommand("conjugate", "isogonal conjugate of a point");
  add_triangle(c_conj);
  c_conj->add_option("--point", point_s)->required();

  auto* c_cls = app.add_subcommand("classify", "region (and pair type)");
  add_triangle(c_cls);
  c_cls->add_option("--point", point_s)->required();
  c_cls->add_option("--pair", pair_s);

  auto* c_ped = app.add_subcommand("pedal", "pedal triangle of a point");
  add_triangle(c_ped);
  c_ped->add_option("--point", point_s)->required();

  auto* c_loc = app.add_subcommand("locate",
                                   "point with prescribed pedal angles");
  add_triangle(c_loc);
  c_loc->add_option("--angles", angles_s, "target angles a,b,g")->required();
  c_loc->add_flag("--exterior", exterior, "locate the exterior point");

  auto* c_fer = app.add_subcommand("fermat", "solve the weighted Fermat problem");
  add_triangle(c_fer);
  c_fer->add_option("--weights", weights_s, "l,m,n")->required();
  c_fer->add_option("--negative", negative_s,
                    "vertex carrying the negative weight (mixed problem)");

  auto* c_ver = app.add_subcommand("verify", "evaluate a characterizing form");
  add_triangle(c_ver);
  c_ver->add_option("--x", x_s)->required();
  c_ver->add_option("--y", y_s)->required();
  c_ver->add_option("--form", form_s, "I, II or III");
  c_ver->add_option("--vertex", vertex_s, "distinguished vertex for II/III");

  auto* c_ren = app.add_subcommand("render", "emit an SVG figure");
  add_triangle(c_ren);
  c_ren->add_option("--weights", weights_s, "l,m,n");
  c_ren->add_option("--negative", negative_s);
  c_ren->add_option("--out", out_path, "output file (default stdout)");

  auto* c_bat = app.add_subcommand("batch", "JSONL in, JSONL out");
  c_bat->add_option("--in", in_path, "input file (default stdin)");
  c_bat->add_option("--out", out_path, "output file (default stdout)");

  // Let the global flags (--json, --tol, --seed) appear after a subcommand.
  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    json result;
    if (c_bat->parsed()) {
      std::ifstream fin;
      std::ofstream fout;
      std::istream* in = &std::cin;
      std::ostream* os = &out;
      if (!in_path.empty()) {
        fin.open(in_path);
        if (!fin) {
          err << "error: cannot open " << in_path << "\n";
          return 2;
        }
        in = &fin;
      }
      if (!out_path.empty()) {
        fout.open(out_path);
        if (!fout) {
          err << "error: cannot open " << out_path << "\n";
          return 2;
        }
        os = &fout;
      }
      std::string line;
      while (std::getline(*in, line)) {
        if (line.empty()) continue;
        json res;
        try {
          json spec = json::parse(line);
          res = {{"ok", true}, {"result", detail::run_batch_line(spec)}};
        } catch (const std::exception& e) {
          res = {{"ok", false}, {"error", e.what()}};
        }
        *os << res.dump() << "\n";
      }
      return 0;
    }

    if (c_ren->parsed()) {
      Triangle t = detail::parse_triangle(tri_opts);
      std::string doc;
      if (!weights_s.empty()) {
        auto wt = detail::parse_triple(weights_s);
        Weights w(wt[0], wt[1], wt[2]);
        FermatSolution sol =
            negative_s.empty()
                ? solve_positive(t, w)
                : solve_mixed(t, w, detail::parse_vertex(negative_s));
        if (sol.as<RejectedMin>()) {
          err << "error: instance rejected: "
              << sol.as<RejectedMin>()->reason << "\n";
          return 3;
        }
        doc = render_svg(t, &sol);
      } else {
        doc = render_svg(t);
      }
      if (out_path.empty()) {
        out << doc;
      } else {
        std::ofstream f(out_path);
        if (!f) {
          err << "error: cannot open " << out_path << "\n";
          return 2;
        }
        f << doc;
      }
      return 0;
    }

    Triangle t = detail::parse_triangle(tri_opts);
    if (c_conj->parsed()) {
      result = detail::op_conjugate(t, detail::parse_point(point_s));
    } else if (c_cls->parsed()) {
      std::optional<Point2> pair;
      if (!pair_s.empty()) pair = detail::parse_point(pair_s);
      result = detail::op_classify(t, detail::parse_point(point_s), pair);
    } else if (c_ped->parsed()) {
      result = detail::op_pedal(t, detail::parse_point(point_s));
    } else if (c_loc->parsed()) {
      auto a = detail::parse_triple(angles_s);
      result = detail::op_locate(t, AngleTriple(a[0], a[1], a[2]), exterior);
    } else if (c_fer->parsed()) {
      auto wt = detail::parse_triple(weights_s);
      Weights w(wt[0], wt[1], wt[2]);
      std::optional<VertexId> neg;
      if (!negative_s.empty()) neg = detail::parse_vertex(negative_s);
      result = detail::op_fermat(t, w, neg);
      if (result.value("case", "") == "rejected") {
        if (as_json)
          out << result.dump() << "\n";
        else
          detail::print_human(out, result);
        return 3;
      }
    } else if (c_ver->parsed()) {
      result = detail::op_verify(t, detail::parse_point(x_s),
                                 detail::parse_point(y_s), form_s,
                                 detail::parse_vertex(vertex_s), tol);
    }

    if (as_json)
      out << result.dump() << "\n";
    else
      detail::print_human(out, result);
    return 0;
  } catch (const geom_error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == geom_error::code::not_a_triangle ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace isofermat::cli
