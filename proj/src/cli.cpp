#include "surfcls/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "surfcls/classify.hpp"
#include "surfcls/error.hpp"
#include "surfcls/io.hpp"
#include "surfcls/planegeom.hpp"
#include "surfcls/rewrite.hpp"
#include "surfcls/simplicial.hpp"

namespace surfcls {

namespace {

using nlohmann::ordered_json;

struct Opts {
  std::vector<std::string> files;
  bool json = false;
  bool trace = false;
  std::string out;
  std::size_t iters = 6;
  std::string preset;
  std::optional<std::uint64_t> seed;
  std::string point;
  mutable std::string current;  // file being processed, for diagnostics
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Result text goes to --out when given, else stdout.
void emit(const Opts& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
  }
}

std::string load_text(const Opts& o, const std::string& path) {
  o.current = path;
  return read_file(path);
}

CellFile load_cells(const std::string& path) {
  std::string text = read_file(path);
  if (looks_simplicial(text)) {
    throw Error(ErrorCode::ParseError, "expected a cell complex, got a triangle list");
  }
  return parse_cell_complex(text);
}

// --seed: scramble the input and check that classification does not move.
void seed_check(const Opts& o, const CellComplex& k, const SurfaceClass& c, std::ostream& err) {
  if (!o.seed) return;
  CellComplex s = scramble(k, *o.seed, 40);
  SurfaceClass c2 = classify(s);
  if (!(c2.form == c.form) || invariant_report(s).euler != c.euler) {
    throw Error(ErrorCode::InternalInvariantViolation,
                "self-test: scrambled complex classifies as " + format_normal_form(c2.form));
  }
  err << "note: self-test with seed " << *o.seed << " (40 moves): classification unchanged\n";
}

ordered_json class_json(const InvariantReport& r, const SurfaceClass& c) {
  Presentation pg = fundamental_group(c.form);
  ordered_json j;
  j["orientable"] = r.orientable;
  j["contours"] = r.num_contours;
  j["euler"] = r.euler;
  j["type"] = c.form.kind == NormalKind::TypeI ? "I" : "II";
  j["p"] = c.form.p;
  j["q"] = c.form.q;
  j["genus"] = c.genus;
  j["name"] = c.name;
  j["normal_word"] = format_word(c.canonical_word);
  j["h1"] = group_format(h1_from_normal_form(c.form));
  j["pi1_generators"] = pg.generators;
  if (pg.relators.empty()) {
    j["pi1_relator"] = nullptr;
  } else {
    j["pi1_relator"] = pg.relators.front().empty() ? "1" : format_word(pg.relators.front());
  }
  return j;
}

int cmd_validate(const Opts& o, std::ostream& out, std::ostream& err) {
  std::string text_out;
  for (const std::string& path : o.files) {
    o.current = path;
    std::string text = read_file(path);
    std::ostringstream line;
    if (looks_simplicial(text)) {
      SimplicialComplex2 s = SimplicialComplex2::build(parse_simplicial(text));
      SurfaceReport closed = validate_closed_surface(s);
      SurfaceReport rep = closed.ok ? closed : validate_bordered_surface(s);
      if (!rep.ok) {
        for (std::size_t i = 1; i < rep.violations.size(); ++i)
          err << "E_NOT_A_SURFACE: " << path << ": " << rep.violations[i] << "\n";
        throw Error(ErrorCode::NotASurface, rep.violations.front());
      }
      long chi = euler_simplicial(s);
      if (o.json) {
        ordered_json j{{"file", path},
                       {"valid", true},
                       {"kind", "simplicial"},
                       {"closed", closed.ok},
                       {"vertices", s.vertices().size()},
                       {"edges", s.edges().size()},
                       {"triangles", s.triangles().size()},
                       {"euler", chi}};
        line << j.dump() << "\n";
      } else {
        line << path << ": valid " << (closed.ok ? "closed" : "bordered") << " surface triangulation, V="
             << s.vertices().size() << " E=" << s.edges().size() << " T=" << s.triangles().size()
             << " euler=" << chi << "\n";
      }
    } else {
      CellFile f = parse_cell_complex(text);
      InvariantReport r = invariant_report(f.complex);
      if (o.seed) seed_check(o, f.complex, classify(f.complex), err);
      if (o.json) {
        ordered_json j{{"file", path},         {"valid", true},      {"kind", "cell"},
                       {"faces", r.n2},        {"edges", r.n1},      {"vertices", r.n0},
                       {"orientable", r.orientable}, {"contours", r.num_contours}, {"euler", r.euler}};
        line << j.dump() << "\n";
      } else {
        line << path << ": valid cell complex, faces=" << r.n2 << " edges=" << r.n1 << " vertices=" << r.n0
             << " orientable=" << yes_no(r.orientable) << " contours=" << r.num_contours
             << " euler=" << r.euler << "\n";
      }
    }
    text_out += line.str();
  }
  emit(o, out, text_out);
  return 0;
}

int cmd_classify(const Opts& o, std::ostream& out, std::ostream& err) {
  std::string text_out;
  for (const std::string& path : o.files) {
    o.current = path;
    CellFile f = load_cells(path);
    NormalizationResult n = normalize(f.complex);
    SurfaceClass c = classify(f.complex, n);
    InvariantReport r = invariant_report(f.complex);
    seed_check(o, f.complex, c, err);
    if (o.json) {
      ordered_json j = class_json(r, c);
      if (o.files.size() > 1) j["file"] = path;
      text_out += j.dump() + "\n";
      continue;
    }
    std::ostringstream s;
    if (o.files.size() > 1) s << "== " << path << "\n";
    s << "name: " << c.name << "\n"
      << "orientable: " << yes_no(r.orientable) << "\n"
      << "contours: " << r.num_contours << "\n"
      << "euler: " << r.euler << "\n"
      << "normal form: " << format_normal_form(c.form) << "\n"
      << "genus: " << c.genus << "\n"
      << "normal word: " << format_word(c.canonical_word) << "\n"
      << "H1: " << group_format(h1_from_normal_form(c.form)) << "\n"
      << "pi1: " << format_presentation(fundamental_group(c.form)) << "\n";
    text_out += s.str();
  }
  emit(o, out, text_out);
  return 0;
}

int cmd_normalize(const Opts& o, std::ostream& out, std::ostream& err) {
  if (o.files.size() != 1) throw Usage("normalize takes exactly one file");
  CellFile f = load_cells(o.files.front());
  NormalizationResult n = normalize(f.complex);
  if (o.seed) seed_check(o, f.complex, classify(f.complex, n), err);
  if (o.trace && !o.json)
    for (const Move& m : n.trace) out << format_move(m) << "\n";
  if (o.json) {
    ordered_json j{{"type", n.normal.kind == NormalKind::TypeI ? "I" : "II"},
                   {"p", n.normal.p},
                   {"q", n.normal.q},
                   {"normal_word", format_word(n.canonical_word)},
                   {"moves", n.trace.size()}};
    if (o.trace) {
      ordered_json t = ordered_json::array();
      for (const Move& m : n.trace) t.push_back(format_move(m));
      j["trace"] = t;
    }
    out << j.dump() << "\n";
  } else {
    out << format_normal_form(n.normal) << "\n" << format_word(n.canonical_word) << "\n";
  }
  if (!o.out.empty()) {
    write_file(o.out, format_cell_complex(canonical_complex(n.normal), surface_name(n.normal)));
  }
  return 0;
}

int cmd_homology(const Opts& o, std::ostream& out, std::ostream& err) {
  if (o.files.size() != 1) throw Usage("homology takes exactly one file");
  std::string text = load_text(o, o.files.front());
  SimplicialComplex2 s = [&] {
    if (looks_simplicial(text)) return SimplicialComplex2::build(parse_simplicial(text));
    Refinement r = refine_to_triangulation(parse_cell_complex(text).complex);
    err << "note: cell complex refined to " << r.simplicial.triangles().size() << " triangles\n";
    return r.simplicial;
  }();
  Homology h = homology(s);
  long chi = euler_simplicial(s);
  std::string res;
  if (o.json) {
    ordered_json j{{"h0", group_format(h.h0)},
                   {"h1", group_format(h.h1)},
                   {"h2", group_format(h.h2)},
                   {"euler", chi},
                   {"vertices", s.vertices().size()},
                   {"edges", s.edges().size()},
                   {"triangles", s.triangles().size()}};
    res = j.dump() + "\n";
  } else {
    res = "H0: " + group_format(h.h0) + "\nH1: " + group_format(h.h1) + "\nH2: " + group_format(h.h2) +
          "\neuler: " + std::to_string(chi) + "\n";
  }
  emit(o, out, res);
  return 0;
}

int cmd_refine(const Opts& o, std::ostream& out, std::ostream&) {
  if (o.files.size() != 1) throw Usage("refine takes exactly one file");
  Refinement r = refine_to_triangulation(load_cells(o.files.front()).complex);
  const SimplicialComplex2& s = r.simplicial;
  if (!o.out.empty()) write_file(o.out, format_simplicial(s));
  if (o.json) {
    ordered_json j{{"vertices", s.vertices().size()},
                   {"edges", s.edges().size()},
                   {"triangles", s.triangles().size()},
                   {"euler", euler_simplicial(s)}};
    out << j.dump() << "\n";
  } else if (o.out.empty()) {
    out << format_simplicial(s);
  } else {
    out << "wrote " << o.out << " (" << s.triangles().size() << " triangles)\n";
  }
  return 0;
}

int cmd_fractal(const Opts& o, std::ostream& out, std::ostream&) {
  std::vector<SeededSystem> parts;
  if (!o.preset.empty()) {
    if (!o.files.empty()) throw Usage("give either --preset or an IFS file, not both");
    parts = fractal_preset(o.preset);
  } else {
    if (o.files.empty() || o.files.size() > 2) throw Usage("fractal-render needs --preset or IFS_FILE [SEED_POINTS]");
    IFS sys = parse_ifs(load_text(o, o.files[0]));
    Scene seed{{Segment{{-1, 0}, {1, 0}}}};
    if (o.files.size() == 2) {
      std::vector<Vec2> pts = parse_points(load_text(o, o.files[1]));
      if (pts.empty()) throw Error(ErrorCode::ParseError, "seed file has no points");
      seed.primitives.clear();
      if (pts.size() == 1) seed.primitives.push_back(pts[0]);
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) seed.primitives.push_back(Segment{pts[i], pts[i + 1]});
      check_scene(seed);
    }
    parts.push_back({std::move(sys), std::move(seed)});
  }
  double total = 0;
  for (const SeededSystem& p : parts)
    total += static_cast<double>(p.seed.primitives.size()) *
             std::pow(static_cast<double>(p.sys.maps.size()), static_cast<double>(o.iters));
  if (total > 4e6) throw Usage("--iters " + std::to_string(o.iters) + " would produce too many primitives");
  Scene scene = render_iterate(parts, o.iters);
  std::string svg = render_svg(scene);
  if (o.out.empty()) {
    out << svg;
  } else {
    write_file(o.out, svg);
    if (o.json) {
      out << ordered_json{{"file", o.out}, {"primitives", scene.primitives.size()}}.dump() << "\n";
    } else {
      out << "wrote " << o.out << " (" << scene.primitives.size() << " primitives)\n";
    }
  }
  return 0;
}

int cmd_hausdorff(const Opts& o, std::ostream& out, std::ostream&) {
  if (o.files.size() != 2) throw Usage("hausdorff takes two point files");
  std::vector<Vec2> a = parse_points(load_text(o, o.files[0]));
  std::vector<Vec2> b = parse_points(load_text(o, o.files[1]));
  o.current.clear();
  double d = hausdorff_distance(a, b);
  emit(o, out, o.json ? ordered_json{{"distance", d}}.dump() + "\n" : fmt_double(d) + "\n");
  return 0;
}

Vec2 parse_point_flag(const std::string& s) {
  try {
    auto pts = parse_points(s);
    if (pts.size() == 1) return pts[0];
  } catch (const Error&) {
  }
  throw Usage("--point expects x,y");
}

int cmd_winding(const Opts& o, std::ostream& out, std::ostream&) {
  if (o.files.size() != 1) throw Usage("winding takes one curve file");
  if (o.point.empty()) throw Usage("winding needs --point x,y");
  Vec2 z = parse_point_flag(o.point);
  WindingResult w = winding(parse_points(load_text(o, o.files[0])), z);
  emit(o, out,
       o.json ? ordered_json{{"winding", w.index}, {"raw", w.raw}, {"segments", w.pieces}}.dump() + "\n"
              : std::to_string(w.index) + "\n");
  return 0;
}

int exit_status(ErrorCode c) { return is_parse_error(c) || c == ErrorCode::IoError ? 2 : 1; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"surface classification and plane geometry tools", "surfcls"};
  app.require_subcommand(1);
  Opts o;

  struct VerbSpec {
    const char* name;
    const char* help;
    int (*fn)(const Opts&, std::ostream&, std::ostream&);
  };
  const VerbSpec verbs[] = {
      {"validate", "check cell-complex or triangle files", cmd_validate},
      {"classify", "name the surface of a cell complex", cmd_classify},
      {"normalize", "reduce a cell complex to its normal form", cmd_normalize},
      {"homology", "simplicial homology (cell complexes are refined first)", cmd_homology},
      {"refine", "triangulate a cell complex", cmd_refine},
      {"fractal-render", "iterate an IFS and write SVG", cmd_fractal},
      {"hausdorff", "Hausdorff distance of two point files", cmd_hausdorff},
      {"winding", "winding number of a closed polygon around --point", cmd_winding},
  };
  std::vector<std::pair<CLI::App*, const VerbSpec*>> subs;
  for (const VerbSpec& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->fallthrough(false);
    sub->add_option("files", o.files, "input files");
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--out", o.out, "write the result to this path");
    std::string n = v.name;
    if (n == "normalize") sub->add_flag("--trace", o.trace, "print every rewrite move");
    if (n == "validate" || n == "classify" || n == "normalize")
      sub->add_option("--seed", o.seed, "also scramble the input with this seed and re-check");
    if (n == "fractal-render") {
      sub->add_option("--iters", o.iters, "iterations (default 6)");
      sub->add_option("--preset", o.preset, "sierpinski-gasket|sierpinski-dragon|heighway|koch|snowflake|hilbert");
    }
    if (n == "winding") sub->add_option("--point", o.point, "x,y")->allow_extra_args(false);
    subs.emplace_back(sub, &v);
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (msg.empty()) msg = "bad arguments";
    err << "E_USAGE: " << msg << "\n";
    return 2;
  }

  for (auto& [sub, spec] : subs) {
    if (!sub->parsed()) continue;
    std::string n = spec->name;
    if (o.files.empty() && n != "fractal-render") {
      err << "E_USAGE: " << n << " needs an input file\n";
      return 2;
    }
    try {
      return spec->fn(o, out, err);
    } catch (const Usage& e) {
      err << "E_USAGE: " << e.what() << "\n";
      return 2;
    } catch (const Error& e) {
      std::string where = !o.current.empty() ? o.current + ": " : o.files.size() == 1 ? o.files.front() + ": " : "";
      err << error_code_name(e.code()) << ": " << where << e.what() << "\n";
      return exit_status(e.code());
    }
  }
  err << "E_USAGE: no verb\n";
  return 2;
}

}  // namespace surfcls
