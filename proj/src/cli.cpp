#include "crosscap/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "crosscap/contour.hpp"
#include "crosscap/verification.hpp"

namespace crosscap::cli {

namespace {

constexpr double kPanelRadius = 0.05;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string family = "c";
  std::string modulus = "1";
  unsigned order = kDefaultOrder;
  std::optional<double> alpha, beta;
  std::string point;
  std::optional<double> window;
  int grid = 512;
  std::string out;
  std::string format;
};

struct Resolved {
  FamilyName family;
  Rational a;
};

Resolved resolve(const RunConfig& cfg) {
  auto f = parse_family(cfg.family);
  if (!f) throw ConfigError("unknown family '" + cfg.family + "' (expected a, b, c, d+ or d-)");
  Rational a;
  try {
    a = parse_rational(cfg.modulus);
  } catch (const AlgebraError& e) {
    throw ConfigError(std::string("invalid modulus: ") + e.what());
  }
  const AXFamily& fam = GermCatalog::standard().family(*f);
  if (fam.has_modulus) fam.validate_modulus(a);
  if (cfg.order < 4) throw ConfigError("order must be at least 4");
  if (cfg.grid < 8) throw ConfigError("grid must be at least 8");
  if (cfg.window && !(*cfg.window > 0)) throw ConfigError("window must be positive");
  return {*f, a};
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw IoError("cannot open '" + cfg.out + "' for writing");
  f << text;
  if (!f) throw IoError("write to '" + cfg.out + "' failed");
}

std::string stratum_text(const BifurcationCurve& c) {
  std::ostringstream os;
  os << curve_id(c) << " [" << c.info.name << "]: ";
  if (c.exact) os << to_string(*c.exact);
  if (c.series) {
    os << "beta =";
    bool first = true;
    for (unsigned k = 0; k <= c.series->order(); ++k) {
      const MultiPoly& q = (*c.series)[k];
      if (q.is_zero()) continue;
      os << (first ? " " : " + ") << "(" << to_string(q) << ")*alpha^" << k;
      first = false;
    }
    if (first) os << " 0";
    os << " + O[" << c.series->order() + 1 << "]";
  }
  if (c.constraint) os << ", " << to_string(*c.constraint);
  return os.str();
}

std::vector<DiagramCurve> traced(const std::vector<BifurcationCurve>& curves, double a0, double half) {
  return trace_family(curves, a0, half);
}

int cmd_curves(const RunConfig& cfg, std::ostream& out) {
  const Resolved r = resolve(cfg);
  const auto curves = solve_family(GermCatalog::standard(), r.family, cfg.order);
  const double half = cfg.window.value_or(0.1);
  const std::string format = cfg.format.empty() ? "json" : cfg.format;

  nlohmann::json doc;
  doc["family"] = family_label(r.family);
  doc["modulus"] = to_string(r.a);
  doc["order"] = cfg.order;
  doc["curves"] = nlohmann::json::array();
  for (const auto& c : curves) doc["curves"].push_back(curve_json(c));

  if (!cfg.out.empty() && std::filesystem::is_directory(cfg.out)) {
    const std::filesystem::path dir(cfg.out);
    std::ofstream js(dir / "curves.json"), csv(dir / "curves.csv");
    if (!js || !csv) throw IoError("cannot write into '" + cfg.out + "'");
    js << doc.dump(2) << '\n';
    write_polylines_csv(csv, traced(curves, r.a.get_d(), half));
    if (!js || !csv) throw IoError("write into '" + cfg.out + "' failed");
    out << "wrote " << curves.size() << " curve records to " << cfg.out << '\n';
    return kOk;
  }
  if (format == "json") {
    emit(cfg, out, doc.dump(2) + "\n");
  } else if (format == "csv") {
    std::ostringstream os;
    write_polylines_csv(os, traced(curves, r.a.get_d(), half));
    emit(cfg, out, os.str());
  } else if (format == "text") {
    std::ostringstream os;
    for (const auto& c : curves) os << stratum_text(c) << '\n';
    emit(cfg, out, os.str());
  } else {
    throw ConfigError("curves: unsupported format '" + format + "'");
  }
  return kOk;
}

int cmd_diagram(const RunConfig& cfg, std::ostream& out) {
  const Resolved r = resolve(cfg);
  if (!cfg.format.empty() && cfg.format != "svg") throw ConfigError("diagram: only svg output is supported");
  const double half = cfg.window.value_or(0.1);
  const auto curves = solve_family(GermCatalog::standard(), r.family, cfg.order);
  const double a0 = r.a.get_d();
  emit(cfg, out, render_diagram(r.family, a0, traced(curves, a0, half), Window::square(half)));
  return kOk;
}

std::string param_label(const ParamValues& p) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "alpha=%.4f beta=%.4f", p.alpha, p.beta);
  return buf;
}

int cmd_panels(const RunConfig& cfg, std::ostream& out) {
  const Resolved r = resolve(cfg);
  if (!cfg.format.empty() && cfg.format != "svg") throw ConfigError("panels: only svg output is supported");
  const double a0 = r.a.get_d();
  std::vector<ParamValues> samples;
  switch (r.family) {
    case FamilyName::a: samples = {{0, 0, a0}}; break;
    case FamilyName::b: samples = {{-kPanelRadius, 0, a0}, {0, 0, a0}, {kPanelRadius, 0, a0}}; break;
    default: {
      const auto curves = solve_family(GermCatalog::standard(), r.family, cfg.order);
      samples = region_samples(circle_crossings(curves, a0, kPanelRadius), kPanelRadius, a0);
    }
  }
  SceneOptions opt;
  opt.source = Window::square(cfg.window.value_or(0.3));
  opt.grid = cfg.grid;
  opt.tau_ymax = opt.source.ymax;
  const PlaneGerm g = compose_with_crosscap(r.family);
  std::vector<ContourScene> scenes;
  for (const auto& p : samples) {
    ContourScene s = build_scene(g, p, opt);
    s.label = param_label(p);
    scenes.push_back(std::move(s));
  }
  emit(cfg, out, render_sheet(scenes, scenes.size() >= 4 ? 4 : static_cast<int>(scenes.size())));
  return kOk;
}

Vec2 parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ConfigError("point must be given as x,y");
  try {
    std::size_t used = 0;
    const std::string xs = text.substr(0, comma), ys = text.substr(comma + 1);
    const double x = std::stod(xs, &used);
    if (used != xs.size()) throw std::invalid_argument(xs);
    const double y = std::stod(ys, &used);
    if (used != ys.size()) throw std::invalid_argument(ys);
    return {x, y};
  } catch (const std::exception&) {
    throw ConfigError("point must be given as x,y");
  }
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const Resolved r = resolve(cfg);
  const ParamValues params{cfg.alpha.value_or(0), cfg.beta.value_or(0), r.a.get_d()};
  const PlaneGerm g = compose_with_crosscap(r.family);
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  if (format != "text" && format != "json") throw ConfigError("classify: format must be text or json");
  if (!cfg.point.empty()) {
    const Vec2 p = parse_point(cfg.point);
    const JetData jd = jet_data(g);
    const SingularityClass cls =
        p.x == 0 ? classify_boundary(jd, p.y, params) : classify_interior(jd, p, params);
    if (format == "json") {
      nlohmann::json j = {{"point", {p.x, p.y}}, {"boundary", p.x == 0}, {"class", class_name(cls)}};
      emit(cfg, out, j.dump(2) + "\n");
    } else {
      emit(cfg, out, std::string(class_name(cls)) + "\n");
    }
    return kOk;
  }
  SceneOptions opt;
  opt.source = Window::square(cfg.window.value_or(0.6));
  opt.grid = cfg.grid;
  ContourScene scene = build_scene(g, params, opt);
  scene.label = std::string("family ") + std::string(family_label(r.family)) + " " + param_label(params);
  if (format == "json") {
    emit(cfg, out, scene_json(scene) + "\n");
    return kOk;
  }
  std::ostringstream os;
  os << scene.label << ", a=" << to_string(r.a) << '\n';
  os << "singular set: " << scene.sigma.size() << " component(s) in the window\n";
  os << "crosscap point image: (" << scene.crosscap_point.x << ", " << scene.crosscap_point.y << ")\n";
  os << "special points: " << scene.markers.size() << '\n';
  for (const auto& m : scene.markers) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "  %-14s source (%.6g, %.6g) target (%.6g, %.6g)\n",
                  std::string(class_name(m.cls)).c_str(), m.source.x, m.source.y, m.target.x, m.target.y);
    os << buf;
  }
  emit(cfg, out, os.str());
  return kOk;
}

}  // namespace

nlohmann::json curve_json(const BifurcationCurve& c) {
  nlohmann::json j;
  j["id"] = curve_id(c);
  j["family"] = family_label(c.info.family);
  j["stratum"] = c.info.label;
  j["name"] = c.info.name;
  j["branch"] = c.branch == Branch::none ? nlohmann::json(nullptr) : nlohmann::json(std::string(branch_name(c.branch)));
  j["constraint"] = c.constraint ? nlohmann::json(to_string(*c.constraint)) : nlohmann::json(nullptr);
  if (c.series) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& q : c.series->coeffs()) coeffs.push_back(to_string(q));
    j["series"] = {{"main_var", var_name(c.series->main_var())}, {"solved_var", "beta"}, {"coefficients", coeffs}};
  }
  if (c.exact) j["exact_relation"] = to_string(*c.exact);
  return j;
}

int verify(const GermCatalog& catalog, unsigned order, std::ostream& out) {
  const auto rows = run_verification(catalog, order);
  return print_verification(out, rows) ? kOk : kVerificationFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bifurcation curves of projections of the crosscap"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool numeric) {
    sub->add_option("--family", cfg.family, "a, b, c, d+ or d-");
    sub->add_option("--modulus", cfg.modulus, "modulus a, as p/q or a decimal");
    sub->add_option("--order", cfg.order, "series truncation order (>= 4)");
    sub->add_option("--out", cfg.out, "output file (curves: file or directory)");
    sub->add_option("--format", cfg.format, "json, csv, svg or text");
    sub->add_option("--window", cfg.window, "half-width of the plotting window");
    if (numeric) sub->add_option("--grid", cfg.grid, "grid cells per side for the singular set");
  };
  auto* verify_cmd = app.add_subcommand("verify", "check the derived curves against the reference coefficients");
  verify_cmd->add_option("--order", cfg.order, "series truncation order (>= 4)");
  auto* curves_cmd = app.add_subcommand("curves", "bifurcation curves of one family");
  common(curves_cmd, false);
  auto* diagram_cmd = app.add_subcommand("diagram", "bifurcation diagram as SVG");
  common(diagram_cmd, false);
  auto* panels_cmd = app.add_subcommand("panels", "contour panels for the regions of the diagram");
  common(panels_cmd, true);
  auto* classify_cmd = app.add_subcommand("classify", "classify a point or scan the window");
  common(classify_cmd, true);
  classify_cmd->add_option("--alpha", cfg.alpha, "unfolding parameter alpha");
  classify_cmd->add_option("--beta", cfg.beta, "unfolding parameter beta");
  classify_cmd->add_option("--point", cfg.point, "source point x,y");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidConfig;
  }

  try {
    if (verify_cmd->parsed()) {
      if (cfg.order < 4) throw ConfigError("order must be at least 4");
      return verify(GermCatalog::standard(), cfg.order, out);
    }
    if (curves_cmd->parsed()) return cmd_curves(cfg, out);
    if (diagram_cmd->parsed()) return cmd_diagram(cfg, out);
    if (panels_cmd->parsed()) return cmd_panels(cfg, out);
    if (classify_cmd->parsed()) return cmd_classify(cfg, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const ConstraintError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kInvalidConfig;
}

}  // namespace crosscap::cli
