#include "crosscap/contour.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace crosscap {

namespace {

Vec2 lerp(Vec2 p, Vec2 q, double s) { return {p.x + s * (q.x - p.x), p.y + s * (q.y - p.y)}; }

// Bisection for a sign change of f on [0, 1] along p -> q.
template <class F>
Vec2 refine_edge(F f, Vec2 p, Vec2 q, double fp, double tol) {
  if (fp == 0) return p;
  double lo = 0, hi = 1;
  const double len = std::hypot(q.x - p.x, q.y - p.y);
  for (int it = 0; it < 100 && (hi - lo) * len > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const Vec2 m = lerp(p, q, mid);
    const double fm = f(m.x, m.y);
    if (fm == 0) return m;
    if ((fm >= 0) == (fp >= 0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lerp(p, q, 0.5 * (lo + hi));
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string fmt_data(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Frame {
  Window data;
  double width, height;

  double px(double x) const { return (x - data.xmin) / (data.xmax - data.xmin) * width; }
  double py(double y) const { return height - (y - data.ymin) / (data.ymax - data.ymin) * height; }
};

Window fit(const ContourScene& scene) {
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  auto take = [&](Vec2 p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) return;
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  };
  for (const auto& c : scene.delta) std::for_each(c.begin(), c.end(), take);
  std::for_each(scene.tau.begin(), scene.tau.end(), take);
  take(scene.crosscap_point);
  if (!(xmin <= xmax)) return Window::square(1);
  auto widen = [](double& lo, double& hi) {
    double span = hi - lo;
    if (span <= 0) span = std::max(1e-6, std::abs(lo));
    lo -= 0.1 * span;
    hi += 0.1 * span;
  };
  widen(xmin, xmax);
  widen(ymin, ymax);
  return {xmin, xmax, ymin, ymax};
}

std::string path_of(const Curve2& c, const Frame& f) {
  std::string d;
  for (std::size_t i = 0; i < c.size(); ++i) {
    d += i == 0 ? "M" : " L";
    d += fmt(f.px(c[i].x)) + " " + fmt(f.py(c[i].y));
  }
  return d;
}

std::string panel_body(const ContourScene& scene, const PanelStyle& style) {
  const Frame f{fit(scene), style.width, style.height};
  std::ostringstream os;
  os << "<rect x=\"0\" y=\"0\" width=\"" << fmt(style.width) << "\" height=\"" << fmt(style.height)
     << "\" fill=\"white\" stroke=\"#999999\"/>\n";
  os << "<g class=\"axes\" stroke=\"#dddddd\" stroke-width=\"0.5\">\n";
  if (f.data.xmin < 0 && f.data.xmax > 0) {
    os << "<line x1=\"" << fmt(f.px(0)) << "\" y1=\"0.000\" x2=\"" << fmt(f.px(0)) << "\" y2=\"" << fmt(style.height)
       << "\"/>\n";
  }
  if (f.data.ymin < 0 && f.data.ymax > 0) {
    os << "<line x1=\"0.000\" y1=\"" << fmt(f.py(0)) << "\" x2=\"" << fmt(style.width) << "\" y2=\"" << fmt(f.py(0))
       << "\"/>\n";
  }
  os << "</g>\n";
  if (style.show_sigma) {
    os << "<g class=\"sigma\" fill=\"none\" stroke=\"#aaaaaa\" stroke-width=\"0.6\">\n";
    for (const auto& c : scene.sigma) os << "<path d=\"" << path_of(c, f) << "\"/>\n";
    os << "</g>\n";
  }
  os << "<g class=\"delta\" fill=\"none\" stroke=\"black\" stroke-width=\"1.2\">\n";
  for (const auto& c : scene.delta) {
    if (c.size() >= 2) os << "<path d=\"" << path_of(c, f) << "\"/>\n";
  }
  os << "</g>\n";
  os << "<g class=\"tau\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1.2\" stroke-dasharray=\"4 3\">\n";
  if (scene.tau.size() >= 2) os << "<path d=\"" << path_of(scene.tau, f) << "\"/>\n";
  os << "</g>\n";
  os << "<circle class=\"crosscap\" cx=\"" << fmt(f.px(scene.crosscap_point.x)) << "\" cy=\""
     << fmt(f.py(scene.crosscap_point.y)) << "\" r=\"3.000\" fill=\"#c03030\"/>\n";
  if (style.show_markers) {
    os << "<g class=\"markers\" font-family=\"sans-serif\" font-size=\"8\">\n";
    for (const auto& m : scene.markers) {
      os << "<circle cx=\"" << fmt(f.px(m.target.x)) << "\" cy=\"" << fmt(f.py(m.target.y))
         << "\" r=\"2.000\" fill=\"none\" stroke=\"#208040\"/>";
      os << "<text x=\"" << fmt(f.px(m.target.x) + 3) << "\" y=\"" << fmt(f.py(m.target.y) - 3) << "\">"
         << class_name(m.cls) << "</text>\n";
    }
    os << "</g>\n";
  }
  if (!scene.label.empty()) {
    os << "<text x=\"4.000\" y=\"12.000\" font-family=\"sans-serif\" font-size=\"9\">" << scene.label << "</text>\n";
  }
  return os.str();
}

std::string svg_open(double w, double h) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fmt(w) + "\" height=\"" + fmt(h) + "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n";
}

// First exit of the curve from the disc along one direction of its parameter.
std::optional<double> exit_parameter(const BifurcationCurve& curve, double a0, double radius, int dir) {
  auto outside = [&](double t) -> std::optional<bool> {
    auto p = evaluate_curve(curve, t, a0);
    if (!p) return std::nullopt;
    return std::hypot(p->alpha, p->beta) > radius;
  };
  double prev = 0;
  bool have_prev = false;
  double step = 1e-6;
  for (double t = dir * step; std::abs(t) <= 4; t = dir * (std::abs(t) * 1.01 + step)) {
    auto o = outside(t);
    if (!o) continue;
    if (*o) {
      if (!have_prev) return std::nullopt;  // started outside
      double lo = prev, hi = t;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        auto om = outside(mid);
        if (!om) break;
        (*om ? hi : lo) = mid;
      }
      return 0.5 * (lo + hi);
    }
    prev = t;
    have_prev = true;
  }
  return std::nullopt;
}

std::string stratum_label(const BifurcationCurve& c) {
  return "(" + std::to_string(c.info.label) + ")" + std::string(branch_name(c.branch));
}

}  // namespace

std::vector<Curve2> extract_sigma(const PlaneGerm& g, const ParamValues& params, const Window& w, int grid,
                                  double edge_tol) {
  if (grid < 2) grid = 2;
  const int n = grid;
  const CompiledPoly lam(jacobian_det(g), params);
  const double dx = (w.xmax - w.xmin) / n;
  const double dy = (w.ymax - w.ymin) / n;
  auto node = [&](int i, int j) { return Vec2{w.xmin + i * dx, w.ymin + j * dy}; };
  std::vector<double> val(static_cast<std::size_t>((n + 1) * (n + 1)));
  auto at = [&](int i, int j) -> double& { return val[static_cast<std::size_t>(j * (n + 1) + i)]; };
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      const Vec2 p = node(i, j);
      at(i, j) = lam(p.x, p.y);
    }
  }

  std::vector<Vec2> verts;
  std::unordered_map<long, int> edge_vertex;
  const long voff = static_cast<long>(n) * (n + 1);
  auto vertex_on = [&](long id, int i0, int j0, int i1, int j1) {
    auto it = edge_vertex.find(id);
    if (it != edge_vertex.end()) return it->second;
    const Vec2 p = refine_edge(lam, node(i0, j0), node(i1, j1), at(i0, j0), edge_tol);
    verts.push_back(p);
    const int k = static_cast<int>(verts.size()) - 1;
    edge_vertex.emplace(id, k);
    return k;
  };
  std::vector<std::vector<int>> adj;
  auto link = [&](int a, int b) {
    if (a == b) return;
    if (adj.size() < verts.size()) adj.resize(verts.size());
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  };

  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const bool s0 = at(i, j) >= 0, s1 = at(i + 1, j) >= 0, s2 = at(i + 1, j + 1) >= 0, s3 = at(i, j + 1) >= 0;
      int e[4] = {-1, -1, -1, -1};
      if (s0 != s1) e[0] = vertex_on(static_cast<long>(j) * n + i, i, j, i + 1, j);
      if (s1 != s2) e[1] = vertex_on(voff + static_cast<long>(i + 1) * n + j, i + 1, j, i + 1, j + 1);
      if (s3 != s2) e[2] = vertex_on(static_cast<long>(j + 1) * n + i, i, j + 1, i + 1, j + 1);
      if (s0 != s3) e[3] = vertex_on(voff + static_cast<long>(i) * n + j, i, j, i, j + 1);
      const int count = (e[0] >= 0) + (e[1] >= 0) + (e[2] >= 0) + (e[3] >= 0);
      if (count == 2) {
        int a = -1, b = -1;
        for (int k : e) {
          if (k < 0) continue;
          (a < 0 ? a : b) = k;
        }
        link(a, b);
      } else if (count == 4) {
        const Vec2 c = lerp(node(i, j), node(i + 1, j + 1), 0.5);
        const bool sc = lam(c.x, c.y) >= 0;
        if (sc == s0) {
          link(e[0], e[1]);
          link(e[2], e[3]);
        } else {
          link(e[0], e[3]);
          link(e[1], e[2]);
        }
      }
    }
  }
  adj.resize(verts.size());

  std::vector<Curve2> out;
  std::vector<char> used(verts.size(), 0);
  auto walk = [&](int start) {
    Curve2 c;
    int prev = -1, cur = start;
    while (cur >= 0 && !used[static_cast<std::size_t>(cur)]) {
      used[static_cast<std::size_t>(cur)] = 1;
      c.push_back(verts[static_cast<std::size_t>(cur)]);
      int next = -1;
      for (int nb : adj[static_cast<std::size_t>(cur)]) {
        if (nb != prev && !used[static_cast<std::size_t>(nb)]) {
          next = nb;
          break;
        }
      }
      if (next < 0) {
        // close loops
        for (int nb : adj[static_cast<std::size_t>(cur)]) {
          if (nb == start && nb != prev && c.size() > 2) c.push_back(verts[static_cast<std::size_t>(start)]);
        }
      }
      prev = cur;
      cur = next;
    }
    if (c.size() >= 2) out.push_back(std::move(c));
  };
  for (std::size_t k = 0; k < verts.size(); ++k) {
    if (!used[k] && adj[k].size() == 1) walk(static_cast<int>(k));
  }
  for (std::size_t k = 0; k < verts.size(); ++k) {
    if (!used[k]) walk(static_cast<int>(k));
  }
  return out;
}

ImageCurves image_curves(const PlaneGerm& g, const ParamValues& params, const std::vector<Curve2>& sigma,
                         double tau_ymax, int tau_samples) {
  const CompiledPoly f1(g.f1, params);
  const CompiledPoly f2(g.f2, params);
  ImageCurves out;
  for (const auto& c : sigma) {
    Curve2 d;
    d.reserve(c.size());
    for (const Vec2& p : c) d.push_back({f1(p.x, p.y), f2(p.x, p.y)});
    out.delta.push_back(std::move(d));
  }
  if (tau_samples < 2) tau_samples = 2;
  for (int k = 0; k < tau_samples; ++k) {
    const double y = tau_ymax * k / (tau_samples - 1);
    out.tau.push_back({f1(0, y), f2(0, y)});
  }
  out.crosscap_point = {f1(0, 0), f2(0, 0)};
  return out;
}

std::vector<Marker> scan_special_points(const PlaneGerm& g, const ParamValues& params,
                                        const std::vector<Curve2>& sigma, double tol) {
  const CompiledJet jet(jet_data(g, default_eta_component(g), EtaCheck::pointwise), params);
  const CompiledPoly f1(g.f1, params);
  const CompiledPoly f2(g.f2, params);
  auto project = [&](Vec2 p) {
    for (int it = 0; it < 8; ++it) {
      const double l = jet.lambda(p.x, p.y);
      const double gx = jet.lambda_x(p.x, p.y), gy = jet.lambda_y(p.x, p.y);
      const double n2 = gx * gx + gy * gy;
      if (n2 == 0) break;
      p.x -= l * gx / n2;
      p.y -= l * gy / n2;
    }
    return p;
  };
  std::vector<Marker> out;
  auto push = [&](Vec2 p, SingularityClass cls) {
    for (const auto& m : out) {
      if (std::hypot(m.source.x - p.x, m.source.y - p.y) < 1e-9) return;
    }
    out.push_back({p, {f1(p.x, p.y), f2(p.x, p.y)}, cls});
  };
  for (const auto& c : sigma) {
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
      const Vec2 p = c[k], q = c[k + 1];
      const double ep = jet.eta_lambda(p.x, p.y), eq = jet.eta_lambda(q.x, q.y);
      if ((ep > 0) != (eq > 0)) {
        double lo = 0, hi = 1;
        for (int it = 0; it < 60; ++it) {
          const double mid = 0.5 * (lo + hi);
          const Vec2 m = project(lerp(p, q, mid));
          if ((jet.eta_lambda(m.x, m.y) > 0) == (ep > 0)) {
            lo = mid;
          } else {
            hi = mid;
          }
        }
        const Vec2 m = project(lerp(p, q, 0.5 * (lo + hi)));
        if (std::abs(m.x) >= 1e-12) {
          const SingularityClass cls = classify_interior(jet, m, tol);
          if (cls != SingularityClass::Fold && cls != SingularityClass::Regular) push(m, cls);
        }
      }
      if ((p.x > 0) != (q.x > 0) && p.x != q.x) {
        // sigma meets the boundary line: Newton on lambda(0, y) from the
        // interpolated crossing
        const double s = p.x / (p.x - q.x);
        const double ys = p.y + s * (q.y - p.y);
        double y0 = ys;
        for (int it = 0; it < 40; ++it) {
          const double d = jet.lambda_y(0, y0);
          if (d == 0) break;
          const double step = jet.lambda(0, y0) / d;
          y0 -= step;
          if (std::abs(step) < 1e-16) break;
        }
        const double seg = std::hypot(q.x - p.x, q.y - p.y);
        if (std::abs(y0 - ys) > 2 * seg + 1e-12) y0 = ys;
        // (0, 0) is the crosscap point itself, outside the boundary criteria
        if (std::abs(y0) > 1e-9) {
          const SingularityClass cls = classify_boundary(jet, y0, tol);
          if (cls != SingularityClass::Regular) push({0, y0}, cls);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Marker& a, const Marker& b) {
    return a.source.y != b.source.y ? a.source.y < b.source.y : a.source.x < b.source.x;
  });
  return out;
}

ContourScene build_scene(const PlaneGerm& g, const ParamValues& params, const SceneOptions& options) {
  ContourScene scene;
  scene.params = params;
  scene.sigma = extract_sigma(g, params, options.source, options.grid, options.edge_tol);
  ImageCurves ic = image_curves(g, params, scene.sigma, options.tau_ymax, options.tau_samples);
  scene.delta = std::move(ic.delta);
  scene.tau = std::move(ic.tau);
  scene.crosscap_point = ic.crosscap_point;
  scene.markers = scan_special_points(g, params, scene.sigma);
  return scene;
}

std::string render_panel(const ContourScene& scene, const PanelStyle& style) {
  return svg_open(style.width, style.height) + panel_body(scene, style) + "</svg>\n";
}

std::string render_sheet(const std::vector<ContourScene>& scenes, int columns, const PanelStyle& style) {
  if (columns < 1) columns = 1;
  const int rows = std::max<int>(1, (static_cast<int>(scenes.size()) + columns - 1) / columns);
  const double gap = 8;
  const double w = columns * (style.width + gap) + gap;
  const double h = rows * (style.height + gap) + gap;
  std::string out = svg_open(w, h);
  for (std::size_t k = 0; k < scenes.size(); ++k) {
    const int r = static_cast<int>(k) / columns, c = static_cast<int>(k) % columns;
    out += "<svg x=\"" + fmt(gap + c * (style.width + gap)) + "\" y=\"" + fmt(gap + r * (style.height + gap)) +
           "\" width=\"" + fmt(style.width) + "\" height=\"" + fmt(style.height) + "\">\n";
    out += panel_body(scenes[k], style);
    out += "</svg>\n";
  }
  return out + "</svg>\n";
}

std::string render_diagram(FamilyName family, double a0, const std::vector<DiagramCurve>& curves,
                           const Window& window) {
  static const char* palette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d",
                                  "#666666"};
  const double size = 480;
  const Frame f{window, size, size};
  std::ostringstream os;
  os << svg_open(size, size);
  os << "<defs><clipPath id=\"frame\"><rect x=\"0\" y=\"0\" width=\"" << fmt(size) << "\" height=\"" << fmt(size)
     << "\"/></clipPath></defs>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << fmt(size) << "\" height=\"" << fmt(size)
     << "\" fill=\"white\" stroke=\"#999999\"/>\n";
  os << "<g class=\"axes\" stroke=\"#dddddd\" stroke-width=\"0.5\">\n";
  os << "<line x1=\"" << fmt(f.px(0)) << "\" y1=\"0.000\" x2=\"" << fmt(f.px(0)) << "\" y2=\"" << fmt(size) << "\"/>\n";
  os << "<line x1=\"0.000\" y1=\"" << fmt(f.py(0)) << "\" x2=\"" << fmt(size) << "\" y2=\"" << fmt(f.py(0)) << "\"/>\n";
  os << "</g>\n";
  os << "<g class=\"strata\" fill=\"none\" stroke-width=\"1.4\" clip-path=\"url(#frame)\">\n";
  for (const auto& c : curves) {
    if (c.line.points.size() < 2) continue;
    int label_num = 0;
    std::sscanf(c.label.c_str(), "(%d)", &label_num);
    const char* color = palette[static_cast<std::size_t>(std::max(0, label_num - 1)) % 8];
    os << "<path id=\"" << c.line.id << "\" stroke=\"" << color << "\" d=\"" << path_of(c.line.points, f) << "\"/>\n";
  }
  os << "</g>\n<g class=\"labels\" font-family=\"sans-serif\" font-size=\"10\">\n";
  for (const auto& c : curves) {
    const Vec2* best = nullptr;
    double far = -1;
    for (const auto& p : c.line.points) {
      if (p.x < window.xmin || p.x > window.xmax || p.y < window.ymin || p.y > window.ymax) continue;
      const double r = std::hypot(p.x, p.y);
      if (r > far) {
        far = r;
        best = &p;
      }
    }
    if (!best) continue;
    const double x = std::clamp(f.px(best->x), 4.0, size - 28.0);
    const double y = std::clamp(f.py(best->y), 12.0, size - 4.0);
    os << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\">" << c.label << "</text>\n";
  }
  os << "</g>\n";
  os << "<text x=\"6.000\" y=\"" << fmt(size - 6) << "\" font-family=\"sans-serif\" font-size=\"10\">family "
     << family_label(family) << ", a = " << fmt_data(a0) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::vector<DiagramCurve> trace_family(const std::vector<BifurcationCurve>& curves, double a0, double radius,
                                       int samples) {
  std::vector<DiagramCurve> out;
  const double reach = radius * std::numbers::sqrt2 * 1.05;
  for (const auto& c : curves) {
    DiagramCurve d;
    d.label = stratum_label(c);
    if (c.parametrization.closed_form) {
      d.line = trace_stratum_numeric(c, a0, -reach, reach, samples);
    } else {
      const double lo = exit_parameter(c, a0, reach, -1).value_or(0.0);
      const double hi = exit_parameter(c, a0, reach, +1).value_or(0.0);
      d.line = trace_stratum_numeric(c, a0, lo, hi, samples);
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<CircleCrossing> circle_crossings(const std::vector<BifurcationCurve>& curves, double a0,
                                             double radius) {
  std::vector<CircleCrossing> out;
  for (const auto& c : curves) {
    const std::string id = curve_id(c);
    std::vector<CircleCrossing> mine;
    for (int dir : {+1, -1}) {
      std::optional<ParamPoint> p;
      if (c.parametrization.closed_form) {
        p = evaluate_curve(c, dir * radius, a0);
      } else if (auto t = exit_parameter(c, a0, radius, dir)) {
        p = evaluate_curve(c, *t, a0);
      }
      if (!p) continue;
      const CircleCrossing x{id, std::atan2(p->beta, p->alpha), p->alpha, p->beta};
      const bool dup = std::any_of(mine.begin(), mine.end(),
                                   [&](const CircleCrossing& m) { return std::abs(m.angle - x.angle) < 1e-9; });
      if (!dup) mine.push_back(x);
    }
    out.insert(out.end(), mine.begin(), mine.end());
  }
  std::sort(out.begin(), out.end(),
            [](const CircleCrossing& a, const CircleCrossing& b) { return a.angle < b.angle; });
  return out;
}

std::vector<ParamValues> region_samples(const std::vector<CircleCrossing>& crossings, double radius, double a0) {
  std::vector<ParamValues> out;
  const std::size_t m = crossings.size();
  if (m == 0) {
    out.push_back({radius, 0, a0});
    return out;
  }
  for (std::size_t k = 0; k < m; ++k) {
    const double t0 = crossings[k].angle;
    const double t1 = k + 1 < m ? crossings[k + 1].angle : crossings[0].angle + 2 * std::numbers::pi;
    const double mid = 0.5 * (t0 + t1);
    out.push_back({radius * std::cos(mid), radius * std::sin(mid), a0});
  }
  return out;
}

void write_scene_csv(std::ostream& os, const ContourScene& scene) {
  os << "curve_id,role,x,y\n";
  for (std::size_t k = 0; k < scene.sigma.size(); ++k) {
    for (const auto& p : scene.sigma[k]) {
      os << "sigma" << k << ",sigma," << fmt_data(p.x) << ',' << fmt_data(p.y) << '\n';
    }
  }
  for (std::size_t k = 0; k < scene.delta.size(); ++k) {
    for (const auto& p : scene.delta[k]) {
      os << "delta" << k << ",delta," << fmt_data(p.x) << ',' << fmt_data(p.y) << '\n';
    }
  }
  for (const auto& p : scene.tau) os << "tau,tau," << fmt_data(p.x) << ',' << fmt_data(p.y) << '\n';
}

void write_polylines_csv(std::ostream& os, const std::vector<DiagramCurve>& curves) {
  os << "curve_id,role,x,y\n";
  for (const auto& c : curves) {
    for (const auto& p : c.line.points) {
      os << c.line.id << ",stratum," << fmt_data(p.x) << ',' << fmt_data(p.y) << '\n';
    }
  }
}

std::string scene_json(const ContourScene& scene, int indent) {
  using nlohmann::json;
  auto pt = [](Vec2 p) { return json::array({p.x, p.y}); };
  auto curves = [&](const std::vector<Curve2>& cs) {
    json arr = json::array();
    for (const auto& c : cs) {
      json line = json::array();
      for (const auto& p : c) line.push_back(pt(p));
      arr.push_back(std::move(line));
    }
    return arr;
  };
  json j;
  j["label"] = scene.label;
  j["params"] = {{"alpha", scene.params.alpha}, {"beta", scene.params.beta}, {"a", scene.params.a}};
  j["sigma"] = curves(scene.sigma);
  j["delta"] = curves(scene.delta);
  json tau = json::array();
  for (const auto& p : scene.tau) tau.push_back(pt(p));
  j["tau"] = std::move(tau);
  j["crosscap_point"] = pt(scene.crosscap_point);
  json markers = json::array();
  for (const auto& m : scene.markers) {
    markers.push_back({{"class", class_name(m.cls)}, {"source", pt(m.source)}, {"target", pt(m.target)}});
  }
  j["markers"] = std::move(markers);
  return j.dump(indent);
}

}  // namespace crosscap
