#pragma once

// Singular set, apparent contour and the image of the double-point preimage for
// one numeric parameter sample, plus SVG/CSV/JSON output of scenes and
// bifurcation diagrams.

#include <iosfwd>
#include <string>
#include <vector>

#include "crosscap/bifurcation.hpp"
#include "crosscap/classifier.hpp"

namespace crosscap {

struct Window {
  double xmin = -0.6, xmax = 0.6, ymin = -0.6, ymax = 0.6;

  static Window square(double half) { return {-half, half, -half, half}; }
};

using Curve2 = std::vector<Vec2>;

struct Marker {
  Vec2 source;
  Vec2 target;
  SingularityClass cls = SingularityClass::Regular;
};

struct ContourScene {
  std::string label;
  ParamValues params;
  std::vector<Curve2> sigma;
  std::vector<Curve2> delta;
  Curve2 tau;
  Vec2 crosscap_point;
  std::vector<Marker> markers;
};

struct SceneOptions {
  Window source;
  int grid = 512;
  double tau_ymax = 0.6;
  int tau_samples = 241;
  /// refinement tolerance for crossings of lambda = 0 on grid edges
  double edge_tol = 1e-12;
};

/// lambda = 0 over the window by sign scanning on a grid, edge crossings refined
/// by bisection and linked into polylines.
std::vector<Curve2> extract_sigma(const PlaneGerm& g, const ParamValues& params, const Window& window, int grid,
                                  double edge_tol = 1e-12);

struct ImageCurves {
  std::vector<Curve2> delta;
  Curve2 tau;
  Vec2 crosscap_point;
};

ImageCurves image_curves(const PlaneGerm& g, const ParamValues& params, const std::vector<Curve2>& sigma,
                         double tau_ymax = 0.6, int tau_samples = 241);

/// Cusps and higher points along sigma (sign changes of eta lambda) and the
/// points where sigma meets the boundary line, each classified.
std::vector<Marker> scan_special_points(const PlaneGerm& g, const ParamValues& params,
                                        const std::vector<Curve2>& sigma, double tol = 1e-6);

ContourScene build_scene(const PlaneGerm& g, const ParamValues& params, const SceneOptions& options = {});

struct PanelStyle {
  double width = 260;
  double height = 260;
  bool show_sigma = false;
  bool show_markers = true;
};

std::string render_panel(const ContourScene& scene, const PanelStyle& style = {});

/// Several panels on one sheet, row-major.
std::string render_sheet(const std::vector<ContourScene>& scenes, int columns, const PanelStyle& style = {});

struct DiagramCurve {
  Polyline line;
  std::string label;  // e.g. "(5)" or "(2)+"
};

std::string render_diagram(FamilyName family, double a0, const std::vector<DiagramCurve>& curves,
                           const Window& window);

/// Traces every curve of a family over the diagram window.
std::vector<DiagramCurve> trace_family(const std::vector<BifurcationCurve>& curves, double a0, double radius,
                                       int samples = 400);

/// Where a stratum leaves the disc of given radius around the origin of the
/// (alpha, beta) plane.
struct CircleCrossing {
  std::string id;
  double angle = 0;  // in (-pi, pi]
  double alpha = 0, beta = 0;
};

/// Crossings of every curve with the circle, sorted by angle. Each curve is
/// followed from the origin in both directions of its parameter up to its first
/// exit; coincident exits (even parametrizations) are merged.
std::vector<CircleCrossing> circle_crossings(const std::vector<BifurcationCurve>& curves, double a0,
                                             double radius);

/// Representative (alpha, beta) at the angular midpoints of the arcs between
/// consecutive crossings.
std::vector<ParamValues> region_samples(const std::vector<CircleCrossing>& crossings, double radius, double a0);

void write_scene_csv(std::ostream& os, const ContourScene& scene);
void write_polylines_csv(std::ostream& os, const std::vector<DiagramCurve>& curves);
std::string scene_json(const ContourScene& scene, int indent = 2);

}  // namespace crosscap
