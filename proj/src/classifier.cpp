#include "crosscap/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <functional>
#include <vector>

namespace crosscap {

std::string_view class_name(SingularityClass c) {
  switch (c) {
    case SingularityClass::Regular: return "regular";
    case SingularityClass::Fold: return "fold";
    case SingularityClass::Cusp: return "cusp";
    case SingularityClass::Swallowtail: return "swallowtail";
    case SingularityClass::Lips: return "lips";
    case SingularityClass::Beaks: return "beaks";
    case SingularityClass::SemiFold: return "semi-fold";
    case SingularityClass::SemiCusp: return "semi-cusp";
    case SingularityClass::SemiLips: return "semi-lips";
    case SingularityClass::SemiBeaks: return "semi-beaks";
    case SingularityClass::BoundaryCusp: return "boundary-cusp";
    case SingularityClass::Degenerate: return "degenerate";
  }
  return "?";
}

bool is_lips_or_beaks(SingularityClass c) { return c == SingularityClass::Lips || c == SingularityClass::Beaks; }

bool is_semi_lips_or_beaks(SingularityClass c) {
  return c == SingularityClass::SemiLips || c == SingularityClass::SemiBeaks;
}

bool is_boundary_class(SingularityClass c) {
  return c == SingularityClass::SemiFold || c == SingularityClass::SemiCusp || is_semi_lips_or_beaks(c) ||
         c == SingularityClass::BoundaryCusp;
}

MultiPoly apply_field(const std::array<MultiPoly, 2>& eta, const MultiPoly& p) {
  return eta[0] * diff(p, Var::x) + eta[1] * diff(p, Var::y);
}

JetData jet_data(const PlaneGerm& g, EtaComponent component, EtaCheck check) {
  JetData jd;
  jd.component = component;
  jd.lambda = jacobian_det(g);
  jd.lambda_x = diff(jd.lambda, Var::x);
  jd.lambda_y = diff(jd.lambda, Var::y);
  jd.lambda_xx = diff(jd.lambda_x, Var::x);
  jd.lambda_xy = diff(jd.lambda_x, Var::y);
  jd.lambda_yy = diff(jd.lambda_y, Var::y);
  jd.eta = eta_field(g, component, check);
  jd.eta_lambda = apply_field(jd.eta, jd.lambda);
  jd.eta2_lambda = apply_field(jd.eta, jd.eta_lambda);
  jd.eta3_lambda = apply_field(jd.eta, jd.eta2_lambda);
  return jd;
}

JetData jet_data(const PlaneGerm& g) { return jet_data(g, default_eta_component(g)); }

CompiledJet::CompiledJet(const JetData& jd, const ParamValues& params)
    : lambda(jd.lambda, params),
      lambda_x(jd.lambda_x, params),
      lambda_y(jd.lambda_y, params),
      lambda_xx(jd.lambda_xx, params),
      lambda_xy(jd.lambda_xy, params),
      lambda_yy(jd.lambda_yy, params),
      eta1(jd.eta[0], params),
      eta2(jd.eta[1], params),
      eta_lambda(jd.eta_lambda, params),
      eta2_lambda(jd.eta2_lambda, params),
      eta3_lambda(jd.eta3_lambda, params) {}

namespace {

// Threshold tests are relative to the size of the first-order data at the
// point, floored at 1.
struct ZeroTest {
  double threshold;
  bool operator()(double q) const { return std::abs(q) <= threshold; }
};

ZeroTest zero_test(const CompiledJet& jet, Vec2 p, double tol) {
  const double lx = jet.lambda_x(p.x, p.y);
  const double ly = jet.lambda_y(p.x, p.y);
  const double e1 = jet.eta1(p.x, p.y);
  const double e2 = jet.eta2(p.x, p.y);
  const double scale = std::max({1.0, std::hypot(lx, ly), std::hypot(e1, e2)});
  return {tol * scale};
}

}  // namespace

SingularityClass classify_interior(const CompiledJet& jet, Vec2 p, double tol) {
  const ZeroTest zero = zero_test(jet, p, tol);
  if (!zero(jet.lambda(p.x, p.y))) return SingularityClass::Regular;
  const bool dlambda_zero = zero(jet.lambda_x(p.x, p.y)) && zero(jet.lambda_y(p.x, p.y));
  if (!dlambda_zero) {
    if (!zero(jet.eta_lambda(p.x, p.y))) return SingularityClass::Fold;
    if (!zero(jet.eta2_lambda(p.x, p.y))) return SingularityClass::Cusp;
    if (!zero(jet.eta3_lambda(p.x, p.y))) return SingularityClass::Swallowtail;
    return SingularityClass::Degenerate;
  }
  const double hxx = jet.lambda_xx(p.x, p.y);
  const double hxy = jet.lambda_xy(p.x, p.y);
  const double hyy = jet.lambda_yy(p.x, p.y);
  const double hess = hxx * hyy - hxy * hxy;
  const double hess_scale = std::max({1.0, hxx * hxx, hyy * hyy, hxy * hxy});
  if (std::abs(hess) <= tol * hess_scale) return SingularityClass::Degenerate;
  return hess < 0 ? SingularityClass::Beaks : SingularityClass::Lips;
}

SingularityClass classify_interior(const JetData& jd, Vec2 point, const ParamValues& params, double tol) {
  return classify_interior(CompiledJet(jd, params), point, tol);
}

SingularityClass classify_boundary(const CompiledJet& jet, double y0, double tol) {
  const Vec2 p{0.0, y0};
  const ZeroTest zero = zero_test(jet, p, tol);
  if (!zero(jet.lambda(p.x, p.y))) return SingularityClass::Regular;
  const bool eta1_zero = zero(jet.eta1(p.x, p.y));
  const bool eta_lambda_zero = zero(jet.eta_lambda(p.x, p.y));
  const bool lambda_y_zero = zero(jet.lambda_y(p.x, p.y));
  if (!eta1_zero && !eta_lambda_zero && !lambda_y_zero) return SingularityClass::SemiFold;
  if (!eta1_zero && eta_lambda_zero) return SingularityClass::SemiCusp;
  if (lambda_y_zero) {
    // Sigma is tangent to the boundary: x ~ kappa y^2 with
    // kappa = -lambda_yy / (2 lambda_x). Bending into x > 0 is the beaks side.
    const double lx = jet.lambda_x(p.x, p.y);
    const double lyy = jet.lambda_yy(p.x, p.y);
    if (zero(lx) || zero(lyy)) return SingularityClass::Degenerate;
    const double kappa = -lyy / (2.0 * lx);
    return kappa > 0 ? SingularityClass::SemiBeaks : SingularityClass::SemiLips;
  }
  if (eta1_zero) return SingularityClass::BoundaryCusp;
  return SingularityClass::Degenerate;
}

SingularityClass classify_boundary(const JetData& jd, double y0, const ParamValues& params, double tol) {
  return classify_boundary(CompiledJet(jd, params), y0, tol);
}

std::string_view multigerm_name(MultigermKind kind) {
  switch (kind) {
    case MultigermKind::contour_hits_crosscap: return "contour-hits-crosscap";
    case MultigermKind::double_curve_selfcross: return "double-curve-selfcross";
  }
  return "?";
}

namespace {

using Fn = std::function<double(double)>;

constexpr int kScanSamples = 256;
constexpr double kRootTolerance = 1e-12;
constexpr double kAcceptTolerance = 1e-8;

double bisect(const Fn& f, double lo, double hi, double flo) {
  while (hi - lo > kRootTolerance) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Roots t != 0 of `scan` in [lo, hi] at which `check` also vanishes.
void common_roots(const Fn& scan, const Fn& check, double lo, double hi, std::vector<double>& out) {
  const double step = (hi - lo) / kScanSamples;
  double t0 = lo;
  double f0 = scan(t0);
  for (int i = 1; i <= kScanSamples; ++i) {
    const double t1 = lo + step * i;
    const double f1 = scan(t1);
    if (std::isfinite(f0) && std::isfinite(f1) && ((f0 < 0) != (f1 < 0) || f1 == 0.0)) {
      const double root = f1 == 0.0 ? t1 : bisect(scan, t0, t1, f0);
      const double g = check(root);
      if (std::abs(root) > 1e-9 && std::isfinite(g) && std::abs(g) <= kAcceptTolerance * std::max(1.0, std::abs(root))) {
        out.push_back(root);
      }
    }
    t0 = t1;
    f0 = f1;
  }
}

std::optional<double> pick_witness(std::vector<double> roots) {
  if (roots.empty()) return std::nullopt;
  std::sort(roots.begin(), roots.end(), [](double l, double r) {
    if (std::abs(std::abs(l) - std::abs(r)) > 1e-10) return std::abs(l) < std::abs(r);
    return l > r;
  });
  return roots.front();
}

// Searches both pairings: sign changes of e1 checked against e2 and vice versa.
std::optional<double> search_pair(const Fn& e1, const Fn& e2, SearchWindow window) {
  std::vector<double> roots;
  const double lo = window.lo;
  const double hi = window.hi;
  auto scan_side = [&](double a, double b) {
    if (b - a <= 0) return;
    common_roots(e1, e2, a, b, roots);
    common_roots(e2, e1, a, b, roots);
  };
  constexpr double gap = 1e-9;
  if (hi > gap) scan_side(std::max(lo, gap), hi);
  if (lo < -gap) scan_side(lo, std::min(hi, -gap));
  return pick_witness(std::move(roots));
}

}  // namespace

std::optional<double> detect_multigerm(const PlaneGerm& g, const ParamValues& params, MultigermKind kind,
                                       SearchWindow window) {
  const Assignment<double> fixed = param_assignment(params);
  if (kind == MultigermKind::double_curve_selfcross) {
    const MultiPoly t1 = strip_power(substitute(g.f1, Var::x, MultiPoly()), Var::y);
    const MultiPoly t2 = strip_power(substitute(g.f2, Var::x, MultiPoly()), Var::y);
    const CompiledPoly c1(t1, Var::y, Var::s, fixed);
    const CompiledPoly c2(t2, Var::y, Var::s, fixed);
    return search_pair([&](double y) { return c1(y, 0.0); }, [&](double y) { return c2(y, 0.0); }, window);
  }

  const MultiPoly lambda = jacobian_det(g);
  const MultiPoly lx = lambda.coefficient(Var::x, 1);
  if (lambda.degree(Var::x) == 1 && lx.constant_value()) {
    // Sigma is the graph x = x(y).
    const MultiPoly x_of_y = -lambda.coefficient(Var::x, 0) * MultiPoly(Rational(1) / *lx.constant_value());
    const MultiPoly e1 = strip_power(substitute(g.f1, Var::x, x_of_y), Var::y);
    const MultiPoly e2 = strip_power(substitute(g.f2, Var::x, x_of_y), Var::y);
    const CompiledPoly c1(e1, Var::y, Var::s, fixed);
    const CompiledPoly c2(e2, Var::y, Var::s, fixed);
    return search_pair([&](double y) { return c1(y, 0.0); }, [&](double y) { return c2(y, 0.0); }, window);
  }

  const MultiPoly ly = lambda.coefficient(Var::y, 1);
  if (lambda.degree(Var::y) == 1 && ly.constant_value()) {
    // Sigma is the graph y = y(x).
    const double c = ly.constant_value()->get_d();
    const CompiledPoly rest(lambda.coefficient(Var::y, 0), Var::x, Var::s, fixed);
    const CompiledPoly f1(g.f1, params);
    const CompiledPoly f2(g.f2, params);
    auto graph_y = [&](double x) { return -rest(x, 0.0) / c; };
    return search_pair([&](double x) { return f1(x, graph_y(x)) / x; },
                       [&](double x) { return f2(x, graph_y(x)) / x; }, window);
  }

  // Otherwise Sigma is a quadratic in y over x; follow both root branches.
  if (lambda.degree(Var::y) != 2 || !lambda.coefficient(Var::y, 2).constant_value()) {
    throw AlgebraError("detect_multigerm: singular set is neither a graph over y nor a quadratic in y");
  }
  const double q2 = lambda.coefficient(Var::y, 2).constant_value()->get_d();
  const CompiledPoly q1(lambda.coefficient(Var::y, 1), Var::x, Var::s, fixed);
  const CompiledPoly q0(lambda.coefficient(Var::y, 0), Var::x, Var::s, fixed);
  const CompiledPoly f1(g.f1, params);
  const CompiledPoly f2(g.f2, params);
  std::vector<double> roots;
  for (const double sign : {1.0, -1.0}) {
    auto branch_y = [&](double x) {
      const double b = q1(x, 0.0);
      const double disc = b * b - 4.0 * q2 * q0(x, 0.0);
      if (disc < 0) return std::numeric_limits<double>::quiet_NaN();
      return (-b + sign * std::sqrt(disc)) / (2.0 * q2);
    };
    const Fn e1 = [&](double x) { return f1(x, branch_y(x)) / x; };
    const Fn e2 = [&](double x) { return f2(x, branch_y(x)) / x; };
    if (auto w = search_pair(e1, e2, window)) roots.push_back(*w);
  }
  return pick_witness(std::move(roots));
}

}  // namespace crosscap
