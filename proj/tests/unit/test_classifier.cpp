#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "crosscap/bifurcation.hpp"
#include "crosscap/classifier.hpp"
#include "crosscap/contour.hpp"

using namespace crosscap;

namespace {

MultiPoly P(const char* text) { return parse_poly(text); }

using SC = SingularityClass;

struct NormalForm {
  const char* f1;
  const char* f2;
  bool boundary;
  SC expected;
};

// Normal forms of the plane classes.
const NormalForm kNormalForms[] = {
    {"x", "y^2", false, SC::Fold},
    {"x", "x*y + y^3", false, SC::Cusp},
    {"x", "y^3 + x^2*y", false, SC::Lips},
    {"x", "y^3 - x^2*y", false, SC::Beaks},
    {"x", "x*y + y^4", false, SC::Swallowtail},
    {"y", "x*y + x^2", true, SC::SemiFold},
    {"y", "x*y + x^3", true, SC::SemiCusp},
    {"y", "x^2 + x*y^2", true, SC::SemiLips},
    {"y", "x^2 - x*y^2", true, SC::SemiBeaks},
    {"x + y^3", "y^2", true, SC::BoundaryCusp},
};

SC classify_normal_form(const NormalForm& nf, double tol = kDefaultTolerance) {
  auto g = make_plane_germ(P(nf.f1), P(nf.f2));
  auto jd = jet_data(g);
  return nf.boundary ? classify_boundary(jd, 0.0, {}, tol) : classify_interior(jd, {0, 0}, {}, tol);
}

// Root of lambda(., y) in [lo, hi] along x, when bracketed.
std::optional<double> root_in_x(const CompiledPoly& lam, double y, double lo, double hi) {
  double flo = lam(lo, y);
  if (flo * lam(hi, y) > 0) return std::nullopt;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = lam(mid, y);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("normal forms classify to their named class at the origin") {
  for (const auto& nf : kNormalForms) {
    INFO(nf.f1 << ", " << nf.f2);
    CHECK(classify_normal_form(nf) == nf.expected);
  }
  CHECK(is_lips_or_beaks(classify_normal_form(kNormalForms[2])));
  CHECK(is_semi_lips_or_beaks(classify_normal_form(kNormalForms[7])));
}

TEST_CASE("no degenerate verdicts on normal forms across tolerances") {
  for (double tol : {1e-9, 1e-8, 1e-7, 1e-6, 1e-5, 1e-4}) {
    for (const auto& nf : kNormalForms) CHECK(classify_normal_form(nf, tol) == nf.expected);
  }
}

TEST_CASE("class names") {
  CHECK(class_name(SC::Fold) == "fold");
  CHECK(class_name(SC::SemiLips) == "semi-lips");
  CHECK(class_name(SC::BoundaryCusp) == "boundary-cusp");
  CHECK(is_boundary_class(SC::SemiCusp));
  CHECK_FALSE(is_boundary_class(SC::Cusp));
}

TEST_CASE("jet data of the simplest families") {
  auto a = jet_data(compose_with_crosscap(FamilyName::a));
  CHECK(a.lambda == P("2*y"));
  CHECK(a.eta_lambda == 2);
  auto c = jet_data(compose_with_crosscap(FamilyName::c));
  CHECK(c.eta_lambda == apply_field(c.eta, c.lambda));
  CHECK(c.eta2_lambda == apply_field(c.eta, c.eta_lambda));
  CHECK(c.eta3_lambda == apply_field(c.eta, c.eta2_lambda));
  CHECK(c.eta_lambda == c.eta[0] * c.lambda_x + c.eta[1] * c.lambda_y);
}

TEST_CASE("pointwise examples") {
  auto c = compose_with_crosscap(FamilyName::c);
  auto jd = jet_data(c);

  auto swallowtail = stratum_witness(FamilyName::c, 2, Rational(1, 10), Rational(1));
  REQUIRE(swallowtail.size() == 1);
  const auto& w = swallowtail[0];
  CHECK(classify_interior(jd, {w.x, w.y}, {w.alpha, w.beta, 1.0}, 1e-6) == SC::Swallowtail);

  CHECK(classify_boundary(jd, 1.0, {-5, -2, 1}) == SC::BoundaryCusp);

  const double y0 = 0.1;
  ParamValues semi{2 * y0 - 4 * y0 * y0 - 9 * std::pow(y0, 4), -2 * std::pow(y0, 3) - 6 * std::pow(y0, 5), 1};
  CHECK(classify_boundary(jd, y0, semi, 1e-6) == SC::SemiCusp);

  ParamValues generic{0.01, -0.02, 1};
  CHECK(classify_boundary(jd, 0.3, generic) == SC::Regular);
}

TEST_CASE("multigerm detection") {
  auto c = compose_with_crosscap(FamilyName::c);
  const double y0 = 0.5;
  auto self = detect_multigerm(c, {-y0 * y0 - std::pow(y0, 4), -y0 * y0, 1}, MultigermKind::double_curve_selfcross);
  REQUIRE(self.has_value());
  CHECK(std::abs(std::abs(*self) - y0) < 1e-9);

  const double t = 0.1;
  ParamValues on6{2 * t - 3 * t * t - 5 * std::pow(t, 4), t * t - 2 * std::pow(t, 3) - 4 * std::pow(t, 5), 1};
  auto hit = detect_multigerm(c, on6, MultigermKind::contour_hits_crosscap);
  REQUIRE(hit.has_value());
  CHECK(std::abs(*hit - t) < 1e-6);

  for (auto kind : {MultigermKind::contour_hits_crosscap, MultigermKind::double_curve_selfcross}) {
    CHECK_FALSE(detect_multigerm(c, {1, 1, 1}, kind).has_value());
    CHECK_FALSE(detect_multigerm(compose_with_crosscap(FamilyName::a), {0.3, -0.2, 0}, kind).has_value());
  }
}

TEST_CASE("verdicts do not depend on the choice of null field") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const FamilyName families[] = {FamilyName::b, FamilyName::c, FamilyName::d_plus, FamilyName::d_minus};
  int compared = 0;
  int non_fold = 0;

  auto compare = [&](const PlaneGerm& g, const ParamValues& pv, Vec2 p, bool boundary) {
    auto j1 = jet_data(g, EtaComponent::first, EtaCheck::pointwise);
    auto j2 = jet_data(g, EtaComponent::second, EtaCheck::pointwise);
    CompiledJet c1(j1, pv), c2(j2, pv);
    // both fields must be nonzero at the point
    if (std::hypot(c1.eta1(p.x, p.y), c1.eta2(p.x, p.y)) < 1e-3) return;
    if (std::hypot(c2.eta1(p.x, p.y), c2.eta2(p.x, p.y)) < 1e-3) return;
    SC v1 = boundary ? classify_boundary(c1, p.y, 1e-6) : classify_interior(c1, p, 1e-6);
    SC v2 = boundary ? classify_boundary(c2, p.y, 1e-6) : classify_interior(c2, p, 1e-6);
    INFO("family " << family_label(*g.family) << " at (" << p.x << ", " << p.y << ")");
    CHECK(v1 == v2);
    ++compared;
    if (v1 != SC::Fold && v1 != SC::SemiFold) ++non_fold;
  };

  // stratum witnesses give the degenerate points
  for (FamilyName f : {FamilyName::c, FamilyName::d_plus}) {
    auto g = compose_with_crosscap(f);
    for (const auto& info : strata_of(f)) {
      if (!is_pointwise(info.kind)) continue;
      for (const auto& w : stratum_witness(f, info.label, Rational(1, 10), Rational(3))) {
        compare(g, {w.alpha, w.beta, 3}, {w.x, w.y}, is_boundary_stratum(info.kind));
      }
    }
  }
  // random points of the singular set, interior and on the boundary line
  for (int attempt = 0; attempt < 2000 && compared < 50; ++attempt) {
    auto f = families[static_cast<std::size_t>(attempt) % 4];
    auto g = compose_with_crosscap(f);
    ParamValues pv{0.1 * unit(rng), 0.1 * unit(rng), 3 + unit(rng)};
    CompiledPoly lam(jacobian_det(g), pv);
    if (attempt % 3 == 0) {
      // boundary: lambda(0, y) = 0
      auto along = [&](double y) { return lam(0, y); };
      double lo = 0.02, hi = 0.5;
      if (along(lo) * along(hi) > 0) continue;
      double flo = along(lo);
      for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if ((along(mid) < 0) == (flo < 0)) {
          lo = mid;
          flo = along(mid);
        } else {
          hi = mid;
        }
      }
      compare(g, pv, {0, 0.5 * (lo + hi)}, true);
    } else {
      double y = 0.4 * unit(rng);
      auto x = root_in_x(lam, y, -0.5, 0.5);
      if (!x || std::abs(*x) < 1e-3) continue;
      compare(g, pv, {*x, y}, false);
    }
  }
  CHECK(compared >= 50);
  CHECK(non_fold > 0);
}

TEST_CASE("only stable classes away from the strata") {
  const double a0 = 1;
  auto curves = solve_family(GermCatalog::standard(), FamilyName::c);
  auto traced = trace_family(curves, a0, 0.15, 2000);
  auto distance_to_strata = [&](double al, double be) {
    double best = 1e9;
    for (const auto& dc : traced) {
      const auto& pts = dc.line.points;
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double dx = pts[i + 1].x - pts[i].x, dy = pts[i + 1].y - pts[i].y;
        double len2 = dx * dx + dy * dy;
        double t = len2 > 0 ? std::clamp(((al - pts[i].x) * dx + (be - pts[i].y) * dy) / len2, 0.0, 1.0) : 0.0;
        best = std::min(best, std::hypot(al - pts[i].x - t * dx, be - pts[i].y - t * dy));
      }
    }
    return best;
  };

  auto g = compose_with_crosscap(FamilyName::c);
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> radius(0.01, 0.1);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  int sampled = 0;
  while (sampled < 20) {
    double r = radius(rng), th = angle(rng);
    ParamValues pv{r * std::cos(th), r * std::sin(th), a0};
    if (distance_to_strata(pv.alpha, pv.beta) < 1e-3) continue;
    ++sampled;
    SceneOptions opts;
    opts.source = Window::square(0.25);
    opts.grid = 256;
    auto scene = build_scene(g, pv, opts);
    for (const auto& m : scene.markers) {
      INFO("alpha=" << pv.alpha << " beta=" << pv.beta << " class " << class_name(m.cls));
      CHECK((m.cls == SC::Fold || m.cls == SC::Cusp || m.cls == SC::SemiFold || m.cls == SC::Regular));
    }
  }
}
