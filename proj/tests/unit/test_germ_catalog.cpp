#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "crosscap/classifier.hpp"
#include "crosscap/germ_catalog.hpp"

using namespace crosscap;

namespace {

MultiPoly P(const char* text) { return parse_poly(text); }

const std::map<Var, MultiPoly> kNoUnfolding = {{Var::alpha, MultiPoly()}, {Var::beta, MultiPoly()}};

}  // namespace

TEST_CASE("family names") {
  for (FamilyName f : all_families()) CHECK(parse_family(family_label(f)) == f);
  CHECK_FALSE(parse_family("e").has_value());
}

TEST_CASE("crosscap parametrization") {
  auto phi = crosscap_parametrization();
  CHECK(phi[0] == kX);
  CHECK(phi[1] == P("x*y"));
  CHECK(phi[2] == P("y^2"));
  // points of the y-axis with opposite y share an image
  CHECK(substitute(phi[1], Var::x, 0) == substitute(substitute(phi[1], Var::x, 0), Var::y, -kY));
}

TEST_CASE("compositions with the crosscap") {
  CHECK(compose_with_crosscap(FamilyName::a).f1 == kX);
  CHECK(compose_with_crosscap(FamilyName::a).f2 == P("y^2"));
  auto b = compose_with_crosscap(FamilyName::b);
  CHECK(b.f1 == P("x + y^2"));
  CHECK(b.f2 == P("x*y + alpha*x"));
  auto c = compose_with_crosscap(FamilyName::c);
  CHECK(c.f1 == P("x + y^4 + a*y^6 + alpha*y^2"));
  CHECK(c.f2 == P("x*y + y^4 + beta*y^2"));
  auto dp = compose_with_crosscap(FamilyName::d_plus);
  CHECK(dp.f1 == P("x*y + x^3 + alpha*x"));
  CHECK(dp.f2 == P("x^2 + y^2 + a*x^3 + beta*x"));
  auto dm = compose_with_crosscap(FamilyName::d_minus);
  CHECK(dm.f2 == P("-x^2 + y^2 + a*x^3 + beta*x"));
}

TEST_CASE("unfoldings restrict to the normal forms") {
  const auto& catalog = GermCatalog::standard();
  for (FamilyName f : all_families()) {
    const auto& fam = catalog.family(f);
    for (int i = 0; i < 2; ++i) CHECK(substitute(fam.unfolding[i], kNoUnfolding) == fam.normal_form[i]);
    auto g = compose_with_crosscap(fam);
    auto origin = std::map<Var, MultiPoly>{{Var::x, 0}, {Var::y, 0}, {Var::alpha, 0}, {Var::beta, 0}};
    CHECK(substitute(g.f1, origin).is_zero());
    CHECK(substitute(g.f2, origin).is_zero());
  }
  CHECK(catalog.family(FamilyName::a).codim == 0);
  CHECK(catalog.family(FamilyName::b).codim == 1);
  CHECK(catalog.family(FamilyName::c).codim == 2);
}

TEST_CASE("modulus constraints") {
  const auto& catalog = GermCatalog::standard();
  CHECK_THROWS_AS(catalog.family(FamilyName::c).validate_modulus(Rational(0)), ConstraintError);
  CHECK_NOTHROW(catalog.family(FamilyName::c).validate_modulus(Rational(1)));
  for (FamilyName f : {FamilyName::d_plus, FamilyName::d_minus}) {
    CHECK_THROWS_AS(catalog.family(f).validate_modulus(Rational(2)), ConstraintError);
    CHECK_THROWS_AS(catalog.family(f).validate_modulus(-2.0), ConstraintError);
    CHECK_NOTHROW(catalog.family(f).validate_modulus(Rational(0)));
  }
  CHECK_NOTHROW(catalog.family(FamilyName::a).validate_modulus(Rational(0)));
  try {
    catalog.family(FamilyName::c).validate_modulus(0.0);
  } catch (const ConstraintError& e) {
    CHECK(std::string(e.what()).find("a != 0") != std::string::npos);
  }
}

TEST_CASE("null fields of the families") {
  auto c = compose_with_crosscap(FamilyName::c);
  auto eta_c = eta_field(c, EtaComponent::first);
  CHECK(eta_c[0] == P("-(4*y^3 + 6*a*y^5 + 2*alpha*y)"));
  CHECK(eta_c[1] == 1);
  CHECK(default_eta_component(c) == EtaComponent::first);

  auto dp = compose_with_crosscap(FamilyName::d_plus);
  auto eta_dp = eta_field(dp, EtaComponent::second);
  CHECK(eta_dp[0] == P("-2*y"));
  CHECK(eta_dp[1] == P("2*x + 3*a*x^2 + beta"));
  CHECK(default_eta_component(dp) == EtaComponent::second);

  auto dm = compose_with_crosscap(FamilyName::d_minus);
  auto eta_dm = eta_field(dm, EtaComponent::second);
  CHECK(eta_dm[0] == P("-2*y"));
  CHECK(eta_dm[1] == P("-2*x + 3*a*x^2 + beta"));
}

TEST_CASE("a component with no linear part is rejected") {
  auto g = make_plane_germ(P("x^2 + y^2"), kX);
  CHECK_THROWS_AS(eta_field(g, EtaComponent::first), AlgebraError);
  CHECK_NOTHROW(eta_field(g, EtaComponent::first, EtaCheck::pointwise));
}

TEST_CASE("the null field annihilates its component") {
  for (FamilyName f : all_families()) {
    auto g = compose_with_crosscap(f);
    for (auto comp : {EtaComponent::first, EtaComponent::second}) {
      auto eta = eta_field(g, comp, EtaCheck::pointwise);
      const MultiPoly& h = comp == EtaComponent::first ? g.f1 : g.f2;
      CHECK(apply_field(eta, h).is_zero());
    }
  }
}

TEST_CASE("jacobians") {
  CHECK(jacobian_det(compose_with_crosscap(FamilyName::a)) == P("2*y"));
  CHECK(jacobian_det(compose_with_crosscap(FamilyName::c)) ==
        P("x + 4*y^3 + 2*beta*y - 4*y^4 - 2*alpha*y^2 - 6*a*y^6"));
  CHECK(jacobian_det(compose_with_crosscap(FamilyName::d_plus)) ==
        P("2*y^2 + 6*x^2*y + 2*alpha*y - 2*x^2 - 3*a*x^3 - beta*x"));
  CHECK(jacobian_det(compose_with_crosscap(FamilyName::d_minus)) ==
        P("2*y^2 + 6*x^2*y + 2*alpha*y + 2*x^2 - 3*a*x^3 - beta*x"));
  for (FamilyName f : all_families()) {
    auto lambda = jacobian_det(compose_with_crosscap(f));
    auto at0 = substitute(lambda, {{Var::x, 0}, {Var::y, 0}, {Var::alpha, 0}, {Var::beta, 0}});
    CHECK(at0.is_zero());
  }
}

TEST_CASE("the null field spans the kernel on the singular set") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto families = all_families();
  int checked = 0;
  for (int attempt = 0; attempt < 400 && checked < 20; ++attempt) {
    FamilyName f = families[static_cast<std::size_t>(attempt) % families.size()];
    auto g = compose_with_crosscap(f);
    ParamValues pv{0.1 * unit(rng), 0.1 * unit(rng), 1.5 + unit(rng)};
    auto lambda = jacobian_det(g);
    CompiledPoly lam(lambda, pv);
    double y = 0.4 * unit(rng);
    // bracket a root of lambda(., y) along x
    double lo = -0.5, hi = 0.5;
    double flo = lam(lo, y), fhi = lam(hi, y);
    if (flo * fhi > 0) continue;
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
    double x = 0.5 * (lo + hi);
    auto eta = eta_field(g, default_eta_component(g), EtaCheck::pointwise);
    CompiledPoly e1(eta[0], pv), e2(eta[1], pv);
    double n1 = e1(x, y), n2 = e2(x, y);
    double jac[2][2];
    for (int i = 0; i < 2; ++i) {
      jac[i][0] = CompiledPoly(diff(g.component(i), Var::x), pv)(x, y);
      jac[i][1] = CompiledPoly(diff(g.component(i), Var::y), pv)(x, y);
    }
    double image = std::hypot(jac[0][0] * n1 + jac[0][1] * n2, jac[1][0] * n1 + jac[1][1] * n2);
    double scale = std::sqrt(jac[0][0] * jac[0][0] + jac[0][1] * jac[0][1] + jac[1][0] * jac[1][0] +
                             jac[1][1] * jac[1][1]) *
                   std::hypot(n1, n2);
    REQUIRE(scale > 0);
    CHECK(image / scale < 1e-8);
    ++checked;
  }
  CHECK(checked == 20);
}

TEST_CASE("catalog entries can be replaced") {
  GermCatalog catalog = GermCatalog::standard();
  AXFamily fam = catalog.family(FamilyName::c);
  fam.unfolding[1] = fam.unfolding[1] - 2 * kBeta * kW;
  catalog.set_family(fam);
  CHECK(compose_with_crosscap(catalog.family(FamilyName::c)).f2 == P("x*y + y^4 - beta*y^2"));
  CHECK(compose_with_crosscap(FamilyName::c).f2 == P("x*y + y^4 + beta*y^2"));
}
