#include "crosscap/germ_catalog.hpp"

#include <cmath>

namespace crosscap {

std::string_view family_label(FamilyName f) {
  switch (f) {
    case FamilyName::a: return "a";
    case FamilyName::b: return "b";
    case FamilyName::c: return "c";
    case FamilyName::d_plus: return "d+";
    case FamilyName::d_minus: return "d-";
  }
  return "?";
}

std::optional<FamilyName> parse_family(std::string_view text) {
  if (text == "a") return FamilyName::a;
  if (text == "b") return FamilyName::b;
  if (text == "c") return FamilyName::c;
  if (text == "d+" || text == "d_plus" || text == "dplus") return FamilyName::d_plus;
  if (text == "d-" || text == "d_minus" || text == "dminus" || text == "d−") return FamilyName::d_minus;
  return std::nullopt;
}

std::vector<FamilyName> all_families() {
  return {FamilyName::a, FamilyName::b, FamilyName::c, FamilyName::d_plus, FamilyName::d_minus};
}

std::array<MultiPoly, 3> crosscap_parametrization() { return {kX, kX * kY, kY * kY}; }

bool AXFamily::modulus_allowed(const Rational& a) const {
  switch (name) {
    case FamilyName::c: return a != 0;
    case FamilyName::d_plus:
    case FamilyName::d_minus: return a * a - 4 != 0;
    default: return true;
  }
}

bool AXFamily::modulus_allowed(double a) const {
  if (!std::isfinite(a)) return false;
  switch (name) {
    case FamilyName::c: return a != 0.0;
    case FamilyName::d_plus:
    case FamilyName::d_minus: return a * a - 4.0 != 0.0;
    default: return true;
  }
}

void AXFamily::validate_modulus(const Rational& a) const {
  if (!modulus_allowed(a)) {
    throw ConstraintError("family (" + std::string(family_label(name)) + ") excludes a = " + a.get_str() +
                          ": the A(X)-classification requires " + constraint);
  }
}

void AXFamily::validate_modulus(double a) const {
  if (!modulus_allowed(a)) {
    throw ConstraintError("family (" + std::string(family_label(name)) + ") excludes a = " + std::to_string(a) +
                          ": the A(X)-classification requires " + constraint);
  }
}

const GermCatalog& GermCatalog::standard() {
  static const GermCatalog catalog = [] {
    GermCatalog c;
    const MultiPoly u3 = kU.pow(3);
    const MultiPoly u2 = kU * kU;
    const MultiPoly w2 = kW * kW;
    const MultiPoly w3 = kW.pow(3);
    c.families_[FamilyName::a] = {FamilyName::a, {kU, kW}, {kU, kW}, 0, false, ""};
    c.families_[FamilyName::b] = {FamilyName::b, {kU + kW, kV}, {kU + kW, kV + kAlpha * kU}, 1, false, ""};
    c.families_[FamilyName::c] = {FamilyName::c,
                                  {kU + w2 + kA * w3, kV + w2},
                                  {kU + w2 + kA * w3 + kAlpha * kW, kV + w2 + kBeta * kW},
                                  2,
                                  true,
                                  "a != 0"};
    c.families_[FamilyName::d_plus] = {FamilyName::d_plus,
                                       {kV + u3, kW + u2 + kA * u3},
                                       {kV + u3 + kAlpha * kU, kW + u2 + kA * u3 + kBeta * kU},
                                       2,
                                       true,
                                       "a^2 - 4 != 0"};
    c.families_[FamilyName::d_minus] = {FamilyName::d_minus,
                                        {kV + u3, kW - u2 + kA * u3},
                                        {kV + u3 + kAlpha * kU, kW - u2 + kA * u3 + kBeta * kU},
                                        2,
                                        true,
                                        "a^2 - 4 != 0"};
    return c;
  }();
  return catalog;
}

PlaneGerm compose_with_crosscap(const AXFamily& family) {
  const auto phi = crosscap_parametrization();
  const std::map<Var, MultiPoly> sub = {{Var::u, phi[0]}, {Var::v, phi[1]}, {Var::w, phi[2]}};
  PlaneGerm g;
  g.f1 = substitute(family.unfolding[0], sub);
  g.f2 = substitute(family.unfolding[1], sub);
  g.family = family.name;
  return g;
}

PlaneGerm compose_with_crosscap(FamilyName family) {
  return compose_with_crosscap(GermCatalog::standard().family(family));
}

PlaneGerm make_plane_germ(const MultiPoly& f1, const MultiPoly& f2) {
  PlaneGerm g;
  g.f1 = f1;
  g.f2 = f2;
  return g;
}

namespace {

// The gradient at (0, 0) must not vanish identically in (alpha, beta, a).
bool has_linear_part_at_origin(const MultiPoly& h) {
  const std::map<Var, MultiPoly> origin = {{Var::x, MultiPoly()}, {Var::y, MultiPoly()}};
  return !substitute(diff(h, Var::x), origin).is_zero() || !substitute(diff(h, Var::y), origin).is_zero();
}

}  // namespace

std::array<MultiPoly, 2> eta_field(const PlaneGerm& g, EtaComponent component, EtaCheck check) {
  const MultiPoly& h = component == EtaComponent::first ? g.f1 : g.f2;
  if (check == EtaCheck::at_origin && !has_linear_part_at_origin(h)) {
    throw AlgebraError(std::string("eta_field: the ") + (component == EtaComponent::first ? "first" : "second") +
                       " component has vanishing linear part at the origin");
  }
  return {-diff(h, Var::y), diff(h, Var::x)};
}

EtaComponent default_eta_component(const PlaneGerm& g) {
  if (g.family) {
    switch (*g.family) {
      case FamilyName::d_plus:
      case FamilyName::d_minus: return EtaComponent::second;
      default: return EtaComponent::first;
    }
  }
  return has_linear_part_at_origin(g.f1) || !has_linear_part_at_origin(g.f2) ? EtaComponent::first
                                                                              : EtaComponent::second;
}

MultiPoly jacobian_det(const PlaneGerm& g) {
  return det2(diff(g.f1, Var::x), diff(g.f1, Var::y), diff(g.f2, Var::x), diff(g.f2, Var::y));
}

}  // namespace crosscap
