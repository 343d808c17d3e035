#pragma once

// Normal forms and versal unfoldings of submersions (R^3,0) -> (R^2,0) up to
// crosscap-preserving equivalence, and their composition with the standard
// crosscap parametrization.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crosscap/multipoly.hpp"

namespace crosscap {

enum class FamilyName { a, b, c, d_plus, d_minus };

std::string_view family_label(FamilyName f);  // "a", "b", "c", "d+", "d-"
std::optional<FamilyName> parse_family(std::string_view text);
std::vector<FamilyName> all_families();

/// Raised when a modulus value is excluded by the classification
/// (a = 0 for (c), a = +-2 for (d+) and (d-)).
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// phi(x, y) = (x, xy, y^2). Its double-point preimage is the y-axis.
std::array<MultiPoly, 3> crosscap_parametrization();

struct AXFamily {
  FamilyName name;
  std::array<MultiPoly, 2> normal_form;  // in (u, v, w, a)
  std::array<MultiPoly, 2> unfolding;    // in (u, v, w, a, alpha, beta)
  int codim = 0;
  bool has_modulus = false;
  std::string constraint;  // human-readable, empty when unconstrained

  bool modulus_allowed(const Rational& a) const;
  bool modulus_allowed(double a) const;
  /// Throws ConstraintError when the value is excluded.
  void validate_modulus(const Rational& a) const;
  void validate_modulus(double a) const;
};

/// The family table. The default instance is the standard one; tests may
/// overwrite entries to build negative controls.
class GermCatalog {
 public:
  static const GermCatalog& standard();

  const AXFamily& family(FamilyName name) const { return families_.at(name); }
  void set_family(const AXFamily& family) { families_[family.name] = family; }

 private:
  std::map<FamilyName, AXFamily> families_;
};

/// Marker for the boundary line carried by plane germs: the double-point
/// preimage {x = 0}.
struct BoundaryLine {
  Var coordinate = Var::x;
};

struct PlaneGerm {
  MultiPoly f1;
  MultiPoly f2;
  BoundaryLine boundary;
  std::optional<FamilyName> family;  // empty for germs entered directly

  const MultiPoly& component(int i) const { return i == 0 ? f1 : f2; }
};

PlaneGerm compose_with_crosscap(const AXFamily& family);
PlaneGerm compose_with_crosscap(FamilyName family);
PlaneGerm make_plane_germ(const MultiPoly& f1, const MultiPoly& f2);

enum class EtaComponent { first, second };

enum class EtaCheck {
  /// Require the component's gradient at the origin to be nonzero for generic
  /// parameters.
  at_origin,
  /// Skip the symbolic check; admissibility is decided pointwise by callers.
  pointwise,
};

/// Rotated gradient (-dh/dy, dh/dx) of the chosen component h.
std::array<MultiPoly, 2> eta_field(const PlaneGerm& g, EtaComponent component, EtaCheck check = EtaCheck::at_origin);

/// Component used by default for each family ((c): first, (d+-): second).
EtaComponent default_eta_component(const PlaneGerm& g);

/// Jacobian determinant of the plane germ.
MultiPoly jacobian_det(const PlaneGerm& g);

}  // namespace crosscap
