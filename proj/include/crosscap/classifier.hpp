#pragma once

// Recognition criteria for fold, cusp, swallowtail, lips/beaks and their
// boundary analogues along the double-point preimage {x = 0}, evaluated
// numerically from exact symbolic jets.

#include <array>
#include <optional>
#include <string_view>

#include "crosscap/germ_catalog.hpp"
#include "crosscap/numeric.hpp"

namespace crosscap {

enum class SingularityClass {
  Regular,
  Fold,
  Cusp,
  Swallowtail,
  Lips,
  Beaks,
  SemiFold,
  SemiCusp,
  SemiLips,
  SemiBeaks,
  BoundaryCusp,
  Degenerate,
};

std::string_view class_name(SingularityClass c);
bool is_lips_or_beaks(SingularityClass c);
bool is_semi_lips_or_beaks(SingularityClass c);
bool is_boundary_class(SingularityClass c);

/// lambda = det dF, the null field eta and the iterated eta-derivatives.
struct JetData {
  MultiPoly lambda;
  MultiPoly lambda_x;
  MultiPoly lambda_y;
  MultiPoly lambda_xx;
  MultiPoly lambda_xy;
  MultiPoly lambda_yy;
  std::array<MultiPoly, 2> eta;
  MultiPoly eta_lambda;
  MultiPoly eta2_lambda;
  MultiPoly eta3_lambda;
  EtaComponent component = EtaComponent::first;
};

JetData jet_data(const PlaneGerm& g, EtaComponent component, EtaCheck check = EtaCheck::at_origin);
JetData jet_data(const PlaneGerm& g);

/// eta applied as a derivation: eta_1 * dp/dx + eta_2 * dp/dy.
MultiPoly apply_field(const std::array<MultiPoly, 2>& eta, const MultiPoly& p);

/// JetData specialised to fixed numeric parameters.
class CompiledJet {
 public:
  CompiledJet(const JetData& jd, const ParamValues& params);

  CompiledPoly lambda, lambda_x, lambda_y, lambda_xx, lambda_xy, lambda_yy;
  CompiledPoly eta1, eta2, eta_lambda, eta2_lambda, eta3_lambda;
};

inline constexpr double kDefaultTolerance = 1e-8;

SingularityClass classify_interior(const CompiledJet& jet, Vec2 point, double tol = kDefaultTolerance);
SingularityClass classify_interior(const JetData& jd, Vec2 point, const ParamValues& params,
                                   double tol = kDefaultTolerance);

/// Classification at (0, y0) on the boundary line.
SingularityClass classify_boundary(const CompiledJet& jet, double y0, double tol = kDefaultTolerance);
SingularityClass classify_boundary(const JetData& jd, double y0, const ParamValues& params,
                                   double tol = kDefaultTolerance);

enum class MultigermKind {
  /// The apparent contour passes through the crosscap point image.
  contour_hits_crosscap,
  /// The image of the double-point curve crosses itself at the crosscap point.
  double_curve_selfcross,
};

std::string_view multigerm_name(MultigermKind kind);

struct SearchWindow {
  double lo = -0.6;
  double hi = 0.6;
};

/// Returns a witness parameter value t != 0 on the curve searched (y on the
/// boundary or on the singular set; x when the singular set is only
/// parametrizable by x), or nullopt when the event does not occur.
std::optional<double> detect_multigerm(const PlaneGerm& g, const ParamValues& params, MultigermKind kind,
                                       SearchWindow window = {});

}  // namespace crosscap
