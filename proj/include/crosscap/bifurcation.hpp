#pragma once

// Exact derivation of the bifurcation curves of the versal unfoldings: each
// stratum is a polynomial system generated from the jets of F o phi, solved as
// power series in a curve parameter, and reduced to a relation in (alpha, beta).

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crosscap/classifier.hpp"
#include "crosscap/germ_catalog.hpp"
#include "crosscap/numeric.hpp"
#include "crosscap/series.hpp"

namespace crosscap {

inline constexpr unsigned kDefaultOrder = 8;

enum class StratumKind {
  b_type,
  swallowtail,
  semi_lips_beaks,
  semi_cusp,
  boundary_cusp,
  contour_through_crosscap,
  double_curve_crossing,
  beaks,
};

struct StratumInfo {
  FamilyName family;
  int label;  // numbering as in the curve lists of each family
  StratumKind kind;
  std::string name;
};

/// Strata of the bifurcation diagram of a family, in label order.
std::vector<StratumInfo> strata_of(FamilyName family);
const StratumInfo& stratum_info(FamilyName family, int label);

/// Whether a classifier verdict is the one defining a pointwise stratum.
bool realises(StratumKind kind, SingularityClass c);
/// Pointwise strata are checked on the boundary line or in the interior.
bool is_pointwise(StratumKind kind);
bool is_boundary_stratum(StratumKind kind);
std::optional<MultigermKind> multigerm_of(StratumKind kind);

enum class PlanKind {
  /// Closed-form relation taken as data (the (b)-type loci).
  closed_form,
  /// Eliminate x, then solve linearly for (alpha, beta) in the parameter y.
  linear,
  /// Solve all but one equation linearly for (alpha, beta); the remaining one
  /// defines y(x) by branch solving.
  linear_then_branch,
  /// beta from one equation, alpha from a quadratic (square root), y(x) from
  /// the remaining equation after clearing the radical.
  radical_branch,
};

struct ExactRelation {
  Var lhs;          // alpha or beta
  MultiPoly rhs;    // polynomial in the other parameter and a
};

struct SignConstraint {
  Var var;
  int sign;  // +1: var > 0, -1: var < 0
};

std::string to_string(const ExactRelation& r);
std::string to_string(const SignConstraint& c);

struct StratumSystem {
  StratumInfo info;
  PlanKind plan = PlanKind::closed_form;
  std::vector<MultiPoly> equations;  // in (x, y, alpha, beta, a)
  Var parameter = Var::y;            // curve parameter
  std::vector<std::string> side_conditions;
  std::optional<ExactRelation> closed_form;
  std::size_t branch_equation = 0;   // linear_then_branch: equation defining y(x)
};

StratumSystem stratum_system(const GermCatalog& catalog, FamilyName family, int label);
StratumSystem stratum_system(FamilyName family, int label);

enum class Branch { none, plus, minus };
std::string_view branch_name(Branch b);

/// Everything needed to evaluate a stratum pointwise: source coordinates and
/// (alpha, beta) as functions of the curve parameter.
struct StratumParametrization {
  Var parameter = Var::y;
  Var dependent = Var::x;
  /// dependent coordinate as a polynomial in (parameter, a), when explicit
  std::optional<MultiPoly> dependent_explicit;
  /// alpha, beta as num/den in (parameter, dependent, s, a); s^2 = radicand
  MultiPoly alpha_num, alpha_den{1}, beta_num, beta_den{1};
  std::optional<MultiPoly> radicand;
  int radical_sign = 0;  // s = radical_sign * sqrt(radicand)
  /// branch strata: equation for the dependent coordinate and its series
  std::optional<MultiPoly> branch_equation;
  std::optional<MultiPoly> residual_rational;  // P in P + s Q = 0
  std::optional<MultiPoly> residual_radical;   // Q
  std::optional<TruncatedSeries> dependent_series;
  /// the equations left after eliminating x and clearing parameter powers
  std::vector<MultiPoly> reduced_equations;
  /// closed-form strata have no source data
  bool closed_form = false;
};

struct BifurcationCurve {
  StratumInfo info;
  Branch branch = Branch::none;
  unsigned order = 0;
  std::optional<TruncatedSeries> series;    // beta as a series in alpha
  std::optional<ExactRelation> exact;       // untruncated relation
  std::optional<SignConstraint> constraint;
  /// alpha(t), beta(t) in the curve parameter t (intermediate data)
  std::optional<TruncatedSeries> alpha_param;
  std::optional<TruncatedSeries> beta_param;
  StratumParametrization parametrization;
};

/// Solves the stratum system; one curve per branch.
std::vector<BifurcationCurve> solve_stratum(const GermCatalog& catalog, FamilyName family, int label,
                                            unsigned order = kDefaultOrder);
std::vector<BifurcationCurve> solve_stratum(FamilyName family, int label, unsigned order = kDefaultOrder);

/// All curves of a family's bifurcation diagram.
std::vector<BifurcationCurve> solve_family(const GermCatalog& catalog, FamilyName family,
                                           unsigned order = kDefaultOrder);

using CurveDifference = std::variant<MultiPoly, TruncatedSeries>;

/// c1 - c2 in their common form: exact relations with the same solved
/// variable give a polynomial; series (or an exact beta(alpha)) give a series.
CurveDifference curve_difference(const BifurcationCurve& c1, const BifurcationCurve& c2);

/// Source point and parameters realising a stratum at one parameter value.
struct Witness {
  Branch branch = Branch::none;
  double x = 0, y = 0, alpha = 0, beta = 0;
  /// exact values, when the stratum parametrization is rational
  std::optional<Rational> x_exact, y_exact, alpha_exact, beta_exact;
};

std::vector<Witness> stratum_witness(FamilyName family, int label, const Rational& t0, const Rational& a0);
std::optional<Witness> curve_witness(const BifurcationCurve& curve, const Rational& t0, const Rational& a0);

struct ParamPoint {
  double x = 0, y = 0, alpha = 0, beta = 0;
};

/// Numeric evaluation at curve parameter t; nullopt when the point is outside
/// the domain (negative radicand, sign constraint, failed branch solve).
std::optional<ParamPoint> evaluate_curve(const BifurcationCurve& curve, double t, double a0);

struct Polyline {
  std::string id;
  std::vector<Vec2> points;
};

/// Samples (alpha, beta) along the stratum for t in [t_lo, t_hi].
Polyline trace_stratum_numeric(const BifurcationCurve& curve, double a0, double t_lo, double t_hi, int samples);

std::string curve_id(const BifurcationCurve& curve);  // e.g. "c(5)", "d+(2)+"

}  // namespace crosscap
