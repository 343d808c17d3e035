#include "crosscap/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace crosscap {

namespace {

const std::vector<StratumInfo>& stratum_table() {
  static const std::vector<StratumInfo> table = {
      {FamilyName::b, 1, StratumKind::b_type, "(b)-type germ"},
      {FamilyName::c, 1, StratumKind::b_type, "(b)-type germ"},
      {FamilyName::c, 2, StratumKind::swallowtail, "swallowtail"},
      {FamilyName::c, 3, StratumKind::semi_lips_beaks, "semi-lips/semi-beaks"},
      {FamilyName::c, 4, StratumKind::semi_cusp, "semi-cusp"},
      {FamilyName::c, 5, StratumKind::boundary_cusp, "boundary cusp"},
      {FamilyName::c, 6, StratumKind::contour_through_crosscap, "contour through the crosscap point"},
      {FamilyName::c, 7, StratumKind::double_curve_crossing, "double curve crossing at the crosscap point"},
      {FamilyName::d_plus, 1, StratumKind::b_type, "(b)-type germ"},
      {FamilyName::d_plus, 2, StratumKind::beaks, "beaks"},
      {FamilyName::d_plus, 3, StratumKind::swallowtail, "swallowtail"},
      {FamilyName::d_plus, 4, StratumKind::semi_cusp, "semi-cusp"},
      {FamilyName::d_plus, 5, StratumKind::contour_through_crosscap, "contour through the crosscap point"},
      {FamilyName::d_minus, 1, StratumKind::b_type, "(b)-type germ"},
      {FamilyName::d_minus, 2, StratumKind::semi_cusp, "semi-cusp"},
  };
  return table;
}

// A rational function num/den; den is 1 whenever the division is exact.
struct Fraction {
  MultiPoly num;
  MultiPoly den{1};
};

Fraction simplify(Fraction f, Var param) {
  if (auto c = f.den.constant_value()) {
    if (*c == 0) throw AlgebraError("stratum solve: zero denominator");
    return {f.num * MultiPoly(Rational(1) / *c), 1};
  }
  if (auto q = try_divide_exact(f.num, f.den)) return {*q, 1};
  const unsigned k = std::min(f.num.valuation(param), f.den.valuation(param));
  if (k > 0) {
    const MultiPoly p = MultiPoly::variable(param, k);
    f.num = divide_exact(f.num, p);
    f.den = divide_exact(f.den, p);
  }
  return f;
}

// p(v = num/den) * den^deg_v(p)
MultiPoly substitute_cleared(const MultiPoly& p, Var v, const Fraction& f) {
  const unsigned deg = p.degree(v);
  MultiPoly out;
  for (unsigned k = 0; k <= deg; ++k) {
    const MultiPoly c = p.coefficient(v, k);
    if (c.is_zero()) continue;
    out += c * f.num.pow(k) * f.den.pow(deg - k);
  }
  return out;
}

MultiPoly strip_all(MultiPoly p, std::initializer_list<Var> vars) {
  for (Var v : vars) p = strip_power(p, v);
  return p;
}

bool is_jointly_linear(const MultiPoly& e, Var u1, Var u2) {
  if (e.degree(u1) > 1 || e.degree(u2) > 1) return false;
  return !e.coefficient(u1, 1).contains(u2);
}

// Solves the equations for `unknowns`, one at a time when an equation involves a
// single unknown linearly, otherwise by Cramer's rule on a jointly linear pair.
// Equations that vanish identically after substitution are dropped; leftovers
// are returned in `rest`.
std::map<Var, Fraction> solve_linear(std::vector<MultiPoly> eqs, std::vector<Var> unknowns, Var param,
                                     std::vector<MultiPoly>* rest) {
  for (auto& e : eqs) e = strip_power(e, param);
  std::map<Var, Fraction> sol;
  auto substitute_all = [&](Var u, const Fraction& f) {
    std::vector<MultiPoly> next;
    for (const auto& e : eqs) {
      MultiPoly r = strip_power(substitute_cleared(e, u, f), param);
      if (!r.is_zero()) next.push_back(std::move(r));
    }
    eqs = std::move(next);
    for (auto& [v, g] : sol) {
      if (g.num.contains(u)) {
        const MultiPoly num = substitute_cleared(g.num, u, f);
        const MultiPoly scale = f.den.pow(g.num.degree(u));
        g = simplify({num, g.den * scale}, param);
      }
    }
    unknowns.erase(std::find(unknowns.begin(), unknowns.end(), u));
  };

  while (!unknowns.empty()) {
    bool progressed = false;
    for (std::size_t i = 0; i < eqs.size() && !progressed; ++i) {
      std::vector<Var> present;
      for (Var u : unknowns) {
        if (eqs[i].contains(u)) present.push_back(u);
      }
      if (present.size() != 1 || eqs[i].degree(present[0]) != 1) continue;
      const Var u = present[0];
      const Fraction f = simplify({-eqs[i].coefficient(u, 0), eqs[i].coefficient(u, 1)}, param);
      sol[u] = f;
      eqs.erase(eqs.begin() + static_cast<std::ptrdiff_t>(i));
      substitute_all(u, f);
      progressed = true;
    }
    if (progressed) continue;
    if (unknowns.size() == 2) {
      const Var u1 = unknowns[0];
      const Var u2 = unknowns[1];
      std::vector<std::size_t> lin;
      for (std::size_t i = 0; i < eqs.size(); ++i) {
        if (is_jointly_linear(eqs[i], u1, u2) && eqs[i].contains(u1) && eqs[i].contains(u2)) lin.push_back(i);
      }
      if (lin.size() >= 2) {
        const MultiPoly& e1 = eqs[lin[0]];
        const MultiPoly& e2 = eqs[lin[1]];
        const MultiPoly a11 = e1.coefficient(u1, 1), a12 = e1.coefficient(u2, 1);
        const MultiPoly c1 = e1.coefficient(u1, 0).coefficient(u2, 0);
        const MultiPoly a21 = e2.coefficient(u1, 1), a22 = e2.coefficient(u2, 1);
        const MultiPoly c2 = e2.coefficient(u1, 0).coefficient(u2, 0);
        const MultiPoly d = det2(a11, a12, a21, a22);
        if (d.is_zero()) throw AlgebraError("stratum solve: singular linear system");
        const Fraction f1 = simplify({a12 * c2 - a22 * c1, d}, param);
        const Fraction f2 = simplify({a21 * c1 - a11 * c2, d}, param);
        eqs.erase(eqs.begin() + static_cast<std::ptrdiff_t>(lin[1]));
        eqs.erase(eqs.begin() + static_cast<std::ptrdiff_t>(lin[0]));
        sol[u1] = f1;
        substitute_all(u1, f1);
        sol[u2] = f2;
        substitute_all(u2, f2);
        continue;
      }
    }
    throw AlgebraError("stratum solve: system is not linear in the unknowns");
  }
  if (rest) *rest = eqs;
  return sol;
}

// Rational roots c of the lowest homogeneous form H(1, c) of G in (param, dep).
std::vector<Rational> tangent_seeds(const MultiPoly& G, Var param, Var dep) {
  unsigned lowest = ~0u;
  for (const auto& [e, c] : G.terms()) {
    lowest = std::min<unsigned>(lowest, e[static_cast<std::size_t>(param)] + e[static_cast<std::size_t>(dep)]);
  }
  MultiPoly h;
  for (const auto& [e, c] : G.terms()) {
    if (e[static_cast<std::size_t>(param)] + e[static_cast<std::size_t>(dep)] != lowest) continue;
    if (total_degree(e) != lowest) throw AlgebraError("branch seeds: tangent cone depends on the modulus");
    h += MultiPoly::monomial(c, e);
  }
  h = substitute(h, param, 1);
  std::set<Rational> roots;
  for (long q = 1; q <= 12; ++q) {
    for (long p = -12; p <= 12; ++p) {
      const Rational c(p, q);
      if (evaluate(h, {{dep, Rational(c)}}) == 0) roots.insert(c);
    }
  }
  if (roots.empty()) throw AlgebraError("branch seeds: no rational tangent direction");
  return {roots.rbegin(), roots.rend()};
}

TruncatedSeries fraction_series(const Fraction& f, Var main, const std::map<Var, TruncatedSeries>& values,
                                unsigned order) {
  const TruncatedSeries num = substitute_series(f.num, main, values, order);
  if (f.den.is_constant()) return num;
  const TruncatedSeries den = substitute_series(f.den, main, values, order);
  return series_divide(num, den);
}

// Monomial c * t^m in the parameter only.
std::optional<std::pair<Rational, unsigned>> as_monomial(const MultiPoly& p, Var t) {
  if (p.size() != 1) return std::nullopt;
  const auto& [e, c] = *p.terms().begin();
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (static_cast<Var>(i) != t && e[i] != 0) return std::nullopt;
  }
  const unsigned m = e[static_cast<std::size_t>(t)];
  if (m == 0) return std::nullopt;
  return std::make_pair(c, m);
}

// Writes `other(t)` as a polynomial in lhs_var when lhs(t) = c t^m and every
// power of t in other is a multiple of m.
std::optional<MultiPoly> rewrite_in(const MultiPoly& other, Var t, const Rational& c, unsigned m, Var target) {
  MultiPoly out;
  const MultiPoly base = MultiPoly(Rational(1) / c) * MultiPoly::variable(target);
  for (unsigned k = 0; k <= other.degree(t); ++k) {
    const MultiPoly coef = other.coefficient(t, k);
    if (coef.is_zero()) continue;
    if (k % m != 0) return std::nullopt;
    out += coef * base.pow(k / m);
  }
  return out;
}

// Polynomial alpha(t), beta(t): an untruncated relation when one of them is a
// single monomial in t.
bool try_exact(BifurcationCurve& curve, const MultiPoly& al, const MultiPoly& be, Var t) {
  if (be.is_zero()) {
    curve.exact = ExactRelation{Var::beta, 0};
    return true;
  }
  if (al.is_zero()) {
    curve.exact = ExactRelation{Var::alpha, 0};
    return true;
  }
  for (const auto& [from, to, target, lhs] :
       {std::tuple{al, be, Var::alpha, Var::beta}, std::tuple{be, al, Var::beta, Var::alpha}}) {
    auto mono = as_monomial(from, t);
    if (!mono) continue;
    auto rhs = rewrite_in(to, t, mono->first, mono->second, target);
    if (!rhs) continue;
    curve.exact = ExactRelation{lhs, *rhs};
    if (mono->second % 2 == 0) curve.constraint = SignConstraint{target, mono->first > 0 ? 1 : -1};
    return true;
  }
  return false;
}

// beta as a series in alpha by reverting alpha(t).
void series_relation(BifurcationCurve& curve, unsigned order) {
  if (!curve.alpha_param || !curve.beta_param) throw AlgebraError("stratum solve: missing parameter series");
  const TruncatedSeries& as = *curve.alpha_param;
  if (as.valuation() != 1 || !as[1].is_constant()) {
    throw AlgebraError("stratum solve: alpha is not a local coordinate on the stratum");
  }
  const TruncatedSeries inv = series_reversion(as.truncate(order));
  TruncatedSeries b = series_compose(curve.beta_param->truncate(order), inv).with_main_var(Var::alpha);
  curve.series = b;
}

Branch branch_of(const BifurcationCurve& c) {
  if (c.series && c.series->order() >= 1) {
    if (auto v = (*c.series)[1].constant_value()) {
      if (*v > 0) return Branch::plus;
      if (*v < 0) return Branch::minus;
    }
  }
  throw AlgebraError("stratum solve: branch has no linear term in alpha");
}

std::vector<BifurcationCurve> solve_linear_plan(const StratumSystem& sys, unsigned order) {
  std::vector<MultiPoly> eqs = sys.equations;
  const MultiPoly& first = eqs.at(0);
  if (first.degree(Var::x) != 1 || !first.coefficient(Var::x, 1).is_constant()) {
    throw AlgebraError("stratum solve: first equation must be linear in x with constant coefficient");
  }
  const Rational cx = *first.coefficient(Var::x, 1).constant_value();
  const MultiPoly x_expr = MultiPoly(Rational(-1) / cx) * first.coefficient(Var::x, 0);
  std::vector<MultiPoly> rest;
  for (std::size_t i = 1; i < eqs.size(); ++i) {
    MultiPoly e = strip_power(substitute(eqs[i], Var::x, x_expr), sys.parameter);
    if (!e.is_zero()) rest.push_back(std::move(e));
  }
  BifurcationCurve curve;
  curve.info = sys.info;
  curve.order = order;
  auto& par = curve.parametrization;
  par.parameter = sys.parameter;
  par.dependent = Var::x;
  par.reduced_equations = rest;

  std::vector<MultiPoly> left;
  auto sol = solve_linear(rest, {Var::alpha, Var::beta}, sys.parameter, &left);
  if (!left.empty()) throw AlgebraError("stratum solve: overdetermined system is inconsistent");
  const Fraction& al = sol.at(Var::alpha);
  const Fraction& be = sol.at(Var::beta);
  MultiPoly x_of_t = substitute_cleared(x_expr, Var::alpha, al);
  x_of_t = substitute_cleared(x_of_t, Var::beta, be);
  if (!al.den.is_constant() || !be.den.is_constant()) {
    throw AlgebraError("stratum solve: source coordinate is not polynomial in the parameter");
  }
  par.dependent_explicit = x_of_t;
  par.alpha_num = al.num;
  par.alpha_den = al.den;
  par.beta_num = be.num;
  par.beta_den = be.den;

  const unsigned work = order + 2;
  curve.alpha_param = TruncatedSeries::from_poly(al.num, sys.parameter, work);
  curve.beta_param = TruncatedSeries::from_poly(be.num, sys.parameter, work);
  if (!al.den.is_constant() || !be.den.is_constant() || !try_exact(curve, al.num, be.num, sys.parameter)) {
    series_relation(curve, order);
  }
  return {curve};
}

void finish_branch_curve(BifurcationCurve& curve, const Fraction& al, const Fraction& be,
                         const std::map<Var, TruncatedSeries>& values, unsigned order) {
  const unsigned work = order + 2;
  curve.alpha_param = fraction_series(al, Var::x, values, work).truncate(order);
  curve.beta_param = fraction_series(be, Var::x, values, work).truncate(order);
  series_relation(curve, order);
  curve.branch = branch_of(curve);
}

std::vector<BifurcationCurve> solve_linear_then_branch(const StratumSystem& sys, unsigned order) {
  std::vector<MultiPoly> linear_eqs;
  for (std::size_t i = 0; i < sys.equations.size(); ++i) {
    if (i != sys.branch_equation) linear_eqs.push_back(sys.equations[i]);
  }
  std::vector<MultiPoly> left;
  auto sol = solve_linear(linear_eqs, {Var::alpha, Var::beta}, Var::x, &left);
  if (!left.empty()) throw AlgebraError("stratum solve: unexpected leftover equations");
  const Fraction al = sol.at(Var::alpha);
  const Fraction be = sol.at(Var::beta);
  MultiPoly G = substitute_cleared(sys.equations.at(sys.branch_equation), Var::alpha, al);
  G = substitute_cleared(G, Var::beta, be);
  G = strip_power(G, Var::x);

  const unsigned work = order + 2;
  std::vector<BifurcationCurve> out;
  for (const Rational& seed : tangent_seeds(G, Var::x, Var::y)) {
    BifurcationCurve curve;
    curve.info = sys.info;
    curve.order = order;
    auto& par = curve.parametrization;
    par.parameter = Var::x;
    par.dependent = Var::y;
    par.alpha_num = al.num;
    par.alpha_den = al.den;
    par.beta_num = be.num;
    par.beta_den = be.den;
    par.branch_equation = G;
    par.reduced_equations = {G};
    par.dependent_series = solve_branch(G, Var::x, Var::y, {MultiPoly(seed)}, work);
    finish_branch_curve(curve, al, be, {{Var::y, *par.dependent_series}}, order);
    out.push_back(std::move(curve));
  }
  return out;
}

std::vector<BifurcationCurve> solve_radical_branch(const StratumSystem& sys, unsigned order) {
  const MultiPoly& e_beta = sys.equations.at(0);
  const MultiPoly& e_residual = sys.equations.at(1);
  const MultiPoly& e_alpha = sys.equations.at(2);
  if (e_beta.degree(Var::beta) != 1) throw AlgebraError("stratum solve: first equation not linear in beta");
  const Fraction be0 =
      simplify({-e_beta.coefficient(Var::beta, 0), e_beta.coefficient(Var::beta, 1)}, Var::x);

  const MultiPoly quad = strip_all(substitute_cleared(e_alpha, Var::beta, be0), {Var::x, Var::y});
  if (quad.degree(Var::alpha) != 2) throw AlgebraError("stratum solve: expected a quadratic in alpha");
  const auto lead = quad.coefficient(Var::alpha, 2).constant_value();
  if (!lead) throw AlgebraError("stratum solve: quadratic in alpha has a non-constant leading coefficient");
  const MultiPoly B = quad.coefficient(Var::alpha, 1);
  const MultiPoly C = quad.coefficient(Var::alpha, 0);
  const MultiPoly base = MultiPoly(Rational(-1) / (2 * *lead)) * B;
  const MultiPoly disc = MultiPoly(Rational(1) / (4 * *lead * *lead)) * (B * B - MultiPoly(4 * *lead) * C);
  const unsigned k = disc.valuation(Var::x);
  if (k % 2 != 0) throw AlgebraError("stratum solve: discriminant has odd order in x");
  const MultiPoly R = divide_exact(disc, MultiPoly::variable(Var::x, k));
  if (R.constant_term() != 1) throw AlgebraError("stratum solve: radicand is not a unit");

  const MultiPoly alpha_expr = base + MultiPoly::variable(Var::x, k / 2) * kS;
  const MultiPoly beta_num = reduce_radical(substitute(be0.num, Var::alpha, alpha_expr), Var::s, R);
  Fraction be = simplify({beta_num, be0.den}, Var::x);
  const Fraction al{alpha_expr, 1};

  MultiPoly res = substitute_cleared(e_residual, Var::beta, be);
  res = reduce_radical(substitute(res, Var::alpha, alpha_expr), Var::s, R);
  res = strip_all(res, {Var::x, Var::y});
  const MultiPoly P = res.coefficient(Var::s, 0);
  const MultiPoly Q = res.coefficient(Var::s, 1);
  const MultiPoly G = strip_power(P * P - Q * Q * R, Var::x);

  const unsigned work = order + 2;
  std::vector<BifurcationCurve> out;
  for (const Rational& seed : tangent_seeds(G, Var::x, Var::y)) {
    const TruncatedSeries ys = solve_branch(G, Var::x, Var::y, {MultiPoly(seed)}, work);
    const TruncatedSeries root = series_sqrt(substitute_series(R, Var::x, {{Var::y, ys}}, work));
    const TruncatedSeries ps = substitute_series(P, Var::x, {{Var::y, ys}}, work);
    const TruncatedSeries qs = substitute_series(Q, Var::x, {{Var::y, ys}}, work) * root;
    int sign = 0;
    if ((ps + qs).is_zero()) sign = 1;
    if ((ps - qs).is_zero()) sign = sign == 0 ? -1 : 2;
    if (sign == 0 || sign == 2) throw AlgebraError("stratum solve: cannot fix the sign of the radical");

    BifurcationCurve curve;
    curve.info = sys.info;
    curve.order = order;
    auto& par = curve.parametrization;
    par.parameter = Var::x;
    par.dependent = Var::y;
    par.alpha_num = al.num;
    par.beta_num = be.num;
    par.beta_den = be.den;
    par.radicand = R;
    par.radical_sign = sign;
    par.branch_equation = G;
    par.residual_rational = P;
    par.residual_radical = Q;
    par.dependent_series = ys;
    par.reduced_equations = {quad, res};
    const TruncatedSeries s_series = MultiPoly(sign) * root;
    finish_branch_curve(curve, al, be, {{Var::y, ys}, {Var::s, s_series}}, order);
    out.push_back(std::move(curve));
  }
  return out;
}

std::optional<Rational> rational_value(const MultiPoly& num, const MultiPoly& den, const Assignment<Rational>& at) {
  const Rational d = evaluate(den, at);
  if (d == 0) return std::nullopt;
  return evaluate(num, at) / d;
}

// Newton iteration for f(y) = 0 with a numeric derivative.
template <class F>
std::optional<double> newton(F f, double y0) {
  double y = y0;
  for (int i = 0; i < 60; ++i) {
    const double fy = f(y);
    if (!std::isfinite(fy)) return std::nullopt;
    const double h = 1e-7 * std::max(1.0, std::abs(y));
    const double df = (f(y + h) - f(y - h)) / (2 * h);
    if (df == 0 || !std::isfinite(df)) return std::nullopt;
    const double step = fy / df;
    y -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(y))) break;
  }
  if (!std::isfinite(y) || std::abs(f(y)) > 1e-9) return std::nullopt;
  return y;
}

}  // namespace

std::vector<StratumInfo> strata_of(FamilyName family) {
  std::vector<StratumInfo> out;
  for (const auto& s : stratum_table()) {
    if (s.family == family) out.push_back(s);
  }
  return out;
}

const StratumInfo& stratum_info(FamilyName family, int label) {
  for (const auto& s : stratum_table()) {
    if (s.family == family && s.label == label) return s;
  }
  throw std::invalid_argument("no stratum (" + std::to_string(label) + ") in family " +
                              std::string(family_label(family)));
}

bool realises(StratumKind kind, SingularityClass c) {
  switch (kind) {
    case StratumKind::swallowtail: return c == SingularityClass::Swallowtail;
    case StratumKind::beaks: return is_lips_or_beaks(c);
    case StratumKind::semi_lips_beaks: return is_semi_lips_or_beaks(c);
    case StratumKind::semi_cusp: return c == SingularityClass::SemiCusp;
    case StratumKind::boundary_cusp: return c == SingularityClass::BoundaryCusp;
    default: return false;
  }
}

bool is_pointwise(StratumKind kind) {
  switch (kind) {
    case StratumKind::swallowtail:
    case StratumKind::beaks:
    case StratumKind::semi_lips_beaks:
    case StratumKind::semi_cusp:
    case StratumKind::boundary_cusp: return true;
    default: return false;
  }
}

bool is_boundary_stratum(StratumKind kind) {
  return kind == StratumKind::semi_lips_beaks || kind == StratumKind::semi_cusp ||
         kind == StratumKind::boundary_cusp;
}

std::optional<MultigermKind> multigerm_of(StratumKind kind) {
  if (kind == StratumKind::contour_through_crosscap) return MultigermKind::contour_hits_crosscap;
  if (kind == StratumKind::double_curve_crossing) return MultigermKind::double_curve_selfcross;
  return std::nullopt;
}

std::string to_string(const ExactRelation& r) {
  return std::string(var_name(r.lhs)) + " = " + to_string(r.rhs);
}

std::string to_string(const SignConstraint& c) {
  return std::string(var_name(c.var)) + (c.sign > 0 ? " > 0" : " < 0");
}

std::string_view branch_name(Branch b) {
  switch (b) {
    case Branch::plus: return "+";
    case Branch::minus: return "-";
    default: return "";
  }
}

StratumSystem stratum_system(const GermCatalog& catalog, FamilyName family, int label) {
  StratumSystem sys;
  sys.info = stratum_info(family, label);
  if (sys.info.kind == StratumKind::b_type) {
    sys.plan = PlanKind::closed_form;
    sys.closed_form = family == FamilyName::c ? ExactRelation{Var::beta, 0} : ExactRelation{Var::alpha, 0};
    return sys;
  }
  const PlaneGerm g = compose_with_crosscap(catalog.family(family));
  const JetData jd = jet_data(g);
  const MultiPoly& lam = jd.lambda;
  auto linear = [&](std::vector<MultiPoly> eqs) {
    sys.plan = PlanKind::linear;
    sys.parameter = Var::y;
    sys.equations = std::move(eqs);
    sys.side_conditions = {"y != 0"};
  };
  switch (family) {
    case FamilyName::c:
      switch (label) {
        case 2:
          linear({lam, jd.eta_lambda, jd.eta2_lambda});
          sys.side_conditions.clear();
          break;
        case 3: linear({kX, lam, jd.lambda_y}); break;
        case 4: linear({kX, lam, jd.eta_lambda}); break;
        case 5: linear({kX, lam, jd.eta[0]}); break;
        case 6: linear({lam, g.f1, g.f2}); break;
        case 7: linear({kX, g.f1, g.f2}); break;
        default: break;
      }
      break;
    case FamilyName::d_plus:
      switch (label) {
        case 2:
          sys.plan = PlanKind::linear_then_branch;
          sys.parameter = Var::x;
          sys.equations = {lam, jd.lambda_x, jd.lambda_y};
          sys.branch_equation = 0;
          break;
        case 3:
          sys.plan = PlanKind::radical_branch;
          sys.parameter = Var::x;
          sys.equations = {lam, jd.eta_lambda, jd.eta2_lambda};
          sys.side_conditions = {"x != 0", "y != 0"};
          break;
        case 4: linear({kX, lam, jd.eta_lambda}); break;
        case 5:
          sys.plan = PlanKind::linear_then_branch;
          sys.parameter = Var::x;
          sys.equations = {g.f1, g.f2, lam};
          sys.branch_equation = 2;
          sys.side_conditions = {"x != 0"};
          break;
        default: break;
      }
      break;
    case FamilyName::d_minus:
      if (label == 2) linear({kX, lam, jd.eta_lambda});
      break;
    default: break;
  }
  if (sys.equations.empty()) throw AlgebraError("no stratum system for " + std::string(sys.info.name));
  return sys;
}

StratumSystem stratum_system(FamilyName family, int label) {
  return stratum_system(GermCatalog::standard(), family, label);
}

std::vector<BifurcationCurve> solve_stratum(const GermCatalog& catalog, FamilyName family, int label,
                                            unsigned order) {
  if (order < 2) throw std::invalid_argument("series order must be at least 2");
  const StratumSystem sys = stratum_system(catalog, family, label);
  switch (sys.plan) {
    case PlanKind::closed_form: {
      BifurcationCurve curve;
      curve.info = sys.info;
      curve.order = order;
      curve.exact = sys.closed_form;
      curve.parametrization.closed_form = true;
      return {curve};
    }
    case PlanKind::linear: return solve_linear_plan(sys, order);
    case PlanKind::linear_then_branch: return solve_linear_then_branch(sys, order);
    case PlanKind::radical_branch: return solve_radical_branch(sys, order);
  }
  return {};
}

std::vector<BifurcationCurve> solve_stratum(FamilyName family, int label, unsigned order) {
  return solve_stratum(GermCatalog::standard(), family, label, order);
}

std::vector<BifurcationCurve> solve_family(const GermCatalog& catalog, FamilyName family, unsigned order) {
  std::vector<BifurcationCurve> out;
  for (const auto& s : strata_of(family)) {
    for (auto& c : solve_stratum(catalog, family, s.label, order)) out.push_back(std::move(c));
  }
  return out;
}

CurveDifference curve_difference(const BifurcationCurve& c1, const BifurcationCurve& c2) {
  if (c1.exact && c2.exact && c1.exact->lhs == c2.exact->lhs) return c1.exact->rhs - c2.exact->rhs;
  auto as_series = [](const BifurcationCurve& c, unsigned order) -> std::optional<TruncatedSeries> {
    if (c.series) return c.series->truncate(std::min(order, c.series->order()));
    if (c.exact && c.exact->lhs == Var::beta) return TruncatedSeries::from_poly(c.exact->rhs, Var::alpha, order);
    return std::nullopt;
  };
  const unsigned order = std::min(c1.order, c2.order);
  auto s1 = as_series(c1, order);
  auto s2 = as_series(c2, order);
  if (!s1 || !s2) throw AlgebraError("curve difference: curves have no common form");
  const unsigned n = std::min(s1->order(), s2->order());
  return s1->truncate(n) - s2->truncate(n);
}

std::optional<Witness> curve_witness(const BifurcationCurve& curve, const Rational& t0_in, const Rational& a0_in) {
  Rational t0 = t0_in, a0 = a0_in;
  t0.canonicalize();
  a0.canonicalize();
  const auto& par = curve.parametrization;
  Witness w;
  w.branch = curve.branch;
  if (par.closed_form) {
    Rational al = 0, be = 0;
    if (curve.exact->lhs == Var::beta) {
      al = t0;
      be = evaluate(curve.exact->rhs, {{Var::alpha, t0}, {Var::a, a0}});
    } else {
      be = t0;
      al = evaluate(curve.exact->rhs, {{Var::beta, t0}, {Var::a, a0}});
    }
    w.x_exact = 0;
    w.y_exact = 0;
    w.alpha_exact = al;
    w.beta_exact = be;
  } else if (par.dependent_explicit) {
    Assignment<Rational> at{{par.parameter, t0}, {Var::a, a0}};
    const Rational dep = evaluate(*par.dependent_explicit, at);
    at[par.dependent] = dep;
    auto al = rational_value(par.alpha_num, par.alpha_den, at);
    auto be = rational_value(par.beta_num, par.beta_den, at);
    if (!al || !be) return std::nullopt;
    if (curve.constraint) {
      const Rational& v = curve.constraint->var == Var::alpha ? *al : *be;
      if (sgn(v) != curve.constraint->sign) return std::nullopt;
    }
    (par.parameter == Var::x ? w.x_exact : w.y_exact) = t0;
    (par.dependent == Var::x ? w.x_exact : w.y_exact) = dep;
    w.alpha_exact = al;
    w.beta_exact = be;
  } else {
    auto p = evaluate_curve(curve, t0.get_d(), a0.get_d());
    if (!p) return std::nullopt;
    w.x = p->x;
    w.y = p->y;
    w.alpha = p->alpha;
    w.beta = p->beta;
    return w;
  }
  w.x = w.x_exact->get_d();
  w.y = w.y_exact->get_d();
  w.alpha = w.alpha_exact->get_d();
  w.beta = w.beta_exact->get_d();
  return w;
}

std::vector<Witness> stratum_witness(FamilyName family, int label, const Rational& t0, const Rational& a0_in) {
  Rational a0 = a0_in;
  a0.canonicalize();
  GermCatalog::standard().family(family).validate_modulus(a0);
  std::vector<Witness> out;
  for (const auto& c : solve_stratum(family, label)) {
    if (auto w = curve_witness(c, t0, a0)) out.push_back(*w);
  }
  return out;
}

std::optional<ParamPoint> evaluate_curve(const BifurcationCurve& curve, double t, double a0) {
  const auto& par = curve.parametrization;
  ParamPoint p;
  if (par.closed_form) {
    if (curve.exact->lhs == Var::beta) {
      p.alpha = t;
      p.beta = evaluate(curve.exact->rhs, Assignment<double>{{Var::alpha, t}, {Var::a, a0}});
    } else {
      p.beta = t;
      p.alpha = evaluate(curve.exact->rhs, Assignment<double>{{Var::beta, t}, {Var::a, a0}});
    }
    return p;
  }
  Assignment<double> at{{par.parameter, t}, {Var::a, a0}};
  double dep = 0;
  if (par.dependent_explicit) {
    dep = evaluate(*par.dependent_explicit, at);
  } else {
    double guess = 0;
    if (par.dependent_series) guess = evaluate(par.dependent_series->to_poly(), Assignment<double>{{Var::x, t}, {Var::a, a0}});
    std::optional<double> root;
    if (par.radicand) {
      const CompiledPoly P(*par.residual_rational, Var::x, Var::y, {{Var::a, a0}});
      const CompiledPoly Q(*par.residual_radical, Var::x, Var::y, {{Var::a, a0}});
      const CompiledPoly R(*par.radicand, Var::x, Var::y, {{Var::a, a0}});
      const int sign = par.radical_sign;
      root = newton(
          [&](double y) {
            const double r = R(t, y);
            if (r < 0) return std::nan("");
            return P(t, y) + sign * Q(t, y) * std::sqrt(r);
          },
          guess);
    } else {
      const MultiPoly& G = *par.branch_equation;
      if (G.degree(Var::y) == 2) {
        const double A = evaluate(G.coefficient(Var::y, 2), at);
        const double B = evaluate(G.coefficient(Var::y, 1), at);
        const double C = evaluate(G.coefficient(Var::y, 0), at);
        const double d = B * B - 4 * A * C;
        if (d >= 0 && A != 0) {
          const double r1 = (-B + std::sqrt(d)) / (2 * A);
          const double r2 = (-B - std::sqrt(d)) / (2 * A);
          root = std::abs(r1 - guess) <= std::abs(r2 - guess) ? r1 : r2;
        }
      } else {
        const CompiledPoly g(G, Var::x, Var::y, {{Var::a, a0}});
        root = newton([&](double y) { return g(t, y); }, guess);
      }
    }
    if (!root) return std::nullopt;
    dep = *root;
  }
  at[par.dependent] = dep;
  if (par.radicand) {
    const double r = evaluate(*par.radicand, at);
    if (r < 0) return std::nullopt;
    at[Var::s] = par.radical_sign * std::sqrt(r);
  }
  const double ad = evaluate(par.alpha_den, at);
  const double bd = evaluate(par.beta_den, at);
  if (ad == 0 || bd == 0) return std::nullopt;
  p.alpha = evaluate(par.alpha_num, at) / ad;
  p.beta = evaluate(par.beta_num, at) / bd;
  (par.parameter == Var::x ? p.x : p.y) = t;
  (par.dependent == Var::x ? p.x : p.y) = dep;
  if (curve.constraint) {
    const double v = curve.constraint->var == Var::alpha ? p.alpha : p.beta;
    if (v * curve.constraint->sign <= 0) return std::nullopt;
  }
  return p;
}

Polyline trace_stratum_numeric(const BifurcationCurve& curve, double a0, double t_lo, double t_hi, int samples) {
  Polyline out;
  out.id = curve_id(curve);
  if (samples < 2) samples = 2;
  for (int i = 0; i < samples; ++i) {
    const double t = t_lo + (t_hi - t_lo) * i / (samples - 1);
    if (auto p = evaluate_curve(curve, t, a0)) out.points.push_back({p->alpha, p->beta});
  }
  return out;
}

std::string curve_id(const BifurcationCurve& curve) {
  std::ostringstream os;
  os << family_label(curve.info.family) << '(' << curve.info.label << ')' << branch_name(curve.branch);
  return os.str();
}

}  // namespace crosscap
