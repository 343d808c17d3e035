#include "crosscap/verification.hpp"

#include <functional>
#include <map>
#include <ostream>

namespace crosscap {

namespace {

struct Check {
  std::string computed;
  bool pass;
};

class Runner {
 public:
  Runner(const GermCatalog& catalog, unsigned order) : catalog_(catalog), order_(order) {}

  std::vector<VerificationRow> rows;

  void row(const std::string& id, const std::string& expected, const std::function<Check()>& check) {
    try {
      const Check c = check();
      rows.push_back({id, expected, c.computed, c.pass});
    } catch (const std::exception& e) {
      rows.push_back({id, expected, std::string("error: ") + e.what(), false});
    }
  }

  const BifurcationCurve& curve(FamilyName f, int label, Branch b = Branch::none) {
    const auto key = std::make_pair(f, label);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, solve_stratum(catalog_, f, label, order_)).first;
    for (const auto& c : it->second) {
      if (c.branch == b) return c;
    }
    throw AlgebraError("no " + std::string(branch_name(b)) + " branch for stratum (" + std::to_string(label) + ")");
  }

  static std::string name(FamilyName f, int label, Branch b = Branch::none) {
    return "(" + std::string(family_label(f)) + ")(" + std::to_string(label) + ")" + std::string(branch_name(b));
  }

  // beta as a series in alpha: one row per coefficient up to the printed O[k].
  void series(FamilyName f, int label, Branch b, const std::vector<std::string>& expected) {
    for (unsigned k = 0; k < expected.size(); ++k) {
      const std::string id = name(f, label, b) + " alpha^" + std::to_string(k) + " coefficient";
      row(id, expected[k], [&, k] {
        const auto& c = curve(f, label, b);
        if (!c.series) throw AlgebraError("curve has no series form");
        if (k > c.series->order()) throw AlgebraError("order too small");
        const MultiPoly got = (*c.series)[k];
        return Check{to_string(got), got == parse_poly(expected[k])};
      });
    }
  }

  void relation(FamilyName f, int label, Var lhs, const std::string& rhs) {
    const std::string expected = std::string(var_name(lhs)) + " = " + rhs;
    row(name(f, label) + " relation", expected, [&] {
      const auto& c = curve(f, label);
      if (!c.exact) throw AlgebraError("curve has no exact form");
      return Check{to_string(*c.exact), c.exact->lhs == lhs && c.exact->rhs == parse_poly(rhs)};
    });
  }

  void constraint(FamilyName f, int label, SignConstraint want) {
    row(name(f, label) + " constraint", to_string(want), [&] {
      const auto& c = curve(f, label);
      if (!c.constraint) return Check{"none", false};
      return Check{to_string(*c.constraint), c.constraint->var == want.var && c.constraint->sign == want.sign};
    });
  }

  // alpha(t), beta(t) as printed in the derivations.
  void parametrization(FamilyName f, int label, Branch b, const std::string& alpha, const std::string& beta) {
    const auto check_one = [&](bool is_alpha, const std::string& text) {
      const std::string id = name(f, label, b) + (is_alpha ? " alpha(t)" : " beta(t)");
      row(id, text, [&, is_alpha] {
        const auto& par = curve(f, label, b).parametrization;
        const MultiPoly& num = is_alpha ? par.alpha_num : par.beta_num;
        const MultiPoly& den = is_alpha ? par.alpha_den : par.beta_den;
        // expected may be "num/(den)" written as separate pieces
        const auto slash = text.find(" / ");
        const MultiPoly en = parse_poly(text.substr(0, slash));
        const MultiPoly ed = slash == std::string::npos ? MultiPoly(1) : parse_poly(text.substr(slash + 3));
        std::string shown = to_string(num);
        if (!(den == MultiPoly(1))) shown = "(" + shown + ") / (" + to_string(den) + ")";
        return Check{shown, num * ed == en * den};
      });
    };
    check_one(true, alpha);
    check_one(false, beta);
  }

  void proportional_to(const std::string& id, const std::string& expected, const std::function<MultiPoly()>& get) {
    row(id, expected + " (up to a constant)", [&] {
      const MultiPoly p = get();
      return Check{to_string(p), proportional(p, parse_poly(expected))};
    });
  }

  // dependent coordinate y(x) against a closed form c0(x) + sign * x * sqrt(R(x)).
  void branch_closed_form(FamilyName f, int label, Branch b, const std::string& base, int sign,
                          const std::string& radicand) {
    const std::string expected =
        "y = " + base + (sign > 0 ? " + " : " - ") + "x*sqrt(" + radicand + ")";
    row(name(f, label, b) + " y(x)", expected, [&] {
      const auto& c = curve(f, label, b);
      const TruncatedSeries& ys = *c.parametrization.dependent_series;
      const unsigned n = ys.order();
      const TruncatedSeries root = series_sqrt(TruncatedSeries::from_poly(parse_poly(radicand), Var::x, n));
      const TruncatedSeries closed = TruncatedSeries::from_poly(parse_poly(base), Var::x, n) +
                                     MultiPoly(sign) * (TruncatedSeries::identity(Var::x, n) * root);
      std::string shown;
      for (unsigned k = 0; k <= std::min(n, 3u); ++k) shown += "[" + std::to_string(k) + "] " + to_string(ys[k]) + " ";
      return Check{shown + "...", closed == ys};
    });
  }

  void branch_series(FamilyName f, int label, Branch b, const std::vector<std::string>& expected) {
    for (unsigned k = 0; k < expected.size(); ++k) {
      const std::string id = name(f, label, b) + " y(x) x^" + std::to_string(k) + " coefficient";
      row(id, expected[k], [&, k] {
        const auto& ys = *curve(f, label, b).parametrization.dependent_series;
        return Check{to_string(ys[k]), ys[k] == parse_poly(expected[k])};
      });
    }
  }

  unsigned order() const { return order_; }

 private:
  const GermCatalog& catalog_;
  unsigned order_;
  std::map<std::pair<FamilyName, int>, std::vector<BifurcationCurve>> cache_;
};

void family_c(Runner& r) {
  const auto c = FamilyName::c;
  r.relation(c, 1, Var::beta, "0");
  r.series(c, 2, Branch::none, {"0", "0", "3/8", "5/32"});
  r.series(c, 3, Branch::none, {"0", "0", "1/8", "1/32"});
  r.series(c, 4, Branch::none, {"0", "0", "0", "-1/4", "-3/4"});
  r.relation(c, 5, Var::alpha, "beta - 3/4*a*beta^2");
  r.constraint(c, 5, {Var::beta, -1});
  r.series(c, 6, Branch::none, {"0", "0", "1/4", "1/8"});
  r.relation(c, 7, Var::alpha, "beta - a*beta^2");
  r.constraint(c, 7, {Var::beta, -1});
  r.row("(c) (5)-(7) difference", "alpha = 1/4*a*beta^2", [&] {
    const CurveDifference d = curve_difference(r.curve(c, 5), r.curve(c, 7));
    const MultiPoly* p = std::get_if<MultiPoly>(&d);
    if (!p) return Check{"series", false};
    return Check{"alpha = " + to_string(*p), *p == parse_poly("1/4*a*beta^2")};
  });

  r.parametrization(c, 2, Branch::none, "4*y - 10*y^2 - 35*a*y^4", "6*y^2 - 20*y^3 - 84*a*y^5");
  r.parametrization(c, 3, Branch::none, "4*y - 6*y^2 - 15*a*y^4", "2*y^2 - 4*y^3 - 12*a*y^5");
  r.parametrization(c, 4, Branch::none, "2*y - 4*y^2 - 9*a*y^4", "-2*y^3 - 6*a*y^5");
  r.parametrization(c, 5, Branch::none, "-2*y^2 - 3*a*y^4", "-2*y^2");
  r.parametrization(c, 7, Branch::none, "-y^2 - a*y^4", "-y^2");
  const char* factors[] = {"-2*beta + 3*alpha*y - 4*y^2 + 5*y^3 + 7*a*y^5",
                           "-beta + 2*alpha*y - 3*y^2 + 4*y^3 + 6*a*y^5"};
  for (int k = 0; k < 2; ++k) {
    r.proportional_to("(c)(6) contour equation " + std::to_string(k + 1), factors[k], [&, k] {
      const auto& eqs = r.curve(c, 6).parametrization.reduced_equations;
      for (const auto& e : eqs) {
        if (proportional(e, parse_poly(factors[k]))) return e;
      }
      return eqs.empty() ? MultiPoly() : eqs[static_cast<std::size_t>(k) % eqs.size()];
    });
  }
}

void family_d_plus(Runner& r) {
  const auto d = FamilyName::d_plus;
  const auto P = Branch::plus, M = Branch::minus;
  r.relation(d, 1, Var::alpha, "0");
  r.series(d, 2, P, {"0", "2", "-3/4*(a-2)", "-9/16*a*(a-2)", "-27/64*(2*a^3-5*a^2+a+2)"});
  r.series(d, 2, M, {"0", "-2", "-3/4*(a+2)", "9/16*a*(a+2)", "-27/64*(2*a^3+5*a^2+a-2)"});
  r.series(d, 3, P, {"0", "2", "-3/4*(a-2)", "-9/16*a*(a-2)", "1/256*(-215*a^3+534*a^2-96*a-224)"});
  r.series(d, 3, M, {"0", "-2", "-3/4*(a+2)", "9/16*a*(a+2)", "1/256*(-215*a^3-534*a^2-96*a+224)"});
  r.relation(d, 4, Var::beta, "0");
  r.series(d, 5, P, {"0", "2", "-(a-2)"});
  r.series(d, 5, M, {"0", "-2", "-(a+2)"});
  for (auto [b, sign] : {std::pair{P, "-"}, std::pair{M, "+"}}) {
    const std::string expected = std::string("1/256*(a") + sign + "2)^3";
    for (unsigned k = 0; k <= 4; ++k) {
      const std::string want = k == 4 ? expected : "0";
      r.row("(d+) (3)" + std::string(branch_name(b)) + "-(2)" + std::string(branch_name(b)) + " alpha^" +
                std::to_string(k) + " coefficient",
            want, [&, b, k, want] {
              const CurveDifference diff = curve_difference(r.curve(d, 3, b), r.curve(d, 2, b));
              const auto& s = std::get<TruncatedSeries>(diff);
              return Check{to_string(s[k]), s[k] == parse_poly(want)};
            });
    }
  }

  for (auto b : {P, M}) r.parametrization(d, 2, b, "-3*x^2 - 2*y", "-9*a*x^2 + 12*x*y - 4*x");
  r.proportional_to("(d+)(2) branch equation", "x^2 - y^2 + 3*a*x^3 - 6*x^2*y",
                    [&] { return *r.curve(d, 2, P).parametrization.branch_equation; });
  r.branch_closed_form(d, 2, P, "-3*x^2", 1, "3*a*x + 9*x^2 + 1");
  r.branch_closed_form(d, 2, M, "-3*x^2", -1, "3*a*x + 9*x^2 + 1");

  for (auto b : {P, M}) {
    r.parametrization(d, 3, b, "-y + x*s", "-2*x - 3*a*x^2 + 6*x*y + 2*y*s");
    r.row(Runner::name(d, 3, b) + " radicand", "s^2 = 4*a*x + 9*x^2 - 2*y + 1", [&, b] {
      const auto& par = r.curve(d, 3, b).parametrization;
      return Check{"s^2 = " + to_string(*par.radicand), *par.radicand == parse_poly("4*a*x + 9*x^2 - 2*y + 1")};
    });
  }
  r.row("(d+)(3) residual", "x*(2-2*y) + 7*a*x^2 + 18*x^3 + (6*x^2 + 2*y)*s (up to a constant)", [&] {
    const auto& par = r.curve(d, 3, P).parametrization;
    const MultiPoly e = parse_poly("x*(2-2*y) + 7*a*x^2 + 18*x^3") + parse_poly("6*x^2 + 2*y") * kS;
    const MultiPoly got = *par.residual_rational + *par.residual_radical * kS;
    return Check{to_string(got), proportional(got, e)};
  });
  r.branch_series(d, 3, P, {"0", "1", "3/2*(a-2)", "1/2*(-2*a^2-a+10)", "1/4*(4*a^3+9*a^2-30*a-8)"});
  r.branch_series(d, 3, M, {"0", "-1", "-3/2*(a+2)", "1/2*(2*a^2-a-10)", "1/4*(-4*a^3+9*a^2+30*a-8)"});

  for (auto b : {P, M}) r.parametrization(d, 5, b, "-x^2 - y", "-a*x^3 - x^2 - y^2 / x");
  r.proportional_to("(d+)(5) branch equation", "-2*a*x^3 + 4*x^2*y - x^2 + y^2",
                    [&] { return *r.curve(d, 5, P).parametrization.branch_equation; });
  r.branch_closed_form(d, 5, P, "-2*x^2", 1, "2*a*x + 4*x^2 + 1");
  r.branch_closed_form(d, 5, M, "-2*x^2", -1, "2*a*x + 4*x^2 + 1");
}

void family_d_minus(Runner& r) {
  r.relation(FamilyName::d_minus, 1, Var::alpha, "0");
  r.relation(FamilyName::d_minus, 2, Var::beta, "0");
}

}  // namespace

bool proportional(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  const auto& [e, cq] = *q.terms().begin();
  auto it = p.terms().find(e);
  if (it == p.terms().end()) return false;
  return p == MultiPoly(it->second / cq) * q;
}

std::vector<VerificationRow> run_verification(const GermCatalog& catalog, unsigned order) {
  Runner r(catalog, order);
  family_c(r);
  family_d_plus(r);
  family_d_minus(r);
  return std::move(r.rows);
}

bool print_verification(std::ostream& os, const std::vector<VerificationRow>& rows) {
  std::size_t failed = 0;
  for (const auto& row : rows) {
    if (row.pass) {
      os << "PASS  " << row.id << " = " << row.expected << '\n';
    } else {
      ++failed;
      os << "FAIL  " << row.id << ": expected " << row.expected << ", computed " << row.computed << '\n';
    }
  }
  os << rows.size() - failed << '/' << rows.size() << " rows passed\n";
  return failed == 0;
}

}  // namespace crosscap
