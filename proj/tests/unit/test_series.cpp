#include <catch_amalgamated.hpp>

#include "crosscap/series.hpp"

using namespace crosscap;

namespace {

MultiPoly P(const char* text) { return parse_poly(text); }

TruncatedSeries S(const char* text, Var v, unsigned order) { return TruncatedSeries::from_poly(P(text), v, order); }

}  // namespace

TEST_CASE("regrouping a polynomial by powers") {
  auto s = S("y^4 + a*y^6 + alpha*y^2", Var::y, 6);
  CHECK(s[2] == kAlpha);
  CHECK(s[4] == 1);
  CHECK(s[6] == kA);
  CHECK(s[0].is_zero());
  CHECK(s.order() == 6);

  auto c = S("5", Var::x, 3);
  CHECK(c[0] == 5);
  CHECK(c[1].is_zero());
  CHECK(c[3].is_zero());

  auto r = S("beta - 3/4*a*beta^2", Var::beta, 4);
  CHECK(r[1] == 1);
  CHECK(r[2] == P("-3/4*a"));

  CHECK(S("x^5 + x", Var::x, 3) == S("x", Var::x, 3));
}

TEST_CASE("coefficients never contain the main variable") {
  CHECK_THROWS_AS(TruncatedSeries(Var::x, std::vector<MultiPoly>{kX, 1}), AlgebraError);
}

TEST_CASE("square roots") {
  CHECK(series_sqrt(S("1 + x", Var::x, 3)) == S("1 + 1/2*x - 1/8*x^2 + 1/16*x^3", Var::x, 3));
  CHECK(series_sqrt(S("1", Var::x, 5)) == S("1", Var::x, 5));
  auto r = series_sqrt(S("3*a*x + 9*x^2 + 1", Var::x, 2));
  CHECK(r == S("1 + 3/2*a*x + 9/2*x^2 - 9/8*a^2*x^2", Var::x, 2));
  CHECK_THROWS_AS(series_sqrt(S("4 + x", Var::x, 3)), AlgebraError);
}

TEST_CASE("square root property") {
  for (const char* text : {"1 + x", "1 - 2*x + 9*x^2 + 4*a*x", "1 + a*x^3 - x^2", "1 + 3*a*x + 9*x^2"}) {
    for (unsigned n : {2u, 5u, 9u}) {
      auto s = S(text, Var::x, n);
      auto r = series_sqrt(s);
      CHECK((r * r - s).is_zero());
    }
  }
}

TEST_CASE("composition") {
  auto t = Var::alpha;
  CHECK(series_compose(S("u^2", Var::u, 3), S("alpha + alpha^2", t, 3)) == S("alpha^2 + 2*alpha^3", t, 3));
  auto inner = S("1/3*alpha - a*alpha^2", t, 4);
  CHECK(series_compose(S("u", Var::u, 4), inner) == inner);
  auto out = series_compose(S("6*u^2 - 20*u^3", Var::u, 3), S("1/4*alpha + 5/32*alpha^2", t, 3));
  CHECK(out == S("3/8*alpha^2 + 5/32*alpha^3", t, 3));
  CHECK_THROWS_AS(series_compose(S("u", Var::u, 3), S("1 + alpha", t, 3)), AlgebraError);
}

TEST_CASE("reversion") {
  CHECK(series_reversion(S("y", Var::y, 4)) == S("y", Var::y, 4));
  CHECK(series_reversion(S("4*y - 10*y^2", Var::y, 2)) == S("1/4*y + 5/32*y^2", Var::y, 2));
  CHECK(series_reversion(S("2*y - 4*y^2", Var::y, 2)) == S("1/2*y + 1/2*y^2", Var::y, 2));
  CHECK_THROWS_AS(series_reversion(S("y^2", Var::y, 3)), AlgebraError);
  CHECK_THROWS_AS(series_reversion(S("a*y", Var::y, 3)), AlgebraError);
}

TEST_CASE("reversion is a two-sided inverse") {
  for (const char* text : {"4*y - 10*y^2 - 35*a*y^4", "2*y - 4*y^2 - 9*a*y^4", "-y + a*y^2 + y^3", "3*y + y^5"}) {
    for (unsigned n : {3u, 6u, 8u}) {
      auto s = S(text, Var::y, n);
      auto r = series_reversion(s);
      auto id = TruncatedSeries::identity(Var::y, n);
      CHECK(series_compose(s, r) == id);
      CHECK(series_compose(r, s) == id);
    }
  }
}

TEST_CASE("division") {
  auto num = S("x^2 + x^3", Var::x, 5);
  auto den = S("x + 2*x^2", Var::x, 5);
  auto q = series_divide(num, den);
  CHECK(q.order() == 4);
  CHECK((q * den.shift_down(1) - num.shift_down(1).truncate(4)).is_zero());
}

TEST_CASE("branch solving with a prescribed tangent") {
  auto y = solve_branch(P("y - x - x^2"), Var::x, Var::y, {MultiPoly(1)}, 3);
  CHECK(y == S("x + x^2", Var::x, 3));

  MultiPoly g = P("x^2 - y^2 + 3*a*x^3 - 6*x^2*y");
  auto plus = solve_branch(g, Var::x, Var::y, {MultiPoly(1)}, 4);
  CHECK(plus == S("x + (3/2*a - 3)*x^2 + (9/2 - 9/8*a^2)*x^3 + (27/16*a^3 - 27/4*a)*x^4", Var::x, 4));
  auto minus = solve_branch(g, Var::x, Var::y, {MultiPoly(-1)}, 4);
  CHECK(minus[1] == -1);
  CHECK(minus[2] == P("-3/2*a - 3"));
}

TEST_CASE("branch residual vanishes and coefficients are stable in the order") {
  MultiPoly g = P("x^2 - y^2 + 3*a*x^3 - 6*x^2*y");
  for (int sign : {1, -1}) {
    auto low = solve_branch(g, Var::x, Var::y, {MultiPoly(sign)}, 5);
    auto high = solve_branch(g, Var::x, Var::y, {MultiPoly(sign)}, 7);
    CHECK(high.truncate(5) == low);
    auto residual = substitute_series(g, Var::x, {{Var::y, high}}, 7);
    CHECK(residual.is_zero());
  }
}

TEST_CASE("a vanishing pivot is rejected") {
  CHECK_THROWS_AS(solve_branch(P("y^3 - x^3"), Var::x, Var::y, {MultiPoly(1)}, 4), AlgebraError);
}
