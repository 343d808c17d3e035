#include "crosscap/series.hpp"

#include <algorithm>
#include <string>

namespace crosscap {

namespace {

Rational unit_constant(const MultiPoly& c, const char* what) {
  auto value = c.constant_value();
  if (!value || *value == 0) {
    throw AlgebraError(std::string(what) + ": coefficient " + to_string(c) +
                       " is not a nonzero rational constant");
  }
  return *value;
}

}  // namespace

TruncatedSeries::TruncatedSeries(Var main_var, unsigned order)
    : main_var_(main_var), coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(Var main_var, std::vector<MultiPoly> coeffs)
    : main_var_(main_var), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw AlgebraError("TruncatedSeries needs at least one coefficient");
  check_coefficients();
}

void TruncatedSeries::check_coefficients() const {
  for (const auto& c : coeffs_) {
    if (c.contains(main_var_)) {
      throw AlgebraError("series coefficient " + to_string(c) + " contains the main variable " +
                         std::string(var_name(main_var_)));
    }
  }
}

TruncatedSeries TruncatedSeries::from_poly(const MultiPoly& p, Var main_var, unsigned order) {
  TruncatedSeries s(main_var, order);
  for (unsigned k = 0; k <= order; ++k) s.coeffs_[k] = p.coefficient(main_var, k);
  return s;
}

TruncatedSeries TruncatedSeries::identity(Var main_var, unsigned order) {
  TruncatedSeries s(main_var, order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MultiPoly& c) { return c.is_zero(); });
}

unsigned TruncatedSeries::valuation() const {
  for (unsigned k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return k;
  }
  return order() + 1;
}

MultiPoly TruncatedSeries::to_poly() const {
  MultiPoly p;
  for (unsigned k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) p += coeffs_[k] * MultiPoly::variable(main_var_, k);
  }
  return p;
}

TruncatedSeries TruncatedSeries::truncate(unsigned order) const {
  if (order > this->order()) {
    throw AlgebraError("cannot extend a series of order " + std::to_string(this->order()) + " to order " +
                       std::to_string(order));
  }
  return TruncatedSeries(main_var_, std::vector<MultiPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::with_main_var(Var v) const { return TruncatedSeries(v, coeffs_); }

TruncatedSeries TruncatedSeries::shift_down(unsigned k) const {
  if (k > order()) throw AlgebraError("shift_down beyond the truncation order");
  for (unsigned i = 0; i < k; ++i) {
    if (!coeffs_[i].is_zero()) {
      throw AlgebraError("inexact division by " + std::string(var_name(main_var_)) + "^" + std::to_string(k));
    }
  }
  return TruncatedSeries(main_var_, std::vector<MultiPoly>(coeffs_.begin() + k, coeffs_.end()));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  if (rhs.main_var_ != main_var_) throw AlgebraError("series main variables differ");
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (unsigned k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  if (rhs.main_var_ != main_var_) throw AlgebraError("series main variables differ");
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (unsigned k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  if (rhs.main_var_ != lhs.main_var_) throw AlgebraError("series main variables differ");
  const unsigned n = std::min(lhs.order(), rhs.order());
  TruncatedSeries out(lhs.main_var_, n);
  for (unsigned i = 0; i <= n; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= n; ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

TruncatedSeries operator*(const MultiPoly& c, const TruncatedSeries& s) {
  TruncatedSeries out = s;
  for (auto& coeff : out.coeffs_) coeff = c * coeff;
  out.check_coefficients();
  return out;
}

bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  return lhs.main_var_ == rhs.main_var_ && lhs.coeffs_ == rhs.coeffs_;
}

TruncatedSeries series_sqrt(const TruncatedSeries& s) {
  if (s[0] != MultiPoly(1)) {
    throw AlgebraError("series_sqrt: constant term must be 1, got " + to_string(s[0]));
  }
  const unsigned n = s.order();
  std::vector<MultiPoly> t(n + 1);
  t[0] = 1;
  const MultiPoly half(Rational(1, 2));
  for (unsigned k = 1; k <= n; ++k) {
    MultiPoly acc = s[k];
    for (unsigned i = 1; i < k; ++i) acc -= t[i] * t[k - i];
    t[k] = half * acc;
  }
  return TruncatedSeries(s.main_var(), std::move(t));
}

TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (!inner[0].is_zero()) {
    throw AlgebraError("series_compose: inner series has nonzero constant term " + to_string(inner[0]));
  }
  const unsigned n = std::min(outer.order(), inner.order());
  const TruncatedSeries in = inner.truncate(n);
  TruncatedSeries acc(inner.main_var(), n);
  for (unsigned k = n + 1; k-- > 0;) {
    acc = acc * in;
    acc += TruncatedSeries::from_poly(outer[k], inner.main_var(), n);
  }
  return acc;
}

TruncatedSeries series_reversion(const TruncatedSeries& s) {
  if (s.order() < 1) throw AlgebraError("series_reversion needs order >= 1");
  if (!s[0].is_zero()) throw AlgebraError("series_reversion: constant term must vanish");
  const Rational lead = unit_constant(s[1], "series_reversion");
  const unsigned n = s.order();
  std::vector<MultiPoly> r(n + 1);
  r[1] = MultiPoly(Rational(1) / lead);
  for (unsigned k = 2; k <= n; ++k) {
    // With r_k = 0 the t^k coefficient of s(r(t)) is the correction needed.
    const TruncatedSeries trial(s.main_var(), r);
    const TruncatedSeries back = series_compose(s, trial.truncate(k));
    r[k] = MultiPoly(Rational(-1) / lead) * back[k];
  }
  return TruncatedSeries(s.main_var(), std::move(r));
}

TruncatedSeries series_divide(const TruncatedSeries& num, const TruncatedSeries& den) {
  if (num.main_var() != den.main_var()) throw AlgebraError("series main variables differ");
  const unsigned k = den.valuation();
  if (k > den.order()) throw AlgebraError("series_divide: division by the zero series");
  const unsigned n = std::min(num.order(), den.order());
  if (k > n) throw AlgebraError("series_divide: insufficient order for denominator valuation");
  if (num.valuation() < k) {
    throw AlgebraError("series_divide: numerator valuation " + std::to_string(num.valuation()) +
                       " is below denominator valuation " + std::to_string(k));
  }
  const TruncatedSeries unit = den.truncate(n).shift_down(k);
  const TruncatedSeries top = num.truncate(n).shift_down(k);
  const Rational c = unit_constant(unit[0], "series_divide");
  const unsigned m = n - k;
  std::vector<MultiPoly> inv(m + 1);
  inv[0] = MultiPoly(Rational(1) / c);
  for (unsigned j = 1; j <= m; ++j) {
    MultiPoly acc;
    for (unsigned i = 1; i <= j; ++i) acc += unit[i] * inv[j - i];
    inv[j] = MultiPoly(Rational(-1) / c) * acc;
  }
  return top * TruncatedSeries(num.main_var(), std::move(inv));
}

TruncatedSeries substitute_series(const MultiPoly& p, Var main_var, const std::map<Var, TruncatedSeries>& values,
                                  unsigned order) {
  for (const auto& [v, s] : values) {
    if (v == main_var) throw AlgebraError("substitute_series: cannot substitute the main variable");
    if (s.main_var() != main_var) throw AlgebraError("substitute_series: series in a different main variable");
    if (s.order() < order) throw AlgebraError("substitute_series: substituted series order too small");
  }
  std::map<std::pair<Var, unsigned>, TruncatedSeries> powers;
  auto power_of = [&](Var v, unsigned k) -> const TruncatedSeries& {
    const auto key = std::make_pair(v, k);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    TruncatedSeries acc = TruncatedSeries::from_poly(1, main_var, order);
    const TruncatedSeries base = values.at(v).truncate(order);
    for (unsigned i = 0; i < k; ++i) acc = acc * base;
    return powers.emplace(key, std::move(acc)).first->second;
  };

  std::vector<MultiPoly> out(order + 1);
  for (const auto& [e, c] : p.terms()) {
    const unsigned shift = e[static_cast<std::size_t>(main_var)];
    if (shift > order) continue;
    Exponents rest = e;
    rest[static_cast<std::size_t>(main_var)] = 0;
    TruncatedSeries factor = TruncatedSeries::from_poly(1, main_var, order - shift);
    for (const auto& [v, s] : values) {
      const unsigned k = e[static_cast<std::size_t>(v)];
      if (k == 0) continue;
      rest[static_cast<std::size_t>(v)] = 0;
      factor = factor * power_of(v, k).truncate(order - shift);
    }
    const MultiPoly coeff = MultiPoly::monomial(c, rest);
    for (unsigned i = 0; i + shift <= order; ++i) {
      if (!factor[i].is_zero()) out[i + shift] += coeff * factor[i];
    }
  }
  return TruncatedSeries(main_var, std::move(out));
}

TruncatedSeries solve_branch(const MultiPoly& G, Var param, Var unknown, const std::vector<MultiPoly>& seed,
                             unsigned order) {
  if (!G.coefficient(param, 0).coefficient(unknown, 0).is_zero()) {
    throw AlgebraError("solve_branch: G does not vanish at the origin");
  }
  const unsigned m = static_cast<unsigned>(seed.size());
  if (m == 0) throw AlgebraError("solve_branch: empty seed");
  std::vector<MultiPoly> jet(std::max(order, m) + 1);
  for (unsigned i = 0; i < m; ++i) jet[i + 1] = seed[i];

  auto along_jet = [&](const MultiPoly& f, unsigned n) {
    std::vector<MultiPoly> c(jet.begin(), jet.begin() + std::min<std::size_t>(jet.size(), n + 1));
    c.resize(n + 1);
    return substitute_series(f, param, {{unknown, TruncatedSeries(param, c)}}, n);
  };

  const MultiPoly dG = diff(G, unknown);
  const TruncatedSeries pivot_series = along_jet(dG, m);
  const unsigned s = pivot_series.valuation();
  if (s > m) {
    throw AlgebraError("solve_branch: dG/d" + std::string(var_name(unknown)) +
                       " vanishes to order > seed length along the seed; supply a longer seed");
  }
  const Rational pivot = unit_constant(pivot_series[s], "solve_branch pivot");

  for (unsigned k = m + 1; k <= order; ++k) {
    const TruncatedSeries residual = along_jet(G, k + s);
    for (unsigned i = 0; i < k + s; ++i) {
      if (!residual[i].is_zero()) {
        throw AlgebraError("solve_branch: seed is inconsistent with G at order " + std::to_string(i));
      }
    }
    jet[k] = MultiPoly(Rational(-1) / pivot) * residual[k + s];
  }
  const TruncatedSeries check = along_jet(G, m + s);
  for (unsigned i = 0; i <= std::min(m + s, order + s); ++i) {
    if (!check[i].is_zero()) {
      throw AlgebraError("solve_branch: seed is inconsistent with G at order " + std::to_string(i));
    }
  }
  jet.resize(order + 1);
  return TruncatedSeries(param, std::move(jet));
}

}  // namespace crosscap
