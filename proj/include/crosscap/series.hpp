#pragma once

// Truncated power series in one main variable whose coefficients are
// polynomials in the remaining variables (in practice only the modulus a).

#include <map>
#include <vector>

#include "crosscap/multipoly.hpp"

namespace crosscap {

class TruncatedSeries {
 public:
  /// The zero series of the given truncation order.
  TruncatedSeries(Var main_var, unsigned order);
  /// Coefficients for degrees 0..coeffs.size()-1; the order is size()-1.
  TruncatedSeries(Var main_var, std::vector<MultiPoly> coeffs);

  static TruncatedSeries from_poly(const MultiPoly& p, Var main_var, unsigned order);
  /// The series t (identity map) in the main variable.
  static TruncatedSeries identity(Var main_var, unsigned order);

  Var main_var() const { return main_var_; }
  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const MultiPoly& operator[](unsigned k) const { return coeffs_.at(k); }
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// Lowest degree with a nonzero coefficient; order()+1 for the zero series.
  unsigned valuation() const;

  MultiPoly to_poly() const;
  TruncatedSeries truncate(unsigned order) const;
  TruncatedSeries with_main_var(Var v) const;

  /// Exact division by t^k; the first k coefficients must vanish.
  TruncatedSeries shift_down(unsigned k) const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
  friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
  friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
  /// Scaling by an element of the coefficient ring.
  friend TruncatedSeries operator*(const MultiPoly& c, const TruncatedSeries& s);
  friend bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

 private:
  void check_coefficients() const;

  Var main_var_;
  std::vector<MultiPoly> coeffs_;
};

/// Positive square root of a series with constant coefficient 1.
TruncatedSeries series_sqrt(const TruncatedSeries& s);

/// outer(inner(t)); inner must have zero constant term. The result is in the
/// main variable of inner, truncated at the smaller of the two orders.
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Compositional inverse r with s(r(t)) = t. The linear coefficient of s must
/// be a nonzero rational constant.
TruncatedSeries series_reversion(const TruncatedSeries& s);

/// num / den where den = t^k * unit and the unit has a nonzero rational
/// constant term. num must vanish to order k; the result has order
/// min(num.order(), den.order()) - k.
TruncatedSeries series_divide(const TruncatedSeries& num, const TruncatedSeries& den);

/// Evaluates p with main_var kept as the series variable and every variable in
/// `values` replaced by its series. Other variables stay in the coefficients.
TruncatedSeries substitute_series(const MultiPoly& p, Var main_var,
                                  const std::map<Var, TruncatedSeries>& values, unsigned order);

/// Solves G(t, z(t)) = 0 for z as a series in t with prescribed leading
/// coefficients seed[0] t + seed[1] t^2 + ... . At each further order the new
/// coefficient enters linearly with a pivot equal to the leading coefficient of
/// dG/dz along the seed jet; that pivot must be a nonzero rational constant
/// and its valuation must not exceed the seed length.
TruncatedSeries solve_branch(const MultiPoly& G, Var param, Var unknown, const std::vector<MultiPoly>& seed,
                             unsigned order);

}  // namespace crosscap
