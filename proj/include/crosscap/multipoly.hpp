#pragma once

// Sparse multivariate polynomials with exact rational coefficients over the
// fixed variable alphabet used throughout the library.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace crosscap {

using Rational = mpq_class;

/// Thrown by exact operations that have no exact answer (inexact division,
/// non-unit pivots, malformed input).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Source coordinates (x, y), unfolding parameters (alpha, beta), modulus a,
/// 3-space coordinates (u, v, w) and the auxiliary radical symbol s.
enum class Var : std::uint8_t { x, y, alpha, beta, a, u, v, w, s };

inline constexpr std::size_t kVarCount = 9;

std::string_view var_name(Var v);
std::optional<Var> parse_var(std::string_view name);

using Exponents = std::array<std::uint16_t, kVarCount>;

unsigned total_degree(const Exponents& e);

/// Graded order: lower total degree first, ties broken so that earlier
/// variables come first (x before y before alpha ...).
struct GradedOrder {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedOrder>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c);             // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(static_cast<long>(c)) {}  // NOLINT

  static MultiPoly variable(Var v, unsigned power = 1);
  static MultiPoly monomial(const Rational& c, const Exponents& e);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The value of a constant polynomial; nullopt when any variable occurs.
  std::optional<Rational> constant_value() const;
  Rational constant_term() const;

  bool contains(Var v) const;
  unsigned degree(Var v) const;
  /// Largest k such that v^k divides the polynomial (0 for the zero poly).
  unsigned valuation(Var v) const;
  unsigned total_degree() const;

  /// Coefficient of v^k, a polynomial free of v.
  MultiPoly coefficient(Var v, unsigned k) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) { return lhs.terms_ == rhs.terms_; }

  MultiPoly pow(unsigned n) const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  TermMap terms_;
};

inline const MultiPoly kX = MultiPoly::variable(Var::x);
inline const MultiPoly kY = MultiPoly::variable(Var::y);
inline const MultiPoly kAlpha = MultiPoly::variable(Var::alpha);
inline const MultiPoly kBeta = MultiPoly::variable(Var::beta);
inline const MultiPoly kA = MultiPoly::variable(Var::a);
inline const MultiPoly kU = MultiPoly::variable(Var::u);
inline const MultiPoly kV = MultiPoly::variable(Var::v);
inline const MultiPoly kW = MultiPoly::variable(Var::w);
inline const MultiPoly kS = MultiPoly::variable(Var::s);

MultiPoly diff(const MultiPoly& p, Var v);

/// m11*m22 - m12*m21.
MultiPoly det2(const MultiPoly& m11, const MultiPoly& m12, const MultiPoly& m21, const MultiPoly& m22);

MultiPoly substitute(const MultiPoly& p, Var v, const MultiPoly& value);

/// Simultaneous substitution; variables absent from the map are kept.
MultiPoly substitute(const MultiPoly& p, const std::map<Var, MultiPoly>& values);

/// Exact quotient num / den. Throws AlgebraError if den does not divide num.
MultiPoly divide_exact(const MultiPoly& num, const MultiPoly& den);
std::optional<MultiPoly> try_divide_exact(const MultiPoly& num, const MultiPoly& den);

/// Removes the largest power of v dividing p.
MultiPoly strip_power(const MultiPoly& p, Var v);

/// Rewrites p modulo s^2 - radicand, leaving s with degree at most one.
MultiPoly reduce_radical(const MultiPoly& p, Var s, const MultiPoly& radicand);

/// Partial assignment of values to variables.
template <class T>
using Assignment = std::map<Var, T>;

/// Exact evaluation; every variable of p must be assigned.
Rational evaluate(const MultiPoly& p, const Assignment<Rational>& values);
double evaluate(const MultiPoly& p, const Assignment<double>& values);

/// Human-readable canonical text, e.g. "x + 4*y^3 + 2*b*y - 2*al*y^2".
std::string to_string(const MultiPoly& p);
MultiPoly parse_poly(std::string_view text);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace crosscap
