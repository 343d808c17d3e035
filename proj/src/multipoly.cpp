#include "crosscap/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace crosscap {

namespace {

constexpr std::array<std::string_view, kVarCount> kVarNames = {"x", "y", "alpha", "beta", "a", "u", "v", "w", "s"};

std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

Exponents add_exponents(const Exponents& lhs, const Exponents& rhs) {
  Exponents out{};
  for (std::size_t i = 0; i < kVarCount; ++i) {
    out[i] = static_cast<std::uint16_t>(lhs[i] + rhs[i]);
  }
  return out;
}

// Pure lexicographic order, used only by exact division.
bool lex_greater(const Exponents& lhs, const Exponents& rhs) {
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (lhs[i] != rhs[i]) return lhs[i] > rhs[i];
  }
  return false;
}

std::pair<Exponents, Rational> lex_leading(const MultiPoly& p) {
  auto it = p.terms().begin();
  auto best = it;
  for (; it != p.terms().end(); ++it) {
    if (lex_greater(it->first, best->first)) best = it;
  }
  return *best;
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[idx(v)]; }

std::optional<Var> parse_var(std::string_view name) {
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (kVarNames[i] == name) return static_cast<Var>(i);
  }
  if (name == "al") return Var::alpha;
  if (name == "b") return Var::beta;
  return std::nullopt;
}

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GradedOrder::operator()(const Exponents& lhs, const Exponents& rhs) const {
  const unsigned dl = total_degree(lhs);
  const unsigned dr = total_degree(rhs);
  if (dl != dr) return dl < dr;
  // Same degree: larger exponent on an earlier variable sorts first.
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (lhs[i] != rhs[i]) return lhs[i] > rhs[i];
  }
  return false;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw AlgebraError("empty rational literal");
  const auto dot = s.find('.');
  const bool has_exp = s.find_first_of("eE") != std::string::npos;
  if (has_exp) throw AlgebraError("exponent notation is not an exact rational: " + s);
  if (dot != std::string::npos) {
    // Decimal literal, read exactly: 0.125 -> 1/8.
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw AlgebraError("malformed decimal: " + s);
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational q;
    try {
      q = Rational(mpz_class(digits[0] == '+' ? digits.substr(1) : digits, 10), den);
    } catch (const std::invalid_argument&) {
      throw AlgebraError("malformed decimal: " + s);
    }
    q.canonicalize();
    return q;
  }
  Rational q;
  try {
    q = Rational(s[0] == '+' ? s.substr(1) : s, 10);
  } catch (const std::invalid_argument&) {
    throw AlgebraError("malformed rational: " + s);
  }
  if (q.get_den() == 0) throw AlgebraError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MultiPoly::MultiPoly(long c) : MultiPoly(Rational(c)) {}

MultiPoly MultiPoly::variable(Var v, unsigned power) {
  Exponents e{};
  e[idx(v)] = static_cast<std::uint16_t>(power);
  return monomial(1, e);
}

MultiPoly MultiPoly::monomial(const Rational& c, const Exponents& e) {
  MultiPoly p;
  p.add_term(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

std::optional<Rational> MultiPoly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return constant_term();
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool MultiPoly::contains(Var v) const { return degree(v) > 0; }

unsigned MultiPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[idx(v)]);
  return d;
}

unsigned MultiPoly::valuation(Var v) const {
  if (terms_.empty()) return 0;
  unsigned d = ~0u;
  for (const auto& [e, c] : terms_) d = std::min<unsigned>(d, e[idx(v)]);
  return d;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, crosscap::total_degree(e));
  return d;
}

MultiPoly MultiPoly::coefficient(Var v, unsigned k) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[idx(v)] != k) continue;
    Exponents f = e;
    f[idx(v)] = 0;
    out.add_term(f, c);
  }
  return out;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  MultiPoly out;
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      out.add_term(add_exponents(el, er), cl * cr);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

MultiPoly diff(const MultiPoly& p, Var v) {
  MultiPoly out;
  for (const auto& [e, c] : p.terms()) {
    const auto k = e[idx(v)];
    if (k == 0) continue;
    Exponents f = e;
    f[idx(v)] = static_cast<std::uint16_t>(k - 1);
    out += MultiPoly::monomial(c * k, f);
  }
  return out;
}

MultiPoly det2(const MultiPoly& m11, const MultiPoly& m12, const MultiPoly& m21, const MultiPoly& m22) {
  return m11 * m22 - m12 * m21;
}

MultiPoly substitute(const MultiPoly& p, Var v, const MultiPoly& value) {
  return substitute(p, std::map<Var, MultiPoly>{{v, value}});
}

MultiPoly substitute(const MultiPoly& p, const std::map<Var, MultiPoly>& values) {
  // Cache powers per substituted variable.
  std::map<std::pair<Var, unsigned>, MultiPoly> powers;
  auto power_of = [&](Var v, unsigned k) -> const MultiPoly& {
    auto key = std::make_pair(v, k);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, values.at(v).pow(k)).first;
    return it->second;
  };
  MultiPoly out;
  for (const auto& [e, c] : p.terms()) {
    Exponents kept = e;
    MultiPoly term(1);
    for (const auto& [v, value] : values) {
      const unsigned k = e[idx(v)];
      if (k == 0) continue;
      kept[idx(v)] = 0;
      term *= power_of(v, k);
    }
    out += MultiPoly::monomial(c, kept) * term;
  }
  return out;
}

std::optional<MultiPoly> try_divide_exact(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw AlgebraError("division by the zero polynomial");
  if (auto c = den.constant_value()) {
    MultiPoly out = num;
    return out * MultiPoly(Rational(1) / *c);
  }
  const auto [lead_e, lead_c] = lex_leading(den);
  MultiPoly remainder = num;
  MultiPoly quotient;
  while (!remainder.is_zero()) {
    const auto [re, rc] = lex_leading(remainder);
    Exponents q{};
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (re[i] < lead_e[i]) return std::nullopt;
      q[i] = static_cast<std::uint16_t>(re[i] - lead_e[i]);
    }
    const MultiPoly step = MultiPoly::monomial(rc / lead_c, q);
    quotient += step;
    remainder -= step * den;
  }
  return quotient;
}

MultiPoly divide_exact(const MultiPoly& num, const MultiPoly& den) {
  auto q = try_divide_exact(num, den);
  if (!q) throw AlgebraError("inexact division: (" + to_string(num) + ") / (" + to_string(den) + ")");
  return *q;
}

MultiPoly strip_power(const MultiPoly& p, Var v) {
  const unsigned k = p.valuation(v);
  if (k == 0) return p;
  MultiPoly out;
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[idx(v)] = static_cast<std::uint16_t>(f[idx(v)] - k);
    out += MultiPoly::monomial(c, f);
  }
  return out;
}

MultiPoly reduce_radical(const MultiPoly& p, Var s, const MultiPoly& radicand) {
  const unsigned deg = p.degree(s);
  MultiPoly even;
  MultiPoly odd;
  MultiPoly radicand_power(1);
  for (unsigned k = 0; k <= deg; k += 2) {
    even += p.coefficient(s, k) * radicand_power;
    if (k + 1 <= deg) odd += p.coefficient(s, k + 1) * radicand_power;
    radicand_power *= radicand;
  }
  return even + odd * MultiPoly::variable(s);
}

Rational evaluate(const MultiPoly& p, const Assignment<Rational>& values) {
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      auto it = values.find(static_cast<Var>(i));
      if (it == values.end()) {
        throw AlgebraError("evaluate: variable '" + std::string(kVarNames[i]) + "' is unassigned");
      }
      Rational f;
      mpz_pow_ui(f.get_num_mpz_t(), it->second.get_num_mpz_t(), e[i]);
      mpz_pow_ui(f.get_den_mpz_t(), it->second.get_den_mpz_t(), e[i]);
      term *= f;
    }
    sum += term;
  }
  return sum;
}

double evaluate(const MultiPoly& p, const Assignment<double>& values) {
  double sum = 0.0;
  for (const auto& [e, c] : p.terms()) {
    double term = c.get_d();
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      auto it = values.find(static_cast<Var>(i));
      if (it == values.end()) {
        throw AlgebraError("evaluate: variable '" + std::string(kVarNames[i]) + "' is unassigned");
      }
      term *= std::pow(it->second, e[i]);
    }
    sum += term;
  }
  return sum;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kVarNames[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << to_string(p); }

namespace {

// Recursive-descent parser for the canonical text form plus parentheses.
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "parse_poly: " << what << " at offset " << pos_ << " in \"" << text_ << "\"";
    throw AlgebraError(os.str());
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const MultiPoly d = unary();
        auto c = d.constant_value();
        if (!c || *c == 0) fail("division only by nonzero constants");
        acc *= MultiPoly(Rational(1) / *c);
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const auto name = text_.substr(start, pos_ - start);
      auto v = parse_var(name);
      if (!v) fail("unknown variable '" + std::string(name) + "'");
      return MultiPoly::variable(*v);
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace crosscap
