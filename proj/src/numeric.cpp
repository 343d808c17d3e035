#include "crosscap/numeric.hpp"

#include <cmath>
#include <string>

namespace crosscap {

Assignment<double> param_assignment(const ParamValues& params) {
  return {{Var::alpha, params.alpha}, {Var::beta, params.beta}, {Var::a, params.a}};
}

CompiledPoly::CompiledPoly(const MultiPoly& p, Var first, Var second, const Assignment<double>& fixed) {
  rows_ = static_cast<int>(p.degree(first)) + 1;
  cols_ = static_cast<int>(p.degree(second)) + 1;
  coeffs_.assign(static_cast<std::size_t>(rows_ * cols_), 0.0);
  for (const auto& [e, c] : p.terms()) {
    double value = c.get_d();
    for (std::size_t i = 0; i < kVarCount; ++i) {
      const auto v = static_cast<Var>(i);
      if (e[i] == 0 || v == first || v == second) continue;
      auto it = fixed.find(v);
      if (it == fixed.end()) {
        throw AlgebraError("CompiledPoly: variable '" + std::string(var_name(v)) + "' has no value");
      }
      value *= std::pow(it->second, e[i]);
    }
    const int r = e[static_cast<std::size_t>(first)];
    const int s = e[static_cast<std::size_t>(second)];
    coeffs_[static_cast<std::size_t>(r * cols_ + s)] += value;
  }
}

CompiledPoly::CompiledPoly(const MultiPoly& p, const ParamValues& params)
    : CompiledPoly(p, Var::x, Var::y, param_assignment(params)) {}

double CompiledPoly::operator()(double first, double second) const {
  double acc = 0.0;
  for (int i = rows_ - 1; i >= 0; --i) {
    double row = 0.0;
    const double* c = coeffs_.data() + static_cast<std::ptrdiff_t>(i * cols_);
    for (int j = cols_ - 1; j >= 0; --j) row = row * second + c[j];
    acc = acc * first + row;
  }
  return acc;
}

}  // namespace crosscap
