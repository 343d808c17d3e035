#pragma once

#include <vector>

#include "crosscap/multipoly.hpp"

namespace crosscap {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Numeric values of the unfolding parameters and the modulus.
struct ParamValues {
  double alpha = 0.0;
  double beta = 0.0;
  double a = 0.0;
};

/// A polynomial specialised to two free variables with every other variable
/// fixed, stored densely for Horner evaluation.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  CompiledPoly(const MultiPoly& p, Var first, Var second, const Assignment<double>& fixed);
  /// Shorthand for free (x, y) with alpha, beta, a fixed.
  CompiledPoly(const MultiPoly& p, const ParamValues& params);

  double operator()(double first, double second) const;

 private:
  int rows_ = 0;  // degree in `first` + 1
  int cols_ = 0;  // degree in `second` + 1
  std::vector<double> coeffs_;  // row-major, [i * cols_ + j] for first^i second^j
};

Assignment<double> param_assignment(const ParamValues& params);

}  // namespace crosscap
