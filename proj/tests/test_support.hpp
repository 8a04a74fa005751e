#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "globalzeta/globalzeta.hpp"

namespace gz {

// Builds descriptors without validation, so tests can hand the verifier a
// field whose L-polynomial breaks the symmetry.
struct test_access {
  static FunctionFieldDescriptor unchecked_function_field(std::int64_t q, LPolynomial lpoly) {
    return {q, std::move(lpoly)};
  }
};

}  // namespace gz

namespace testing_support {

inline double relative_error(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline gz::LPolynomial lpoly(std::initializer_list<long> coefficients) {
  std::vector<gz::BigInt> a;
  for (const long c : coefficients) a.emplace_back(c);
  return gz::LPolynomial(std::move(a));
}

/// The number fields used throughout: Q, Q(i), Q(sqrt -3), Q(sqrt 5), Q(sqrt 2).
inline std::vector<gz::NumberFieldDescriptor> number_field_fixtures() {
  return {gz::make_rationals(), gz::make_quadratic(-1), gz::make_quadratic(-3), gz::make_quadratic(5),
          gz::make_quadratic(2)};
}

inline std::vector<gz::FunctionFieldDescriptor> function_field_fixtures() {
  return {gz::make_rational_function_field(2), gz::make_rational_function_field(3),
          gz::make_rational_function_field(4), gz::make_rational_function_field(5),
          gz::make_curve_function_field(5, lpoly({1, 3, 5})), gz::make_curve_function_field(2, lpoly({1, 0, 0, 0, 4}))};
}

inline gz::Grid default_grid() { return {0.1, 0.9, 5, 0.0, 10.0, 5}; }

}  // namespace testing_support
