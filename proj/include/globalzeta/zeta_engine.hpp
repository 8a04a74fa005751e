#pragma once

// zeta_k(s), the archimedean Gamma factor, and the completed zeta
//
//   Z_k(s) = (pi^{-s/2} Gamma(s/2))^{r1} ((2 pi)^{1-s} Gamma(s))^{r2} zeta_k(s).
//
// Continuation is classical: zeta * L(s, chi_D) for quadratic fields and the
// rational function P(q^{-s}) / ((1 - q^{-s})(1 - q^{1-s})) for function fields.

#include <cmath>
#include <numbers>
#include <optional>
#include <variant>
#include <vector>

#include "globalzeta/analytic_kernel.hpp"
#include "globalzeta/errors.hpp"
#include "globalzeta/field_catalog.hpp"

namespace gz {

/// Within this distance of an integer where Gamma has a pole but Z_k does
/// not, separate evaluation of the two factors loses digits.
inline constexpr double precision_cliff_radius = 1e-2;

/// Poles of Z_k.  Number fields: {0, 1}.  Function fields: the lattices
/// base + i k period, k in Z, for base in {0, 1} and period 2 pi / log q.
struct PoleSet {
  std::vector<ComplexValue> bases;
  std::optional<double> period;
};

inline PoleSet pole_set(const FieldDescriptor& field) {
  if (const auto* ff = std::get_if<FunctionFieldDescriptor>(&field))
    return {{0.0, 1.0}, 2.0 * std::numbers::pi / std::log(static_cast<double>(ff->q()))};
  return {{0.0, 1.0}, std::nullopt};
}

namespace detail {

inline double distance_to_lattice(ComplexValue s, ComplexValue base, std::optional<double> period) {
  const ComplexValue offset = s - base;
  if (!period) return std::abs(offset);
  const double k = std::round(offset.imag() / *period);
  return std::abs(offset - ComplexValue(0.0, k * *period));
}

inline double distance_to_poles(const PoleSet& poles, ComplexValue s) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto base : poles.bases) best = std::min(best, distance_to_lattice(s, base, poles.period));
  return best;
}

// Distance to the integers where the Gamma factor has a pole but Z_k is
// finite: -2, -4, ... for r1 > 0 and -1, -2, ... for r2 > 0.
inline double removable_point_distance(const NumberFieldDescriptor& field, ComplexValue s) {
  double best = std::numeric_limits<double>::infinity();
  if (field.r2() > 0) {
    const double n = std::min(-1.0, std::round(s.real()));
    best = std::min(best, std::abs(s - n));
  }
  if (field.r1() > 0) {
    const double n = std::min(-2.0, 2.0 * std::round(s.real() / 2.0));
    best = std::min(best, std::abs(s - n));
  }
  return best;
}

}  // namespace detail

/// Distance from s to the nearest pole of Z_k.
inline double pole_distance(const FieldDescriptor& field, ComplexValue s) {
  return detail::distance_to_poles(pole_set(field), s);
}

/// Dedekind zeta, or the zeta of a function field.  Raises PoleError only
/// near poles of zeta_k itself (s = 1 for number fields).
inline ComplexValue zeta(const FieldDescriptor& field, ComplexValue s) {
  detail::require_finite(s, "zeta");
  if (const auto* nf = std::get_if<NumberFieldDescriptor>(&field)) {
    const ComplexValue z = riemann_zeta(s);
    if (nf->is_rationals()) return z;
    return z * dirichlet_l(s, KroneckerCharacter(nf->discriminant()));
  }

  const auto& ff = std::get<FunctionFieldDescriptor>(field);
  if (pole_distance(field, s) < pole_exclusion_radius)
    throw PoleError("zeta: s = " + detail::format_complex(s) + " is within the exclusion radius of a pole of " +
                    "the function-field zeta");
  const double log_q = std::log(static_cast<double>(ff.q()));
  const ComplexValue t = std::exp(-s * log_q);
  const auto& a = ff.lpoly().coefficients();
  ComplexValue numerator = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) numerator = numerator * t + it->convert_to<double>();
  const ComplexValue denominator = (1.0 - t) * (1.0 - static_cast<double>(ff.q()) * t);
  const ComplexValue value = numerator / denominator;
  detail::require_finite(value, "zeta");
  return value;
}

/// (pi^{-s/2} Gamma(s/2))^{r1} ((2 pi)^{1-s} Gamma(s))^{r2}, accumulated in
/// log space; identically 1 for function fields.
inline ComplexValue gamma_factor(const FieldDescriptor& field, ComplexValue s) {
  detail::require_finite(s, "gamma_factor");
  const auto* nf = std::get_if<NumberFieldDescriptor>(&field);
  if (nf == nullptr) return 1.0;

  if (nf->r1() > 0 && detail::gamma_pole_distance(s / 2.0) * 2.0 < pole_exclusion_radius)
    throw PoleError("gamma_factor: s = " + detail::format_complex(s) + " is within the exclusion radius of a pole of " +
                    "Gamma(s/2)");
  if (nf->r2() > 0 && detail::gamma_pole_distance(s) < pole_exclusion_radius)
    throw PoleError("gamma_factor: s = " + detail::format_complex(s) + " is within the exclusion radius of a pole of " +
                    "Gamma(s)");

  constexpr double log_pi = 1.1447298858494002;       // log pi
  constexpr double log_two_pi = 1.8378770664093453;   // log 2 pi
  ComplexValue log_factor = 0.0;
  if (nf->r1() > 0)
    log_factor += static_cast<double>(nf->r1()) * (-(s / 2.0) * log_pi + detail::log_gamma_unchecked(s / 2.0));
  if (nf->r2() > 0)
    log_factor += static_cast<double>(nf->r2()) * ((1.0 - s) * log_two_pi + detail::log_gamma_unchecked(s));
  ComplexValue value = std::exp(log_factor);
  if (s.imag() == 0.0) value = value.real();
  detail::require_finite(value, "gamma_factor");
  return value;
}

struct EvaluationRecord {
  ComplexValue s;
  ComplexValue zeta_value;
  ComplexValue gamma_factor_value;
  ComplexValue completed_value;  // gamma_factor_value * zeta_value
  double pole_distance;
  bool precision_cliff;  // within precision_cliff_radius of a Gamma pole that Z_k cancels
};

/// Z_k(s) with both factors reported.  Raises PoleError within the exclusion
/// radius of a pole of Z_k or of the Gamma factor.
inline EvaluationRecord completed_zeta(const FieldDescriptor& field, ComplexValue s) {
  detail::require_finite(s, "completed_zeta");
  const double distance = pole_distance(field, s);
  if (distance < pole_exclusion_radius)
    throw PoleError("completed_zeta: s = " + detail::format_complex(s) + " is within the exclusion radius of a pole");
  bool cliff = false;
  if (const auto* nf = std::get_if<NumberFieldDescriptor>(&field))
    cliff = detail::removable_point_distance(*nf, s) < precision_cliff_radius;
  const ComplexValue gamma = gamma_factor(field, s);
  const ComplexValue z = zeta(field, s);
  const ComplexValue completed = gamma * z;
  detail::require_finite(completed, "completed_zeta");
  return {s, z, gamma, completed, distance, cliff};
}

namespace detail {

inline constexpr double removable_circle_radius = 0.25;
inline constexpr int removable_circle_nodes = 48;

}  // namespace detail

/// Z_k(s) alone.  Near the integers where a Gamma pole meets a zero of
/// zeta_k the value comes from the mean of Z_k over a circle of radius 1/4
/// around s (Z_k is analytic there; the trapezoid rule on the circle
/// converges geometrically), so s may sit exactly on such a point.
inline ComplexValue completed_zeta_value(const FieldDescriptor& field, ComplexValue s) {
  const auto* nf = std::get_if<NumberFieldDescriptor>(&field);
  if (nf == nullptr || detail::removable_point_distance(*nf, s) >= precision_cliff_radius ||
      pole_distance(field, s) < pole_exclusion_radius)
    return completed_zeta(field, s).completed_value;

  constexpr int nodes = detail::removable_circle_nodes;
  ComplexValue sum = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double angle = 2.0 * std::numbers::pi * (j + 0.5) / nodes;
    sum += completed_zeta(field, s + detail::removable_circle_radius * std::polar(1.0, angle)).completed_value;
  }
  ComplexValue value = sum / static_cast<double>(nodes);
  if (s.imag() == 0.0) value = value.real();
  return value;
}

}  // namespace gz
