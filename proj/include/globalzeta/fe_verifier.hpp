#pragma once

// Checks Z_k(1 - s) = beta(A/k)^{2s-1} Z_k(s): pointwise and on grids in
// floating point, and exactly (as coefficient symmetry of the L-polynomial)
// for function fields.  Also compares closed forms with truncated Euler
// products.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "globalzeta/analytic_kernel.hpp"
#include "globalzeta/errors.hpp"
#include "globalzeta/field_catalog.hpp"
#include "globalzeta/field_spec.hpp"
#include "globalzeta/number_format.hpp"
#include "globalzeta/zeta_engine.hpp"

namespace gz {

enum class CheckStatus { ok, near_pole_skipped, failed };

inline const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::ok:
      return "ok";
    case CheckStatus::near_pole_skipped:
      return "near_pole_skipped";
    case CheckStatus::failed:
      return "failed";
  }
  return "?";
}

/// One point of the check.  lhs = Z_k(1-s), rhs = beta^{2s-1} Z_k(s); both
/// are absent when the point was skipped or could not be evaluated.
struct FunctionalEquationReport {
  ComplexValue s;
  std::optional<ComplexValue> lhs;
  std::optional<ComplexValue> rhs;
  std::optional<double> residual;
  double pole_distance;  // min over s and 1 - s
  CheckStatus status;

  friend bool operator==(const FunctionalEquationReport&, const FunctionalEquationReport&) = default;
};

/// |lhs - rhs| / max(|lhs|, |rhs|, 1e-300); zero when both sides are below 1e-100.
inline double relative_residual(ComplexValue lhs, ComplexValue rhs) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  if (scale < 1e-100) return 0.0;
  return std::abs(lhs - rhs) / std::max(scale, 1e-300);
}

inline FunctionalEquationReport check_point(const FieldDescriptor& field, ComplexValue s, double tolerance) {
  if (!(tolerance > 0.0)) throw DomainError("check_point: tolerance must be positive");
  detail::require_finite(s, "check_point");

  const ComplexValue reflected = 1.0 - s;
  FunctionalEquationReport report{s, std::nullopt, std::nullopt, std::nullopt,
                                  std::min(pole_distance(field, s), pole_distance(field, reflected)),
                                  CheckStatus::near_pole_skipped};
  if (report.pole_distance < pole_exclusion_radius) return report;

  try {
    const ComplexValue lhs = completed_zeta_value(field, reflected);
    const ComplexValue rhs = std::exp((2.0 * s - 1.0) * covolume(field).log()) * completed_zeta_value(field, s);
    report.lhs = lhs;
    report.rhs = rhs;
    report.residual = relative_residual(lhs, rhs);
    report.status = *report.residual <= tolerance ? CheckStatus::ok : CheckStatus::failed;
  } catch (const PoleError&) {
    report.status = CheckStatus::near_pole_skipped;
  } catch (const DomainError&) {
    report.status = CheckStatus::failed;
  }
  return report;
}

/// Rectangular grid of s values; `steps` nodes per axis, endpoints included.
struct Grid {
  double re_min = 0.0;
  double re_max = 0.0;
  int re_steps = 1;
  double im_min = 0.0;
  double im_max = 0.0;
  int im_steps = 1;

  void validate() const {
    if (re_steps < 1 || im_steps < 1) throw DomainError("grid: step counts must be at least 1");
    if (!std::isfinite(re_min) || !std::isfinite(re_max) || !std::isfinite(im_min) || !std::isfinite(im_max))
      throw DomainError("grid: bounds must be finite");
    if (re_min > re_max || im_min > im_max) throw DomainError("grid: inverted range");
  }

  static double node(double lo, double hi, int steps, int i) {
    if (steps == 1) return lo;
    if (i == steps - 1) return hi;
    return lo + i * ((hi - lo) / (steps - 1));
  }

  /// Row-major: ascending real part, then ascending imaginary part.
  std::vector<ComplexValue> nodes() const {
    validate();
    std::vector<ComplexValue> out;
    out.reserve(static_cast<std::size_t>(re_steps) * static_cast<std::size_t>(im_steps));
    for (int i = 0; i < re_steps; ++i) {
      for (int j = 0; j < im_steps; ++j)
        out.emplace_back(node(re_min, re_max, re_steps, i), node(im_min, im_max, im_steps, j));
    }
    return out;
  }
};

struct SweepSummary {
  std::string field;
  std::string grid;
  std::size_t count_ok = 0;
  std::size_t count_skipped = 0;
  std::size_t count_failed = 0;
  double max_residual = 0.0;  // over ok reports

  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

struct SweepResult {
  std::vector<FunctionalEquationReport> reports;
  SweepSummary summary;
};

inline SweepSummary summarize(std::string field, std::string grid, const std::vector<FunctionalEquationReport>& reports) {
  SweepSummary summary{std::move(field), std::move(grid)};
  for (const auto& r : reports) {
    switch (r.status) {
      case CheckStatus::ok:
        ++summary.count_ok;
        summary.max_residual = std::max(summary.max_residual, r.residual.value_or(0.0));
        break;
      case CheckStatus::near_pole_skipped:
        ++summary.count_skipped;
        break;
      case CheckStatus::failed:
        ++summary.count_failed;
        break;
    }
  }
  return summary;
}

/// "re=0.1:0.9:5,im=0:10:5"
inline std::string describe_grid(const Grid& grid) {
  return "re=" + format_real(grid.re_min) + ":" + format_real(grid.re_max) + ":" + std::to_string(grid.re_steps) +
         ",im=" + format_real(grid.im_min) + ":" + format_real(grid.im_max) + ":" + std::to_string(grid.im_steps);
}

/// check_point at every node.  Nodes may be spread over `threads` workers;
/// the report order is always that of Grid::nodes().
inline SweepResult sweep(const FieldDescriptor& field, const Grid& grid, double tolerance, unsigned threads = 1) {
  if (!(tolerance > 0.0)) throw DomainError("sweep: tolerance must be positive");
  const auto nodes = grid.nodes();
  std::vector<FunctionalEquationReport> reports(nodes.size());

  const auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < nodes.size(); i += stride) reports[i] = check_point(field, nodes[i], tolerance);
  };
  const auto workers = static_cast<std::size_t>(std::clamp(threads, 1U, 64U));
  if (workers == 1 || nodes.size() < 2) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
  }

  auto summary = summarize(format_field_spec(field), describe_grid(grid), reports);
  return {std::move(reports), std::move(summary)};
}

struct ExactCheckResult {
  bool holds;
  std::optional<std::size_t> witness;  // first i with a_{2g-i} != q^{g-i} a_i
};

/// In positive characteristic the functional equation is equivalent to the
/// coefficient symmetry a_{2g-i} = q^{g-i} a_i, checked here in exact
/// integers.  The genus-0 denominator satisfies the identity on its own.
inline ExactCheckResult exact_check_function_field(const FunctionFieldDescriptor& field) {
  const auto violation = first_symmetry_violation(field.q(), field.lpoly());
  return {!violation.has_value(), violation};
}

struct EulerConsistency {
  ComplexValue closed_form;
  ComplexValue truncated;
  double gap;
  double tail_bound;  // 4 * integral_{B}^{inf} x^{-Re s} dx
  bool pass;
};

inline EulerConsistency euler_consistency_check(const FieldDescriptor& field, ComplexValue s, std::int64_t norm_bound) {
  detail::require_finite(s, "euler_consistency_check");
  if (s.real() <= 1.0) throw DomainError("euler_consistency_check: requires Re s > 1");
  const ComplexValue closed = zeta(field, s);
  const ComplexValue truncated = truncated_euler_product(field, s, norm_bound);
  const double sigma = s.real();
  const double tail = 4.0 * std::pow(static_cast<double>(norm_bound), 1.0 - sigma) / (sigma - 1.0);
  const double gap = std::abs(closed - truncated);
  return {closed, truncated, gap, tail, gap <= tail};
}

}  // namespace gz
